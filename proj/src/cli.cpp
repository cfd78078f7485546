// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/cli.hpp"

#include "chanlab/channel_spec.hpp"
#include "chanlab/optimize.hpp"
#include "chanlab/serialize.hpp"
#include "chanlab/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

namespace chanlab {

namespace {

struct RunConfig {
  std::string command;
  std::string channel_spec;
  std::string state_file;
  std::string check_name;
  std::vector<Index> dims;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  Index n = 0;
  double p = -1.0;
  std::map<std::string, double> tolerances;
  std::string output_path;
  bool bits = false;

  int restarts = 0;
  int max_iters = 0;
  double tol = 0.0;
  Index ensemble_size = 0;

  EntropyUnit unit() const { return bits ? EntropyUnit::Bits : EntropyUnit::Nats; }
};

OptimizerOptions optimizer_options(const RunConfig& cfg, OptimizerOptions base) {
  if (cfg.restarts > 0) base.restarts = cfg.restarts;
  if (cfg.max_iters > 0) base.max_iters = cfg.max_iters;
  if (cfg.tol > 0.0) base.tol = cfg.tol;
  base.seed = cfg.seed;
  base.ensemble_size = cfg.ensemble_size;
  base.validate();
  return base;
}

Tolerances tolerances(const RunConfig& cfg) {
  Tolerances t;
  for (const auto& [key, value] : cfg.tolerances) {
    if (!(value >= 0.0)) throw ParseError("--tolerance " + key + " must be nonnegative");
    if (key == "identity") t.identity = value;
    else if (key == "inequality") t.inequality = value;
    else if (key == "optimizer") t.optimizer = value;
    else if (key == "choi") t.choi = value;
    else throw ParseError("--tolerance: unknown key '" + key + "'");
  }
  return t;
}

Json state_json(const Vector& v, EntropyUnit unit, double nats) {
  return {{"value", in_unit(nats, unit)}, {"unit", to_string(unit)}, {"state", complex_entries(v)}};
}

struct CheckRun {
  std::vector<VerificationReport> reports;
  double seconds;
};

using Clock = std::chrono::steady_clock;

template <typename F>
CheckRun timed(F&& f) {
  const auto start = Clock::now();
  auto reports = f();
  return {std::move(reports), std::chrono::duration<double>(Clock::now() - start).count()};
}

std::pair<Index, Index> dims_or(const RunConfig& cfg, Index h, Index k) {
  if (cfg.dims.empty()) return {h, k};
  if (cfg.dims.size() == 1) return {cfg.dims[0], k};
  return {cfg.dims[0], cfg.dims[1]};
}

Index require_dim(Index d, Index min) {
  if (d < min || d > 64) throw ParseError("dimension " + std::to_string(d) + " out of range");
  return d;
}

std::vector<CheckRun> run_check(const std::string& name, const RunConfig& cfg) {
  const Tolerances tol = tolerances(cfg);
  const std::size_t samples = cfg.samples;
  const std::uint64_t seed = cfg.seed;
  std::vector<CheckRun> runs;
  auto add = [&](auto&& f) { runs.push_back(timed(f)); };

  if (name == "theorem1" || name == "prop4" || name == "prop5") {
    const auto [dh, dk] = dims_or(cfg, name == "prop4" ? 4 : (name == "prop5" ? 3 : 2),
                                  name == "prop4" ? 3 : 2);
    require_dim(dh, 2);
    require_dim(dk, 2);
    if (name == "theorem1") add([&] { return check_theorem1(dh, dk, samples, seed, tol); });
    if (name == "prop4") add([&] { return check_prop4(dh, dk, samples, seed, tol); });
    if (name == "prop5") add([&] { return check_prop5(dh, dk, samples, seed, tol); });
  } else if (name == "h-theorem" || name == "h-theorem-unitary") {
    const Index dim = require_dim(cfg.n > 0 ? cfg.n : dims_or(cfg, 3, 0).first, 1);
    if (name == "h-theorem") add([&] { return check_h_theorem(dim, samples, seed, tol); });
    else add([&] { return check_h_theorem_unitary(dim, samples, seed, tol); });
  } else if (name == "king-decomposition") {
    const std::vector<Index> ns = cfg.n > 0 ? std::vector<Index>{cfg.n} : std::vector<Index>{2, 3};
    for (Index n : ns) {
      require_dim(n, 2);
      const double pmax = depolarizing_max_p(n);
      const std::vector<double> ps =
          cfg.p >= 0.0 ? std::vector<double>{cfg.p} : std::vector<double>{0, 0.25, 0.5, 0.75, 1, pmax};
      add([&] {
        std::vector<VerificationReport> out;
        for (double p : ps) out.push_back(check_king_decomposition(n, p, tol));
        return out;
      });
    }
  } else if (name == "upsilon-entropy") {
    const Index n = require_dim(cfg.n > 0 ? cfg.n : 4, 2);
    const double p = cfg.p >= 0.0 ? cfg.p : 0.3;
    add([&] { return check_upsilon_entropy_constancy(n, p, samples, seed, tol); });
  } else if (name == "upsilon-spectrum") {
    const std::vector<Index> ns = cfg.n > 0 ? std::vector<Index>{cfg.n} : std::vector<Index>{2, 3, 4};
    const std::vector<double> ps =
        cfg.p >= 0.0 ? std::vector<double>{cfg.p} : std::vector<double>{0.1, 0.5, 1.0};
    for (Index n : ns) {
      require_dim(n, 2);
      add([&] {
        std::vector<VerificationReport> out;
        for (double p : ps)
          for (auto& r : check_upsilon_spectrum(n, p, tol)) out.push_back(std::move(r));
        return out;
      });
    }
  } else if (name == "representation") {
    const std::vector<Index> ns =
        cfg.n > 0 ? std::vector<Index>{cfg.n} : std::vector<Index>{2, 3, 4, 5, 6, 7, 8};
    for (Index n : ns) {
      require_dim(n, 1);
      add([&] { return check_phase_damping_representation(n, samples, seed, tol); });
    }
  } else if (name == "cp-boundary") {
    const std::vector<Index> ns = cfg.n > 0 ? std::vector<Index>{cfg.n} : std::vector<Index>{2, 3};
    for (Index n : ns) {
      require_dim(n, 2);
      add([&] { return std::vector<VerificationReport>{check_cp_boundary(n, tol)}; });
    }
  } else if (name == "min-output") {
    const Index n = require_dim(cfg.n > 0 ? cfg.n : 2, 2);
    const double p = cfg.p >= 0.0 ? cfg.p : 0.5;
    const auto opts = optimizer_options(cfg, OptimizerOptions::min_output_defaults());
    add([&] { return std::vector<VerificationReport>{check_min_output_depolarizing(n, p, opts, tol)}; });
  } else if (name == "roof-depolarizing") {
    const Index n = require_dim(cfg.n > 0 ? cfg.n : 2, 2);
    const double p = cfg.p >= 0.0 ? cfg.p : 0.5;
    const auto opts = optimizer_options(cfg, OptimizerOptions::roof_defaults());
    add([&] { return check_roof_depolarizing(n, p, samples, seed, opts, tol); });
  } else if (name == "strong-superadditivity") {
    const NamedChannel phi =
        parse_channel_spec(cfg.channel_spec.empty() ? "depolarizing:n=2,p=0.5" : cfg.channel_spec);
    const Index nk = require_dim(cfg.dims.size() >= 2 ? cfg.dims[1] : 2, 1);
    const auto opts = optimizer_options(cfg, OptimizerOptions::roof_defaults());
    add([&] { return check_strong_superadditivity(phi, nk, samples, seed, opts, tol); });
  } else {
    throw ParseError("unknown check '" + name + "'");
  }
  return runs;
}

/// Default suite behind `verify all`: every check at desk-scale sizes.
std::vector<CheckRun> run_all(const RunConfig& base) {
  std::vector<CheckRun> runs;
  auto add = [&](const std::string& name, auto&& tweak) {
    RunConfig cfg = base;
    cfg.dims.clear();
    cfg.n = 0;
    cfg.p = -1.0;
    cfg.channel_spec.clear();
    tweak(cfg);
    for (auto& r : run_check(name, cfg)) runs.push_back(std::move(r));
  };
  add("representation", [](RunConfig& c) { c.samples = 10; });
  add("theorem1", [](RunConfig& c) { c.dims = {2, 2}; c.samples = 50; });
  add("theorem1", [](RunConfig& c) { c.dims = {3, 3}; c.samples = 50; });
  add("prop4", [](RunConfig& c) { c.dims = {4, 3}; c.samples = 50; });
  add("prop5", [](RunConfig& c) { c.dims = {3, 2}; c.samples = 50; });
  add("h-theorem", [](RunConfig& c) { c.n = 3; c.samples = 100; });
  add("h-theorem-unitary", [](RunConfig& c) { c.n = 3; c.samples = 20; });
  add("king-decomposition", [](RunConfig&) {});
  add("upsilon-spectrum", [](RunConfig&) {});
  add("upsilon-entropy", [](RunConfig& c) { c.samples = 20; });
  add("cp-boundary", [](RunConfig&) {});
  add("min-output", [](RunConfig& c) { c.n = 2; c.p = 0.5; });
  add("roof-depolarizing", [](RunConfig& c) { c.samples = 3; });
  add("strong-superadditivity", [](RunConfig& c) {
    c.channel_spec = "phase-damping:n=2,lambda=0.7,0.3";
    c.samples = 2;
  });
  add("strong-superadditivity", [](RunConfig& c) {
    c.channel_spec = "depolarizing:n=2,p=0.5";
    c.samples = 2;
  });
  return runs;
}

int emit_verification(const std::vector<CheckRun>& runs, const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  for (const auto& run : runs) {
    for (auto r : run.reports) {
      r.unit = cfg.unit();
      out << to_json(r).dump() << '\n';
    }
    ok = ok && all_passed(run.reports);
  }
  for (const auto& run : runs)
    for (const auto& s : summarize(run.reports, run.seconds))
      out << to_json(s, cfg.unit()).dump() << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  const EntropyUnit unit = cfg.unit();
  if (cfg.command == "channel-info") {
    const NamedChannel named = parse_channel_spec(cfg.channel_spec);
    const auto res = cptp_residuals(named.channel);
    Json j = {{"schemaVersion", 1},
              {"spec", named.spec},
              {"dimIn", named.channel.dim_in()},
              {"dimOut", named.channel.dim_out()},
              {"krausCount", named.channel.kraus().size()},
              {"krausResidual", res.completeness},
              {"choiMinEigenvalue", res.choi_min_eigenvalue},
              {"choiStateMinEigenvalue", res.choi_min_eigenvalue / double(named.channel.dim_in())},
              {"cptp", is_cptp(named.channel)}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (cfg.command == "channel-json") {
    const NamedChannel named = parse_channel_spec(cfg.channel_spec);
    Json j = to_json(named.channel);
    j["schemaVersion"] = 1;
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (cfg.command == "entropy") {
    const auto state = load_state_file(cfg.state_file);
    Json j = {{"schemaVersion", 1}, {"unit", to_string(unit)}};
    if (const auto* e = std::get_if<BipartiteState>(&state)) {
      const Matrix ee = e->projector();
      j["entropy"] = in_unit(entropy_of_hermitian(ee), unit);
      j["entropyH"] = in_unit(entropy_of_hermitian(partial_trace(ee, e->dim_h(), e->dim_k(), Side::H)), unit);
      j["entropyK"] = in_unit(entropy_of_hermitian(partial_trace(ee, e->dim_h(), e->dim_k(), Side::K)), unit);
    } else {
      j["entropy"] = in_unit(von_neumann(std::get<DensityMatrix>(state)).nats, unit);
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (cfg.command == "minout") {
    const NamedChannel named = parse_channel_spec(cfg.channel_spec);
    const auto opts = optimizer_options(cfg, OptimizerOptions::min_output_defaults());
    const auto res = min_output_entropy(named.channel, opts);
    Json j = state_json(res.state, unit, res.value.nats);
    j["schemaVersion"] = 1;
    j["spec"] = named.spec;
    j["upperBound"] = true;
    j["converged"] = res.converged;
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (cfg.command == "roof") {
    const NamedChannel named = parse_channel_spec(cfg.channel_spec);
    const auto state = load_state_file(cfg.state_file);
    const DensityMatrix rho = std::holds_alternative<DensityMatrix>(state)
                                  ? std::get<DensityMatrix>(state)
                                  : std::get<BipartiteState>(state).density();
    const auto opts = optimizer_options(cfg, OptimizerOptions::roof_defaults());
    const auto res = convex_roof(named.channel, rho, opts);
    Json ensemble = Json::array();
    for (const auto& m : res.ensemble)
      ensemble.push_back({{"weight", m.weight}, {"state", complex_entries(m.state)}});
    Json j = {{"schemaVersion", 1},
              {"spec", named.spec},
              {"value", in_unit(res.value.nats, unit)},
              {"unit", to_string(unit)},
              {"upperBound", true},
              {"converged", res.converged},
              {"ensemble", std::move(ensemble)}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (cfg.command == "verify") {
    const auto runs = cfg.check_name == "all" ? run_all(cfg) : run_check(cfg.check_name, cfg);
    return emit_verification(runs, cfg, out);
  }
  throw ParseError("no command given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-dimensional quantum channel toolkit", "chanlab"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.output_path, "Write JSON to this file instead of stdout");
    sub->add_flag("--bits", cfg.bits, "Report entropies in bits instead of nats");
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--restarts", cfg.restarts, "Local searches per optimization")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", cfg.max_iters, "Sweep limit per local search")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "Final step size of the coordinate search")->check(CLI::PositiveNumber);
    sub->add_option("--ensemble-size", cfg.ensemble_size, "Ensemble size for convex roofs");
    sub->add_option("--seed", cfg.seed, "Random seed");
  };

  auto* channel = app.add_subcommand("channel", "Construct a channel from a spec");
  channel->require_subcommand(1);
  auto* info = channel->add_subcommand("info", "Kraus count, CPTP residuals, Choi spectrum");
  info->add_option("spec", cfg.channel_spec, "Channel spec, e.g. depolarizing:n=2,p=0.5")->required();
  add_output(info);
  info->callback([&] { cfg.command = "channel-info"; });
  auto* cjson = channel->add_subcommand("json", "Print the channel's Kraus operators as JSON");
  cjson->add_option("spec", cfg.channel_spec, "Channel spec")->required();
  add_output(cjson);
  cjson->callback([&] { cfg.command = "channel-json"; });

  auto* entropy = app.add_subcommand("entropy", "Von Neumann entropy of a state file");
  entropy->add_option("state-file", cfg.state_file, "State or density JSON")->required();
  add_output(entropy);
  entropy->callback([&] { cfg.command = "entropy"; });

  auto* minout = app.add_subcommand("minout", "Minimal output entropy (upper bound)");
  minout->add_option("spec", cfg.channel_spec, "Channel spec")->required();
  add_optimizer(minout);
  add_output(minout);
  minout->callback([&] { cfg.command = "minout"; });

  auto* roof = app.add_subcommand("roof", "Convex-roof output entropy of a state (upper bound)");
  roof->add_option("spec", cfg.channel_spec, "Channel spec")->required();
  roof->add_option("state-file", cfg.state_file, "State or density JSON")->required();
  add_optimizer(roof);
  add_output(roof);
  roof->callback([&] { cfg.command = "roof"; });

  auto* verify = app.add_subcommand("verify", "Run a verification check, or 'all'");
  std::vector<std::string> names = check_names();
  names.push_back("all");
  verify->add_option("check", cfg.check_name, "Check name")->required()->check(CLI::IsMember(names));
  verify->add_option("--dims", cfg.dims, "Factor dimensions, e.g. 3,2")->delimiter(',');
  verify->add_option("--samples", cfg.samples, "Random instances")->check(CLI::PositiveNumber);
  verify->add_option("--n", cfg.n, "Dimension for single-space checks");
  verify->add_option("--p", cfg.p, "Depolarizing parameter")->check(CLI::NonNegativeNumber);
  verify->add_option("--channel", cfg.channel_spec, "Channel spec for strong-superadditivity");
  std::vector<std::string> tolerance_args;
  verify->add_option("--tolerance", tolerance_args,
                     "Override a tolerance: identity|inequality|optimizer|choi=value");
  add_optimizer(verify);
  add_output(verify);
  verify->callback([&] { cfg.command = "verify"; });

  std::vector<const char*> argv{"chanlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& arg : tolerance_args) {
      const auto eq = arg.find('=');
      if (eq == std::string::npos) throw ParseError("--tolerance expects name=value, got '" + arg + "'");
      double value = 0.0;
      try {
        value = std::stod(arg.substr(eq + 1));
      } catch (const std::exception&) {
        throw ParseError("--tolerance " + arg.substr(0, eq) + ": invalid number");
      }
      cfg.tolerances[arg.substr(0, eq)] = value;
    }
    if (cfg.output_path.empty()) return dispatch(cfg, out);
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    std::ofstream file(cfg.output_path);
    if (!file) throw ParseError("cannot open output file " + cfg.output_path);
    file << buffer.str();
    return code;
  } catch (const ParseError& e) {
    err << "chanlab: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "chanlab: " << e.what() << '\n';
  } catch (const SizeError& e) {
    err << "chanlab: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "chanlab: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace chanlab
