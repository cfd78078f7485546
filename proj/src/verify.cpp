// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/verify.hpp"

#include "chanlab/parallel.hpp"
#include "chanlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace chanlab {

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Identity: return "identity";
    case CheckKind::Inequality: return "inequality";
    case CheckKind::Sanity: return "sanity";
  }
  return "unknown";
}

VerificationReport make_report(std::string name, CheckKind kind, double lhs, double rhs,
                               double tolerance) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.kind = kind;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.tolerance = tolerance;
  if (std::isnan(r.slack)) {
    r.passed = false;
  } else if (kind == CheckKind::Identity) {
    r.passed = std::abs(r.slack) <= tolerance;
  } else {
    r.passed = r.slack >= -tolerance;
  }
  return r;
}

double margin(const VerificationReport& r) {
  return r.kind == CheckKind::Identity ? -std::abs(r.slack) : r.slack;
}

Json to_json(const VerificationReport& r) {
  const double scale = r.entropic && r.unit == EntropyUnit::Bits ? 1.0 / std::numbers::ln2 : 1.0;
  Json j = {{"schemaVersion", 1},
            {"type", "report"},
            {"checkName", r.check_name},
            {"kind", to_string(r.kind)},
            {"instanceDigest", r.instance_digest},
            {"lhs", r.lhs * scale},
            {"rhs", r.rhs * scale},
            {"slack", r.slack * scale},
            {"tolerance", r.tolerance * scale},
            {"passed", r.passed},
            {"flagged", r.flagged},
            {"seed", r.seed},
            {"dims", r.dims},
            {"sample", r.sample},
            {"unit", r.entropic ? to_string(r.unit) : "none"}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::vector<CheckSummary> summarize(const std::vector<VerificationReport>& reports,
                                    double wall_time_seconds) {
  std::vector<CheckSummary> out;
  std::map<std::string, std::size_t> index;
  std::map<std::string, double> worst_margin;
  for (const auto& r : reports) {
    auto [it, inserted] = index.try_emplace(r.check_name, out.size());
    if (inserted) {
      out.push_back({r.check_name, 0, 0, 0, r.slack, wall_time_seconds, r.entropic});
      worst_margin[r.check_name] = margin(r);
    }
    auto& s = out[it->second];
    ++s.samples;
    (r.passed ? s.passes : s.failures) += 1;
    if (margin(r) < worst_margin[r.check_name]) {
      worst_margin[r.check_name] = margin(r);
      s.worst_slack = r.slack;
    }
  }
  return out;
}

Json to_json(const CheckSummary& s, EntropyUnit unit) {
  const double scale = s.entropic && unit == EntropyUnit::Bits ? 1.0 / std::numbers::ln2 : 1.0;
  return {{"schemaVersion", 1},      {"type", "summary"},
          {"checkName", s.check_name}, {"samples", s.samples},
          {"passes", s.passes},        {"failures", s.failures},
          {"worstSlack", s.worst_slack * scale}, {"wallTimeSeconds", s.wall_time_seconds},
          {"unit", s.entropic ? to_string(unit) : "none"}};
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed && !r.flagged; });
}

namespace {

ProbabilityVector random_lambda(Index n, Rng& rng) { return ProbabilityVector(uniform_simplex(n, rng)); }

Channel random_omega(Index nk, Rng& rng) {
  std::uniform_int_distribution<Index> env(1, nk);
  const Index e = env(rng);
  return random_channel(nk, e, rng);
}

Json lambda_json(const ProbabilityVector& lambda) {
  return Json(std::vector<double>(lambda.values().begin(), lambda.values().end()));
}

double pure_entropy(const Channel& c, const Vector& v) {
  return entropy_of_hermitian(chanlab::apply(c, Matrix(outer(v))));
}

void stamp(std::vector<VerificationReport>& reports, std::uint64_t seed, std::size_t sample) {
  for (auto& r : reports) {
    r.seed = seed;
    r.sample = sample;
  }
}

template <typename SampleFn>
std::vector<VerificationReport> run_samples(std::size_t samples, std::uint64_t seed, SampleFn fn) {
  auto batches = parallel_map(samples, [&](std::size_t i) {
    const std::uint64_t sample_seed = derive_seed(seed, i);
    std::vector<VerificationReport> reports = fn(sample_seed);
    stamp(reports, sample_seed, i);
    return reports;
  });
  std::vector<VerificationReport> out;
  for (auto& b : batches)
    for (auto& r : b) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<VerificationReport> theorem1_instance(const BipartiteState& e,
                                                  const ProbabilityVector& lambda,
                                                  const Channel& omega, const Tolerances& tol) {
  const Index nh = e.dim_h();
  const Index nk = e.dim_k();
  if (Index(lambda.size()) != nh) throw SizeError("theorem1: lambda length differs from dimH");
  const Channel psi = phase_damping(lambda);
  const Matrix ee = e.projector();
  const double lhs = entropy_of_hermitian(chanlab::apply(tensor(psi, omega), ee));
  const Basis g_basis = schmidt(e).right;
  const double rhs = theorem1_rhs(e, psi, omega, g_basis).nats;

  const auto mu = expand_in_basis(e, fourier_basis(nh), Side::H);
  const auto nu = expand_in_basis(e, g_basis, Side::K);
  const double trace_h = (partial_trace(ee, nh, nk, Side::K) - mu.conditional_mixture()).norm();
  const double trace_k = (partial_trace(ee, nh, nk, Side::H) - nu.conditional_mixture()).norm();

  const std::string id =
      digest(Json{{"e", to_json(e)}, {"lambda", lambda_json(lambda)}, {"omega", to_json(omega)}});
  std::vector<VerificationReport> out{
      make_report("theorem1", CheckKind::Inequality, lhs, rhs, tol.inequality),
      make_report("theorem1.trace-h", CheckKind::Identity, trace_h, 0.0, tol.identity),
      make_report("theorem1.trace-k", CheckKind::Identity, trace_k, 0.0, tol.identity)};
  out[1].entropic = out[2].entropic = false;
  for (auto& r : out) {
    r.instance_digest = id;
    r.dims = {nh, nk};
  }
  return out;
}

std::vector<VerificationReport> theorem1_sample(Index nh, Index nk, std::uint64_t sample_seed,
                                                const Tolerances& tol) {
  Rng rng(sample_seed);
  const BipartiteState e(nh, nk, haar_vector(nh * nk, rng));
  const ProbabilityVector lambda = random_lambda(nh, rng);
  const Channel omega = random_omega(nk, rng);
  auto out = theorem1_instance(e, lambda, omega, tol);
  stamp(out, sample_seed, 0);
  return out;
}

std::vector<VerificationReport> prop4_instance(const BipartiteState& e,
                                               const ProbabilityVector& lambda,
                                               const Tolerances& tol) {
  const Index nh = e.dim_h();
  const Index nk = e.dim_k();
  const Channel psi_id = tensor(phase_damping(lambda), Channel::identity(nk));
  const Matrix out_state = chanlab::apply(psi_id, e.projector());
  const auto support = support_projector(e, fourier_basis(nh));
  const double left = (support.projector * out_state - out_state).norm();
  const double right = (out_state * support.projector - out_state).norm();

  const std::string id = digest(Json{{"e", to_json(e)}, {"lambda", lambda_json(lambda)}});
  std::vector<VerificationReport> out{
      make_report("prop4.left", CheckKind::Identity, left, 0.0, tol.identity),
      make_report("prop4.right", CheckKind::Identity, right, 0.0, tol.identity),
      make_report("prop4.rank", CheckKind::Inequality, double(nh), double(support.rank), 0.0)};
  out[2].note = "rank=" + std::to_string(support.rank);
  for (auto& r : out) {
    r.entropic = false;
    r.instance_digest = id;
    r.dims = {nh, nk};
  }
  return out;
}

std::vector<VerificationReport> prop4_sample(Index nh, Index nk, std::uint64_t sample_seed,
                                             const Tolerances& tol) {
  Rng rng(sample_seed);
  const BipartiteState e(nh, nk, haar_vector(nh * nk, rng));
  auto out = prop4_instance(e, random_lambda(nh, rng), tol);
  stamp(out, sample_seed, 0);
  return out;
}

std::vector<VerificationReport> prop5_instance(const BipartiteState& e,
                                               const ProbabilityVector& lambda,
                                               const Channel& omega, const Tolerances& tol) {
  const Index nh = e.dim_h();
  const Index nk = e.dim_k();
  const Channel psi = phase_damping(lambda);
  const Matrix ee = e.projector();
  const double lhs = entropy_of_hermitian(chanlab::apply(tensor(psi, omega), ee));
  double rhs = entropy_of_hermitian(chanlab::apply(tensor(psi, Channel::identity(nk)), ee));
  for (const auto& t : expand_in_basis(e, fourier_basis(nh), Side::H).terms)
    rhs += t.weight() * pure_entropy(omega, t.conditional);

  auto r = make_report("prop5", CheckKind::Inequality, lhs, rhs, tol.inequality);
  r.instance_digest =
      digest(Json{{"e", to_json(e)}, {"lambda", lambda_json(lambda)}, {"omega", to_json(omega)}});
  r.dims = {nh, nk};
  return {r};
}

std::vector<VerificationReport> prop5_sample(Index nh, Index nk, std::uint64_t sample_seed,
                                             const Tolerances& tol) {
  Rng rng(sample_seed);
  const BipartiteState e(nh, nk, haar_vector(nh * nk, rng));
  const ProbabilityVector lambda = random_lambda(nh, rng);
  const Channel omega = random_omega(nk, rng);
  auto out = prop5_instance(e, lambda, omega, tol);
  stamp(out, sample_seed, 0);
  return out;
}

VerificationReport h_theorem_instance(const Channel& phi, const DensityMatrix& rho,
                                      const DensityMatrix& sigma, const Tolerances& tol) {
  const double before = relative_entropy(rho, sigma);
  const double after = relative_entropy(chanlab::apply(phi, rho), chanlab::apply(phi, sigma));
  auto r = make_report("h-theorem", CheckKind::Inequality, before, after, tol.inequality);
  r.instance_digest =
      digest(Json{{"phi", to_json(phi)}, {"rho", to_json(rho)}, {"sigma", to_json(sigma)}});
  r.dims = {rho.dim()};
  return r;
}

VerificationReport h_theorem_sample(Index dim, std::uint64_t sample_seed, const Tolerances& tol) {
  Rng rng(sample_seed);
  const DensityMatrix rho = random_mixed_state(dim, dim, rng);
  const DensityMatrix sigma = random_mixed_state(dim, dim, rng);
  std::uniform_int_distribution<Index> env(1, dim);
  const Index e = env(rng);
  auto r = h_theorem_instance(random_channel(dim, e, rng), rho, sigma, tol);
  r.seed = sample_seed;
  return r;
}

VerificationReport h_theorem_unitary_sample(Index dim, std::uint64_t sample_seed,
                                            const Tolerances& tol) {
  Rng rng(sample_seed);
  const DensityMatrix rho = random_mixed_state(dim, dim, rng);
  const DensityMatrix sigma = random_mixed_state(dim, dim, rng);
  auto r = h_theorem_instance(Channel::unitary(haar_unitary(dim, rng)), rho, sigma, tol);
  r.check_name = "h-theorem-unitary";
  r = [&] {
    auto id = make_report(r.check_name, CheckKind::Identity, r.lhs, r.rhs, tol.inequality);
    id.instance_digest = r.instance_digest;
    id.dims = r.dims;
    return id;
  }();
  r.seed = sample_seed;
  return r;
}

std::vector<VerificationReport> check_theorem1(Index nh, Index nk, std::size_t samples,
                                               std::uint64_t seed, const Tolerances& tol) {
  return run_samples(samples, seed, [&](std::uint64_t s) { return theorem1_sample(nh, nk, s, tol); });
}

std::vector<VerificationReport> check_prop4(Index nh, Index nk, std::size_t samples,
                                            std::uint64_t seed, const Tolerances& tol) {
  return run_samples(samples, seed, [&](std::uint64_t s) { return prop4_sample(nh, nk, s, tol); });
}

std::vector<VerificationReport> check_prop5(Index nh, Index nk, std::size_t samples,
                                            std::uint64_t seed, const Tolerances& tol) {
  return run_samples(samples, seed, [&](std::uint64_t s) { return prop5_sample(nh, nk, s, tol); });
}

std::vector<VerificationReport> check_h_theorem(Index dim, std::size_t samples, std::uint64_t seed,
                                                const Tolerances& tol) {
  return run_samples(samples, seed, [&](std::uint64_t s) {
    return std::vector<VerificationReport>{h_theorem_sample(dim, s, tol)};
  });
}

std::vector<VerificationReport> check_h_theorem_unitary(Index dim, std::size_t samples,
                                                        std::uint64_t seed, const Tolerances& tol) {
  return run_samples(samples, seed, [&](std::uint64_t s) {
    return std::vector<VerificationReport>{h_theorem_unitary_sample(dim, s, tol)};
  });
}

VerificationReport check_king_decomposition(Index n, double p, const Tolerances& tol) {
  const Matrix target = choi(depolarizing(n, p));
  const auto mixture = decompose_depolarizing(n, p);
  const double distance = (weighted_choi(mixture) - target).norm();
  double weight_sum = 0.0;
  for (const auto& m : mixture) weight_sum += m.weight;
  auto r = make_report("king-decomposition", CheckKind::Identity, distance, 0.0, tol.choi);
  r.entropic = false;
  r.dims = {n};
  r.instance_digest = digest(Json{{"n", n}, {"p", p}});
  r.note = "p=" + Json(p).dump() + ",channels=" + std::to_string(mixture.size()) +
           ",weightSum=" + Json(weight_sum).dump();
  return r;
}

std::vector<VerificationReport> check_upsilon_entropy_constancy(Index n, double p,
                                                                std::size_t samples,
                                                                std::uint64_t seed,
                                                                const Tolerances& tol) {
  const Channel upsilon = depolarizing(n, p);
  const double expected = depolarizing_pure_output_entropy(n, p);
  return run_samples(samples, seed, [&](std::uint64_t s) {
    Rng rng(s);
    const Vector g = haar_vector(n, rng);
    auto r = make_report("upsilon-entropy", CheckKind::Identity, pure_entropy(upsilon, g), expected,
                         tol.identity);
    r.dims = {n};
    r.instance_digest = digest(Json{{"n", n}, {"p", p}, {"g", complex_entries(g)}});
    return std::vector<VerificationReport>{r};
  });
}

std::vector<VerificationReport> check_upsilon_spectrum(Index n, double p, const Tolerances& tol) {
  const double nd = double(n);
  RealVector expected(n);
  expected.setConstant(p / nd);
  expected(n - 1) = 1.0 - (nd - 1.0) * p / nd;
  std::sort(expected.begin(), expected.end());
  const double expected_entropy = depolarizing_pure_output_entropy(n, p);

  std::vector<VerificationReport> out;
  std::size_t index = 0;
  for (Index k = 1; k <= 2 * n * n; ++k) {
    const Channel c = upsilon_k(n, p, k);
    for (Index j = 0; j < n; ++j) {
      Matrix ej = Matrix::Zero(n, n);
      ej(j, j) = 1.0;
      const Matrix image = chanlab::apply(c, ej);
      const RealVector spectrum = hermitian_eigenvalues(image);
      const double gap = (spectrum - expected).cwiseAbs().maxCoeff();
      const std::string id = digest(Json{{"n", n}, {"p", p}, {"k", k}, {"j", j}});
      const std::string note = "k=" + std::to_string(k) + ",j=" + std::to_string(j);
      auto spec = make_report("upsilon-spectrum", CheckKind::Identity, gap, 0.0, tol.identity);
      spec.entropic = false;
      auto ent = make_report("upsilon-spectrum.entropy", CheckKind::Identity,
                             entropy_of_hermitian(image), expected_entropy, tol.inequality);
      for (auto* r : {&spec, &ent}) {
        r->dims = {n};
        r->instance_digest = id;
        r->note = note;
        r->sample = index;
        out.push_back(*r);
      }
      ++index;
    }
  }
  return out;
}

std::vector<VerificationReport> check_phase_damping_representation(Index n, std::size_t samples,
                                                                   std::uint64_t seed,
                                                                   const Tolerances& tol) {
  const Basis f = fourier_basis(n);
  return run_samples(samples, seed, [&](std::uint64_t s) {
    Rng rng(s);
    const ProbabilityVector lambda = random_lambda(n, rng);
    const Channel psi = phase_damping(lambda);
    const auto hat = lambda_hat(lambda);
    double worst = 0.0;
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const Matrix x = f.vector(j) * f.vector(k).adjoint();
        const Complex multiplier = hat[std::size_t(((k - j) % n + n) % n)];
        worst = std::max(worst, (chanlab::apply(psi, x) - multiplier * x).cwiseAbs().maxCoeff());
      }
    auto r = make_report("representation", CheckKind::Identity, worst, 0.0, tol.identity);
    r.entropic = false;
    r.dims = {n};
    r.instance_digest = digest(Json{{"lambda", lambda_json(lambda)}});
    return std::vector<VerificationReport>{r};
  });
}

VerificationReport check_cp_boundary(Index n, const Tolerances& tol) {
  const double p = depolarizing_max_p(n);
  const double min_eig = hermitian_eigenvalues(choi(depolarizing(n, p)))(0);
  auto r = make_report("cp-boundary", CheckKind::Identity, min_eig, 0.0, tol.identity);
  r.entropic = false;
  r.dims = {n};
  r.instance_digest = digest(Json{{"n", n}, {"p", p}});
  return r;
}

VerificationReport check_min_output_depolarizing(Index n, double p, const OptimizerOptions& opts,
                                                 const Tolerances& tol) {
  const auto found = min_output_entropy(depolarizing(n, p), opts);
  auto r = make_report("min-output", CheckKind::Identity, found.value.nats,
                       depolarizing_pure_output_entropy(n, p), tol.optimizer);
  r.dims = {n};
  r.seed = opts.seed;
  r.instance_digest = digest(Json{{"n", n}, {"p", p}});
  r.note = "upper bound; p=" + Json(p).dump();
  return r;
}

std::vector<VerificationReport> check_roof_depolarizing(Index n, double p, std::size_t samples,
                                                        std::uint64_t seed,
                                                        const OptimizerOptions& opts,
                                                        const Tolerances& tol) {
  const Channel upsilon = depolarizing(n, p);
  const double expected = depolarizing_pure_output_entropy(n, p);
  return run_samples(samples, seed, [&](std::uint64_t s) {
    Rng rng(s);
    const DensityMatrix rho = random_mixed_state(n, n, rng);
    OptimizerOptions o = opts;
    o.seed = s;
    const auto roof = convex_roof(upsilon, rho, o);
    auto r = make_report("roof-depolarizing", CheckKind::Identity, roof.value.nats, expected,
                         tol.optimizer);
    r.dims = {n};
    r.instance_digest = digest(Json{{"rho", to_json(rho)}, {"p", p}});
    r.note = "upper bound";
    return std::vector<VerificationReport>{r};
  });
}

VerificationReport strong_superadditivity_instance(const NamedChannel& phi, const Channel& omega,
                                                   const DensityMatrix& rho, Index nh, Index nk,
                                                   const OptimizerOptions& opts,
                                                   const Tolerances& tol) {
  if (phi.family != ChannelFamily::PhaseDamping && phi.family != ChannelFamily::Depolarizing)
    throw DomainError("strong superadditivity: channel must be phase-damping or depolarizing");
  if (phi.channel.dim_in() != nh || omega.dim_in() != nk || rho.dim() != nh * nk)
    throw SizeError("strong superadditivity: dimension mismatch");

  const Channel joint = tensor(phi.channel, omega);
  const DensityMatrix rho_h = DensityMatrix::trusted(partial_trace(rho.matrix(), nh, nk, Side::H));
  const DensityMatrix rho_k = DensityMatrix::trusted(partial_trace(rho.matrix(), nh, nk, Side::K));
  const bool exact_phi = phi.family == ChannelFamily::Depolarizing;
  const double phi_closed = exact_phi ? depolarizing_pure_output_entropy(nh, phi.p) : 0.0;

  auto estimate = [&](const OptimizerOptions& o, double& lhs, double& phi_term, double& omega_term) {
    lhs = std::min(lhs, convex_roof(joint, rho, o).value.nats);
    phi_term = exact_phi ? phi_closed : std::min(phi_term, convex_roof(phi.channel, rho_h, o).value.nats);
    omega_term = std::min(omega_term, convex_roof(omega, rho_k, o).value.nats);
  };
  constexpr double inf = std::numeric_limits<double>::infinity();
  double lhs = inf, phi_term = inf, omega_term = inf;
  estimate(opts, lhs, phi_term, omega_term);
  bool escalated = false;
  if (lhs - (phi_term + omega_term) < -tol.optimizer) {
    OptimizerOptions more = opts;
    more.restarts = opts.restarts * 4;
    more.seed = opts.seed + 1000003;
    estimate(more, lhs, phi_term, omega_term);
    escalated = true;
  }

  auto r = make_report("strong-superadditivity", CheckKind::Sanity, lhs, phi_term + omega_term,
                       tol.optimizer);
  r.flagged = !r.passed;
  r.dims = {nh, nk};
  r.instance_digest =
      digest(Json{{"phi", phi.spec}, {"omega", to_json(omega)}, {"rho", to_json(rho)}});
  r.note = std::string("sanity (upper-bound semantics)") + (escalated ? "; escalated" : "") +
           "; phiTerm=" + Json(phi_term).dump() + (exact_phi ? " (exact)" : " (roof)") +
           "; omegaTerm=" + Json(omega_term).dump();
  return r;
}

std::vector<VerificationReport> check_strong_superadditivity(const NamedChannel& phi, Index nk,
                                                             std::size_t samples,
                                                             std::uint64_t seed,
                                                             const OptimizerOptions& opts,
                                                             const Tolerances& tol) {
  const Index nh = phi.channel.dim_in();
  return run_samples(samples, seed, [&](std::uint64_t s) {
    Rng rng(s);
    const DensityMatrix rho = random_mixed_state(nh * nk, nh * nk, rng);
    const Channel omega = random_omega(nk, rng);
    OptimizerOptions o = opts;
    o.seed = s;
    return std::vector<VerificationReport>{
        strong_superadditivity_instance(phi, omega, rho, nh, nk, o, tol)};
  });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "theorem1",          "prop4",          "prop5",
      "h-theorem",         "h-theorem-unitary", "king-decomposition",
      "upsilon-entropy",   "upsilon-spectrum", "representation",
      "cp-boundary",       "min-output",     "roof-depolarizing",
      "strong-superadditivity"};
  return names;
}

}  // namespace chanlab
