// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/channel_spec.hpp"

#include <charconv>
#include <map>
#include <set>

namespace chanlab {

namespace {

using Params = std::map<std::string, std::vector<std::string>>;

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ParseError("channel spec: key '" + key + "' has invalid number '" + text + "'");
  return v;
}

long long parse_int(const std::string& key, const std::string& text) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ParseError("channel spec: key '" + key + "' has invalid integer '" + text + "'");
  return v;
}

Params split_params(const std::string& name, const std::string& body) {
  Params params;
  std::string last_key;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    const std::string token = trim(body.substr(start, comma - start));
    start = comma + 1;
    if (token.empty()) throw ParseError("channel spec '" + name + "': empty parameter");
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      if (last_key.empty())
        throw ParseError("channel spec '" + name + "': value '" + token + "' has no key");
      params[last_key].push_back(token);
      continue;
    }
    last_key = trim(token.substr(0, eq));
    if (last_key.empty()) throw ParseError("channel spec '" + name + "': empty key");
    if (params.count(last_key))
      throw ParseError("channel spec '" + name + "': duplicate key '" + last_key + "'");
    params[last_key].push_back(trim(token.substr(eq + 1)));
  }
  return params;
}

void check_keys(const std::string& name, const Params& params, const std::set<std::string>& allowed,
                const std::set<std::string>& list_keys) {
  for (const auto& [key, values] : params) {
    if (!allowed.count(key))
      throw ParseError("channel spec '" + name + "': unknown key '" + key + "'");
    if (values.size() > 1 && !list_keys.count(key))
      throw ParseError("channel spec '" + name + "': key '" + key + "' takes a single value");
  }
}

const std::string& require(const std::string& name, const Params& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end())
    throw ParseError("channel spec '" + name + "': missing key '" + key + "'");
  return it->second.front();
}

Index parse_dim(const std::string& name, const Params& params) {
  const long long n = parse_int("n", require(name, params, "n"));
  if (n < 1 || n > 64) throw ParseError("channel spec '" + name + "': key 'n' out of range");
  return static_cast<Index>(n);
}

}  // namespace

NamedChannel parse_channel_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = trim(spec.substr(0, colon));
  if (name.empty()) throw ParseError("channel spec: missing channel name");
  const Params params =
      colon == std::string::npos ? Params{} : split_params(name, spec.substr(colon + 1));

  if (name == "phase-damping") {
    check_keys(name, params, {"n", "lambda"}, {"lambda"});
    require(name, params, "lambda");
    std::vector<double> lambda;
    for (const auto& v : params.at("lambda")) lambda.push_back(parse_double("lambda", v));
    const Index n = params.count("n") ? parse_dim(name, params) : Index(lambda.size());
    if (Index(lambda.size()) != n)
      throw ParseError("channel spec '" + name + "': key 'lambda' has " +
                       std::to_string(lambda.size()) + " entries, expected n=" + std::to_string(n));
    Channel c = phase_damping(ProbabilityVector(lambda));
    return {spec, ChannelFamily::PhaseDamping, n, 0.0, lambda, 0, 0, 0, std::move(c)};
  }
  if (name == "depolarizing") {
    check_keys(name, params, {"n", "p"}, {});
    const Index n = parse_dim(name, params);
    const double p = parse_double("p", require(name, params, "p"));
    return {spec, ChannelFamily::Depolarizing, n, p, {}, 0, 0, 0, depolarizing(n, p)};
  }
  if (name == "upsilon-k") {
    check_keys(name, params, {"n", "p", "k"}, {});
    const Index n = parse_dim(name, params);
    const double p = parse_double("p", require(name, params, "p"));
    const auto k = static_cast<Index>(parse_int("k", require(name, params, "k")));
    return {spec, ChannelFamily::UpsilonK, n, p, {}, k, 0, 0, upsilon_k(n, p, k)};
  }
  if (name == "random") {
    check_keys(name, params, {"n", "env", "seed"}, {});
    const Index n = parse_dim(name, params);
    const long long env = parse_int("env", require(name, params, "env"));
    if (env < 1 || env > 256) throw ParseError("channel spec 'random': key 'env' out of range");
    const long long seed = params.count("seed") ? parse_int("seed", params.at("seed").front()) : 0;
    if (seed < 0) throw ParseError("channel spec 'random': key 'seed' must be nonnegative");
    return {spec, ChannelFamily::Random, n, 0.0, {}, 0, Index(env), std::uint64_t(seed),
            random_channel(n, Index(env), std::uint64_t(seed))};
  }
  if (name == "identity") {
    check_keys(name, params, {"n"}, {});
    const Index n = parse_dim(name, params);
    return {spec, ChannelFamily::Identity, n, 0.0, {}, 0, 0, 0, Channel::identity(n)};
  }
  throw ParseError("channel spec: unknown channel '" + name + "'");
}

}  // namespace chanlab
