// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_OPTIMIZE_HPP
#define CHANLAB_OPTIMIZE_HPP

#include "chanlab/entropy.hpp"

#include <cstdint>
#include <vector>

namespace chanlab {

/// Multi-start coordinate search settings. The step starts at 0.5 rad and halves after
/// every sweep that gains less than `tol`; a restart stops once the step falls below `tol` or
/// after `max_iters` sweeps.
struct OptimizerOptions {
  int restarts = 16;
  int max_iters = 400;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  Index ensemble_size = 0;  // 0 selects min(rank², 16), at least rank

  static OptimizerOptions min_output_defaults() { return {}; }
  static OptimizerOptions roof_defaults() {
    OptimizerOptions o;
    o.restarts = 8;
    return o;
  }

  void validate() const;
};

struct MinOutputResult {
  EntropyValue value;  // upper bound on the minimal output entropy
  Vector state;
  bool converged;
};

/// Best S(c(|ψ⟩⟨ψ|)) over `restarts` local searches on the unit sphere.
MinOutputResult min_output_entropy(const Channel& c, const OptimizerOptions& opts);

struct EnsembleMember {
  double weight;
  Vector state;
};

/// An ensemble decomposition of rho and its average output entropy, an upper bound on
/// the convex roof.
struct RoofEstimate {
  EntropyValue value;
  std::vector<EnsembleMember> ensemble;
  bool converged;

  Matrix reconstruct() const;
};

Index default_ensemble_size(Index rank);
Index numerical_rank(const DensityMatrix& rho);

/// Convex roof min Σ π_i S(c(ρ_i)) over pure-state ensembles of size ensemble_size.
/// Ensembles are parameterized as rows of W·diag(√λ)·Vᵀ for ρ = V diag(λ) V† and a unitary
/// W; the search runs over W.
RoofEstimate convex_roof(const Channel& c, const DensityMatrix& rho, const OptimizerOptions& opts);

/// Σ_j ν_j² S(Ψ(|h̃_j⟩⟨h̃_j|)) + Σ_j μ_j² S(Ω(|h_j⟩⟨h_j|)) from the expansions of e in the
/// Fourier basis on H (μ, h) and in g_basis on K (ν, h̃).
EntropyValue theorem1_rhs(const BipartiteState& e, const Channel& psi, const Channel& omega,
                          const Basis& g_basis);

}  // namespace chanlab

#endif  // CHANLAB_OPTIMIZE_HPP
