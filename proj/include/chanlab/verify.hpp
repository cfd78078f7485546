// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_VERIFY_HPP
#define CHANLAB_VERIFY_HPP

#include "chanlab/channel_spec.hpp"
#include "chanlab/optimize.hpp"
#include "chanlab/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chanlab {

/// Identity: |slack| <= tolerance. Inequality: slack >= -tolerance. Sanity: an inequality
/// between optimizer upper bounds, so a failure is inconclusive rather than a
/// counterexample.
enum class CheckKind { Identity, Inequality, Sanity };

const char* to_string(CheckKind kind);

struct Tolerances {
  double identity = 1e-10;
  double inequality = 1e-9;
  double optimizer = 1e-4;
  double choi = 1e-8;
};

/// One checked claim. Reports are oriented so that slack = lhs − rhs >= 0 is the claim.
struct VerificationReport {
  std::string check_name;
  CheckKind kind = CheckKind::Inequality;
  std::string instance_digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool flagged = false;  // sanity check still negative after escalation
  std::uint64_t seed = 0;
  std::vector<Index> dims;
  std::size_t sample = 0;
  EntropyUnit unit = EntropyUnit::Nats;
  bool entropic = true;  // lhs/rhs are entropies (converted by unit); else dimensionless
  std::string note;
};

VerificationReport make_report(std::string name, CheckKind kind, double lhs, double rhs,
                               double tolerance);

/// Margin used to rank reports: slack for inequalities, −|slack| for identities.
double margin(const VerificationReport& r);

Json to_json(const VerificationReport& r);

struct CheckSummary {
  std::string check_name;
  std::size_t samples = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  double worst_slack = 0.0;
  double wall_time_seconds = 0.0;
  bool entropic = true;
};

/// Groups reports by check name in order of first appearance.
std::vector<CheckSummary> summarize(const std::vector<VerificationReport>& reports,
                                    double wall_time_seconds);
Json to_json(const CheckSummary& s, EntropyUnit unit);

bool all_passed(const std::vector<VerificationReport>& reports);

// Single-instance evaluators. Each random sample of the batch checks below calls one of
// these, so a report can be reproduced from its recorded seed.

std::vector<VerificationReport> theorem1_instance(const BipartiteState& e,
                                                  const ProbabilityVector& lambda,
                                                  const Channel& omega, const Tolerances& tol);
std::vector<VerificationReport> theorem1_sample(Index nh, Index nk, std::uint64_t sample_seed,
                                                const Tolerances& tol = {});

std::vector<VerificationReport> prop4_instance(const BipartiteState& e,
                                               const ProbabilityVector& lambda,
                                               const Tolerances& tol);
std::vector<VerificationReport> prop4_sample(Index nh, Index nk, std::uint64_t sample_seed,
                                             const Tolerances& tol = {});

std::vector<VerificationReport> prop5_instance(const BipartiteState& e,
                                               const ProbabilityVector& lambda,
                                               const Channel& omega, const Tolerances& tol);
std::vector<VerificationReport> prop5_sample(Index nh, Index nk, std::uint64_t sample_seed,
                                             const Tolerances& tol = {});

/// Oriented as lhs = S(ρ‖σ), rhs = S(Φρ‖Φσ).
VerificationReport h_theorem_instance(const Channel& phi, const DensityMatrix& rho,
                                      const DensityMatrix& sigma, const Tolerances& tol);
VerificationReport h_theorem_sample(Index dim, std::uint64_t sample_seed,
                                    const Tolerances& tol = {});
/// Unitary Φ: identity check S(Φρ‖Φσ) = S(ρ‖σ) at the inequality tolerance.
VerificationReport h_theorem_unitary_sample(Index dim, std::uint64_t sample_seed,
                                            const Tolerances& tol = {});

/// lhs = UB(Ŝ_{Φ⊗Ω}(ρ)), rhs = Ŝ_Φ(Tr_K ρ) + UB(Ŝ_Ω(Tr_H ρ)); the Φ term is the closed
/// form for depolarizing channels and a roof estimate otherwise. Negative slack beyond
/// the optimizer tolerance triggers one re-run with 4x restarts; a case still negative
/// is flagged.
VerificationReport strong_superadditivity_instance(const NamedChannel& phi, const Channel& omega,
                                                   const DensityMatrix& rho, Index nh, Index nk,
                                                   const OptimizerOptions& opts,
                                                   const Tolerances& tol);

// Batch checks. Sample i uses derive_seed(seed, i); reports come back sorted by sample.

std::vector<VerificationReport> check_theorem1(Index nh, Index nk, std::size_t samples,
                                               std::uint64_t seed, const Tolerances& tol = {});
std::vector<VerificationReport> check_prop4(Index nh, Index nk, std::size_t samples,
                                            std::uint64_t seed, const Tolerances& tol = {});
std::vector<VerificationReport> check_prop5(Index nh, Index nk, std::size_t samples,
                                            std::uint64_t seed, const Tolerances& tol = {});
std::vector<VerificationReport> check_h_theorem(Index dim, std::size_t samples, std::uint64_t seed,
                                                const Tolerances& tol = {});
std::vector<VerificationReport> check_h_theorem_unitary(Index dim, std::size_t samples,
                                                        std::uint64_t seed,
                                                        const Tolerances& tol = {});

/// Choi distance between depolarizing(n, p) and its Υ_k mixture.
VerificationReport check_king_decomposition(Index n, double p, const Tolerances& tol = {});

/// S(Υ(|g⟩⟨g|)) against the closed form for Haar-random g.
std::vector<VerificationReport> check_upsilon_entropy_constancy(Index n, double p,
                                                                std::size_t samples,
                                                                std::uint64_t seed,
                                                                const Tolerances& tol = {});

/// For every k and j: spectrum of Υ_k(|e_j⟩⟨e_j|) against {1−(n−1)p/n, p/n ×(n−1)}
/// (identity tolerance) and its entropy against the closed form (inequality tolerance).
std::vector<VerificationReport> check_upsilon_spectrum(Index n, double p,
                                                       const Tolerances& tol = {});

/// Max over j, k of |Ψ(|f_j⟩⟨f_k|) − λ̂_{k−j}|f_j⟩⟨f_k|| for random λ.
std::vector<VerificationReport> check_phase_damping_representation(Index n, std::size_t samples,
                                                                   std::uint64_t seed,
                                                                   const Tolerances& tol = {});

/// Minimum Choi eigenvalue of depolarizing(n, n²/(n²−1)) against 0.
VerificationReport check_cp_boundary(Index n, const Tolerances& tol = {});

/// Minimal output entropy search on depolarizing(n, p) against the closed form.
VerificationReport check_min_output_depolarizing(Index n, double p, const OptimizerOptions& opts,
                                                 const Tolerances& tol = {});

/// Roof estimates of depolarizing(n, p) on random mixed states against the closed form.
std::vector<VerificationReport> check_roof_depolarizing(Index n, double p, std::size_t samples,
                                                        std::uint64_t seed,
                                                        const OptimizerOptions& opts,
                                                        const Tolerances& tol = {});

/// Random mixed ρ on H ⊗ K (reduced Haar state on a doubled space) and random Ω on K.
std::vector<VerificationReport> check_strong_superadditivity(const NamedChannel& phi, Index nk,
                                                             std::size_t samples,
                                                             std::uint64_t seed,
                                                             const OptimizerOptions& opts,
                                                             const Tolerances& tol = {});

/// Names accepted by `verify <name>` besides "all".
const std::vector<std::string>& check_names();

}  // namespace chanlab

#endif  // CHANLAB_VERIFY_HPP
