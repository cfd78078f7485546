// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_STATES_HPP
#define CHANLAB_STATES_HPP

#include "chanlab/linalg.hpp"
#include "chanlab/random.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace chanlab {

/// Nonnegative weights summing to one.
class ProbabilityVector {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit ProbabilityVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Orthonormal basis stored column-wise in a square matrix.
class Basis {
 public:
  static constexpr double kTolerance = 1e-10;

  explicit Basis(Matrix columns);

  static Basis computational(Index dim);

  Index dim() const { return columns_.rows(); }
  auto vector(Index j) const { return columns_.col(j); }
  const Matrix& matrix() const { return columns_; }

 private:
  Matrix columns_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  /// Validates every invariant; throws DomainError otherwise.
  explicit DensityMatrix(Matrix mat);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(Index dim);

  /// Skips validation; for outputs of operations that preserve the invariants.
  static DensityMatrix trusted(Matrix mat);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

 private:
  struct Unchecked {};
  DensityMatrix(Matrix mat, Unchecked) : mat_(std::move(mat)) {}
  Matrix mat_;
};

/// Unit vector on H ⊗ K; entry a*dimK + k multiplies |a⟩ ⊗ |k⟩.
class BipartiteState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  BipartiteState(Index dim_h, Index dim_k, Vector vec);

  static BipartiteState product(const Vector& h, const Vector& k);

  Index dim_h() const { return dim_h_; }
  Index dim_k() const { return dim_k_; }
  const Vector& vec() const { return vec_; }

  /// Coefficient matrix C with C(a, k) = vec[a*dimK + k].
  Matrix coefficients() const;
  Matrix projector() const { return outer(vec_); }
  DensityMatrix density() const { return DensityMatrix::trusted(projector()); }

 private:
  Index dim_h_;
  Index dim_k_;
  Vector vec_;
};

struct ExpansionTerm {
  Index basis_index;
  Complex amplitude;  // mu_j (or nu_j); weight is |amplitude|^2
  Vector conditional;  // unit vector on the other factor

  double weight() const { return std::norm(amplitude); }
};

/// e = Σ_j amplitude_j · basis_j ⊗ conditional_j (mirrored for side K).
struct BasisExpansion {
  static constexpr double kOmitWeight = 1e-14;

  Side side;
  Basis basis;
  std::vector<double> weights;  // one per basis vector, including omitted ones
  std::vector<ExpansionTerm> terms;

  /// Σ_j weight_j |conditional_j⟩⟨conditional_j|, the reduced state of the other factor.
  Matrix conditional_mixture() const;
  Vector reassemble() const;
};

BasisExpansion expand_in_basis(const BipartiteState& e, const Basis& basis, Side side);

struct SchmidtDecomposition {
  RealVector coefficients;  // descending, length min(dimH, dimK)
  Basis left;               // on H; first coefficients.size() columns pair with coefficients
  Basis right;              // on K

  Vector reconstruct() const;
};

SchmidtDecomposition schmidt(const BipartiteState& e);

struct SupportProjector {
  static constexpr double kWeightCutoff = 1e-12;

  Matrix projector;
  Index rank;
};

/// P = Σ_{j: weight_j > cutoff} |f_j⟩⟨f_j| ⊗ |h_j⟩⟨h_j| from the expansion in fBasis.
SupportProjector support_projector(const BipartiteState& e, const Basis& f_basis);

Vector haar_random_state(Index dim, std::uint64_t seed);

/// Reduced state of a Haar-random pure state on dim x ancilla_dim; full rank when
/// ancilla_dim >= dim.
DensityMatrix random_mixed_state(Index dim, Index ancilla_dim, Rng& rng);

/// Rotates v by a global phase so its largest-magnitude entry is real and nonnegative.
/// Returns the phase that was removed.
Complex fix_phase(Vector& v);

}  // namespace chanlab

#endif  // CHANLAB_STATES_HPP
