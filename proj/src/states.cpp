// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/states.hpp"

#include "chanlab/random.hpp"

#include <cmath>
#include <numeric>

namespace chanlab {

ProbabilityVector::ProbabilityVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("probability vector is empty");
  double total = 0.0;
  for (double x : values_) {
    if (!std::isfinite(x) || x < 0.0)
      throw DomainError("probability vector has a negative or non-finite entry");
    total += x;
  }
  if (std::abs(total - 1.0) > kSumTolerance)
    throw DomainError("probability vector sums to " + std::to_string(total) + ", not 1");
}

Basis::Basis(Matrix columns) : columns_(std::move(columns)) {
  if (columns_.rows() < 1 || columns_.rows() != columns_.cols())
    throw SizeError("basis: expected a square matrix of column vectors");
  require_finite(columns_, "basis");
  if (!is_unitary(columns_, kTolerance)) throw DomainError("basis: vectors are not orthonormal");
}

Basis Basis::computational(Index dim) { return Basis(Matrix::Identity(dim, dim)); }

DensityMatrix::DensityMatrix(Matrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols())
    throw SizeError("density matrix: not square");
  require_finite(mat_, "density matrix");
  if (hermiticity_defect(mat_) > kTolerance) throw DomainError("density matrix: not Hermitian");
  if (std::abs(mat_.trace() - Complex(1.0)) > kTolerance)
    throw DomainError("density matrix: trace is not 1");
  if (hermitian_eigenvalues(mat_)(0) < -kTolerance)
    throw DomainError("density matrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double norm = psi.norm();
  if (!(std::abs(norm - 1.0) <= kTolerance)) throw DomainError("pure state: vector is not unit");
  return DensityMatrix(outer(psi), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim < 1) throw SizeError("maximally mixed: dimension must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / double(dim), Unchecked{});
}

DensityMatrix DensityMatrix::trusted(Matrix mat) { return DensityMatrix(std::move(mat), Unchecked{}); }

BipartiteState::BipartiteState(Index dim_h, Index dim_k, Vector vec)
    : dim_h_(dim_h), dim_k_(dim_k), vec_(std::move(vec)) {
  if (dim_h_ < 1 || dim_k_ < 1) throw SizeError("bipartite state: dimensions must be positive");
  if (vec_.size() != dim_h_ * dim_k_)
    throw SizeError("bipartite state: vector length " + std::to_string(vec_.size()) +
                    " does not match " + std::to_string(dim_h_) + "x" + std::to_string(dim_k_));
  require_finite(vec_, "bipartite state");
  if (std::abs(vec_.norm() - 1.0) > kNormTolerance)
    throw DomainError("bipartite state: vector is not unit");
}

BipartiteState BipartiteState::product(const Vector& h, const Vector& k) {
  return BipartiteState(h.size(), k.size(), kron(h, k));
}

Matrix BipartiteState::coefficients() const {
  Matrix c(dim_h_, dim_k_);
  for (Index a = 0; a < dim_h_; ++a)
    for (Index k = 0; k < dim_k_; ++k) c(a, k) = vec_(a * dim_k_ + k);
  return c;
}

Complex fix_phase(Vector& v) {
  if (v.size() == 0) return Complex(1.0);
  Index best = 0;
  double best_mag = -1.0;
  // Ties keep the lowest index so the choice is deterministic.
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > best_mag * (1.0 + 1e-12)) {
      best = i;
      best_mag = mag;
    }
  }
  if (best_mag <= 0.0) return Complex(1.0);
  const Complex phase = v(best) / best_mag;
  v *= std::conj(phase);
  v(best) = Complex(std::abs(v(best)), 0.0);
  return phase;
}

BasisExpansion expand_in_basis(const BipartiteState& e, const Basis& basis, Side side) {
  const Index own = side == Side::H ? e.dim_h() : e.dim_k();
  if (basis.dim() != own)
    throw SizeError("expand_in_basis: basis dimension " + std::to_string(basis.dim()) +
                    " does not match factor " + to_string(side) + " of dimension " +
                    std::to_string(own));
  const Matrix c = e.coefficients();
  // Row j of `partial` is the unnormalized conditional vector for basis_j.
  const Matrix partial = side == Side::H ? Matrix(basis.matrix().adjoint() * c)
                                         : Matrix((c * basis.matrix().conjugate()).transpose());

  BasisExpansion out{side, basis, {}, {}};
  out.weights.reserve(static_cast<std::size_t>(own));
  for (Index j = 0; j < own; ++j) {
    Vector v = partial.row(j).transpose();
    const double norm = v.norm();
    out.weights.push_back(norm * norm);
    if (norm * norm < BasisExpansion::kOmitWeight) continue;
    v /= norm;
    const Complex phase = fix_phase(v);
    out.terms.push_back({j, norm * phase, std::move(v)});
  }
  return out;
}

Matrix BasisExpansion::conditional_mixture() const {
  const Index dim = terms.empty() ? 0 : terms.front().conditional.size();
  Matrix mix = Matrix::Zero(dim, dim);
  for (const auto& t : terms) mix += t.weight() * outer(t.conditional);
  return mix;
}

Vector BasisExpansion::reassemble() const {
  if (terms.empty()) return Vector();
  const Index other = terms.front().conditional.size();
  Vector v = Vector::Zero(basis.dim() * other);
  for (const auto& t : terms) {
    const Vector b = basis.vector(t.basis_index);
    v += t.amplitude * (side == Side::H ? kron(b, t.conditional) : kron(t.conditional, b));
  }
  return v;
}

SchmidtDecomposition schmidt(const BipartiteState& e) {
  const auto dec = svd(e.coefficients());
  // C = U Σ V†, so e = Σ_j σ_j u_j ⊗ conj(v_j).
  return {dec.singular, Basis(dec.u), Basis(dec.v.conjugate())};
}

Vector SchmidtDecomposition::reconstruct() const {
  const Index dh = left.dim();
  const Index dk = right.dim();
  Vector v = Vector::Zero(dh * dk);
  for (Index j = 0; j < coefficients.size(); ++j)
    v += coefficients(j) * kron(Vector(left.vector(j)), Vector(right.vector(j)));
  return v;
}

SupportProjector support_projector(const BipartiteState& e, const Basis& f_basis) {
  const auto expansion = expand_in_basis(e, f_basis, Side::H);
  const Index dim = e.dim_h() * e.dim_k();
  SupportProjector out{Matrix::Zero(dim, dim), 0};
  for (const auto& t : expansion.terms) {
    if (t.weight() <= SupportProjector::kWeightCutoff) continue;
    out.projector += kron(outer(Vector(f_basis.vector(t.basis_index))), outer(t.conditional));
    ++out.rank;
  }
  return out;
}

Vector haar_random_state(Index dim, std::uint64_t seed) {
  if (dim < 1) throw SizeError("haar_random_state: dimension must be positive");
  Rng rng(seed);
  return haar_vector(dim, rng);
}

DensityMatrix random_mixed_state(Index dim, Index ancilla_dim, Rng& rng) {
  const BipartiteState purification(dim, ancilla_dim, haar_vector(dim * ancilla_dim, rng));
  Matrix rho = partial_trace(purification.projector(), dim, ancilla_dim, Side::H);
  rho = (rho + rho.adjoint()) / 2.0;
  return DensityMatrix::trusted(std::move(rho));
}

}  // namespace chanlab
