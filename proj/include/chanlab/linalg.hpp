// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_LINALG_HPP
#define CHANLAB_LINALG_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace chanlab {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<Complex>;
using Vector = DenseVector<Complex>;
using RealVector = DenseVector<double>;

/// Largest matrix dimension any kernel will produce.
inline constexpr Index kMaxDimension = 4096;

struct SizeError : std::length_error {
  using std::length_error::length_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Side { H, K };

inline const char* to_string(Side side) { return side == Side::H ? "H" : "K"; }

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(std::abs(m(i, j)))) return false;
  return true;
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!all_finite(m)) throw DomainError(std::string(what) + ": non-finite entry");
}

/// Kronecker product a ⊗ b with the row index of `a` as the major index.
template <typename DA, typename DB>
DenseMatrix<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a,
                                      const Eigen::MatrixBase<DB>& b,
                                      Index max_dim = kMaxDimension) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>,
                "kron operands must share a scalar type");
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim)
    throw SizeError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds limit " + std::to_string(max_dim));
  DenseMatrix<typename DA::Scalar> out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Partial trace of an operator on H ⊗ K; `keep` names the factor that survives.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                                    Index dim_h, Index dim_k, Side keep) {
  if (dim_h < 1 || dim_k < 1 || m.rows() != dim_h * dim_k || m.cols() != m.rows())
    throw SizeError("partial_trace: expected a square matrix of size " +
                    std::to_string(dim_h * dim_k) + ", got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  using Scalar = typename Derived::Scalar;
  if (keep == Side::H) {
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(dim_h, dim_h);
    for (Index a = 0; a < dim_h; ++a)
      for (Index b = 0; b < dim_h; ++b)
        out(a, b) = m.block(a * dim_k, b * dim_k, dim_k, dim_k).trace();
    return out;
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(dim_k, dim_k);
  for (Index a = 0; a < dim_h; ++a) out += m.block(a * dim_k, a * dim_k, dim_k, dim_k);
  return out;
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& h) {
  if (h.size() == 0) return 0.0;
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
template <typename Scalar>
struct HermitianEig {
  DenseVector<typename Eigen::NumTraits<Scalar>::Real> eigenvalues;
  DenseMatrix<Scalar> eigenvectors;  // columns

  DenseMatrix<Scalar> reconstruct() const {
    return eigenvectors * eigenvalues.template cast<Scalar>().asDiagonal() *
           eigenvectors.adjoint();
  }
};

inline constexpr double kHermitianTolerance = 1e-9;

template <typename Derived>
HermitianEig<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols()) throw SizeError("hermitian_eig: matrix is not square");
  if (h.rows() == 0) throw SizeError("hermitian_eig: empty matrix");
  const double defect = hermiticity_defect(h);
  if (!(defect <= kHermitianTolerance))
    throw DomainError("hermitian_eig: matrix is not Hermitian (defect " +
                      std::to_string(defect) + ")");
  const DenseMatrix<Scalar> sym = (h + h.adjoint()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(sym);
  if (solver.info() != Eigen::Success) throw DomainError("hermitian_eig: no convergence");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Derived>
DenseVector<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  if (h.rows() != h.cols()) throw SizeError("hermitian_eigenvalues: matrix is not square");
  const double defect = hermiticity_defect(h);
  if (!(defect <= kHermitianTolerance))
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
  const DenseMatrix<Scalar> sym = (h + h.adjoint()) / Scalar(2);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// m = U diag(singular) V†, singular values descending, U and V square unitaries.
template <typename Scalar>
struct Svd {
  DenseMatrix<Scalar> u;
  DenseVector<typename Eigen::NumTraits<Scalar>::Real> singular;
  DenseMatrix<Scalar> v;

  DenseMatrix<Scalar> reconstruct() const {
    const Index r = singular.size();
    return u.leftCols(r) * singular.template cast<Scalar>().asDiagonal() *
           v.leftCols(r).adjoint();
  }
};

template <typename Derived>
Svd<typename Derived::Scalar> svd(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() > kMaxDimension || m.cols() > kMaxDimension) throw SizeError("svd: too large");
  Eigen::JacobiSVD<DenseMatrix<Scalar>> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, double tol) {
  if (u.rows() != u.cols()) return false;
  using Scalar = typename Derived::Scalar;
  const DenseMatrix<Scalar> gram = u.adjoint() * u;
  return (gram - DenseMatrix<Scalar>::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

/// Integer matrix power by repeated squaring.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m,
                                                   long long exponent) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw SizeError("matrix_power: matrix is not square");
  if (exponent < 0) throw DomainError("matrix_power: negative exponent");
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(m.rows(), m.cols());
  DenseMatrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> outer(const Eigen::MatrixBase<Derived>& v) {
  return v * v.adjoint();
}

}  // namespace chanlab

#endif  // CHANLAB_LINALG_HPP
