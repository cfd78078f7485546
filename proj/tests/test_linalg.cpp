// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/linalg.hpp"
#include "chanlab/random.hpp"

#include <gtest/gtest.h>

using namespace chanlab;

namespace {

Matrix shift2() {
  Matrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  return x;
}

Matrix random_hermitian(Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) {
  const Matrix i2 = Matrix::Identity(2, 2);
  EXPECT_TRUE(kron(i2, i2).isApprox(Matrix::Identity(4, 4)));
}

TEST(Kron, DiagonalFactors) {
  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a.diagonal() << 1.0, 2.0;
  b.diagonal() << 1.0, 3.0;
  const Matrix k = kron(a, b);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1.0, 3.0, 2.0, 6.0;
  EXPECT_EQ(k, expected);
}

TEST(Kron, ShiftTensorShiftOnBasisVector) {
  Vector e0 = Vector::Zero(4);
  e0(0) = 1.0;
  const Vector out = kron(shift2(), shift2()) * e0;
  Vector expected = Vector::Zero(4);
  expected(3) = 1.0;
  EXPECT_EQ(out, expected);
}

TEST(Kron, WorksForRealScalars) {
  Eigen::MatrixXd a(1, 2);
  a << 1.0, -2.0;
  Eigen::MatrixXd b(2, 1);
  b << 3.0, 4.0;
  Eigen::MatrixXd expected(2, 2);
  expected << 3.0, -6.0, 4.0, -8.0;
  EXPECT_EQ(kron(a, b), expected);
}

TEST(Kron, RejectsOversizedResult) {
  const Matrix a = Matrix::Identity(70, 70);
  EXPECT_THROW(kron(a, a), SizeError);
  EXPECT_NO_THROW(kron(a, a, 4900));
}

TEST(PartialTrace, ProductOfBasisProjectors) {
  Matrix e0 = Matrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  const Matrix out = partial_trace(kron(e0, e0), 2, 2, Side::H);
  EXPECT_EQ(out, e0);
}

TEST(PartialTrace, ProductFactorizes) {
  Rng rng(11);
  const Matrix rho = random_hermitian(2, rng);
  const Matrix sigma = random_hermitian(3, rng);
  const Matrix keep_k = partial_trace(kron(rho, sigma), 2, 3, Side::K);
  const Matrix keep_h = partial_trace(kron(rho, sigma), 2, 3, Side::H);
  EXPECT_LT((keep_k - rho.trace() * sigma).norm(), 1e-12);
  EXPECT_LT((keep_h - sigma.trace() * rho).norm(), 1e-12);
}

TEST(PartialTrace, MaximallyEntangledReductions) {
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const Matrix proj = bell * bell.adjoint();
  const Matrix half = Matrix::Identity(2, 2) / 2.0;
  EXPECT_LT((partial_trace(proj, 2, 2, Side::H) - half).norm(), 1e-15);
  EXPECT_LT((partial_trace(proj, 2, 2, Side::K) - half).norm(), 1e-15);
}

TEST(PartialTrace, IndexContractionMatchesLoop) {
  Rng rng(5);
  const Index dh = 3, dk = 2;
  const Matrix m = ginibre(dh * dk, dh * dk, rng);
  Matrix expected_h = Matrix::Zero(dh, dh);
  for (Index a = 0; a < dh; ++a)
    for (Index b = 0; b < dh; ++b)
      for (Index k = 0; k < dk; ++k) expected_h(a, b) += m(a * dk + k, b * dk + k);
  Matrix expected_k = Matrix::Zero(dk, dk);
  for (Index k = 0; k < dk; ++k)
    for (Index l = 0; l < dk; ++l)
      for (Index a = 0; a < dh; ++a) expected_k(k, l) += m(a * dk + k, a * dk + l);
  EXPECT_LT((partial_trace(m, dh, dk, Side::H) - expected_h).norm(), 1e-13);
  EXPECT_LT((partial_trace(m, dh, dk, Side::K) - expected_k).norm(), 1e-13);
}

TEST(PartialTrace, RejectsMismatchedSize) {
  EXPECT_THROW(partial_trace(Matrix::Identity(5, 5), 2, 2, Side::H), SizeError);
  EXPECT_THROW(partial_trace(Matrix::Identity(4, 3), 2, 2, Side::K), SizeError);
}

TEST(HermitianEig, Diagonal) {
  Matrix d = Matrix::Zero(2, 2);
  d.diagonal() << 2.0, 1.0;
  const auto eig = hermitian_eig(d);
  EXPECT_DOUBLE_EQ(eig.eigenvalues(0), 1.0);
  EXPECT_DOUBLE_EQ(eig.eigenvalues(1), 2.0);
}

TEST(HermitianEig, Shift) {
  const auto w = hermitian_eigenvalues(shift2());
  EXPECT_NEAR(w(0), -1.0, 1e-15);
  EXPECT_NEAR(w(1), 1.0, 1e-15);
}

TEST(HermitianEig, FrozenThreeByThree) {
  Matrix h(3, 3);
  h << Complex(2, 0), Complex(1, -1), Complex(0, 0.5),
       Complex(1, 1), Complex(-1, 0), Complex(0.25, 0),
       Complex(0, -0.5), Complex(0.25, 0), Complex(0.5, 0);
  const auto w = hermitian_eigenvalues(h);
  EXPECT_NEAR(w(0), -1.6325680072478095, 1e-13);
  EXPECT_NEAR(w(1), 0.4931506145024373, 1e-13);
  EXPECT_NEAR(w(2), 2.639417392745373, 1e-13);
}

TEST(HermitianEig, ReconstructsRandomHermitian) {
  Rng rng(42);
  for (Index dim : {1, 2, 5, 9}) {
    const Matrix h = random_hermitian(dim, rng);
    const auto eig = hermitian_eig(h);
    EXPECT_LT((eig.reconstruct() - h).norm(), 1e-10);
    EXPECT_TRUE(is_unitary(eig.eigenvectors, 1e-12));
    for (Index i = 1; i < dim; ++i) EXPECT_LE(eig.eigenvalues(i - 1), eig.eigenvalues(i));
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eig(m), DomainError);
  EXPECT_THROW(hermitian_eigenvalues(m), DomainError);
  EXPECT_THROW(hermitian_eig(Matrix(2, 3)), SizeError);
}

TEST(Svd, IdentityHasUnitSingularValues) {
  const auto dec = svd(Matrix(Matrix::Identity(3, 3)));
  EXPECT_TRUE(dec.singular.isApprox(RealVector::Ones(3)));
}

TEST(Svd, RankOneOuterProduct) {
  Rng rng(3);
  const Vector u = haar_vector(3, rng);
  const Vector v = haar_vector(3, rng);
  const auto dec = svd(Matrix(u * v.adjoint()));
  EXPECT_NEAR(dec.singular(0), 1.0, 1e-14);
  EXPECT_NEAR(dec.singular(1), 0.0, 1e-14);
  EXPECT_NEAR(dec.singular(2), 0.0, 1e-14);
}

TEST(Svd, FrozenThreeByTwo) {
  Matrix m(3, 2);
  m << Complex(1, 0), Complex(0, 2), Complex(0.5, 0), Complex(-1, 0), Complex(0, 1), Complex(1, 1);
  const auto dec = svd(m);
  EXPECT_NEAR(dec.singular(0), 2.692582403567253, 1e-13);
  EXPECT_NEAR(dec.singular(1), 1.414213562373095, 1e-13);
  EXPECT_LT((dec.reconstruct() - m).norm(), 1e-10);
  EXPECT_TRUE(is_unitary(dec.u, 1e-12));
  EXPECT_TRUE(is_unitary(dec.v, 1e-12));
}

TEST(Svd, RandomReconstruction) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = ginibre(3, 2, rng);
    const auto dec = svd(m);
    EXPECT_LT((dec.reconstruct() - m).norm(), 1e-10);
    EXPECT_GE(dec.singular(0), dec.singular(1));
  }
}

TEST(MatrixPower, CyclicShift) {
  const Matrix x = shift2();
  EXPECT_EQ(matrix_power(x, 0), Matrix::Identity(2, 2));
  EXPECT_EQ(matrix_power(x, 3), x);
  EXPECT_EQ(matrix_power(x, 4), Matrix::Identity(2, 2));
  EXPECT_THROW(matrix_power(x, -1), DomainError);
}

TEST(Finite, DetectsNan) {
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_TRUE(all_finite(m));
  m(1, 0) = Complex(std::nan(""), 0.0);
  EXPECT_FALSE(all_finite(m));
  EXPECT_THROW(require_finite(m, "test"), DomainError);
}
