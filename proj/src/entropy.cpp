// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/entropy.hpp"

#include <cmath>
#include <limits>

namespace chanlab {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double entropy_of_hermitian(const Matrix& h) {
  const RealVector w = hermitian_eigenvalues(h);
  double s = 0.0;
  for (Index i = 0; i < w.size(); ++i) s -= xlogx(w(i));
  return std::max(s, 0.0);
}

EntropyValue von_neumann(const DensityMatrix& rho) {
  const RealVector w = hermitian_eigenvalues(rho.matrix());
  if (w(0) < -kEigenvalueClip) throw DomainError("von_neumann: state has a negative eigenvalue");
  double s = 0.0;
  for (Index i = 0; i < w.size(); ++i) s -= xlogx(w(i));
  return {std::max(s, 0.0)};
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw SizeError("relative_entropy: dimension mismatch");
  const auto eig = hermitian_eig(sigma.matrix());
  const Matrix rotated = eig.eigenvectors.adjoint() * rho.matrix() * eig.eigenvectors;
  double cross = 0.0;  // Tr ρ ln σ
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double weight = rotated(i, i).real();
    if (eig.eigenvalues(i) <= kSupportCutoff) {
      if (weight > kSupportCutoff) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log(eig.eigenvalues(i));
  }
  return -von_neumann(rho).nats - cross;
}

EntropyValue output_entropy(const Channel& c, const DensityMatrix& rho) {
  if (rho.dim() != c.dim_in()) throw SizeError("output_entropy: dimension mismatch");
  return von_neumann(chanlab::apply(c, rho));
}

double depolarizing_pure_output_entropy(Index n, double p) {
  const double nd = double(n);
  const double q = (nd - 1.0) * p / nd;
  return -xlogx(1.0 - q) - (nd - 1.0) * xlogx(p / nd);
}

}  // namespace chanlab
