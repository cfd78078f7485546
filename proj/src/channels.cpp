// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/channels.hpp"

#include <cmath>
#include <numbers>

namespace chanlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDropCoefficient = 1e-14;

Complex root_of_unity(double numerator, double denominator) {
  return std::polar(1.0, kTwoPi * numerator / denominator);
}

void require_dim(Index n, Index min, const char* what) {
  if (n < min)
    throw DomainError(std::string(what) + ": dimension must be at least " + std::to_string(min));
  if (n > kMaxDimension) throw SizeError(std::string(what) + ": dimension too large");
}

}  // namespace

Channel::Channel(Index dim_in, Index dim_out, std::vector<Matrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out) {
  if (dim_in < 1 || dim_out < 1) throw SizeError("channel: dimensions must be positive");
  Matrix completeness = Matrix::Zero(dim_in, dim_in);
  for (auto& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in)
      throw SizeError("channel: Kraus operator is " + std::to_string(k.rows()) + "x" +
                      std::to_string(k.cols()) + ", expected " + std::to_string(dim_out) + "x" +
                      std::to_string(dim_in));
    require_finite(k, "channel");
    if (k.norm() < kDropNorm) continue;
    completeness.noalias() += k.adjoint() * k;
    kraus_.push_back(std::move(k));
  }
  if (kraus_.empty()) throw DomainError("channel: no Kraus operators");
  if (kraus_.size() > kMaxKraus) throw SizeError("channel: too many Kraus operators");
  const double residual =
      (completeness - Matrix::Identity(dim_in, dim_in)).cwiseAbs().maxCoeff();
  if (residual > kCompletenessTolerance)
    throw DomainError("channel: Kraus operators are not trace preserving (residual " +
                      std::to_string(residual) + ")");
}

Channel Channel::identity(Index dim) {
  return Channel(dim, dim, {Matrix::Identity(dim, dim)});
}

Channel Channel::unitary(const Matrix& u) { return Channel(u.cols(), u.rows(), {u}); }

Matrix choi(const Channel& c) {
  const Index din = c.dim_in();
  const Index dout = c.dim_out();
  Matrix out = Matrix::Zero(din * dout, din * dout);
  Vector v(din * dout);
  for (const auto& k : c.kraus()) {
    for (Index i = 0; i < din; ++i) v.segment(i * dout, dout) = k.col(i);
    out.noalias() += v * v.adjoint();
  }
  return out;
}

CptpResiduals cptp_residuals(const Channel& c) {
  Matrix completeness = Matrix::Zero(c.dim_in(), c.dim_in());
  for (const auto& k : c.kraus()) completeness.noalias() += k.adjoint() * k;
  const double residual =
      (completeness - Matrix::Identity(c.dim_in(), c.dim_in())).cwiseAbs().maxCoeff();
  return {residual, hermitian_eigenvalues(choi(c))(0)};
}

bool is_cptp(const Channel& c) {
  const auto r = cptp_residuals(c);
  return r.completeness <= Channel::kCompletenessTolerance &&
         r.choi_min_eigenvalue >= -Channel::kChoiTolerance;
}

Matrix apply(const Channel& c, const Matrix& x) {
  if (x.rows() != c.dim_in() || x.cols() != c.dim_in())
    throw SizeError("apply: operator is " + std::to_string(x.rows()) + "x" +
                    std::to_string(x.cols()) + ", channel input dimension is " +
                    std::to_string(c.dim_in()));
  Matrix out = Matrix::Zero(c.dim_out(), c.dim_out());
  Matrix tmp(c.dim_out(), c.dim_in());
  for (const auto& k : c.kraus()) {
    tmp.noalias() = k * x;
    out.noalias() += tmp * k.adjoint();
  }
  return out;
}

DensityMatrix apply(const Channel& c, const DensityMatrix& rho) {
  Matrix out = chanlab::apply(c, rho.matrix());
  out = (out + out.adjoint()) / 2.0;
  return DensityMatrix::trusted(std::move(out));
}

Channel tensor(const Channel& a, const Channel& b, std::size_t max_kraus) {
  const std::size_t count = a.kraus().size() * b.kraus().size();
  if (count > max_kraus)
    throw SizeError("tensor: " + std::to_string(count) + " Kraus operators exceed the cap of " +
                    std::to_string(max_kraus));
  std::vector<Matrix> kraus;
  kraus.reserve(count);
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) kraus.push_back(kron(ka, kb));
  return Channel(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(), std::move(kraus));
}

Channel random_channel(Index dim_in, Index env_dim, Rng& rng) {
  if (dim_in < 1 || env_dim < 1) throw SizeError("random_channel: dimensions must be positive");
  const Matrix w = haar_isometry(dim_in * env_dim, dim_in, rng);
  std::vector<Matrix> kraus;
  kraus.reserve(static_cast<std::size_t>(env_dim));
  for (Index i = 0; i < env_dim; ++i) {
    Matrix k(dim_in, dim_in);
    for (Index o = 0; o < dim_in; ++o) k.row(o) = w.row(o * env_dim + i);
    kraus.push_back(std::move(k));
  }
  return Channel(dim_in, dim_in, std::move(kraus));
}

Channel random_channel(Index dim_in, Index env_dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim_in, env_dim, rng);
}

Basis fourier_basis(Index n) {
  require_dim(n, 1, "fourier_basis");
  Matrix f(n, n);
  const double scale = 1.0 / std::sqrt(double(n));
  for (Index j = 0; j < n; ++j)
    for (Index m = 0; m < n; ++m) f(m, j) = scale * root_of_unity(double((j * m) % n), double(n));
  return Basis(std::move(f));
}

std::vector<Complex> lambda_hat(const ProbabilityVector& lambda) {
  const auto n = static_cast<Index>(lambda.size());
  std::vector<Complex> out(lambda.size());
  for (Index j = 0; j < n; ++j) {
    Complex sum = 0.0;
    for (Index m = 0; m < n; ++m)
      sum += root_of_unity(double((j * m) % n), double(n)) * lambda[std::size_t(m)];
    out[std::size_t(j)] = sum;
  }
  return out;
}

PhaseDampingSpec::PhaseDampingSpec(ProbabilityVector lam)
    : n(static_cast<Index>(lam.size())), lambda(std::move(lam)), lambda_hat(chanlab::lambda_hat(lambda)) {}

Matrix shift_operator(Index n) {
  require_dim(n, 1, "shift_operator");
  Matrix v = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) v((j + 1) % n, j) = 1.0;
  return v;
}

Matrix clock_operator(Index n) {
  require_dim(n, 1, "clock_operator");
  Matrix u = Matrix::Zero(n, n);
  for (Index s = 0; s < n; ++s) u(s, s) = root_of_unity(double(s), double(n));
  return u;
}

Channel phase_damping(const ProbabilityVector& lambda) {
  const auto n = static_cast<Index>(lambda.size());
  const Matrix v = shift_operator(n);
  std::vector<Matrix> kraus;
  Matrix power = Matrix::Identity(n, n);
  for (Index j = 0; j < n; ++j) {
    const double weight = lambda[std::size_t(j)];
    if (weight >= kDropCoefficient) kraus.push_back(std::sqrt(weight) * power);
    power = v * power;
  }
  return Channel(n, n, std::move(kraus));
}

double depolarizing_max_p(Index n) {
  const double n2 = double(n) * double(n);
  return n2 / (n2 - 1.0);
}

Channel depolarizing(Index n, double p) {
  require_dim(n, 2, "depolarizing");
  const double max_p = depolarizing_max_p(n);
  if (!(p >= 0.0 && p <= max_p * (1.0 + 1e-12)))
    throw DomainError("depolarizing: p=" + std::to_string(p) + " outside [0, " +
                      std::to_string(max_p) + "]");
  // Weyl operators X^a Z^b form a unitary error basis: the twirl over all n² of them
  // is the completely depolarizing map.
  const double n2 = double(n) * double(n);
  const double identity_weight = std::max(0.0, 1.0 - p + p / n2);
  const double other_weight = p / n2;
  const Matrix x = shift_operator(n);
  const Matrix z = clock_operator(n);
  std::vector<Matrix> kraus;
  Matrix xa = Matrix::Identity(n, n);
  for (Index a = 0; a < n; ++a) {
    Matrix xz = xa;
    for (Index b = 0; b < n; ++b) {
      const double weight = (a == 0 && b == 0) ? identity_weight : other_weight;
      if (weight >= kDropCoefficient) kraus.push_back(std::sqrt(weight) * xz);
      xz = xz * z;
    }
    xa = x * xa;
  }
  return Channel(n, n, std::move(kraus));
}

Basis king_basis(Index n, Index k) {
  require_dim(n, 2, "king_basis");
  const Index two_n2 = 2 * n * n;
  if (k < 1 || k > two_n2)
    throw DomainError("king_basis: k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(two_n2) + "]");
  Matrix f(n, n);
  const double scale = 1.0 / std::sqrt(double(n));
  for (Index s = 0; s < n; ++s) {
    const Complex twist = root_of_unity(double((s * s * k) % two_n2), double(two_n2));
    for (Index j = 0; j < n; ++j) f(s, j) = scale * twist * root_of_unity(double((j * s) % n), double(n));
  }
  return Basis(std::move(f));
}

Matrix king_shift(Index n, Index k) {
  const Basis basis = king_basis(n, k);
  return basis.matrix() * clock_operator(n) * basis.matrix().adjoint();
}

Channel upsilon_k(Index n, double p, Index k) {
  const double keep = 1.0 - double(n - 1) * p / double(n);
  const double twist = p / double(n);
  if (!(keep >= -1e-15 && twist >= 0.0))
    throw DomainError("upsilon_k: p=" + std::to_string(p) + " gives a negative coefficient");
  const Matrix vk = king_shift(n, k);
  std::vector<Matrix> kraus;
  if (keep >= kDropCoefficient) kraus.push_back(std::sqrt(keep) * Matrix::Identity(n, n));
  Matrix power = vk;
  for (Index s = 1; s < n; ++s) {
    if (twist >= kDropCoefficient) kraus.push_back(std::sqrt(twist) * power);
    power = vk * power;
  }
  return Channel(n, n, std::move(kraus));
}

namespace {

std::vector<WeightedChannel> king_mixture(Index n, double p, double plain_weight,
                                          double conjugated_weight) {
  const Matrix u = clock_operator(n);
  std::vector<WeightedChannel> out;
  const Index two_n2 = 2 * n * n;
  out.reserve(static_cast<std::size_t>(two_n2 * n));
  for (Index k = 1; k <= two_n2; ++k) out.push_back({plain_weight, upsilon_k(n, p, k)});
  Matrix uj = Matrix::Identity(n, n);
  for (Index j = 1; j < n; ++j) {
    uj = u * uj;
    for (Index k = 1; k <= two_n2; ++k) {
      auto kraus = upsilon_k(n, p, k).kraus();
      for (auto& op : kraus) op = uj * op;
      out.push_back({conjugated_weight, Channel(n, n, std::move(kraus))});
    }
  }
  return out;
}

}  // namespace

std::vector<WeightedChannel> decompose_depolarizing(Index n, double p) {
  require_dim(n, 2, "decompose_depolarizing");
  if (!(p >= 0.0 && p <= depolarizing_max_p(n) * (1.0 + 1e-12)))
    throw DomainError("decompose_depolarizing: p outside the valid range");
  const double nd = double(n);
  const double denom = 1.0 + (nd - 1.0) * (1.0 - p);
  const double conjugated = p / (denom * 2.0 * nd * nd * nd);
  const double conjugated_total = conjugated * (nd - 1.0) * 2.0 * nd * nd;
  const double plain = (1.0 - conjugated_total) / (2.0 * nd * nd);
  return king_mixture(n, p, plain, conjugated);
}

Matrix weighted_choi(const std::vector<WeightedChannel>& mixture) {
  if (mixture.empty()) throw DomainError("weighted_choi: empty mixture");
  Matrix sum = Matrix::Zero(mixture.front().channel.dim_in() * mixture.front().channel.dim_out(),
                            mixture.front().channel.dim_in() * mixture.front().channel.dim_out());
  for (const auto& [weight, channel] : mixture) sum += weight * choi(channel);
  return sum;
}

double king_printed_weight_distance(Index n, double p) {
  const double nd = double(n);
  const double denom = 1.0 + (nd - 1.0) * (1.0 - p);
  const auto mixture =
      king_mixture(n, p, (1.0 - p) / (denom * 2.0 * nd), p / (denom * 2.0 * nd * nd * nd));
  return (weighted_choi(mixture) - choi(depolarizing(n, p))).norm();
}

}  // namespace chanlab
