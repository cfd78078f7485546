// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/optimize.hpp"

#include "chanlab/parallel.hpp"
#include "chanlab/random.hpp"

#include <cmath>

namespace chanlab {

void OptimizerOptions::validate() const {
  if (restarts < 1) throw DomainError("optimizer: restarts must be at least 1");
  if (max_iters < 1) throw DomainError("optimizer: max_iters must be at least 1");
  if (!(tol > 0.0)) throw DomainError("optimizer: tol must be positive");
  if (ensemble_size < 0) throw DomainError("optimizer: ensemble_size must be nonnegative");
}

namespace {

constexpr double kInitialStep = 0.5;
constexpr double kAcceptMargin = 1e-15;
constexpr double kMemberWeightFloor = 1e-14;

/// One search coordinate: a Givens rotation mixing entries (a, b) with a real or
/// imaginary generator, or (b < 0) a phase on entry a.
struct Coordinate {
  Index a;
  Index b;
  bool imaginary;
};

std::vector<Coordinate> coordinates(Index dim, bool with_phases) {
  std::vector<Coordinate> out;
  for (Index a = 0; a < dim; ++a)
    for (Index b = a + 1; b < dim; ++b) {
      out.push_back({a, b, false});
      out.push_back({a, b, true});
    }
  if (with_phases)
    for (Index a = 1; a < dim; ++a) out.push_back({a, -1, false});
  return out;
}

/// Rotates rows a and b of m (a column vector works as a matrix with one column).
void rotate_rows(Matrix& m, const Coordinate& c, double angle) {
  if (c.b < 0) {
    m.row(c.a) *= std::polar(1.0, angle);
    return;
  }
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  const Complex phase = c.imaginary ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
  const auto ra = m.row(c.a).eval();
  const auto rb = m.row(c.b).eval();
  m.row(c.a) = cs * ra - phase * sn * rb;
  m.row(c.b) = std::conj(phase) * sn * ra + cs * rb;
}

/// Evaluates S(Φ(|ψ⟩⟨ψ|)) for many ψ. Φ(|ψ⟩⟨ψ|) = A A† where column i of A is K_i ψ,
/// so the spectrum is read off the smaller of A A† and A† A.
class PureOutputEntropy {
 public:
  explicit PureOutputEntropy(const Channel& c)
      : dim_out_(c.dim_out()), count_(static_cast<Index>(c.kraus().size())),
        stacked_(dim_out_ * count_, c.dim_in()) {
    for (Index i = 0; i < count_; ++i)
      stacked_.middleRows(i * dim_out_, dim_out_) = c.kraus()[std::size_t(i)];
  }

  /// Entropy of the normalized output for a nonzero, possibly unnormalized ψ.
  double operator()(const Vector& psi) const {
    const Vector y = stacked_ * psi;
    const Eigen::Map<const Matrix> a(y.data(), dim_out_, count_);
    const Matrix gram = count_ < dim_out_ ? Matrix(a.adjoint() * a) : Matrix(a * a.adjoint());
    return entropy_of_hermitian(gram / psi.squaredNorm());
  }

 private:
  Index dim_out_;
  Index count_;
  Matrix stacked_;
};

double pure_output_entropy(const Channel& c, const Vector& psi) { return PureOutputEntropy(c)(psi); }

struct StateSearch {
  double value;
  Vector state;
  bool converged;
};

StateSearch search_state(const PureOutputEntropy& entropy, Vector psi,
                         const OptimizerOptions& opts) {
  Matrix x = psi;
  double best = entropy(x.col(0));
  const auto coords = coordinates(x.rows(), true);
  double step = kInitialStep;
  int sweeps = 0;
  while (step >= opts.tol && sweeps < opts.max_iters && best > 0.0) {
    const double start = best;
    for (const auto& coord : coords) {
      for (double sign : {1.0, -1.0}) {
        Matrix trial = x;
        rotate_rows(trial, coord, sign * step);
        const double value = entropy(trial.col(0));
        if (value < best - kAcceptMargin) {
          best = value;
          x = std::move(trial);
          break;
        }
      }
    }
    ++sweeps;
    // A sweep that gains less than tol means this step size is exhausted.
    if (start - best < opts.tol) step *= 0.5;
  }
  Vector out = x.col(0);
  out /= out.norm();
  fix_phase(out);
  return {entropy(out), out, step < opts.tol || best <= 0.0};
}

}  // namespace

MinOutputResult min_output_entropy(const Channel& c, const OptimizerOptions& opts) {
  opts.validate();
  const Index dim = c.dim_in();
  const PureOutputEntropy entropy(c);
  const auto runs = parallel_map(std::size_t(opts.restarts), [&](std::size_t r) {
    Rng rng(opts.seed + r);
    return search_state(entropy, haar_vector(dim, rng), opts);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].value < runs[best].value) best = r;
  bool converged = true;
  for (const auto& run : runs) converged = converged && run.converged;
  return {{runs[best].value}, runs[best].state, converged};
}

Index numerical_rank(const DensityMatrix& rho) {
  const RealVector w = hermitian_eigenvalues(rho.matrix());
  Index rank = 0;
  for (Index i = 0; i < w.size(); ++i)
    if (w(i) > kSupportCutoff) ++rank;
  return std::max<Index>(rank, 1);
}

Index default_ensemble_size(Index rank) { return std::max(rank, std::min<Index>(rank * rank, 16)); }

Matrix RoofEstimate::reconstruct() const {
  const Index dim = ensemble.empty() ? 0 : ensemble.front().state.size();
  Matrix rho = Matrix::Zero(dim, dim);
  for (const auto& m : ensemble) rho += m.weight * outer(m.state);
  return rho;
}

namespace {

double member_term(const PureOutputEntropy& entropy, const Matrix& rows, Index m) {
  const Vector v = rows.row(m).transpose();
  const double weight = v.squaredNorm();
  if (weight < kMemberWeightFloor * 1e-6) return 0.0;
  return weight * entropy(v);
}

struct RoofSearch {
  double value;
  Matrix rows;
  bool converged;
};

RoofSearch search_roof(const PureOutputEntropy& entropy, Matrix rows, const OptimizerOptions& opts) {
  const Index members = rows.rows();
  std::vector<double> terms(static_cast<std::size_t>(members));
  for (Index m = 0; m < members; ++m) terms[std::size_t(m)] = member_term(entropy, rows, m);
  auto total = [&] {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  };
  double best = total();
  const auto coords = coordinates(members, false);
  double step = kInitialStep;
  int sweeps = 0;
  while (step >= opts.tol && sweeps < opts.max_iters && best > 0.0) {
    const double start = best;
    for (const auto& coord : coords) {
      const double old_a = terms[std::size_t(coord.a)];
      const double old_b = terms[std::size_t(coord.b)];
      for (double sign : {1.0, -1.0}) {
        Matrix pair(2, rows.cols());
        pair.row(0) = rows.row(coord.a);
        pair.row(1) = rows.row(coord.b);
        rotate_rows(pair, {0, 1, coord.imaginary}, sign * step);
        const double new_a = member_term(entropy, pair, 0);
        const double new_b = member_term(entropy, pair, 1);
        if (new_a + new_b < old_a + old_b - kAcceptMargin) {
          rows.row(coord.a) = pair.row(0);
          rows.row(coord.b) = pair.row(1);
          terms[std::size_t(coord.a)] = new_a;
          terms[std::size_t(coord.b)] = new_b;
          break;
        }
      }
    }
    // Recompute from scratch so accumulated increments do not drift.
    best = total();
    ++sweeps;
    if (start - best < opts.tol) step *= 0.5;
  }
  return {best, std::move(rows), step < opts.tol || best <= 0.0};
}

}  // namespace

RoofEstimate convex_roof(const Channel& c, const DensityMatrix& rho, const OptimizerOptions& opts) {
  opts.validate();
  if (rho.dim() != c.dim_in()) throw SizeError("convex_roof: dimension mismatch");
  const auto eig = hermitian_eig(rho.matrix());
  const Index dim = rho.dim();
  std::vector<Index> support;
  for (Index i = dim - 1; i >= 0; --i)
    if (eig.eigenvalues(i) > kSupportCutoff) support.push_back(i);
  const auto rank = static_cast<Index>(support.size());
  if (rank == 0) throw DomainError("convex_roof: state has no support");

  if (rank == 1) {
    Vector psi = eig.eigenvectors.col(support.front());
    fix_phase(psi);
    return {{pure_output_entropy(c, psi)}, {{1.0, psi}}, true};
  }

  const Index members = opts.ensemble_size > 0 ? opts.ensemble_size : default_ensemble_size(rank);
  if (members < rank)
    throw DomainError("convex_roof: ensemble size " + std::to_string(members) +
                      " is below the rank " + std::to_string(rank));

  // Rows of `base` are √λ_i v_iᵀ; the first `rank` rows of W·base form the ensemble.
  Matrix base = Matrix::Zero(members, dim);
  for (Index i = 0; i < rank; ++i) {
    const Index col = support[std::size_t(i)];
    base.row(i) = std::sqrt(eig.eigenvalues(col)) * eig.eigenvectors.col(col).transpose();
  }

  const PureOutputEntropy entropy(c);
  const auto runs = parallel_map(std::size_t(opts.restarts), [&](std::size_t r) {
    if (r == 0) return search_roof(entropy, base, opts);
    Rng rng(opts.seed + r);
    return search_roof(entropy, haar_unitary(members, rng) * base, opts);
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].value < runs[best].value) best = r;

  RoofEstimate out{{0.0}, {}, true};
  for (const auto& run : runs) out.converged = out.converged && run.converged;
  const Matrix& rows = runs[best].rows;
  double value = 0.0;
  for (Index m = 0; m < members; ++m) {
    Vector v = rows.row(m).transpose();
    const double weight = v.squaredNorm();
    if (weight < kMemberWeightFloor) continue;
    v /= std::sqrt(weight);
    fix_phase(v);
    value += weight * entropy(v);
    out.ensemble.push_back({weight, std::move(v)});
  }
  out.value = {value};
  return out;
}

EntropyValue theorem1_rhs(const BipartiteState& e, const Channel& psi, const Channel& omega,
                          const Basis& g_basis) {
  if (psi.dim_in() != e.dim_h() || omega.dim_in() != e.dim_k() || g_basis.dim() != e.dim_k())
    throw SizeError("theorem1_rhs: channel or basis dimension does not match the state");
  const auto mu = expand_in_basis(e, fourier_basis(e.dim_h()), Side::H);
  const auto nu = expand_in_basis(e, g_basis, Side::K);
  double rhs = 0.0;
  for (const auto& t : nu.terms) rhs += t.weight() * pure_output_entropy(psi, t.conditional);
  for (const auto& t : mu.terms) rhs += t.weight() * pure_output_entropy(omega, t.conditional);
  return {rhs};
}

}  // namespace chanlab
