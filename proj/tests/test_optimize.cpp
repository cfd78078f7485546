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

#include <gtest/gtest.h>

#include <stdexcept>

using namespace chanlab;

TEST(Options, Validation) {
  OptimizerOptions o;
  EXPECT_NO_THROW(o.validate());
  o.restarts = 0;
  EXPECT_THROW(o.validate(), DomainError);
  o = {};
  o.tol = 0.0;
  EXPECT_THROW(o.validate(), DomainError);
  o = {};
  o.max_iters = 0;
  EXPECT_THROW(o.validate(), DomainError);
  EXPECT_EQ(OptimizerOptions::roof_defaults().restarts, 8);
}

TEST(EnsembleSize, Defaults) {
  EXPECT_EQ(default_ensemble_size(1), 1);
  EXPECT_EQ(default_ensemble_size(2), 4);
  EXPECT_EQ(default_ensemble_size(4), 16);
  EXPECT_EQ(default_ensemble_size(6), 16);
  EXPECT_EQ(default_ensemble_size(20), 20);
}

TEST(MinOutput, IdentityIsZero) {
  const auto r = min_output_entropy(Channel::identity(3), OptimizerOptions::min_output_defaults());
  EXPECT_NEAR(r.value.nats, 0.0, 1e-9);
}

TEST(MinOutput, DepolarizingQubit) {
  const auto r = min_output_entropy(depolarizing(2, 0.5), OptimizerOptions::min_output_defaults());
  EXPECT_NEAR(r.value.nats, 0.5623351446188083, 1e-9);
  EXPECT_NEAR(r.state.norm(), 1.0, 1e-12);
}

TEST(MinOutput, PhaseDampingReachesZero) {
  Rng rng(9);
  for (Index n : {2, 3, 4}) {
    const ProbabilityVector lambda(uniform_simplex(n, rng));
    const auto r = min_output_entropy(phase_damping(lambda), OptimizerOptions::min_output_defaults());
    EXPECT_NEAR(r.value.nats, 0.0, 1e-6) << n;
  }
}

TEST(MinOutput, ReportedStateAttainsValue) {
  const Channel c = random_channel(3, 2, 4);
  const auto r = min_output_entropy(c, OptimizerOptions::min_output_defaults());
  EXPECT_NEAR(output_entropy(c, DensityMatrix::pure(r.state)).nats, r.value.nats, 1e-12);
  // Any particular pure input is an upper bound.
  Rng rng(5);
  for (int t = 0; t < 20; ++t)
    EXPECT_LE(r.value.nats, output_entropy(c, DensityMatrix::pure(haar_vector(3, rng))).nats + 1e-12);
}

TEST(MinOutput, SeedDeterminism) {
  const Channel c = random_channel(3, 3, 7);
  OptimizerOptions o;
  o.seed = 21;
  o.restarts = 3;
  const auto a = min_output_entropy(c, o);
  const auto b = min_output_entropy(c, o);
  EXPECT_EQ(a.value.nats, b.value.nats);
  EXPECT_EQ(a.state, b.state);
}

TEST(ConvexRoof, PureInputIsOutputEntropy) {
  Rng rng(6);
  const Channel c = random_channel(3, 2, rng);
  const DensityMatrix rho = DensityMatrix::pure(haar_vector(3, rng));
  const auto r = convex_roof(c, rho, OptimizerOptions::roof_defaults());
  ASSERT_EQ(r.ensemble.size(), 1u);
  EXPECT_NEAR(r.value.nats, output_entropy(c, rho).nats, 1e-8);
}

TEST(ConvexRoof, IdentityOnMaximallyMixed) {
  const auto r = convex_roof(Channel::identity(2), DensityMatrix::maximally_mixed(2),
                             OptimizerOptions::roof_defaults());
  EXPECT_NEAR(r.value.nats, 0.0, 1e-6);
}

TEST(ConvexRoof, DepolarizingIsConstant) {
  Rng rng(7);
  for (int t = 0; t < 3; ++t) {
    const DensityMatrix rho = random_mixed_state(2, 2, rng);
    const auto r = convex_roof(depolarizing(2, 0.5), rho, OptimizerOptions::roof_defaults());
    EXPECT_NEAR(r.value.nats, 0.5623351446188083, 1e-4);
  }
}

TEST(ConvexRoof, EnsembleReproducesState) {
  Rng rng(8);
  const DensityMatrix rho = random_mixed_state(3, 3, rng);
  const Channel c = random_channel(3, 2, rng);
  OptimizerOptions o = OptimizerOptions::roof_defaults();
  o.restarts = 2;
  const auto r = convex_roof(c, rho, o);
  EXPECT_LT((r.reconstruct() - rho.matrix()).norm(), 1e-10);
  double total = 0.0;
  double value = 0.0;
  for (const auto& m : r.ensemble) {
    total += m.weight;
    value += m.weight * output_entropy(c, DensityMatrix::pure(m.state)).nats;
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
  EXPECT_NEAR(value, r.value.nats, 1e-10);
  // The roof never exceeds the eigen-decomposition average.
  const auto eig = hermitian_eig(rho.matrix());
  double spectral = 0.0;
  for (Index i = 0; i < 3; ++i)
    spectral += eig.eigenvalues(i) *
                output_entropy(c, DensityMatrix::pure(eig.eigenvectors.col(i))).nats;
  EXPECT_LE(r.value.nats, spectral + 1e-12);
}

TEST(ConvexRoof, RejectsSmallEnsemble) {
  OptimizerOptions o = OptimizerOptions::roof_defaults();
  o.ensemble_size = 2;
  EXPECT_THROW(convex_roof(Channel::identity(3), DensityMatrix::maximally_mixed(3), o), DomainError);
  EXPECT_THROW(convex_roof(Channel::identity(2), DensityMatrix::maximally_mixed(3), o), SizeError);
}

TEST(DephasingBoundRhs, ProductStateMatchesOutput) {
  Rng rng(10);
  const Basis f = fourier_basis(3);
  const Vector k = haar_vector(2, rng);
  const auto e = BipartiteState::product(f.vector(1), k);
  const Channel psi = phase_damping(ProbabilityVector(uniform_simplex(3, rng)));
  const Channel omega = random_channel(2, 2, rng);
  const double rhs = theorem1_rhs(e, psi, omega, schmidt(e).right).nats;
  const double expected = output_entropy(psi, DensityMatrix::pure(f.vector(1))).nats +
                          output_entropy(omega, DensityMatrix::pure(k)).nats;
  EXPECT_NEAR(rhs, expected, 1e-12);
  const double lhs = entropy_of_hermitian(chanlab::apply(tensor(psi, omega), e.projector()));
  EXPECT_NEAR(lhs, rhs, 1e-10);
}

TEST(DephasingBoundRhs, IdentityChannelsGiveZero) {
  Rng rng(11);
  const BipartiteState e(3, 3, haar_vector(9, rng));
  const double rhs = theorem1_rhs(e, Channel::identity(3), Channel::identity(3), schmidt(e).right).nats;
  EXPECT_NEAR(rhs, 0.0, 1e-10);
}

TEST(DephasingBoundRhs, BoundsJointOutputFromBelow) {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const BipartiteState e(3, 3, haar_vector(9, rng));
    const Channel psi = phase_damping(ProbabilityVector(uniform_simplex(3, rng)));
    const Channel omega = random_channel(3, 2, rng);
    const double lhs = entropy_of_hermitian(chanlab::apply(tensor(psi, omega), e.projector()));
    EXPECT_GE(lhs - theorem1_rhs(e, psi, omega, schmidt(e).right).nats, -1e-9);
  }
}

TEST(ParallelMap, OrderAndErrors) {
  const auto squares = parallel_map(50, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(squares[i], i * i);
  EXPECT_THROW(parallel_map(10,
                            [](std::size_t i) -> int {
                              if (i == 7) throw std::runtime_error("boom");
                              return 0;
                            }),
               std::runtime_error);
}
