// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_RANDOM_HPP
#define CHANLAB_RANDOM_HPP

#include "chanlab/linalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace chanlab {

using Rng = std::mt19937_64;

/// Mixes (seed, index) into an independent stream seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts N(0, 1/2)).
Matrix ginibre(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the R-diagonal phases removed.
Matrix haar_unitary(Index dim, Rng& rng);

/// Haar-distributed isometry (first `cols` columns of a Haar unitary).
Matrix haar_isometry(Index rows, Index cols, Rng& rng);

Vector haar_vector(Index dim, Rng& rng);

/// Symmetric Dirichlet(1) sample, i.e. uniform on the probability simplex.
std::vector<double> uniform_simplex(Index n, Rng& rng);

}  // namespace chanlab

#endif  // CHANLAB_RANDOM_HPP
