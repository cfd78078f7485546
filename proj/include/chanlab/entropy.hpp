// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_ENTROPY_HPP
#define CHANLAB_ENTROPY_HPP

#include "chanlab/channels.hpp"
#include "chanlab/states.hpp"

#include <numbers>

namespace chanlab {

/// Entropy in natural-log units.
struct EntropyValue {
  double nats = 0.0;

  double bits() const { return nats / std::numbers::ln2; }
};

enum class EntropyUnit { Nats, Bits };

inline double in_unit(double nats, EntropyUnit unit) {
  return unit == EntropyUnit::Bits ? nats / std::numbers::ln2 : nats;
}

inline const char* to_string(EntropyUnit unit) { return unit == EntropyUnit::Bits ? "bits" : "nats"; }

/// Eigenvalues in [−kClip, 0) count as zero.
inline constexpr double kEigenvalueClip = 1e-10;
/// Eigenvalues of sigma at or below this are outside its support.
inline constexpr double kSupportCutoff = 1e-12;

/// −Σ w ln w over the eigenvalues of a Hermitian matrix, with 0 ln 0 = 0.
double entropy_of_hermitian(const Matrix& h);

EntropyValue von_neumann(const DensityMatrix& rho);

/// Tr ρ ln ρ − Tr ρ ln σ; +infinity when supp ρ is not inside supp σ.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

EntropyValue output_entropy(const Channel& c, const DensityMatrix& rho);

/// −(1−q) ln(1−q) − q ln(p/n) with q = (n−1)p/n: the entropy of Υ on any pure input.
double depolarizing_pure_output_entropy(Index n, double p);

}  // namespace chanlab

#endif  // CHANLAB_ENTROPY_HPP
