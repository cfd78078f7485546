// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef CHANLAB_CHANNELS_HPP
#define CHANLAB_CHANNELS_HPP

#include "chanlab/linalg.hpp"
#include "chanlab/states.hpp"

#include <cstdint>
#include <vector>

namespace chanlab {

/// Trace-preserving map in Kraus form, rho -> Σ_i K_i rho K_i†.
///
/// Kraus form makes complete positivity structural; construction checks the
/// completeness relation Σ K_i† K_i = I to `kCompletenessTolerance`.
class Channel {
 public:
  static constexpr double kCompletenessTolerance = 1e-9;
  static constexpr double kChoiTolerance = 1e-9;
  /// Kraus operators whose Frobenius norm falls below this are dropped.
  static constexpr double kDropNorm = 1e-14;
  static constexpr std::size_t kMaxKraus = 4096;

  Channel(Index dim_in, Index dim_out, std::vector<Matrix> kraus);

  static Channel identity(Index dim);
  static Channel unitary(const Matrix& u);

  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

 private:
  Index dim_in_;
  Index dim_out_;
  std::vector<Matrix> kraus_;
};

struct CptpResiduals {
  double completeness;          // max |Σ K†K − I| entry
  double choi_min_eigenvalue;   // unnormalized Choi matrix
};

CptpResiduals cptp_residuals(const Channel& c);
bool is_cptp(const Channel& c);

/// Action on an arbitrary operator (not necessarily a state).
Matrix apply(const Channel& c, const Matrix& x);
DensityMatrix apply(const Channel& c, const DensityMatrix& rho);

/// Σ_ij |i⟩⟨j| ⊗ c(|i⟩⟨j|), of size dimIn·dimOut.
Matrix choi(const Channel& c);

Channel tensor(const Channel& a, const Channel& b, std::size_t max_kraus = Channel::kMaxKraus);

/// Kraus operators (I ⊗ ⟨i|) W of a Haar-random isometry W : C^dimIn -> C^dimIn ⊗ C^env.
Channel random_channel(Index dim_in, Index env_dim, std::uint64_t seed);
Channel random_channel(Index dim_in, Index env_dim, Rng& rng);

/// Orthonormal DFT basis, f_j = n^{-1/2} Σ_m e^{2πi jm/n} e_m.
Basis fourier_basis(Index n);

/// λ̂_j = Σ_m e^{2πi jm/n} λ_m.
std::vector<Complex> lambda_hat(const ProbabilityVector& lambda);

struct PhaseDampingSpec {
  Index n;
  ProbabilityVector lambda;
  std::vector<Complex> lambda_hat;

  explicit PhaseDampingSpec(ProbabilityVector lambda);
};

/// Cyclic shift V e_j = e_{j+1 mod n}.
Matrix shift_operator(Index n);
/// Clock U = Σ_s e^{2πi s/n} |e_s⟩⟨e_s|.
Matrix clock_operator(Index n);

/// Ψ(rho) = Σ_j λ_j V^j rho V^{*j}; acts on |f_j⟩⟨f_k| as multiplication by λ̂_{k−j}.
Channel phase_damping(const ProbabilityVector& lambda);

/// Upper end of the depolarizing parameter range, n²/(n²−1).
double depolarizing_max_p(Index n);

/// Υ(rho) = (1−p) rho + (p/n) Tr(rho) I, for 0 <= p <= n²/(n²−1).
Channel depolarizing(Index n, double p);

/// Phase-twisted Fourier basis
/// f_j^k = n^{-1/2} Σ_s exp(2πi s²k/(2n²)) exp(2πi js/n) e_s, 1 <= k <= 2n².
Basis king_basis(Index n, Index k);

/// V_k = Σ_s e^{2πi s/n} |f_s^k⟩⟨f_s^k|.
Matrix king_shift(Index n, Index k);

/// Υ_k(rho) = (1 − (n−1)p/n) rho + (p/n) Σ_{s=1}^{n−1} V_k^s rho V_k^{*s}.
Channel upsilon_k(Index n, double p, Index k);

struct WeightedChannel {
  double weight;
  Channel channel;
};

/// Υ as a convex mixture of the 2n² channels Υ_k and the (n−1)·2n² channels
/// U^j Υ_k(·) U^{*j}. The conjugated family carries weight p/((1+(n−1)(1−p))·2n³)
/// per channel and the Υ_k family shares the remainder equally.
std::vector<WeightedChannel> decompose_depolarizing(Index n, double p);

/// Frobenius distance between choi(depolarizing(n, p)) and the mixture weighted with the
/// unnormalized prefactors (1−p)/((1+(n−1)(1−p))·2n) and p/((1+(n−1)(1−p))·2n³).
double king_printed_weight_distance(Index n, double p);

Matrix weighted_choi(const std::vector<WeightedChannel>& mixture);

}  // namespace chanlab

#endif  // CHANLAB_CHANNELS_HPP
