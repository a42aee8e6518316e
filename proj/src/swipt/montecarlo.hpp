// Copyright 2026 The swipt-link Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWIPT_MONTECARLO_HPP_
#define SWIPT_MONTECARLO_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include "swipt/harvest.hpp"
#include "swipt/modulation.hpp"
#include "swipt/params.hpp"

namespace swipt {

struct SimConfig {
  std::uint64_t n_blocks = 100000;
  int symbols_per_block = 1;
  std::uint64_t master_seed = 1;
  int worker_count = 1;
  // Mean of the second component of a defensive fading mixture: each block
  // draws its gain from the Nakagami law or from a same-shape Gamma with this
  // mean (probability 1/2 each) and is weighted by the likelihood ratio.
  // 1.0 disables the mixture. Values above 1 put more blocks past the
  // harvesting threshold without biasing any estimate.
  double fading_tilt_mean = 1.0;
};

struct SimResult {
  double q_hat = 0.0;  // W, average harvested power
  double q_std_error = 0.0;
  double ssr_hat = 0.0;
  double ssr_std_error = 0.0;
  double aser_hat = 0.0;
  double aser_std_error = 0.0;
  double p_rx_hat = 0.0;  // W, average RF power reaching the harvester
  std::uint64_t n_blocks = 0;
  std::uint64_t n_symbols = 0;
};

// Unit-average-power symbol coordinates: PSK on the unit circle, PAM on the
// real axis, QAM on a square grid. |x_i|^2 reproduces the normalized power
// multiset of `c` (checked on construction).
std::vector<std::complex<double>> ConstellationPoints(const Constellation& c);

// Block substream seed: chunk k of a run draws from an mt19937_64 seeded with
// SplitMix64(master_seed ^ SplitMix64(k + 1)). Blocks are split into fixed
// chunks of kBlocksPerChunk, so results do not depend on worker_count.
std::uint64_t SplitMix64(std::uint64_t x);
inline constexpr std::uint64_t kBlocksPerChunk = 1 << 14;

// PS link: per block one fading draw; per symbol a uniform constellation
// point, harvesting of the rho share, AWGN on the (1 - rho) share and
// minimum-distance detection.
SimResult SimulatePs(const ValidatedParams& params, const Constellation& c,
                     double rho_ps, double p_tx, const SimConfig& cfg);

// TS link: the power-transfer phase harvests `energy_signal` (average power
// p_eh) for a rho_ts share of the block; the information phase sends
// symbols at p_info. ssr_hat is normalized by (1 - rho_ts).
SimResult SimulateTs(const ValidatedParams& params, double rho_ts, double p_eh,
                     double p_info, const Constellation& c,
                     const EnergySignal& energy_signal, const SimConfig& cfg);

// Mixture mean that centers sampling on the activation threshold of the
// strongest symbol (PS) or energy level (TS). Always in [1, 50].
double SuggestedTiltPs(const ValidatedParams& params, const Constellation& c,
                       double rho_ps, double p_tx);
double SuggestedTiltTs(const ValidatedParams& params,
                       const EnergySignal& energy_signal);

}  // namespace swipt

#endif  // SWIPT_MONTECARLO_HPP_
