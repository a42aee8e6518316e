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

#ifndef SWIPT_HARVEST_HPP_
#define SWIPT_HARVEST_HPP_

#include <vector>

#include "swipt/modulation.hpp"
#include "swipt/params.hpp"

namespace swipt {

// Energy (J) harvested over t_s seconds at received power p_rx with a linear
// converter that only runs above the sensitivity floor p_th.
double HarvestedEnergy(double p_rx, double t_s, double eta, double p_th);

struct HarvestReport {
  double avg_harvested_power;  // W
  // PS: probability that a symbol activates the harvester.
  // TS: fraction of the power-transfer phase with the harvester active.
  double activation_prob;
};

// Average harvested power of a power-splitting receiver, closed form.
HarvestReport AvgPowerPs(const ValidatedParams& params, const Constellation& c,
                         double rho_ps, double p_tx);

// Same quantity assembled from the fading partial moments, i.e. the integral
// form before simplification. Used to cross-check AvgPowerPs.
double AvgPowerPsFromMoments(const ValidatedParams& params,
                             const Constellation& c, double rho_ps,
                             double p_tx);

// Rayleigh (m = 1) special case; throws unless params->fading_m == 1.
double AvgPowerPsRayleigh(const ValidatedParams& params, const Constellation& c,
                          double rho_ps, double p_tx);

// eta (rho P_tx / d^lambda - P_th)^+, the zero-variance lower bound.
double JensenLowerBound(const ValidatedParams& params, const Constellation& c,
                        double rho_ps, double p_tx);

// Nakagami harvesting factor for peak-power transfer, in (0, 1].
double Psi(const ValidatedParams& params);

// TS receiver harvesting during a fraction rho_ts of the block with average
// power p_eh sent as the on-off peak-power signal.
HarvestReport AvgPowerTs(const ValidatedParams& params, double rho_ts,
                         double p_eh);

struct EnergyLevel {
  double power;          // W
  double time_fraction;  // share of the power-transfer phase
};

struct EnergySignal {
  std::vector<EnergyLevel> levels;

  double AveragePower() const;
};

// Mean harvested power sum_l q_l (gain * P_l - p_th)^+ for a signal whose
// transmit levels reach the harvester scaled by the end-to-end power `gain`.
double EnergyObjective(const EnergySignal& signal, double gain, double p_th);

// On-off signal: p_peak for a p_eh / p_peak share of the phase, then silent.
EnergySignal OptimalEnergySignal(double p_eh, double p_peak, double p_th);

// Exhaustive search over two-level signals (low level at or below the
// activation point p_th / gain, high level above it) with average power p_eh.
// The grid has `grid_resolution` + 1 points per level.
EnergySignal SolvePaBruteforce(double p_eh, double p_peak, double p_th,
                               double gain, int grid_resolution);

}  // namespace swipt

#endif  // SWIPT_HARVEST_HPP_
