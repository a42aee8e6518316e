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

#include "swipt/harvest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "swipt/channel.hpp"
#include "swipt/errors.hpp"

namespace swipt {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void CheckPsDesign(const ValidatedParams& params, double rho_ps, double p_tx) {
  Require(rho_ps >= 0.0 && rho_ps <= 1.0, "rho_ps must lie in [0, 1]");
  Require(p_tx > 0.0 && p_tx <= params->p_ave * (1.0 + 1e-12),
          "p_tx must lie in (0, p_ave]");
}

// Received symbol power scale rho P_i / d^lambda and its activation
// threshold P_th d^lambda / (rho P_i) on the fading gain.
struct SymbolLink {
  double rx_scale;
  double threshold;
};

SymbolLink LinkFor(const ValidatedParams& params, double rho, double p_tx,
                   double normalized_power) {
  const double scale = rho * normalized_power * p_tx / params.attenuation();
  if (scale <= 0.0) return {0.0, kInf};
  return {scale, params->eh_sensitivity / scale};
}

}  // namespace

double HarvestedEnergy(double p_rx, double t_s, double eta, double p_th) {
  Require(p_rx >= 0.0 && t_s >= 0.0 && p_th >= 0.0,
          "harvest inputs must be non-negative");
  Require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0, 1]");
  return eta * t_s * std::max(p_rx - p_th, 0.0);
}

HarvestReport AvgPowerPs(const ValidatedParams& params, const Constellation& c,
                         double rho_ps, double p_tx) {
  CheckPsDesign(params, rho_ps, p_tx);
  const FadingModel fading(params->fading_m);
  double q = 0.0;
  double active = 0.0;
  for (double np : c.normalized_powers()) {
    const SymbolLink link = LinkFor(params, rho_ps, p_tx, np);
    if (link.rx_scale == 0.0) continue;
    q += link.rx_scale * detail::ExcessFactor(params->fading_m, link.threshold);
    active += fading.UpperTail(link.threshold);
  }
  return {params->eh_efficiency * q * c.symbol_prob(),
          active * c.symbol_prob()};
}

double AvgPowerPsFromMoments(const ValidatedParams& params,
                             const Constellation& c, double rho_ps,
                             double p_tx) {
  CheckPsDesign(params, rho_ps, p_tx);
  const FadingModel fading(params->fading_m);
  double q = 0.0;
  for (double np : c.normalized_powers()) {
    const SymbolLink link = LinkFor(params, rho_ps, p_tx, np);
    if (link.rx_scale == 0.0) continue;
    q += link.rx_scale * fading.UpperPartialMean(link.threshold) -
         params->eh_sensitivity * fading.UpperTail(link.threshold);
  }
  return params->eh_efficiency * q * c.symbol_prob();
}

double AvgPowerPsRayleigh(const ValidatedParams& params, const Constellation& c,
                          double rho_ps, double p_tx) {
  Require(params->fading_m == 1, "Rayleigh special case requires fading_m = 1");
  CheckPsDesign(params, rho_ps, p_tx);
  double q = 0.0;
  for (double np : c.normalized_powers()) {
    const SymbolLink link = LinkFor(params, rho_ps, p_tx, np);
    if (link.rx_scale == 0.0) continue;
    q += link.rx_scale * std::exp(-link.threshold);
  }
  return params->eh_efficiency * q / c.order();
}

double JensenLowerBound(const ValidatedParams& params, const Constellation&,
                        double rho_ps, double p_tx) {
  CheckPsDesign(params, rho_ps, p_tx);
  return params->eh_efficiency *
         std::max(rho_ps * p_tx / params.attenuation() -
                      params->eh_sensitivity,
                  0.0);
}

double Psi(const ValidatedParams& params) {
  const double threshold =
      params->eh_sensitivity * params.attenuation() / params->p_peak;
  return detail::ExcessFactor(params->fading_m, threshold);
}

HarvestReport AvgPowerTs(const ValidatedParams& params, double rho_ts,
                         double p_eh) {
  Require(rho_ts >= 0.0 && rho_ts <= 1.0, "rho_ts must lie in [0, 1]");
  Require(p_eh >= 0.0, "p_eh must be non-negative");
  if (p_eh > params->p_peak * (1.0 + 1e-12)) {
    throw Error(ErrorCode::kPeakViolation,
                "p_eh exceeds p_peak; the energy signal cannot be built");
  }
  const FadingModel fading(params->fading_m);
  const double threshold =
      params->eh_sensitivity * params.attenuation() / params->p_peak;
  const double q = params->eh_efficiency * rho_ts * p_eh /
                   params.attenuation() * Psi(params);
  return {q, p_eh / params->p_peak * fading.UpperTail(threshold)};
}

double EnergySignal::AveragePower() const {
  double sum = 0.0;
  for (const auto& l : levels) sum += l.power * l.time_fraction;
  return sum;
}

double EnergyObjective(const EnergySignal& signal, double gain, double p_th) {
  double sum = 0.0;
  for (const auto& l : signal.levels) {
    sum += l.time_fraction * std::max(gain * l.power - p_th, 0.0);
  }
  return sum;
}

EnergySignal OptimalEnergySignal(double p_eh, double p_peak, double p_th) {
  Require(p_peak > 0.0, "p_peak must be positive");
  Require(p_th >= 0.0, "p_th must be non-negative");
  Require(p_eh >= 0.0, "p_eh must be non-negative");
  if (p_eh > p_peak) {
    throw Error(ErrorCode::kPeakViolation,
                "p_eh exceeds p_peak; no signal within the peak constraint");
  }
  const double on = p_eh / p_peak;
  if (on >= 1.0) return {{{p_peak, 1.0}}};
  return {{{p_peak, on}, {0.0, 1.0 - on}}};
}

EnergySignal SolvePaBruteforce(double p_eh, double p_peak, double p_th,
                               double gain, int grid_resolution) {
  Require(grid_resolution >= 10, "grid_resolution must be >= 10");
  Require(gain > 0.0 && p_th >= 0.0 && p_peak > 0.0,
          "gain and p_peak must be positive, p_th non-negative");
  if (!(p_eh >= 0.0 && p_eh <= p_peak)) {
    throw Error(ErrorCode::kInvalidArgument,
                "average power p_eh is infeasible for the peak constraint");
  }
  if (p_eh == 0.0) return {{{0.0, 1.0}}};

  // Transmit power at which the received power reaches the floor.
  const double knee = std::min(p_th / gain, p_peak);
  const int n = grid_resolution;
  EnergySignal best{{{p_eh, 1.0}}};
  double best_obj = EnergyObjective(best, gain, p_th);
  for (int i = 0; i <= n; ++i) {
    const double low = knee * i / n;
    for (int j = 0; j <= n; ++j) {
      const double high = knee + (p_peak - knee) * j / n;
      // q_L low + q_H high = p_eh with q_L + q_H = 1.
      if (high <= low) continue;
      const double q_high = (p_eh - low) / (high - low);
      if (q_high < 0.0 || q_high > 1.0) continue;
      const EnergySignal candidate{{{low, 1.0 - q_high}, {high, q_high}}};
      const double obj = EnergyObjective(candidate, gain, p_th);
      if (obj > best_obj) {
        best_obj = obj;
        best = candidate;
      }
    }
  }
  return best;
}

}  // namespace swipt
