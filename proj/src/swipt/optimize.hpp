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

#ifndef SWIPT_OPTIMIZE_HPP_
#define SWIPT_OPTIMIZE_HPP_

#include <span>
#include <string>
#include <vector>

#include "swipt/modulation.hpp"
#include "swipt/params.hpp"

namespace swipt {

enum class Receiver { kPs, kTs };

std::string_view ToString(Receiver receiver);
Receiver ParseReceiver(std::string_view name);

struct PsDesign {
  double rho_ps = 0.0;
  double p_tx = 0.0;         // W, always p_ave at the optimum
  double achieved_q = 0.0;   // W
  double achieved_ssr = 0.0;
  double achieved_aser = 0.0;
  bool converged = true;
  int iterations = 0;
  // papr * p_tx > p_peak: the budget breaks the fixed-p_tx assumption.
  bool peak_exceeded = false;
};

struct TsDesign {
  double rho_ts = 0.0;
  double p_eh = 0.0;    // W
  double p_info = 0.0;  // W
  double achieved_q = 0.0;
  double achieved_ssr = 0.0;
  double achieved_aser = 0.0;
  // p_info was cut to p_peak / papr; the average-power constraint is slack.
  bool peak_clamped = false;
  // p_ave - (rho p_eh + (1 - rho) p_info), >= 0 up to rounding.
  double avg_power_slack = 0.0;
};

// Largest harvested power reachable by PS: rho = 1 at p_tx = p_ave.
double QPsMax(const ValidatedParams& params, const Constellation& c);

// Maximizes the PS success rate subject to harvested power >= q0. The split
// ratio is found by bisection on [0, 1]; the returned rho is the upper end of
// the final bracket so the harvesting constraint holds.
// Throws InfeasibleError when q0 > QPsMax.
PsDesign SolveP1(const ValidatedParams& params, const Constellation& c,
                 double q0);

// Principal branch W0(x) for x >= 0, |w e^w - x| <= 1e-12 |x|.
double LambertW0(double x);

// Closed-form optimal split for PSK over Rayleigh fading:
//   rho* = P_th d^lambda / (P_ave W0(eta P_th / q0)).
double RhoStarPskRayleigh(const ValidatedParams& params, double q0);

// Largest harvested power reachable by TS: eta P_ave Psi / d^lambda.
double QTsMax(const ValidatedParams& params);

// Optimal TS design: peak-power energy transfer for the shortest phase that
// meets q0, then all remaining average power goes to the information phase.
TsDesign SolveP2(const ValidatedParams& params, const Constellation& c,
                 double q0);

struct TradeoffPoint {
  double q0 = 0.0;
  double ssr_star = 0.0;
  Receiver receiver = Receiver::kPs;
  Scheme scheme = Scheme::kPsk;
  int order = 0;
  int fading_m = 1;
  double p_th = 0.0;
  double rho = 0.0;
  double p_tx = 0.0;
  double p_eh = 0.0;
  double p_info = 0.0;
  bool feasible = false;
  std::string error;  // solver diagnostic when !feasible
};

// n uniformly spaced values on [0, q_max], both ends included.
std::vector<double> UniformGrid(double q_max, int n);

double QMax(const ValidatedParams& params, const Constellation& c,
            Receiver receiver);

// Solves the design problem at each q0. Failures are recorded per point and
// the sweep continues. Points are evaluated on up to `workers` threads and
// returned in grid order.
std::vector<TradeoffPoint> TradeoffCurve(const ValidatedParams& params,
                                         const Constellation& c,
                                         Receiver receiver,
                                         std::span<const double> q0_grid,
                                         int workers = 1);

}  // namespace swipt

#endif  // SWIPT_OPTIMIZE_HPP_
