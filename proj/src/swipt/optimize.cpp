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

#include "swipt/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "swipt/decode.hpp"
#include "swipt/errors.hpp"
#include "swipt/harvest.hpp"

namespace swipt {
namespace {

constexpr int kMaxBisection = 200;
constexpr double kRhoTol = 1e-13;
// q0 may exceed q_max by this relative amount (rounding in grids built on
// q_max itself) and is then treated as q_max.
constexpr double kFeasibleSlack = 1e-12;

[[noreturn]] void ThrowInfeasible(double q0, double q_max, const char* what) {
  std::ostringstream os;
  os << what << ": required harvested power " << q0
     << " W exceeds the feasible maximum " << q_max << " W";
  throw InfeasibleError(os.str(), q_max);
}

}  // namespace

std::string_view ToString(Receiver receiver) {
  return receiver == Receiver::kPs ? "ps" : "ts";
}

Receiver ParseReceiver(std::string_view name) {
  if (name == "ps" || name == "PS") return Receiver::kPs;
  if (name == "ts" || name == "TS") return Receiver::kTs;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown receiver scheme '" + std::string(name) + "'");
}

double QPsMax(const ValidatedParams& params, const Constellation& c) {
  return AvgPowerPs(params, c, 1.0, params->p_ave).avg_harvested_power;
}

PsDesign SolveP1(const ValidatedParams& params, const Constellation& c,
                 double q0) {
  Require(q0 >= 0.0 && std::isfinite(q0), "q0 must be finite and >= 0");
  const double p_tx = params->p_ave;
  const double q_max = QPsMax(params, c);
  if (q0 > q_max * (1.0 + kFeasibleSlack)) ThrowInfeasible(q0, q_max, "PS");

  auto q_at = [&](double rho) {
    return AvgPowerPs(params, c, rho, p_tx).avg_harvested_power;
  };
  PsDesign d;
  d.p_tx = p_tx;
  d.peak_exceeded = c.papr() * p_tx > params->p_peak * (1.0 + 1e-12);
  if (q0 == 0.0) {
    d.rho_ps = 0.0;
  } else if (q0 >= q_max) {
    d.rho_ps = 1.0;
  } else {
    double lo = 0.0;
    double hi = 1.0;
    int it = 0;
    while (hi - lo > kRhoTol && it < kMaxBisection) {
      const double mid = 0.5 * (lo + hi);
      (q_at(mid) >= q0 ? hi : lo) = mid;
      ++it;
    }
    d.rho_ps = hi;
    d.iterations = it;
    d.converged = hi - lo <= kRhoTol;
  }
  d.achieved_q = q_at(d.rho_ps);
  const IdReport id = SsrPs(params, c, d.rho_ps, p_tx);
  d.achieved_ssr = id.ssr;
  d.achieved_aser = id.aser;
  return d;
}

double LambertW0(double x) {
  Require(x >= 0.0, "LambertW0 is only provided for x >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  double w;
  if (x < 1.0) {
    w = x * (1.0 - x + 1.5 * x * x);
    w = std::max(w, 0.5 * x);
  } else if (x < 3.0) {
    w = 0.5671432904097838 + (x - 1.0) * 0.22;
  } else {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  if (x <= std::numbers::e) {
    // Halley on f(w) = w e^w - x.
    for (int i = 0; i < 64; ++i) {
      const double ew = std::exp(w);
      const double f = w * ew - x;
      const double wp1 = w + 1.0;
      const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
      w -= step;
      if (std::abs(step) <= 1e-16 * std::abs(w)) break;
    }
  } else {
    // Halley on g(w) = w + ln w - ln x, which stays finite for huge x.
    const double lx = std::log(x);
    for (int i = 0; i < 64; ++i) {
      const double g = w + std::log(w) - lx;
      const double g1 = 1.0 + 1.0 / w;
      const double g2 = -1.0 / (w * w);
      const double step = 2.0 * g * g1 / (2.0 * g1 * g1 - g * g2);
      w -= step;
      if (std::abs(step) <= 1e-16 * std::abs(w)) break;
    }
  }
  return w;
}

double RhoStarPskRayleigh(const ValidatedParams& params, double q0) {
  Require(params->fading_m == 1, "closed-form rho* requires fading_m = 1");
  const auto psk = Constellation::Build(Scheme::kPsk, 2);
  const double q_max = QPsMax(params, psk);
  Require(q0 > 0.0, "closed-form rho* requires q0 > 0");
  if (q0 > q_max * (1.0 + kFeasibleSlack)) ThrowInfeasible(q0, q_max, "PS");
  const double p_th = params->eh_sensitivity;
  if (p_th == 0.0) {
    // W0(0) = 0: the expression degenerates to the linear harvester.
    return std::min(q0 * params.attenuation() /
                        (params->eh_efficiency * params->p_ave),
                    1.0);
  }
  const double w = LambertW0(params->eh_efficiency * p_th / q0);
  return std::min(p_th * params.attenuation() / (params->p_ave * w), 1.0);
}

double QTsMax(const ValidatedParams& params) {
  return params->eh_efficiency * params->p_ave * Psi(params) /
         params.attenuation();
}

TsDesign SolveP2(const ValidatedParams& params, const Constellation& c,
                 double q0) {
  Require(q0 >= 0.0 && std::isfinite(q0), "q0 must be finite and >= 0");
  const double q_max = QTsMax(params);
  if (q0 > q_max * (1.0 + kFeasibleSlack)) ThrowInfeasible(q0, q_max, "TS");
  q0 = std::min(q0, q_max);

  const double psi = Psi(params);
  const double eta = params->eh_efficiency;
  const double atten = params.attenuation();
  TsDesign d;
  d.p_eh = params->p_peak;
  // rho* p_eh = q0 d^lambda / (eta Psi) is the energy budget of the PT phase.
  const double pt_energy = q0 == 0.0 ? 0.0 : q0 * atten / (eta * psi);
  d.rho_ts = std::min(pt_energy / params->p_peak, 1.0);
  const double it_energy = std::max(params->p_ave - pt_energy, 0.0);
  d.p_info = d.rho_ts < 1.0 ? it_energy / (1.0 - d.rho_ts) : 0.0;

  const double p_info_cap = params->p_peak / c.papr();
  if (d.p_info > p_info_cap) {
    d.p_info = p_info_cap;
    d.peak_clamped = true;
  }
  d.avg_power_slack =
      params->p_ave - (d.rho_ts * d.p_eh + (1.0 - d.rho_ts) * d.p_info);
  d.achieved_q = AvgPowerTs(params, d.rho_ts, d.p_eh).avg_harvested_power;
  const IdReport id = SsrTs(params, c, d.rho_ts, d.p_info);
  d.achieved_ssr = id.ssr;
  d.achieved_aser = id.aser;
  return d;
}

std::vector<double> UniformGrid(double q_max, int n) {
  Require(n >= 2, "a grid needs at least 2 points");
  Require(q_max >= 0.0, "q_max must be non-negative");
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = q_max * i / (n - 1);
  grid.back() = q_max;
  return grid;
}

double QMax(const ValidatedParams& params, const Constellation& c,
            Receiver receiver) {
  return receiver == Receiver::kPs ? QPsMax(params, c) : QTsMax(params);
}

std::vector<TradeoffPoint> TradeoffCurve(const ValidatedParams& params,
                                         const Constellation& c,
                                         Receiver receiver,
                                         std::span<const double> q0_grid,
                                         int workers) {
  std::vector<TradeoffPoint> out(q0_grid.size());
  auto solve_one = [&](size_t i) {
    TradeoffPoint& pt = out[i];
    pt.q0 = q0_grid[i];
    pt.receiver = receiver;
    pt.scheme = c.scheme();
    pt.order = c.order();
    pt.fading_m = params->fading_m;
    pt.p_th = params->eh_sensitivity;
    try {
      if (receiver == Receiver::kPs) {
        const PsDesign d = SolveP1(params, c, pt.q0);
        pt.ssr_star = d.achieved_ssr;
        pt.rho = d.rho_ps;
        pt.p_tx = d.p_tx;
      } else {
        const TsDesign d = SolveP2(params, c, pt.q0);
        pt.ssr_star = d.achieved_ssr;
        pt.rho = d.rho_ts;
        pt.p_eh = d.p_eh;
        pt.p_info = d.p_info;
      }
      pt.feasible = true;
    } catch (const Error& e) {
      pt.feasible = false;
      pt.error = e.what();
    }
  };

  const size_t n_threads =
      std::min<size_t>(std::max(workers, 1), q0_grid.size());
  if (n_threads <= 1) {
    for (size_t i = 0; i < q0_grid.size(); ++i) solve_one(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::jthread> pool;
  for (size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < q0_grid.size(); i = next++) solve_one(i);
    });
  }
  pool.clear();  // joins
  return out;
}

}  // namespace swipt
