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

#include "swipt/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

constexpr double kRelTol = 1e-11;
constexpr unsigned kMaxDepth = 20;

// Relative slack allowed on the peak-power check before rejecting.
constexpr double kPeakSlack = 1e-12;

}  // namespace

double GaussianTail(double x) {
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double MeanSnr(const ValidatedParams& params, double effective_power) {
  return effective_power / (params.attenuation() * params->noise_power);
}

double Aser(const ValidatedParams& params, const Constellation& c,
            double effective_power) {
  Require(effective_power >= 0.0, "effective power must be non-negative");
  const double snr_bar = MeanSnr(params, effective_power);
  if (snr_bar == 0.0) return SerConditional(c, 0.0);

  // Integrate over the Gamma(m, 1) variable t = m v on a log scale, u = ln t.
  // The SER knee sits near t ~ m / (g snr_bar) and the fading mass near
  // t ~ m, which can be decades apart; in u both are O(1)-wide features.
  const int m = params->fading_m;
  const double md = m;
  const double knee = md / (c.g_coeff() * snr_bar);
  const double t_lo = std::min(1e-20, 1e-10 * knee);
  const double t_hi = md + 40.0 * std::sqrt(md) + 60.0;
  const double log_gamma_m = std::lgamma(md);

  auto integrand = [&](double u) {
    const double t = std::exp(u);
    const double density_dt = std::exp(md * u - t - log_gamma_m);
    return SerConditional(c, snr_bar * t / md) * density_dt;
  };
  double error = 0.0;
  const double body = boost::math::quadrature::gauss_kronrod<double, 31>::
      integrate(integrand, std::log(t_lo), std::log(t_hi), kMaxDepth, kRelTol,
                &error);
  // Below t_lo the SER is flat at its zero-SNR value; the Gamma mass there is
  // t_lo^m / m! to leading order.
  const double head = SerConditional(c, snr_bar * t_lo / md) *
                      std::exp(md * std::log(t_lo) - std::lgamma(md + 1.0));
  return std::clamp(body + head, 0.0, 1.0);
}

IdReport SsrPs(const ValidatedParams& params, const Constellation& c,
               double rho_ps, double p_tx) {
  Require(rho_ps >= 0.0 && rho_ps <= 1.0, "rho_ps must lie in [0, 1]");
  Require(p_tx >= 0.0, "p_tx must be non-negative");
  const double aser = Aser(params, c, (1.0 - rho_ps) * p_tx);
  return {aser, 1.0 - aser};
}

IdReport SsrTs(const ValidatedParams& params, const Constellation& c,
               double rho_ts, double p_info) {
  Require(rho_ts >= 0.0 && rho_ts <= 1.0, "rho_ts must lie in [0, 1]");
  Require(p_info >= 0.0, "p_info must be non-negative");
  const double peak = c.papr() * p_info;
  if (peak > params->p_peak * (1.0 + kPeakSlack)) {
    std::ostringstream os;
    os << "peak power violated: papr * p_info = " << peak << " W > p_peak = "
       << params->p_peak << " W";
    throw Error(ErrorCode::kPeakViolation, os.str());
  }
  const double aser = Aser(params, c, p_info);
  return {aser, (1.0 - rho_ts) * (1.0 - aser)};
}

}  // namespace swipt
