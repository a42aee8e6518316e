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

// Brute-force quadrature references used by the tests. Everything here goes
// straight from the Nakagami-m power density and never touches the library's
// closed forms.

#ifndef SWIPT_TESTS_SUPPORT_ORACLE_HPP_
#define SWIPT_TESTS_SUPPORT_ORACLE_HPP_

#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>

namespace swipt::oracle {

inline double GammaPdf(int m, double v) {
  if (v < 0.0) return 0.0;
  return std::exp(m * std::log(static_cast<double>(m)) +
                  (m - 1) * std::log(v) - m * v - std::lgamma(m));
}

// Integral of fn(v) * pdf(v) over [lo, inf), split at the bulk of the mass.
inline double FadingIntegral(int m, double lo,
                             const std::function<double(double)>& fn) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double v) { return fn(v) * GammaPdf(m, v); };
  const double knee = std::max(lo, 1.0) + 80.0 / std::sqrt(m);
  const double hi = std::max(knee, lo) + 200.0 / m + 200.0;
  double total = 0.0;
  if (lo < knee) total += gauss_kronrod<double, 61>::integrate(f, lo, knee, 12, 1e-13);
  total += gauss_kronrod<double, 61>::integrate(f, std::max(lo, knee), hi, 12, 1e-13);
  return total;
}

// E[(v - a)^+] by direct quadrature.
inline double Excess(int m, double a) {
  return FadingIntegral(m, a, [a](double v) { return v - a; });
}

inline double GaussQ(double x) {
  return 0.5 * boost::math::erfc(x / std::sqrt(2.0));
}

// Average of ser(mean_snr * v) over the fading law; split at small v where
// the integrand has a large derivative for m = 1.
inline double AverageOverFading(int m,
                                const std::function<double(double)>& ser) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double v) { return ser(v) * GammaPdf(m, v); };
  double total = 0.0;
  double a = 0.0;
  for (double b : {1e-6, 1e-4, 1e-3, 1e-2, 0.1, 1.0, 4.0, 20.0, 80.0, 400.0}) {
    total += gauss_kronrod<double, 61>::integrate(f, a, b, 12, 1e-13);
    a = b;
  }
  return total;
}

}  // namespace swipt::oracle

#endif  // SWIPT_TESTS_SUPPORT_ORACLE_HPP_
