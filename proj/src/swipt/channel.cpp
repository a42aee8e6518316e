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

#include "swipt/channel.hpp"

#include <cmath>
#include <limits>

#include "swipt/errors.hpp"

namespace swipt {

FadingModel::FadingModel(int m) : m_(m) {
  Require(m >= 1, "Nakagami fading order m must be >= 1");
}

double FadingModel::Pdf(double v) const {
  Require(v >= 0.0, "fading gain must be non-negative");
  const double m = m_;
  if (v == 0.0) return m_ == 1 ? 1.0 : 0.0;
  return std::exp((m - 1.0) * std::log(v) + m * std::log(m) - m * v -
                  std::lgamma(m));
}

double FadingModel::UpperPartialMean(double a) const {
  Require(a >= 0.0, "threshold must be non-negative");
  if (std::isinf(a)) return 0.0;
  double sum = 0.0;
  for (int k = 0; k <= m_; ++k) sum += detail::PoissonWeight(k, m_ * a);
  return sum;
}

double FadingModel::UpperTail(double a) const {
  Require(a >= 0.0, "threshold must be non-negative");
  if (std::isinf(a)) return 0.0;
  double sum = 0.0;
  for (int k = 0; k < m_; ++k) sum += detail::PoissonWeight(k, m_ * a);
  return sum;
}

namespace detail {

double PoissonWeight(int k, double x) {
  if (x == 0.0) return k == 0 ? 1.0 : 0.0;
  if (std::isinf(x)) return 0.0;
  double log_fact = 0.0;
  for (int j = 2; j <= k; ++j) log_fact += std::log(static_cast<double>(j));
  return std::exp(-x + k * std::log(x) - log_fact);
}

double ExcessFactor(int m, double a) {
  if (std::isinf(a)) return 0.0;
  const double x = m * a;
  // a^{k+1} m^k / (k+1)! * e^{-m a} == PoissonWeight(k + 1, m a) / m
  double sum = PoissonWeight(0, x);
  for (int k = 0; k < m; ++k) {
    sum += (m - k - 1) * PoissonWeight(k + 1, x) / m;
  }
  return sum;
}

}  // namespace detail
}  // namespace swipt
