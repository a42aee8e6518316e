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

#ifndef SWIPT_CHANNEL_HPP_
#define SWIPT_CHANNEL_HPP_

#include <random>

namespace swipt {

// Nakagami-m power gain nu = |h|^2 with integer m: Gamma(m, 1/m), unit mean.
//
// For integer m the incomplete-gamma integrals reduce to finite sums of
// Poisson weights e^{-x} x^k / k!, which is what every closed form here uses.
class FadingModel {
 public:
  explicit FadingModel(int m);

  int m() const noexcept { return m_; }

  double Pdf(double v) const;

  // Integral of v f(v) over [a, inf).
  double UpperPartialMean(double a) const;

  // Integral of f(v) over [a, inf).
  double UpperTail(double a) const;

  // Erlang draw: mean of m independent unit exponentials.
  template <class Rng>
  double Sample(Rng& rng) const {
    return SampleWithMean(rng, 1.0);
  }

  // Gamma(m) draw with the given mean (same shape, rescaled).
  template <class Rng>
  double SampleWithMean(Rng& rng, double mean) const {
    std::exponential_distribution<double> exp1(1.0);
    double sum = 0.0;
    for (int k = 0; k < m_; ++k) sum += exp1(rng);
    return sum * mean / m_;
  }

 private:
  int m_;
};

namespace detail {

// e^{-x} x^k / k!, evaluated in log space so large x does not underflow
// the leading factor.
double PoissonWeight(int k, double x);

// Mean excess E[(nu - a)^+], written as
//   e^{-m a} (1 + sum_{k=0}^{m-1} a^{k+1} m^k (m-k-1) / (k+1)!).
// Both the PS and the TS harvested-power closed forms are built from it.
double ExcessFactor(int m, double a);

}  // namespace detail
}  // namespace swipt

#endif  // SWIPT_CHANNEL_HPP_
