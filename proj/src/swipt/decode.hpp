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

#ifndef SWIPT_DECODE_HPP_
#define SWIPT_DECODE_HPP_

#include "swipt/modulation.hpp"
#include "swipt/params.hpp"

namespace swipt {

// Gaussian tail Q(x) = P(Z > x), Z ~ N(0, 1).
double GaussianTail(double x);

// Mean SNR effective_power / (d^lambda sigma^2) before fading.
double MeanSnr(const ValidatedParams& params, double effective_power);

// Fading-averaged SER for a decoder that receives `effective_power` watts
// (PS: (1 - rho) P_tx, TS: P_info). Relative accuracy about 1e-9.
double Aser(const ValidatedParams& params, const Constellation& c,
            double effective_power);

struct IdReport {
  double aser;
  double ssr;  // average symbol success rate per unit time
};

IdReport SsrPs(const ValidatedParams& params, const Constellation& c,
               double rho_ps, double p_tx);

// SSR normalized over the whole block: (1 - rho) (1 - ASER). Throws
// Error(kPeakViolation) when papr * p_info exceeds p_peak.
IdReport SsrTs(const ValidatedParams& params, const Constellation& c,
               double rho_ts, double p_info);

}  // namespace swipt

#endif  // SWIPT_DECODE_HPP_
