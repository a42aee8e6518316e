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

#ifndef SWIPT_MODULATION_HPP_
#define SWIPT_MODULATION_HPP_

#include <span>
#include <string_view>
#include <vector>

namespace swipt {

enum class Scheme { kPsk, kPam, kQam };

std::string_view ToString(Scheme scheme);
Scheme ParseScheme(std::string_view name);

// Power/SER view of an M-ary constellation with equiprobable symbols and unit
// average power. Symbol geometry lives with the Monte Carlo simulator.
class Constellation {
 public:
  // Throws for orders that are not 2^l (l >= 1), or non-square QAM.
  static Constellation Build(Scheme scheme, int order);

  Scheme scheme() const noexcept { return scheme_; }
  int order() const noexcept { return order_; }

  // P_i / P_tx for i = 1..M, in the 1-based symbol order of the closed form.
  std::span<const double> normalized_powers() const noexcept {
    return powers_;
  }
  double symbol_prob() const noexcept { return 1.0 / order_; }
  double papr() const noexcept { return papr_; }
  // Distance coefficient g in the argument sqrt(2 g gamma) of the SER.
  double g_coeff() const noexcept { return g_coeff_; }

 private:
  Constellation(Scheme scheme, int order);

  Scheme scheme_;
  int order_;
  std::vector<double> powers_;
  double papr_;
  double g_coeff_;
};

// Peak-to-average power ratio: 1, 3(M-1)/(M+1), 3(sqrt M - 1)/(sqrt M + 1).
double Papr(Scheme scheme, int order);

// Symbol error rate at instantaneous SNR `snr`, clamped to [0, 1]. The PSK
// branch is the usual 2Q(.) nearest-neighbour approximation.
double SerConditional(const Constellation& c, double snr);

}  // namespace swipt

#endif  // SWIPT_MODULATION_HPP_
