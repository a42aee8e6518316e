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

#ifndef SWIPT_SWEEP_HPP_
#define SWIPT_SWEEP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/modulation.hpp"
#include "swipt/optimize.hpp"
#include "swipt/params.hpp"

namespace swipt {

// One tradeoff curve to trace.
struct CurveSpec {
  SystemParams params;
  Scheme scheme = Scheme::kQam;
  int order = 16;
  Receiver receiver = Receiver::kPs;
};

// Named figure recipes, each derived from `base`:
//   fig1  M = 16, {PSK, PAM, QAM} x {PS, TS}
//   fig2  M = 4,  {PSK, PAM, QAM} x {PS, TS}
//   fig3  16-QAM, eh_sensitivity in {0, -20 dBm} x {PS, TS}
//   fig4  16-QAM, fading_m in {1, 2, 5, 20} x {PS, TS}
std::vector<CurveSpec> Recipe(std::string_view name, const SystemParams& base);
const std::vector<std::string>& RecipeNames();

// Rows of all curves, each curve on its own uniform q0 grid over
// [0, q_max] and sorted by q0.
struct SweepTable {
  std::vector<TradeoffPoint> rows;
};

SweepTable RunSweep(std::span<const CurveSpec> curves, int n_points,
                    int workers = 1);

struct OutputHeader {
  std::string command;
  std::string config_hash;
  std::uint64_t seed = 0;
};

// 16 hex digits, FNV-1a over the canonical "key=value" text of every field.
std::string ConfigHash(const SystemParams& params);

// Column order: scheme, modulation, M, m, P_th_W, q0_W, ssr_star, rho,
// p_tx_W, p_eh_W, p_info_W, feasible. Header lines start with '#'.
std::string RenderCsv(const SweepTable& table, const OutputHeader& header);
std::string RenderJson(const SweepTable& table, const OutputHeader& header);

}  // namespace swipt

#endif  // SWIPT_SWEEP_HPP_
