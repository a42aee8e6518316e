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

#ifndef SWIPT_VALIDATION_HPP_
#define SWIPT_VALIDATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swipt/params.hpp"
#include "swipt/sweep.hpp"

namespace swipt {

struct CheckResult {
  std::string suite;
  std::string name;
  double reference = 0.0;  // closed form / analytic value
  double estimate = 0.0;   // Monte Carlo or alternative route
  double delta = 0.0;      // relative, or absolute when !relative
  double tolerance = 0.0;
  bool relative = true;
  bool passed = false;
};

struct ValidationOptions {
  std::uint64_t seed = 20170521;
  int workers = 1;
  // Multiplies every Monte Carlo size (1e6 blocks for harvesting and design
  // checks, 1e7 symbols for detection). Tolerances are not rescaled.
  double scale = 1.0;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool AllPassed() const;
  int Failures() const;
  // Plain-text report, one line per check. Byte-identical for a fixed
  // (params, suite, seed, scale) regardless of the worker count.
  std::string Render(const OutputHeader& header) const;
};

const std::vector<std::string>& SuiteNames();

// Runs the closed-form vs oracle checks of `suite` (harvest, decode,
// optimize or all) around the link budget `base`.
ValidationReport RunValidation(const SystemParams& base, std::string_view suite,
                               const ValidationOptions& options);

}  // namespace swipt

#endif  // SWIPT_VALIDATION_HPP_
