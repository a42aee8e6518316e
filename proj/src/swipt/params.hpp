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

#ifndef SWIPT_PARAMS_HPP_
#define SWIPT_PARAMS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace swipt {

// Link budget in linear SI units. Decibel quantities are converted at the
// boundary (config loader, CLI) and never stored here.
//
// block_time only sets the absolute energy bookkeeping of the Monte Carlo
// simulator. Every reported metric is a power or a per-symbol rate, so the
// block and symbol durations cancel out of all results.
struct SystemParams {
  double p_ave = 10e-3;          // W, average transmit power constraint
  double p_peak = 30e-3;         // W, peak transmit power constraint
  double distance = 10.0;        // m
  double path_loss_exp = 3.0;
  double noise_power = 1e-8;     // W, AWGN power at the decoder
  double eh_efficiency = 0.5;
  double eh_sensitivity = 1e-5;  // W, harvester activation floor
  int fading_m = 1;              // Nakagami order
  double block_time = 1e-3;      // s

  bool operator==(const SystemParams&) const = default;
};

// The reference link budget used by the built-in figure recipes.
SystemParams ReferenceParams();

double DbmToWatts(double dbm);
double WattsToDbm(double watts);

// Parses "0.01", "1e-6" (watts) or "-30dBm" / "-30 dBm" (case-insensitive).
double ParsePower(std::string_view text);

// SystemParams that passed Validate(). Every analytic module takes this type,
// so an unchecked budget cannot reach the math.
class ValidatedParams {
 public:
  const SystemParams& raw() const noexcept { return params_; }
  const SystemParams* operator->() const noexcept { return &params_; }

  // d^lambda, the large-scale power attenuation.
  double attenuation() const noexcept { return attenuation_; }

  bool operator==(const ValidatedParams& other) const {
    return params_ == other.params_;
  }

 private:
  friend ValidatedParams Validate(const SystemParams& params);
  explicit ValidatedParams(const SystemParams& params);

  SystemParams params_;
  double attenuation_;
};

// Throws Error(kInvalidParams) listing every violated field invariant.
ValidatedParams Validate(const SystemParams& params);
inline ValidatedParams Validate(const ValidatedParams& params) {
  return params;
}

// Non-fatal diagnostics, e.g. a peak-to-average budget below 3.
std::vector<std::string> Warnings(const SystemParams& params);

// Field access by name, shared by the config loader and the C API.
// Accepts the plain field names plus "<power field>_dbm" aliases.
void SetField(SystemParams& params, std::string_view key, double value);
double GetField(const SystemParams& params, std::string_view key);
const std::vector<std::string>& FieldNames();

}  // namespace swipt

#endif  // SWIPT_PARAMS_HPP_
