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

#include "swipt/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "swipt/errors.hpp"

namespace swipt {
namespace {

constexpr std::string_view kDbmSuffix = "_dbm";

bool IsPowerField(std::string_view key) {
  return key == "p_ave" || key == "p_peak" || key == "noise_power" ||
         key == "eh_sensitivity";
}

std::string Fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

SystemParams ReferenceParams() { return SystemParams{}; }

double DbmToWatts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double WattsToDbm(double watts) { return 10.0 * std::log10(watts * 1e3); }

double ParsePower(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  bool dbm = false;
  if (lower.size() > 3 && lower.ends_with("dbm")) {
    dbm = true;
    s.resize(s.size() - 3);
  } else if (lower.size() > 1 && lower.back() == 'w') {
    s.pop_back();
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot parse power value '" + std::string(text) + "'");
  }
  return dbm ? DbmToWatts(value) : value;
}

ValidatedParams::ValidatedParams(const SystemParams& params)
    : params_(params),
      attenuation_(std::pow(params.distance, params.path_loss_exp)) {}

ValidatedParams Validate(const SystemParams& p) {
  std::vector<std::string> problems;
  auto positive = [&](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
      problems.push_back(std::string(name) + " must be finite and > 0 (got " +
                         Fmt(v) + ")");
    }
  };
  positive(p.p_ave, "p_ave");
  positive(p.p_peak, "p_peak");
  positive(p.distance, "distance");
  positive(p.path_loss_exp, "path_loss_exp");
  positive(p.noise_power, "noise_power");
  positive(p.block_time, "block_time");
  if (!(std::isfinite(p.eh_sensitivity) && p.eh_sensitivity >= 0.0)) {
    problems.push_back("eh_sensitivity must be finite and >= 0 (got " +
                       Fmt(p.eh_sensitivity) + ")");
  }
  if (!(p.eh_efficiency >= 0.0 && p.eh_efficiency <= 1.0)) {
    problems.push_back("eh_efficiency must lie in [0, 1] (got " +
                       Fmt(p.eh_efficiency) + ")");
  }
  if (p.p_peak < p.p_ave) {
    problems.push_back("p_peak (" + Fmt(p.p_peak) + " W) must be >= p_ave (" +
                       Fmt(p.p_ave) + " W)");
  }
  if (p.fading_m < 1) {
    problems.push_back("fading_m must be an integer >= 1 (got " +
                       std::to_string(p.fading_m) + ")");
  }
  if (!problems.empty()) {
    std::string msg = "invalid system parameters: ";
    for (size_t i = 0; i < problems.size(); ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    throw Error(ErrorCode::kInvalidParams, msg);
  }
  const ValidatedParams out(p);
  if (!std::isfinite(out.attenuation()) || out.attenuation() <= 0.0) {
    throw Error(ErrorCode::kInvalidParams,
                "invalid system parameters: distance^path_loss_exp overflows");
  }
  return out;
}

std::vector<std::string> Warnings(const SystemParams& p) {
  std::vector<std::string> out;
  if (p.p_ave > 0.0 && p.p_peak / p.p_ave < 3.0) {
    out.push_back("p_peak/p_ave = " + Fmt(p.p_peak / p.p_ave) +
                  " < 3; peak-power constraints may bind");
  }
  return out;
}

void SetField(SystemParams& p, std::string_view key, double value) {
  if (key.ends_with(kDbmSuffix)) {
    std::string_view base = key.substr(0, key.size() - kDbmSuffix.size());
    if (!IsPowerField(base)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + std::string(key) + "' is not a power field");
    }
    SetField(p, base, DbmToWatts(value));
    return;
  }
  if (key == "p_ave") p.p_ave = value;
  else if (key == "p_peak") p.p_peak = value;
  else if (key == "distance") p.distance = value;
  else if (key == "path_loss_exp") p.path_loss_exp = value;
  else if (key == "noise_power") p.noise_power = value;
  else if (key == "eh_efficiency") p.eh_efficiency = value;
  else if (key == "eh_sensitivity") p.eh_sensitivity = value;
  else if (key == "block_time") p.block_time = value;
  else if (key == "fading_m") {
    if (!(value >= 1.0 && value <= 1e6 && std::floor(value) == value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fading_m must be a positive integer (got " + Fmt(value) +
                      ")");
    }
    p.fading_m = static_cast<int>(value);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown parameter '" + std::string(key) + "'");
  }
}

double GetField(const SystemParams& p, std::string_view key) {
  if (key.ends_with(kDbmSuffix)) {
    std::string_view base = key.substr(0, key.size() - kDbmSuffix.size());
    if (!IsPowerField(base)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + std::string(key) + "' is not a power field");
    }
    return WattsToDbm(GetField(p, base));
  }
  if (key == "p_ave") return p.p_ave;
  if (key == "p_peak") return p.p_peak;
  if (key == "distance") return p.distance;
  if (key == "path_loss_exp") return p.path_loss_exp;
  if (key == "noise_power") return p.noise_power;
  if (key == "eh_efficiency") return p.eh_efficiency;
  if (key == "eh_sensitivity") return p.eh_sensitivity;
  if (key == "block_time") return p.block_time;
  if (key == "fading_m") return p.fading_m;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown parameter '" + std::string(key) + "'");
}

const std::vector<std::string>& FieldNames() {
  static const std::vector<std::string> names = {
      "p_ave",          "p_peak",         "distance",
      "path_loss_exp",  "noise_power",    "eh_efficiency",
      "eh_sensitivity", "fading_m",       "block_time"};
  return names;
}

}  // namespace swipt
