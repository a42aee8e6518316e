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

#include "swipt/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swipt/decode.hpp"
#include "swipt/errors.hpp"

namespace swipt {
namespace {

bool IsPowerOfTwo(int n) { return n >= 2 && (n & (n - 1)) == 0; }

int IntSqrt(int n) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  return r * r == n ? r : -1;
}

// z mod Z, except that exact multiples of Z map to Z instead of 0.
int ModOneBased(int z, int modulus) {
  const int r = z % modulus;
  return r == 0 ? modulus : r;
}

// (2 ceil(|x - (L+1)/2|) - 1)^2: squared odd amplitude level of index x.
double LevelSquared(double x, int levels) {
  const double a = 2.0 * std::ceil(std::abs(x - (levels + 1) / 2.0)) - 1.0;
  return a * a;
}

}  // namespace

std::string_view ToString(Scheme scheme) {
  switch (scheme) {
    case Scheme::kPsk: return "psk";
    case Scheme::kPam: return "pam";
    case Scheme::kQam: return "qam";
  }
  return "?";
}

Scheme ParseScheme(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (s == "psk") return Scheme::kPsk;
  if (s == "pam") return Scheme::kPam;
  if (s == "qam") return Scheme::kQam;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown modulation '" + std::string(name) + "'");
}

Constellation Constellation::Build(Scheme scheme, int order) {
  if (!IsPowerOfTwo(order)) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulation order must be 2^l with l >= 1 (got " +
                    std::to_string(order) + ")");
  }
  if (scheme == Scheme::kQam && IntSqrt(order) < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "QAM requires a square order 2^l with l even (got " +
                    std::to_string(order) + ")");
  }
  return Constellation(scheme, order);
}

Constellation::Constellation(Scheme scheme, int order)
    : scheme_(scheme), order_(order), powers_(order) {
  const int m = order;
  const double md = m;
  switch (scheme) {
    case Scheme::kPsk:
      std::fill(powers_.begin(), powers_.end(), 1.0);
      g_coeff_ = std::pow(std::sin(std::numbers::pi / md), 2);
      break;
    case Scheme::kPam:
      for (int i = 1; i <= m; ++i) {
        powers_[i - 1] = 3.0 / (md * md - 1.0) * LevelSquared(i, m);
      }
      g_coeff_ = 3.0 / (md * md - 1.0);
      break;
    case Scheme::kQam: {
      const int side = IntSqrt(m);
      for (int i = 1; i <= m; ++i) {
        const double row = std::ceil(static_cast<double>(i) / side);
        const double col = ModOneBased(i, side);
        powers_[i - 1] = 3.0 / (2.0 * (md - 1.0)) *
                         (LevelSquared(row, side) + LevelSquared(col, side));
      }
      g_coeff_ = 3.0 / (2.0 * (md - 1.0));
      break;
    }
  }
  papr_ = Papr(scheme, order);
}

double Papr(Scheme scheme, int order) {
  const double m = order;
  switch (scheme) {
    case Scheme::kPsk: return 1.0;
    case Scheme::kPam: return 3.0 * (m - 1.0) / (m + 1.0);
    case Scheme::kQam: {
      const double s = std::sqrt(m);
      return 3.0 * (s - 1.0) / (s + 1.0);
    }
  }
  return 1.0;
}

double SerConditional(const Constellation& c, double snr) {
  Require(snr >= 0.0, "SNR must be non-negative");
  const double m = c.order();
  const double q = GaussianTail(std::sqrt(2.0 * c.g_coeff() * snr));
  double ser = 0.0;
  switch (c.scheme()) {
    case Scheme::kPsk:
      ser = 2.0 * q;
      break;
    case Scheme::kPam:
      ser = 2.0 * (m - 1.0) / m * q;
      break;
    case Scheme::kQam: {
      const double k = 1.0 - 1.0 / std::sqrt(m);
      ser = 4.0 * k * q - 4.0 * k * k * q * q;
      break;
    }
  }
  return std::clamp(ser, 0.0, 1.0);
}

}  // namespace swipt
