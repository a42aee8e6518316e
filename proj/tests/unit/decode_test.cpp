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

#include <doctest.h>

#include <cmath>

#include "support/oracle.hpp"
#include "swipt/decode.hpp"
#include "swipt/errors.hpp"
#include "swipt/modulation.hpp"
#include "swipt/params.hpp"

namespace swipt {
namespace {

ValidatedParams WithM(int m) {
  SystemParams p = ReferenceParams();
  p.fading_m = m;
  return Validate(p);
}

// E[Q(sqrt(2 c v))] for v ~ Gamma(m, 1/m), via the finite binomial sum.
double AverageQ(int m, double c) {
  const double mu = std::sqrt(c / (m + c));
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k < m; ++k) {
    if (k > 0) binom *= static_cast<double>(m - 1 + k) / k;
    sum += binom * std::pow((1.0 + mu) / 2.0, k);
  }
  return std::pow((1.0 - mu) / 2.0, m) * sum;
}

// Effective power giving mean SNR snr_bar at the reference budget.
double PowerFor(const ValidatedParams& vp, double snr_bar) {
  return snr_bar * vp.attenuation() * vp->noise_power;
}

TEST_CASE("gaussian tail") {
  CHECK(GaussianTail(0.0) == 0.5);
  CHECK(GaussianTail(1.96) == doctest::Approx(0.0249978951482204).epsilon(1e-13));
  CHECK(GaussianTail(-1.96) == doctest::Approx(1.0 - 0.0249978951482204));
  CHECK(GaussianTail(37.0) > 0.0);
}

TEST_CASE("mean SNR") {
  const auto vp = WithM(1);
  CHECK(MeanSnr(vp, 1e-2) == doctest::Approx(1e3));
}

TEST_CASE("PAM and PSK averages against the binomial closed form") {
  for (int m : {1, 2, 5}) {
    const auto vp = WithM(m);
    for (double snr_db : {0.0, 10.0, 20.0, 30.0, 45.0}) {
      const double snr = std::pow(10.0, snr_db / 10.0);
      CAPTURE(m);
      CAPTURE(snr_db);
      const auto pam = Constellation::Build(Scheme::kPam, 16);
      CHECK(Aser(vp, pam, PowerFor(vp, snr)) ==
            doctest::Approx(2.0 * 15.0 / 16.0 * AverageQ(m, pam.g_coeff() * snr))
                .epsilon(1e-9));
      const auto psk = Constellation::Build(Scheme::kPsk, 8);
      CHECK(Aser(vp, psk, PowerFor(vp, snr)) ==
            doctest::Approx(2.0 * AverageQ(m, psk.g_coeff() * snr)).epsilon(1e-9));
    }
  }
}

TEST_CASE("QAM average against plain quadrature") {
  const auto qam = Constellation::Build(Scheme::kQam, 16);
  for (int m : {1, 3, 20}) {
    const auto vp = WithM(m);
    for (double snr_db : {5.0, 20.0, 35.0}) {
      const double snr = std::pow(10.0, snr_db / 10.0);
      const double want = oracle::AverageOverFading(
          m, [&](double v) { return SerConditional(qam, snr * v); });
      CAPTURE(m);
      CAPTURE(snr_db);
      CHECK(Aser(vp, qam, PowerFor(vp, snr)) == doctest::Approx(want).epsilon(1e-8));
    }
  }
}

TEST_CASE("zero and large power limits") {
  const auto vp = WithM(2);
  const auto qam = Constellation::Build(Scheme::kQam, 16);
  CHECK(Aser(vp, qam, 0.0) == doctest::Approx(15.0 / 16.0));
  CHECK(Aser(vp, qam, 1e3) < 1e-9);
  CHECK_THROWS_AS(Aser(vp, qam, -1.0), Error);
}

TEST_CASE("symbol success rates") {
  const auto vp = WithM(1);
  const auto qam = Constellation::Build(Scheme::kQam, 16);
  const auto ps = SsrPs(vp, qam, 0.25, 0.01);
  CHECK(ps.aser == doctest::Approx(Aser(vp, qam, 0.0075)));
  CHECK(ps.ssr == doctest::Approx(1.0 - ps.aser));
  const auto ts = SsrTs(vp, qam, 0.25, 0.01);
  CHECK(ts.aser == doctest::Approx(Aser(vp, qam, 0.01)));
  CHECK(ts.ssr == doctest::Approx(0.75 * (1.0 - ts.aser)));
  CHECK_NOTHROW(SsrTs(vp, qam, 0.0, 30e-3 / 1.8));
  try {
    SsrTs(vp, qam, 0.1, 20e-3);
    FAIL("expected a peak violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPeakViolation);
  }
  CHECK_THROWS_AS(SsrPs(vp, qam, -0.1, 0.01), Error);
}

}  // namespace
}  // namespace swipt
