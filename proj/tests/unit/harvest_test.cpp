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
#include <random>

#include "support/oracle.hpp"
#include "swipt/errors.hpp"
#include "swipt/harvest.hpp"
#include "swipt/modulation.hpp"
#include "swipt/params.hpp"

namespace swipt {
namespace {

ValidatedParams WithM(int m) {
  SystemParams p = ReferenceParams();
  p.fading_m = m;
  return Validate(p);
}

// Average harvested power straight from its defining expectation.
double QuadraturePs(const ValidatedParams& vp, const Constellation& c,
                    double rho, double p_tx) {
  double q = 0.0;
  for (double np : c.normalized_powers()) {
    const double scale = rho * np * p_tx / vp.attenuation();
    const double a = vp->eh_sensitivity / scale;
    q += oracle::FadingIntegral(vp->fading_m, a, [&](double v) {
      return scale * v - vp->eh_sensitivity;
    });
  }
  return vp->eh_efficiency * q / c.order();
}

TEST_CASE("harvested energy per symbol") {
  CHECK(HarvestedEnergy(3e-5, 1e-3, 0.5, 1e-5) == doctest::Approx(1e-8));
  CHECK(HarvestedEnergy(5e-6, 1e-3, 0.5, 1e-5) == 0.0);
  CHECK(HarvestedEnergy(1e-5, 1e-3, 0.5, 1e-5) == 0.0);
  CHECK_THROWS_AS(HarvestedEnergy(-1.0, 1e-3, 0.5, 0.0), Error);
  CHECK_THROWS_AS(HarvestedEnergy(1.0, 1e-3, 1.5, 0.0), Error);
}

// Frozen from 30-digit evaluations at the reference budget, rho = 1.
TEST_CASE("full-split harvested power, frozen values") {
  const auto psk = Constellation::Build(Scheme::kPsk, 16);
  const auto pam = Constellation::Build(Scheme::kPam, 16);
  const auto qam = Constellation::Build(Scheme::kQam, 16);
  const double p = 10e-3;
  CHECK(AvgPowerPs(WithM(1), psk, 1.0, p).avg_harvested_power ==
        doctest::Approx(1.8393972058572116e-6).epsilon(1e-12));
  CHECK(AvgPowerPs(WithM(1), pam, 1.0, p).avg_harvested_power ==
        doctest::Approx(2.604366052234006e-6).epsilon(1e-12));
  CHECK(AvgPowerPs(WithM(1), qam, 1.0, p).avg_harvested_power ==
        doctest::Approx(2.2123282863376010e-6).epsilon(1e-12));
  CHECK(AvgPowerPs(WithM(2), psk, 1.0, p).avg_harvested_power ==
        doctest::Approx(1.35335283236612692e-6).epsilon(1e-12));
  CHECK(AvgPowerPs(WithM(2), pam, 1.0, p).avg_harvested_power ==
        doctest::Approx(2.306675017733218e-6).epsilon(1e-12));
  CHECK(AvgPowerPs(WithM(2), qam, 1.0, p).avg_harvested_power ==
        doctest::Approx(1.8289199734053767e-6).epsilon(1e-12));
}

TEST_CASE("closed form against quadrature over random designs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Scheme schemes[] = {Scheme::kPsk, Scheme::kPam, Scheme::kQam};
  for (int trial = 0; trial < 40; ++trial) {
    SystemParams p = ReferenceParams();
    p.fading_m = 1 + static_cast<int>(u(rng) * 8);
    p.eh_sensitivity = DbmToWatts(-40.0 + 25.0 * u(rng));
    p.distance = 3.0 + 12.0 * u(rng);
    const auto vp = Validate(p);
    const auto c = Constellation::Build(schemes[trial % 3], trial % 2 ? 4 : 16);
    const double rho = 0.05 + 0.95 * u(rng);
    const double p_tx = p.p_ave * (0.2 + 0.8 * u(rng));
    CAPTURE(trial);
    const double want = QuadraturePs(vp, c, rho, p_tx);
    CHECK(AvgPowerPs(vp, c, rho, p_tx).avg_harvested_power ==
          doctest::Approx(want).epsilon(1e-9));
    CHECK(AvgPowerPsFromMoments(vp, c, rho, p_tx) ==
          doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("Rayleigh special case") {
  const auto vp = WithM(1);
  for (Scheme s : {Scheme::kPsk, Scheme::kPam, Scheme::kQam}) {
    const auto c = Constellation::Build(s, 16);
    for (double rho : {0.1, 0.5, 0.9}) {
      CHECK(AvgPowerPsRayleigh(vp, c, rho, 0.01) ==
            doctest::Approx(AvgPowerPs(vp, c, rho, 0.01).avg_harvested_power)
                .epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(
      AvgPowerPsRayleigh(WithM(2), Constellation::Build(Scheme::kPsk, 4), 0.5,
                         0.01),
      Error);
}

TEST_CASE("activation probability") {
  const auto vp = WithM(1);
  const auto psk = Constellation::Build(Scheme::kPsk, 4);
  // Every PSK symbol needs v > P_th d^lambda / (rho P) = 1 / rho.
  CHECK(AvgPowerPs(vp, psk, 0.5, 0.01).activation_prob ==
        doctest::Approx(std::exp(-2.0)));
  CHECK(AvgPowerPs(vp, psk, 0.0, 0.01).activation_prob == 0.0);
  CHECK(AvgPowerPs(vp, psk, 0.0, 0.01).avg_harvested_power == 0.0);
}

TEST_CASE("split design arguments") {
  const auto vp = WithM(1);
  const auto c = Constellation::Build(Scheme::kQam, 16);
  CHECK_THROWS_AS(AvgPowerPs(vp, c, 1.2, 0.01), Error);
  CHECK_THROWS_AS(AvgPowerPs(vp, c, 0.5, 0.011), Error);
  CHECK_THROWS_AS(AvgPowerPs(vp, c, 0.5, 0.0), Error);
}

TEST_CASE("Jensen bound") {
  SystemParams p = ReferenceParams();
  p.eh_sensitivity = 1e-6;
  const auto vp = Validate(p);
  const auto c = Constellation::Build(Scheme::kQam, 16);
  const double bound = JensenLowerBound(vp, c, 0.5, 0.01);
  CHECK(bound == doctest::Approx(0.5 * (0.5 * 0.01 / 1000.0 - 1e-6)));
  CHECK(AvgPowerPs(vp, c, 0.5, 0.01).avg_harvested_power >= bound);
}

TEST_CASE("time-switching harvest, frozen values") {
  const auto vp = WithM(1);
  CHECK(Psi(vp) == doctest::Approx(0.716531310573789250).epsilon(1e-13));
  CHECK(Psi(WithM(2)) == doctest::Approx(0.684556158710122702).epsilon(1e-13));
  const auto full = AvgPowerTs(vp, 1.0 / 3.0, 30e-3);
  CHECK(full.avg_harvested_power ==
        doctest::Approx(3.5826565528689463e-6).epsilon(1e-12));
  CHECK(full.activation_prob == doctest::Approx(std::exp(-1.0 / 3.0)));
  CHECK(AvgPowerTs(vp, 0.5, 15e-3).activation_prob ==
        doctest::Approx(0.5 * std::exp(-1.0 / 3.0)));
  CHECK_THROWS_AS(AvgPowerTs(vp, 0.5, 31e-3), Error);
}

TEST_CASE("on-off energy signal") {
  const auto s = OptimalEnergySignal(10e-3, 30e-3, 1e-5);
  REQUIRE(s.levels.size() == 2);
  CHECK(s.levels[0].power == 30e-3);
  CHECK(s.levels[0].time_fraction == doctest::Approx(1.0 / 3.0));
  CHECK(s.AveragePower() == doctest::Approx(10e-3));
  CHECK(OptimalEnergySignal(30e-3, 30e-3, 1e-5).levels.size() == 1);
  try {
    OptimalEnergySignal(40e-3, 30e-3, 0.0);
    FAIL("expected a peak violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPeakViolation);
  }
}

TEST_CASE("brute-force search finds the on-off optimum") {
  const double gain = 1e-3;
  const double p_th = 1e-5;
  const auto best = SolvePaBruteforce(5e-3, 30e-3, p_th, gain, 200);
  const auto on_off = OptimalEnergySignal(5e-3, 30e-3, p_th);
  CHECK(best.AveragePower() == doctest::Approx(5e-3));
  CHECK(EnergyObjective(best, gain, p_th) ==
        doctest::Approx(EnergyObjective(on_off, gain, p_th)).epsilon(1e-9));
  CHECK(SolvePaBruteforce(0.0, 30e-3, p_th, gain, 10).AveragePower() == 0.0);
  CHECK_THROWS_AS(SolvePaBruteforce(1e-3, 30e-3, p_th, gain, 5), Error);
  CHECK_THROWS_AS(SolvePaBruteforce(40e-3, 30e-3, p_th, gain, 50), Error);
}

}  // namespace
}  // namespace swipt
