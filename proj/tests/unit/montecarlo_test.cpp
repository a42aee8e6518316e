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

#include <algorithm>
#include <cmath>
#include <vector>

#include "swipt/decode.hpp"
#include "swipt/errors.hpp"
#include "swipt/harvest.hpp"
#include "swipt/modulation.hpp"
#include "swipt/montecarlo.hpp"
#include "swipt/params.hpp"

namespace swipt {
namespace {

ValidatedParams WithM(int m) {
  SystemParams p = ReferenceParams();
  p.fading_m = m;
  return Validate(p);
}

void CheckWithin(double estimate, double reference, double std_error,
                 double sigmas) {
  CAPTURE(estimate);
  CAPTURE(reference);
  CAPTURE(std_error);
  CHECK(std::abs(estimate - reference) <= sigmas * std_error);
}

TEST_CASE("SplitMix64 reference outputs") {
  CHECK(SplitMix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(SplitMix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("constellation geometry matches the power tables") {
  for (Scheme s : {Scheme::kPsk, Scheme::kPam, Scheme::kQam}) {
    for (int order : {4, 16, 64}) {
      const auto c = Constellation::Build(s, order);
      const auto pts = ConstellationPoints(c);
      REQUIRE(pts.size() == static_cast<size_t>(order));
      double mean = 0.0;
      for (auto x : pts) mean += std::norm(x);
      CHECK(mean / order == doctest::Approx(1.0));
      if (s == Scheme::kPam) {
        for (auto x : pts) CHECK(x.imag() == 0.0);
      }
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto vp = WithM(2);
  const auto c = Constellation::Build(Scheme::kQam, 16);
  SimConfig cfg;
  cfg.n_blocks = 70000;  // several chunks plus a partial one
  cfg.master_seed = 99;
  cfg.fading_tilt_mean = SuggestedTiltPs(vp, c, 0.4, 0.01);
  const auto one = SimulatePs(vp, c, 0.4, 0.01, cfg);
  cfg.worker_count = 3;
  const auto three = SimulatePs(vp, c, 0.4, 0.01, cfg);
  CHECK(one.q_hat == three.q_hat);
  CHECK(one.ssr_hat == three.ssr_hat);
  CHECK(one.q_std_error == three.q_std_error);
  CHECK(one.n_symbols == 70000);
  cfg.master_seed = 100;
  CHECK(SimulatePs(vp, c, 0.4, 0.01, cfg).q_hat != one.q_hat);
}

TEST_CASE("power splitting estimates bracket the closed forms") {
  const auto c = Constellation::Build(Scheme::kPam, 4);
  for (int m : {1, 3}) {
    const auto vp = WithM(m);
    for (double tilt : {1.0, 0.0}) {
      SimConfig cfg;
      cfg.n_blocks = 200000;
      cfg.master_seed = 5 + m;
      cfg.fading_tilt_mean =
          tilt == 0.0 ? SuggestedTiltPs(vp, c, 0.97, 0.01) : tilt;
      const auto r = SimulatePs(vp, c, 0.97, 0.01, cfg);
      CheckWithin(r.q_hat, AvgPowerPs(vp, c, 0.97, 0.01).avg_harvested_power,
                  r.q_std_error, 5.0);
      const auto id = SsrPs(vp, c, 0.97, 0.01);
      CheckWithin(r.ssr_hat, id.ssr, r.ssr_std_error, 5.0);
      CHECK(r.aser_hat == doctest::Approx(1.0 - r.ssr_hat));
      CHECK(r.p_rx_hat > 0.0);
    }
  }
}

TEST_CASE("several symbols per block") {
  const auto vp = WithM(1);
  const auto c = Constellation::Build(Scheme::kQam, 16);
  SimConfig cfg;
  cfg.n_blocks = 40000;
  cfg.symbols_per_block = 8;
  cfg.fading_tilt_mean = 2.0;
  const auto r = SimulatePs(vp, c, 0.7, 0.01, cfg);
  CHECK(r.n_symbols == 320000);
  CheckWithin(r.q_hat, AvgPowerPs(vp, c, 0.7, 0.01).avg_harvested_power,
              r.q_std_error, 5.0);
}

TEST_CASE("time switching with the on-off signal") {
  const auto vp = WithM(2);
  const auto c = Constellation::Build(Scheme::kPsk, 16);
  const double rho = 0.25;
  const double p_eh = 30e-3;
  const double p_info = (10e-3 - rho * p_eh) / (1.0 - rho);
  const auto signal = OptimalEnergySignal(p_eh, vp->p_peak, vp->eh_sensitivity);
  SimConfig cfg;
  cfg.n_blocks = 200000;
  cfg.master_seed = 3;
  cfg.fading_tilt_mean = SuggestedTiltTs(vp, signal);
  const auto r = SimulateTs(vp, rho, p_eh, p_info, c, signal, cfg);
  CheckWithin(r.q_hat, AvgPowerTs(vp, rho, p_eh).avg_harvested_power,
              r.q_std_error, 5.0);
  const auto id = SsrTs(vp, c, rho, p_info);
  CheckWithin(r.ssr_hat, id.ssr, r.ssr_std_error, 5.0);
}

TEST_CASE("tilt suggestions") {
  const auto vp = WithM(1);
  const auto c = Constellation::Build(Scheme::kPsk, 4);
  CHECK(SuggestedTiltPs(vp, c, 0.0, 0.01) == 1.0);
  CHECK(SuggestedTiltPs(vp, c, 0.3, 0.01) > 1.0);
  CHECK(SuggestedTiltPs(vp, c, 1e-6, 0.01) == 50.0);
  CHECK(SuggestedTiltTs(vp, EnergySignal{{{0.0, 1.0}}}) == 1.0);
}

TEST_CASE("invalid simulation requests") {
  const auto vp = WithM(1);
  const auto c = Constellation::Build(Scheme::kPsk, 4);
  SimConfig cfg;
  cfg.n_blocks = 0;
  CHECK_THROWS_AS(SimulatePs(vp, c, 0.5, 0.01, cfg), Error);
  cfg = SimConfig{};
  cfg.fading_tilt_mean = 0.5;
  CHECK_THROWS_AS(SimulatePs(vp, c, 0.5, 0.01, cfg), Error);
  cfg = SimConfig{};
  CHECK_THROWS_AS(SimulatePs(vp, c, 1.5, 0.01, cfg), Error);
  const EnergySignal bad{{{0.03, 0.5}}};
  CHECK_THROWS_AS(SimulateTs(vp, 0.5, 0.015, 0.005, c, bad, cfg), Error);
  const EnergySignal wrong_mean{{{0.03, 0.5}, {0.0, 0.5}}};
  CHECK_THROWS_AS(SimulateTs(vp, 0.5, 0.01, 0.005, c, wrong_mean, cfg), Error);
}

}  // namespace
}  // namespace swipt
