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
#include <limits>
#include <numbers>
#include <vector>

#include "swipt/errors.hpp"
#include "swipt/harvest.hpp"
#include "swipt/modulation.hpp"
#include "swipt/optimize.hpp"
#include "swipt/params.hpp"

namespace swipt {
namespace {

const Constellation kQam16 = Constellation::Build(Scheme::kQam, 16);
const Constellation kPsk16 = Constellation::Build(Scheme::kPsk, 16);

TEST_CASE("Lambert W0") {
  CHECK(LambertW0(1.0) == doctest::Approx(0.56714329040978387).epsilon(1e-15));
  CHECK(LambertW0(0.0) == 0.0);
  CHECK(LambertW0(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  for (double x : {1e-12, 1e-5, 0.3, 2.0, 10.0, 1e3, 1e10, 1e100, 1e300}) {
    const double w = LambertW0(x);
    CAPTURE(x);
    CHECK(w + std::log(w) == doctest::Approx(std::log(x)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(LambertW0(-0.1), Error);
}

TEST_CASE("receiver names") {
  CHECK(ParseReceiver("ps") == Receiver::kPs);
  CHECK(ParseReceiver("TS") == Receiver::kTs);
  CHECK(ToString(Receiver::kTs) == "ts");
  CHECK_THROWS_AS(ParseReceiver("xx"), Error);
}

TEST_CASE("power-splitting design") {
  const auto vp = Validate(ReferenceParams());
  const double q_max = QPsMax(vp, kQam16);
  CHECK(q_max == doctest::Approx(2.2123282863376010e-6).epsilon(1e-12));

  const auto zero = SolveP1(vp, kQam16, 0.0);
  CHECK(zero.rho_ps == 0.0);
  CHECK(zero.p_tx == vp->p_ave);

  const auto top = SolveP1(vp, kQam16, q_max);
  CHECK(top.rho_ps == 1.0);

  for (double f : {0.01, 0.3, 0.77, 0.999}) {
    const auto d = SolveP1(vp, kQam16, f * q_max);
    CAPTURE(f);
    CHECK(d.converged);
    CHECK(d.achieved_q >= f * q_max);
    CHECK(d.achieved_q == doctest::Approx(f * q_max).epsilon(1e-9));
    CHECK(d.achieved_ssr == doctest::Approx(1.0 - d.achieved_aser));
  }
}

TEST_CASE("power splitting flags a peak-bound budget") {
  CHECK_FALSE(SolveP1(Validate(ReferenceParams()), kQam16, 1e-7).peak_exceeded);
  SystemParams p = ReferenceParams();
  p.p_peak = 1.5 * p.p_ave;  // below the 16-PAM PAPR of 1.8
  const auto vp = Validate(p);
  const auto pam = Constellation::Build(Scheme::kPam, 16);
  CHECK(SolveP1(vp, pam, 1e-7).peak_exceeded);
  CHECK_FALSE(SolveP1(vp, Constellation::Build(Scheme::kPsk, 16), 1e-7)
                  .peak_exceeded);
}

TEST_CASE("infeasible targets report q_max") {
  const auto vp = Validate(ReferenceParams());
  const double q_max = QPsMax(vp, kQam16);
  try {
    SolveP1(vp, kQam16, 2.0 * q_max);
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(e.code() == ErrorCode::kInfeasible);
    CHECK(e.feasible_max() == q_max);
  }
  try {
    SolveP2(vp, kQam16, 1e-5);
    FAIL("expected infeasibility");
  } catch (const InfeasibleError& e) {
    CHECK(e.feasible_max() == doctest::Approx(QTsMax(vp)));
  }
  CHECK_NOTHROW(SolveP1(vp, kQam16, q_max * (1.0 + 1e-13)));
  CHECK_THROWS_AS(SolveP1(vp, kQam16, -1e-9), Error);
}

TEST_CASE("closed-form PSK split under Rayleigh fading") {
  const auto vp = Validate(ReferenceParams());
  const double q_max = QPsMax(vp, kPsk16);
  for (double f : {0.05, 0.5, 0.95}) {
    const double rho = RhoStarPskRayleigh(vp, f * q_max);
    CHECK(rho == doctest::Approx(SolveP1(vp, kPsk16, f * q_max).rho_ps).epsilon(1e-9));
  }
  SystemParams linear = ReferenceParams();
  linear.eh_sensitivity = 0.0;
  const auto lp = Validate(linear);
  CHECK(RhoStarPskRayleigh(lp, 2.5e-6) == doctest::Approx(0.5));
  SystemParams nakagami = ReferenceParams();
  nakagami.fading_m = 2;
  CHECK_THROWS_AS(RhoStarPskRayleigh(Validate(nakagami), 1e-7), Error);
}

// Frozen from a 30-digit evaluation of the time-switching solution.
TEST_CASE("time-switching design, frozen values") {
  const auto vp = Validate(ReferenceParams());
  CHECK(QTsMax(vp) == doctest::Approx(3.5826565528689463e-6).epsilon(1e-12));
  const auto d = SolveP2(vp, kQam16, 1e-6);
  CHECK(d.rho_ts == doctest::Approx(0.0930408283390726).epsilon(1e-12));
  CHECK(d.p_eh == 30e-3);
  CHECK(d.p_info == doctest::Approx(0.00794829070048025).epsilon(1e-12));
  CHECK_FALSE(d.peak_clamped);
  CHECK(std::abs(d.avg_power_slack) < 1e-15);
  CHECK(d.achieved_q == doctest::Approx(1e-6).epsilon(1e-12));

  const auto z = SolveP2(vp, kQam16, 0.0);
  CHECK(z.rho_ts == 0.0);
  CHECK(z.p_info == doctest::Approx(vp->p_ave));

  const auto full = SolveP2(vp, kQam16, QTsMax(vp));
  CHECK(full.rho_ts == doctest::Approx(1.0 / 3.0));
  CHECK(full.p_info == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("time-switching peak clamp") {
  SystemParams p = ReferenceParams();
  p.p_peak = 12e-3;  // p_ave * PAPR(16-QAM) = 18 mW > p_peak
  const auto vp = Validate(p);
  const auto d = SolveP2(vp, kQam16, 0.0);
  CHECK(d.peak_clamped);
  CHECK(d.p_info == doctest::Approx(12e-3 / 1.8));
  CHECK(d.avg_power_slack > 0.0);
}

TEST_CASE("tradeoff curve") {
  const auto vp = Validate(ReferenceParams());
  const auto grid = UniformGrid(QMax(vp, kQam16, Receiver::kPs), 9);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == QPsMax(vp, kQam16));
  for (Receiver rx : {Receiver::kPs, Receiver::kTs}) {
    const auto g = UniformGrid(QMax(vp, kQam16, rx), 9);
    const auto serial = TradeoffCurve(vp, kQam16, rx, g, 1);
    const auto parallel = TradeoffCurve(vp, kQam16, rx, g, 4);
    REQUIRE(serial.size() == 9);
    for (size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].feasible);
      CHECK(serial[i].q0 == g[i]);
      CHECK(serial[i].ssr_star == parallel[i].ssr_star);
      CHECK(serial[i].rho == parallel[i].rho);
      if (i > 0) CHECK(serial[i].ssr_star <= serial[i - 1].ssr_star);
    }
  }
  const std::vector<double> bad = {1.0};
  const auto out = TradeoffCurve(vp, kQam16, Receiver::kPs, bad);
  CHECK_FALSE(out[0].feasible);
  CHECK(out[0].error.find("exceeds") != std::string::npos);
  CHECK(TradeoffCurve(vp, kQam16, Receiver::kPs, {}).empty());
  CHECK_THROWS_AS(UniformGrid(1.0, 1), Error);
}

}  // namespace
}  // namespace swipt
