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
#include "swipt/channel.hpp"
#include "swipt/errors.hpp"

namespace swipt {
namespace {

TEST_CASE("pdf matches the Gamma(m, 1/m) density") {
  for (int m : {1, 2, 5, 20}) {
    const FadingModel f(m);
    for (double v : {1e-3, 0.1, 0.5, 1.0, 2.0, 7.5}) {
      CHECK(f.Pdf(v) == doctest::Approx(oracle::GammaPdf(m, v)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(f.Pdf(-1.0), Error);
  }
  CHECK(FadingModel(1).Pdf(0.0) == 1.0);
  CHECK(FadingModel(2).Pdf(0.0) == 0.0);
}

// Frozen from 50-digit evaluations of the incomplete gamma function.
TEST_CASE("upper partial mean, frozen values") {
  const FadingModel f(2);
  CHECK(f.UpperPartialMean(0.1) == doctest::Approx(0.998851518755137867).epsilon(1e-13));
  CHECK(f.UpperPartialMean(0.5) == doctest::Approx(0.919698602928605804).epsilon(1e-13));
  CHECK(f.UpperPartialMean(1.0) == doctest::Approx(0.676676416183063459).epsilon(1e-13));
  CHECK(f.UpperPartialMean(2.0) == doctest::Approx(0.238103305553544344).epsilon(1e-13));
  CHECK(f.UpperPartialMean(5.0) == doctest::Approx(0.00276939571551157594).epsilon(1e-12));
  CHECK(FadingModel(4).UpperTail(2.0) ==
        doctest::Approx(0.0423801119916839956).epsilon(1e-13));
}

TEST_CASE("moments at the origin") {
  for (int m : {1, 3, 40}) {
    const FadingModel f(m);
    CHECK(f.UpperTail(0.0) == doctest::Approx(1.0));
    CHECK(f.UpperPartialMean(0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(f.UpperTail(-1.0), Error);
    CHECK(detail::ExcessFactor(m, 0.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("excess factor against quadrature") {
  for (int m : {1, 2, 3, 5, 10, 20}) {
    for (double a : {0.01, 0.3, 1.0, 2.5, 6.0}) {
      CAPTURE(m);
      CAPTURE(a);
      const double want = oracle::Excess(m, a);
      CHECK(detail::ExcessFactor(m, a) == doctest::Approx(want).epsilon(1e-10));
      const FadingModel f(m);
      CHECK(f.UpperPartialMean(a) - a * f.UpperTail(a) ==
            doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("deep tail stays finite and positive") {
  const double tiny = detail::ExcessFactor(20, 15.0);
  CHECK(tiny > 0.0);
  CHECK(tiny < 1e-80);
  CHECK(std::isfinite(detail::PoissonWeight(500, 3.0)));
  CHECK(detail::PoissonWeight(0, 0.0) == 1.0);
  CHECK(detail::PoissonWeight(3, 0.0) == 0.0);
}

TEST_CASE("sampler mean and variance") {
  std::mt19937_64 rng(7);
  for (int m : {1, 4}) {
    const FadingModel f(m);
    double s = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
      const double v = f.Sample(rng);
      s += v;
      s2 += v * v;
    }
    const double mean = s / n;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.01));
    CHECK(s2 / n - mean * mean == doctest::Approx(1.0 / m).epsilon(0.03));
  }
}

TEST_CASE("rejects m < 1") { CHECK_THROWS_AS(FadingModel(0), Error); }

}  // namespace
}  // namespace swipt
