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

#include "swipt/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "swipt/decode.hpp"
#include "swipt/errors.hpp"
#include "swipt/harvest.hpp"
#include "swipt/montecarlo.hpp"
#include "swipt/optimize.hpp"

namespace swipt {
namespace {

constexpr double kHarvestTol = 0.01;
constexpr double kDecodeTol = 0.02;
constexpr double kDecodeTolPsk = 0.05;
constexpr double kAbsPowerTol = 1e-9;  // W
constexpr double kRhoTol = 1e-6;
constexpr double kHarvestBlocks = 1e6;
constexpr double kDecodeSymbols = 1e7;

class Runner {
 public:
  Runner(const SystemParams& base, const ValidationOptions& opt)
      : base_(base), opt_(opt) {}

  ValidationReport report;

  void Harvest() {
    for (Scheme s : {Scheme::kPsk, Scheme::kPam, Scheme::kQam}) {
      for (int order : {4, 16}) {
        const auto c = Constellation::Build(s, order);
        for (int m : {1, 2, 5}) {
          SystemParams p = base_;
          p.fading_m = m;
          const auto vp = Validate(p);
          for (double rho : {0.3, 0.7, 1.0}) {
            const double ref =
                AvgPowerPs(vp, c, rho, vp->p_ave).avg_harvested_power;
            SimConfig cfg = Config(kHarvestBlocks);
            cfg.fading_tilt_mean = SuggestedTiltPs(vp, c, rho, vp->p_ave);
            const auto sim = SimulatePs(vp, c, rho, vp->p_ave, cfg);
            Relative("harvest", Label(c) + "/ps/m=" + std::to_string(m) +
                                    "/rho=" + Fixed(rho),
                     ref, sim.q_hat, kHarvestTol);
          }
        }
      }
    }
    const auto qam = Constellation::Build(Scheme::kQam, 16);
    for (int m : {1, 2, 5}) {
      SystemParams p = base_;
      p.fading_m = m;
      const auto vp = Validate(p);
      for (double rho : {0.3, 1.0}) {
        const double p_eh = vp->p_ave;
        const auto signal =
            OptimalEnergySignal(p_eh, vp->p_peak, vp->eh_sensitivity);
        const double ref = AvgPowerTs(vp, rho, p_eh).avg_harvested_power;
        SimConfig cfg = Config(kHarvestBlocks);
        cfg.fading_tilt_mean = SuggestedTiltTs(vp, signal);
        const auto sim =
            SimulateTs(vp, rho, p_eh, vp->p_ave, qam, signal, cfg);
        Relative("harvest", "ts/on-off/m=" + std::to_string(m) +
                                "/rho=" + Fixed(rho),
                 ref, sim.q_hat, kHarvestTol);
      }
    }
  }

  void Decode() {
    const auto vp = Validate(base_);
    const double unit = vp.attenuation() * vp->noise_power;
    std::vector<double> quad30, mc30;
    for (Scheme s : {Scheme::kQam, Scheme::kPsk, Scheme::kPam}) {
      const auto c = Constellation::Build(s, 16);
      const double tol = s == Scheme::kPsk ? kDecodeTolPsk : kDecodeTol;
      for (double snr_db : {10.0, 20.0, 30.0}) {
        const double p_tx = unit * std::pow(10.0, snr_db / 10.0);
        const double ref = Aser(vp, c, p_tx);
        const auto sim = SimulatePs(vp, c, 0.0, p_tx, Config(kDecodeSymbols));
        Relative("decode", Label(c) + "/aser/snr=" + Fixed(snr_db) + "dB", ref,
                 sim.aser_hat, tol);
        if (snr_db == 30.0) {
          quad30.push_back(ref);
          mc30.push_back(sim.aser_hat);
        }
      }
    }
    // Order QAM < PSK < PAM at 30 dB for both routes.
    Ordering("decode", "aser-order/quadrature/snr=30dB", quad30);
    Ordering("decode", "aser-order/montecarlo/snr=30dB", mc30);
  }

  void Optimize() {
    const auto vp = Validate(base_);
    const auto qam = Constellation::Build(Scheme::kQam, 16);
    const double q_ps = QPsMax(vp, qam);
    const double q_ts = QTsMax(vp);
    for (double frac : {0.25, 0.5, 0.75}) {
      const auto d = SolveP1(vp, qam, frac * q_ps);
      Absolute("optimize", "p1-roundtrip/qam16/q0=" + Fixed(frac) + "max",
               frac * q_ps, d.achieved_q, kAbsPowerTol);
      const auto t = SolveP2(vp, qam, frac * q_ts);
      Absolute("optimize", "p2-harvest-active/qam16/q0=" + Fixed(frac) + "max",
               frac * q_ts, t.achieved_q, kAbsPowerTol);
      Absolute("optimize", "p2-power-active/qam16/q0=" + Fixed(frac) + "max",
               vp->p_ave, t.rho_ts * t.p_eh + (1.0 - t.rho_ts) * t.p_info,
               kAbsPowerTol);
    }

    SystemParams rayleigh = base_;
    rayleigh.fading_m = 1;
    const auto vr = Validate(rayleigh);
    const auto psk = Constellation::Build(Scheme::kPsk, 16);
    const double q_psk = QPsMax(vr, psk);
    for (double frac : {0.25, 0.5, 0.75}) {
      const double q0 = frac * q_psk;
      Absolute("optimize", "lambert-vs-bisection/psk16/q0=" + Fixed(frac) +
                               "max",
               RhoStarPskRayleigh(vr, q0), SolveP1(vr, psk, q0).rho_ps,
               kRhoTol);
    }

    // Optimal designs replayed through the simulator.
    const double q0_ps = 0.5 * q_ps;
    const auto d = SolveP1(vp, qam, q0_ps);
    SimConfig cfg = Config(kHarvestBlocks);
    cfg.fading_tilt_mean = SuggestedTiltPs(vp, qam, d.rho_ps, d.p_tx);
    const auto sim_ps = SimulatePs(vp, qam, d.rho_ps, d.p_tx, cfg);
    Relative("optimize", "p1-design-mc/qam16/q", q0_ps, sim_ps.q_hat,
             kHarvestTol);
    Relative("optimize", "p1-design-mc/qam16/ssr", d.achieved_ssr,
             sim_ps.ssr_hat, kDecodeTol);

    const double q0_ts = 0.5 * q_ts;
    const auto t = SolveP2(vp, qam, q0_ts);
    const auto signal =
        OptimalEnergySignal(t.p_eh, vp->p_peak, vp->eh_sensitivity);
    SimConfig cfg_ts = Config(kHarvestBlocks);
    cfg_ts.fading_tilt_mean = SuggestedTiltTs(vp, signal);
    const auto sim_ts =
        SimulateTs(vp, t.rho_ts, t.p_eh, t.p_info, qam, signal, cfg_ts);
    Relative("optimize", "p2-design-mc/qam16/q", q0_ts, sim_ts.q_hat,
             kHarvestTol);
    Relative("optimize", "p2-design-mc/qam16/ssr", t.achieved_ssr,
             sim_ts.ssr_hat, kDecodeTol);
  }

 private:
  SimConfig Config(double nominal) {
    SimConfig cfg;
    cfg.n_blocks = static_cast<std::uint64_t>(
        std::max(1.0, std::round(nominal * opt_.scale)));
    cfg.symbols_per_block = 1;
    cfg.worker_count = opt_.workers;
    // A fresh substream family for every simulation in the run.
    cfg.master_seed = SplitMix64(opt_.seed + 0x1000 * ++sim_index_);
    return cfg;
  }

  static std::string Label(const Constellation& c) {
    return std::string(ToString(c.scheme())) + std::to_string(c.order());
  }

  static std::string Fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
  }

  void Relative(const char* suite, std::string name, double ref, double est,
                double tol) {
    CheckResult r{suite, std::move(name), ref, est, 0.0, tol, true, false};
    r.delta = ref != 0.0 ? std::abs(est - ref) / std::abs(ref) : std::abs(est);
    r.passed = r.delta <= tol;
    report.checks.push_back(std::move(r));
  }

  void Absolute(const char* suite, std::string name, double ref, double est,
                double tol) {
    CheckResult r{suite, std::move(name), ref, est, std::abs(est - ref), tol,
                  false, false};
    r.passed = r.delta <= tol;
    report.checks.push_back(std::move(r));
  }

  void Ordering(const char* suite, std::string name,
                const std::vector<double>& ascending) {
    const bool ok =
        std::adjacent_find(ascending.begin(), ascending.end(),
                           std::greater_equal<double>()) == ascending.end();
    CheckResult r{suite, std::move(name), 0.0, 0.0, 0.0, 0.0, false, ok};
    r.reference = ascending.front();
    r.estimate = ascending.back();
    report.checks.push_back(std::move(r));
  }

  SystemParams base_;
  ValidationOptions opt_;
  std::uint64_t sim_index_ = 0;
};

}  // namespace

bool ValidationReport::AllPassed() const { return Failures() == 0; }

int ValidationReport::Failures() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

std::string ValidationReport::Render(const OutputHeader& header) const {
  std::ostringstream os;
  os << "# toolkit: swipt-link " << SWIPT_VERSION_STRING << "\n"
     << "# command: " << header.command << "\n"
     << "# config_hash: " << header.config_hash << "\n"
     << "# seed: " << header.seed << "\n";
  for (const auto& c : checks) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s %-9s %-44s ref=%.6e est=%.6e %s=%.3e tol=%.1e\n",
                  c.passed ? "PASS" : "FAIL", c.suite.c_str(), c.name.c_str(),
                  c.reference, c.estimate, c.relative ? "rel" : "abs", c.delta,
                  c.tolerance);
    os << buf;
  }
  os << "summary: " << checks.size() << " checks, " << Failures()
     << " failed\n";
  return os.str();
}

const std::vector<std::string>& SuiteNames() {
  static const std::vector<std::string> names = {"harvest", "decode",
                                                 "optimize", "all"};
  return names;
}

ValidationReport RunValidation(const SystemParams& base, std::string_view suite,
                               const ValidationOptions& options) {
  Require(options.scale > 0.0, "validation scale must be positive");
  Validate(base);
  Runner runner(base, options);
  const bool all = suite == "all";
  if (!all && suite != "harvest" && suite != "decode" && suite != "optimize") {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown validation suite '" + std::string(suite) + "'");
  }
  if (all || suite == "harvest") runner.Harvest();
  if (all || suite == "decode") runner.Decode();
  if (all || suite == "optimize") runner.Optimize();
  return runner.report;
}

}  // namespace swipt
