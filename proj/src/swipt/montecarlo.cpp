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

#include "swipt/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <random>
#include <thread>

#include "swipt/channel.hpp"
#include "swipt/errors.hpp"

namespace swipt {
namespace {

constexpr double kMaxTilt = 50.0;
// Share of fading draws taken from the nominal law in the tilted mixture.
constexpr double kNominalShare = 0.2;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void Add(double y) {
    sum += y;
    sum_sq += y * y;
  }
  void Merge(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double Mean(double n) const { return sum / n; }
  double StdError(double n) const {
    if (n < 2.0) return 0.0;
    const double mean = sum / n;
    const double var = std::max(sum_sq / n - mean * mean, 0.0) * n / (n - 1.0);
    return std::sqrt(var / n);
  }
};

struct Tally {
  Moments harvest;  // weighted per-block harvested power
  Moments success;  // weighted per-block detection success fraction
  Moments rx;       // weighted per-block received power at the harvester
};

// Draws a fading gain and its importance weight f(v) / mixture(v).
class FadingDraw {
 public:
  FadingDraw(int m, double tilt_mean) : fading_(m), tilt_(tilt_mean) {}

  template <class Rng>
  std::pair<double, double> operator()(Rng& rng) const {
    if (tilt_ == 1.0) return {fading_.Sample(rng), 1.0};
    std::bernoulli_distribution coin(kNominalShare);
    const double v =
        coin(rng) ? fading_.Sample(rng) : fading_.SampleWithMean(rng, tilt_);
    // g(v) / f(v) = tilt^{-m} exp(m v (1 - 1/tilt)).
    const double m = fading_.m();
    const double log_ratio = m * v * (1.0 - 1.0 / tilt_) - m * std::log(tilt_);
    const double ratio = std::exp(std::min(log_ratio, 700.0));
    return {v, 1.0 / (kNominalShare + (1.0 - kNominalShare) * ratio)};
  }

 private:
  FadingModel fading_;
  double tilt_;
};

// Symbols are dealt from a reshuffled deck holding each index once, so every
// run of `order` draws covers the alphabet exactly once.
class SymbolDeck {
 public:
  explicit SymbolDeck(int order) : deck_(order), next_(order) {
    std::iota(deck_.begin(), deck_.end(), 0);
  }

  template <class Rng>
  int operator()(Rng& rng) {
    if (next_ == deck_.size()) {
      std::shuffle(deck_.begin(), deck_.end(), rng);
      next_ = 0;
    }
    return deck_[next_++];
  }

 private:
  std::vector<int> deck_;
  size_t next_;
};

// Nearest-point detector: returns the index of the closest point to y among
// amp * points.
int DetectNearest(std::complex<double> y, double amp,
                  const std::vector<std::complex<double>>& points) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < points.size(); ++k) {
    const double d = std::norm(y - amp * points[k]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(k);
    }
  }
  return best;
}

// Runs `block(rng, tally)` n_blocks times across fixed-size chunks and merges
// chunk tallies in chunk order.
template <class BlockFn>
Tally RunChunks(const SimConfig& cfg, int order, const BlockFn& block) {
  const std::uint64_t n_chunks =
      (cfg.n_blocks + kBlocksPerChunk - 1) / kBlocksPerChunk;
  std::vector<Tally> tallies(n_chunks);
  auto run_chunk = [&](std::uint64_t k) {
    std::mt19937_64 rng(SplitMix64(cfg.master_seed ^ SplitMix64(k + 1)));
    const std::uint64_t begin = k * kBlocksPerChunk;
    const std::uint64_t end = std::min(cfg.n_blocks, begin + kBlocksPerChunk);
    Tally& t = tallies[k];
    SymbolDeck deck(order);
    for (std::uint64_t b = begin; b < end; ++b) block(rng, deck, t);
  };

  const std::uint64_t n_threads = std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(cfg.worker_count, 1)), 1, n_chunks);
  if (n_threads <= 1) {
    for (std::uint64_t k = 0; k < n_chunks; ++k) run_chunk(k);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (std::uint64_t t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t k = next++; k < n_chunks; k = next++) run_chunk(k);
      });
    }
  }

  Tally total;
  for (const Tally& t : tallies) {
    total.harvest.Merge(t.harvest);
    total.success.Merge(t.success);
    total.rx.Merge(t.rx);
  }
  return total;
}

void CheckConfig(const SimConfig& cfg) {
  Require(cfg.n_blocks >= 1, "n_blocks must be >= 1");
  Require(cfg.symbols_per_block >= 1, "symbols_per_block must be >= 1");
  Require(cfg.fading_tilt_mean >= 1.0 && std::isfinite(cfg.fading_tilt_mean),
          "fading_tilt_mean must be finite and >= 1");
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<std::complex<double>> ConstellationPoints(const Constellation& c) {
  const int m = c.order();
  std::vector<std::complex<double>> pts;
  pts.reserve(m);
  switch (c.scheme()) {
    case Scheme::kPsk:
      for (int k = 0; k < m; ++k) {
        pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / m));
      }
      break;
    case Scheme::kPam: {
      const double s = std::sqrt(3.0 / (static_cast<double>(m) * m - 1.0));
      for (int k = 0; k < m; ++k) pts.emplace_back((2 * k - m + 1) * s, 0.0);
      break;
    }
    case Scheme::kQam: {
      const int side = static_cast<int>(std::lround(std::sqrt(m)));
      const double s = std::sqrt(3.0 / (2.0 * (m - 1.0)));
      for (int a = 0; a < side; ++a) {
        for (int b = 0; b < side; ++b) {
          pts.emplace_back((2 * a - side + 1) * s, (2 * b - side + 1) * s);
        }
      }
      break;
    }
  }

  std::vector<double> geo(m);
  std::transform(pts.begin(), pts.end(), geo.begin(),
                 [](std::complex<double> x) { return std::norm(x); });
  std::vector<double> ref(c.normalized_powers().begin(),
                          c.normalized_powers().end());
  std::sort(geo.begin(), geo.end());
  std::sort(ref.begin(), ref.end());
  for (int i = 0; i < m; ++i) {
    if (std::abs(geo[i] - ref[i]) > 1e-12) {
      throw std::logic_error("constellation geometry disagrees with its "
                             "per-symbol power table");
    }
  }
  return pts;
}

SimResult SimulatePs(const ValidatedParams& params, const Constellation& c,
                     double rho_ps, double p_tx, const SimConfig& cfg) {
  CheckConfig(cfg);
  Require(rho_ps >= 0.0 && rho_ps <= 1.0, "rho_ps must lie in [0, 1]");
  Require(p_tx >= 0.0, "p_tx must be non-negative");

  const auto points = ConstellationPoints(c);
  const double atten = params.attenuation();
  const double eta = params->eh_efficiency;
  const double p_th = params->eh_sensitivity;
  const double noise_sd = std::sqrt(params->noise_power / 2.0);
  const int n_sym = cfg.symbols_per_block;
  const double t_sym = params->block_time / n_sym;
  const int m = c.order();

  // With one symbol per block the fading can be drawn after the symbol, so
  // each symbol gets a tilt shifted by how far its own activation threshold
  // sits above the peak symbol's.
  const bool per_symbol = n_sym == 1 && cfg.fading_tilt_mean > 1.0;
  std::vector<FadingDraw> draws;
  if (per_symbol) {
    const double peak_rx = rho_ps * p_tx * c.papr();
    const double a_peak = peak_rx > 0.0 ? p_th * atten / peak_rx : 0.0;
    for (const auto& x : points) {
      const double shift = a_peak * (c.papr() / std::norm(x) - 1.0);
      draws.emplace_back(params->fading_m,
                         std::clamp(cfg.fading_tilt_mean + shift, 1.0,
                                    kMaxTilt));
    }
  } else {
    draws.emplace_back(params->fading_m, cfg.fading_tilt_mean);
  }

  auto block = [&](std::mt19937_64& rng, SymbolDeck& pick, Tally& t) {
    std::normal_distribution<double> noise(0.0, noise_sd);
    const int first = pick(rng);
    const auto [v, w] = draws[per_symbol ? first : 0](rng);
    const double amp = std::sqrt((1.0 - rho_ps) * p_tx * v / atten);
    double energy = 0.0;
    double rx = 0.0;
    int correct = 0;
    for (int s = 0; s < n_sym; ++s) {
      const int i = s == 0 ? first : pick(rng);
      const double p_rx = rho_ps * p_tx * std::norm(points[i]) * v / atten;
      rx += p_rx;
      energy += HarvestedEnergy(p_rx, t_sym, eta, p_th);
      const double re = noise(rng);
      const double im = noise(rng);
      const std::complex<double> y = amp * points[i] + std::complex(re, im);
      correct += DetectNearest(y, amp, points) == i;
    }
    t.harvest.Add(w * energy / params->block_time);
    t.rx.Add(w * rx / n_sym);
    t.success.Add(w * static_cast<double>(correct) / n_sym);
  };

  const Tally tally = RunChunks(cfg, m, block);
  const double n = static_cast<double>(cfg.n_blocks);
  SimResult r;
  r.n_blocks = cfg.n_blocks;
  r.n_symbols = cfg.n_blocks * static_cast<std::uint64_t>(n_sym);
  r.q_hat = tally.harvest.Mean(n);
  r.q_std_error = tally.harvest.StdError(n);
  r.ssr_hat = tally.success.Mean(n);
  r.ssr_std_error = tally.success.StdError(n);
  r.aser_hat = 1.0 - r.ssr_hat;
  r.aser_std_error = r.ssr_std_error;
  r.p_rx_hat = tally.rx.Mean(n);
  return r;
}

SimResult SimulateTs(const ValidatedParams& params, double rho_ts, double p_eh,
                     double p_info, const Constellation& c,
                     const EnergySignal& energy_signal, const SimConfig& cfg) {
  CheckConfig(cfg);
  Require(rho_ts >= 0.0 && rho_ts <= 1.0, "rho_ts must lie in [0, 1]");
  Require(p_info >= 0.0, "p_info must be non-negative");
  double total_fraction = 0.0;
  for (const auto& l : energy_signal.levels) {
    Require(l.time_fraction >= 0.0, "energy signal fractions must be >= 0");
    Require(l.power >= 0.0 && l.power <= params->p_peak * (1.0 + 1e-12),
            "energy signal levels must lie in [0, p_peak]");
    total_fraction += l.time_fraction;
  }
  Require(std::abs(total_fraction - 1.0) <= 1e-9,
          "energy signal fractions must sum to 1");
  Require(std::abs(energy_signal.AveragePower() - p_eh) <=
              1e-9 * std::max(p_eh, params->p_peak),
          "energy signal average power must equal p_eh");

  const auto points = ConstellationPoints(c);
  const FadingDraw draw(params->fading_m, cfg.fading_tilt_mean);
  const double atten = params.attenuation();
  const double eta = params->eh_efficiency;
  const double p_th = params->eh_sensitivity;
  const double noise_sd = std::sqrt(params->noise_power / 2.0);
  const int n_sym = cfg.symbols_per_block;
  const double pt_time = rho_ts * params->block_time;
  const int m = c.order();

  auto block = [&](std::mt19937_64& rng, SymbolDeck& pick, Tally& t) {
    std::normal_distribution<double> noise(0.0, noise_sd);
    const auto [v, w] = draw(rng);
    double energy = 0.0;
    double rx = 0.0;
    for (const auto& l : energy_signal.levels) {
      const double p_rx = l.power * v / atten;
      energy += HarvestedEnergy(p_rx, l.time_fraction * pt_time, eta, p_th);
      rx += rho_ts * l.time_fraction * p_rx;
    }
    const double amp = std::sqrt(p_info * v / atten);
    int correct = 0;
    for (int s = 0; s < n_sym; ++s) {
      const int i = pick(rng);
      const double re = noise(rng);
      const double im = noise(rng);
      const std::complex<double> y = amp * points[i] + std::complex(re, im);
      correct += DetectNearest(y, amp, points) == i;
    }
    t.harvest.Add(w * energy / params->block_time);
    t.rx.Add(w * rx);
    t.success.Add(w * static_cast<double>(correct) / n_sym);
  };

  const Tally tally = RunChunks(cfg, m, block);
  const double n = static_cast<double>(cfg.n_blocks);
  SimResult r;
  r.n_blocks = cfg.n_blocks;
  r.n_symbols = cfg.n_blocks * static_cast<std::uint64_t>(n_sym);
  r.q_hat = tally.harvest.Mean(n);
  r.q_std_error = tally.harvest.StdError(n);
  const double it_success = tally.success.Mean(n);
  r.aser_hat = 1.0 - it_success;
  r.aser_std_error = tally.success.StdError(n);
  r.ssr_hat = (1.0 - rho_ts) * it_success;
  r.ssr_std_error = (1.0 - rho_ts) * r.aser_std_error;
  r.p_rx_hat = tally.rx.Mean(n);
  return r;
}

double SuggestedTiltPs(const ValidatedParams& params, const Constellation& c,
                       double rho_ps, double p_tx) {
  const double peak_rx = rho_ps * p_tx * c.papr();
  if (peak_rx <= 0.0) return 1.0;
  const double threshold =
      params->eh_sensitivity * params.attenuation() / peak_rx;
  return std::clamp(threshold + 2.0 / params->fading_m, 1.0, kMaxTilt);
}

double SuggestedTiltTs(const ValidatedParams& params,
                       const EnergySignal& energy_signal) {
  double top = 0.0;
  for (const auto& l : energy_signal.levels) {
    if (l.time_fraction > 0.0) top = std::max(top, l.power);
  }
  if (top <= 0.0) return 1.0;
  return std::clamp(params->eh_sensitivity * params.attenuation() / top, 1.0,
                    kMaxTilt);
}

}  // namespace swipt
