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

// swipt: command-line front end over the swipt C API.
//
//   swipt tradeoff --recipe fig1 --points 41 --out fig1.csv
//   swipt optimize --scheme ts --q0 1e-6
//   swipt simulate --scheme ps --mod psk --order 16 --rho 0.7 --blocks 1000000
//   swipt validate --suite all --seed 7
//
// Exit codes: 0 ok, 1 usage or library error, 2 infeasible request,
// 3 validation failure.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>
#include <algorithm>

#include <CLI11.hpp>
#include <json.hpp>

#include "swipt/swipt.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitValidation = 3;

struct Failure {
  swipt_status status;
  std::string message;
};

void Check(swipt_status s) {
  if (s != SWIPT_OK) throw Failure{s, swipt_last_error()};
}

struct ParamsDeleter {
  void operator()(swipt_params_s* p) const { swipt_params_destroy(p); }
};
struct ConstellationDeleter {
  void operator()(swipt_constellation_s* c) const {
    swipt_constellation_destroy(c);
  }
};
struct TableDeleter {
  void operator()(swipt_table_s* t) const { swipt_table_destroy(t); }
};
using ParamsPtr = std::unique_ptr<swipt_params_s, ParamsDeleter>;
using ConstellationPtr =
    std::unique_ptr<swipt_constellation_s, ConstellationDeleter>;
using TablePtr = std::unique_ptr<swipt_table_s, TableDeleter>;

struct CString {
  char* text = nullptr;
  ~CString() { swipt_string_free(text); }
};

struct Options {
  std::string config;
  std::string scheme = "ps";
  std::string mod = "qam";
  int order = 16;
  std::string q0 = "0";
  int points = 41;
  std::uint64_t seed = 20170521;
  std::string out;
  std::string format = "csv";
  std::string recipe;
  int workers = 1;
  std::string suite = "all";
  double scale = 1.0;
  std::uint64_t blocks = 1000000;
  double rho = -1.0;
};

std::string Upper(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::toupper(ch));
  return s;
}

// Config file, then SWIPT_<FIELD> environment overrides.
ParamsPtr LoadParams(const Options& opt) {
  swipt_params raw = nullptr;
  if (opt.config.empty()) {
    Check(swipt_params_create_default(&raw));
  } else {
    Check(swipt_params_load(opt.config.c_str(), &raw));
  }
  ParamsPtr params(raw);
  for (size_t i = 0; i < swipt_params_field_count(); ++i) {
    const std::string field = swipt_params_field_name(i);
    for (const std::string& key : {field, field + "_dbm"}) {
      const char* env = std::getenv(("SWIPT_" + Upper(key)).c_str());
      if (env == nullptr) continue;
      char* end = nullptr;
      const double value = std::strtod(env, &end);
      if (end == env || *end != '\0') {
        throw Failure{SWIPT_E_CONFIG, "SWIPT_" + Upper(key) + ": not a number"};
      }
      Check(swipt_params_set(params.get(), key.c_str(), value));
    }
  }
  Check(swipt_params_validate(params.get()));
  return params;
}

swipt_modulation ParseMod(const std::string& s) {
  if (s == "psk") return SWIPT_PSK;
  if (s == "pam") return SWIPT_PAM;
  return SWIPT_QAM;
}

swipt_receiver ParseRx(const std::string& s) {
  return s == "ts" ? SWIPT_RX_TS : SWIPT_RX_PS;
}

ConstellationPtr MakeConstellation(const Options& opt) {
  swipt_constellation c = nullptr;
  Check(swipt_constellation_create(ParseMod(opt.mod), opt.order, &c));
  return ConstellationPtr(c);
}

std::string Hash(swipt_params params) {
  char buf[32];
  Check(swipt_params_hash(params, buf, sizeof buf));
  return buf;
}

void Emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw Failure{SWIPT_E_IO, "cannot open " + opt.out};
  file << text;
  if (!file) throw Failure{SWIPT_E_IO, "write failed: " + opt.out};
}

// Key/value report with the same header block as the table emitters.
class Report {
 public:
  Report(std::string command, std::string hash, std::uint64_t seed)
      : command_(std::move(command)), hash_(std::move(hash)), seed_(seed) {}

  void Add(const std::string& key, nlohmann::json value) {
    values_[key] = std::move(value);
    order_.push_back(key);
  }

  std::string Render(const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json doc;
      doc["toolkit"] = "swipt-link";
      doc["version"] = swipt_version();
      doc["command"] = command_;
      doc["config_hash"] = hash_;
      doc["seed"] = seed_;
      for (const auto& key : order_) doc["result"][key] = values_.at(key);
      return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "# toolkit: swipt-link " << swipt_version() << "\n# command: " << command_
       << "\n# config_hash: " << hash_ << "\n# seed: " << seed_
       << "\nkey,value\n";
    for (const auto& key : order_) {
      const auto& v = values_.at(key);
      if (v.is_string()) {
        os << key << ',' << v.get<std::string>() << '\n';
      } else if (!v.is_number_float()) {
        os << key << ',' << v.dump() << '\n';
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        os << key << ',' << buf << '\n';
      }
    }
    return os.str();
  }

 private:
  std::string command_;
  std::string hash_;
  std::uint64_t seed_;
  nlohmann::json values_ = nlohmann::json::object();
  std::vector<std::string> order_;
};

double ParseQ0(const Options& opt) {
  double q0 = 0.0;
  Check(swipt_parse_power(opt.q0.c_str(), &q0));
  return q0;
}

std::string DesignCommand(const Options& opt, const char* name) {
  return std::string("swipt ") + name + " --scheme " + opt.scheme +
         " --mod " + opt.mod + " --order " + std::to_string(opt.order);
}

int RunTradeoff(const Options& opt) {
  auto params = LoadParams(opt);
  swipt_table raw = nullptr;
  Check(swipt_table_create(&raw));
  TablePtr table(raw);
  std::string command = "swipt tradeoff";
  if (!opt.recipe.empty()) {
    Check(swipt_table_add_recipe(table.get(), opt.recipe.c_str(), params.get(),
                                 opt.points, opt.workers));
    command += " --recipe " + opt.recipe;
  } else {
    Check(swipt_table_add_curve(table.get(), params.get(), ParseMod(opt.mod),
                                opt.order, ParseRx(opt.scheme), opt.points,
                                opt.workers));
    command += " --scheme " + opt.scheme + " --mod " + opt.mod + " --order " +
               std::to_string(opt.order);
  }
  command += " --points " + std::to_string(opt.points);
  CString text;
  Check(swipt_table_render(
      table.get(), opt.format == "json" ? SWIPT_FORMAT_JSON : SWIPT_FORMAT_CSV,
      command.c_str(), Hash(params.get()).c_str(), opt.seed, &text.text));
  Emit(opt, text.text);
  return 0;
}

int ReportInfeasible(double q0, double q_max) {
  std::fprintf(stderr,
               "swipt: infeasible: q0 = %.6g W exceeds q_max = %.6g W\n", q0,
               q_max);
  return kExitInfeasible;
}

int RunOptimize(const Options& opt) {
  auto params = LoadParams(opt);
  auto c = MakeConstellation(opt);
  const double q0 = ParseQ0(opt);
  Report report(DesignCommand(opt, "optimize") + " --q0 " + opt.q0,
                Hash(params.get()), opt.seed);
  report.Add("receiver", opt.scheme);
  report.Add("q0_W", q0);
  double q_max = 0.0;
  if (opt.scheme == "ts") {
    swipt_ts_design d;
    const swipt_status s =
        swipt_optimize_ts(params.get(), c.get(), q0, &d, &q_max);
    if (s == SWIPT_E_INFEASIBLE) return ReportInfeasible(q0, q_max);
    Check(s);
    Check(swipt_q_max(params.get(), c.get(), SWIPT_RX_TS, &q_max));
    report.Add("q_max_W", q_max);
    report.Add("rho", d.rho_ts);
    report.Add("p_eh_W", d.p_eh);
    report.Add("p_info_W", d.p_info);
    report.Add("achieved_q_W", d.achieved_q);
    report.Add("achieved_ssr", d.achieved_ssr);
    report.Add("achieved_aser", d.achieved_aser);
    report.Add("peak_clamped", static_cast<bool>(d.peak_clamped));
    report.Add("avg_power_slack_W", d.avg_power_slack);
    report.Add("q_slack_W", d.achieved_q - q0);
  } else {
    swipt_ps_design d;
    const swipt_status s =
        swipt_optimize_ps(params.get(), c.get(), q0, &d, &q_max);
    if (s == SWIPT_E_INFEASIBLE) return ReportInfeasible(q0, q_max);
    Check(s);
    Check(swipt_q_max(params.get(), c.get(), SWIPT_RX_PS, &q_max));
    double p_ave = 0.0;
    Check(swipt_params_get(params.get(), "p_ave", &p_ave));
    report.Add("q_max_W", q_max);
    report.Add("rho", d.rho_ps);
    report.Add("p_tx_W", d.p_tx);
    report.Add("achieved_q_W", d.achieved_q);
    report.Add("achieved_ssr", d.achieved_ssr);
    report.Add("achieved_aser", d.achieved_aser);
    report.Add("converged", static_cast<bool>(d.converged));
    report.Add("iterations", d.iterations);
    report.Add("peak_exceeded", static_cast<bool>(d.peak_exceeded));
    report.Add("avg_power_slack_W", p_ave - d.p_tx);
    report.Add("q_slack_W", d.achieved_q - q0);
  }
  Emit(opt, report.Render(opt.format));
  return 0;
}

// Simulates either a fixed split (--rho) or the optimal design for --q0.
int RunSimulate(const Options& opt) {
  auto params = LoadParams(opt);
  auto c = MakeConstellation(opt);
  swipt_sim_config cfg;
  swipt_sim_config_default(&cfg);
  cfg.n_blocks = opt.blocks;
  cfg.master_seed = opt.seed;
  cfg.worker_count = opt.workers;

  std::string command = DesignCommand(opt, "simulate") + " --blocks " +
                        std::to_string(opt.blocks);
  double p_ave = 0.0, p_peak = 0.0;
  Check(swipt_params_get(params.get(), "p_ave", &p_ave));
  Check(swipt_params_get(params.get(), "p_peak", &p_peak));
  double rho = opt.rho, p_tx = p_ave, p_eh = 0.0, p_info = 0.0;
  if (rho < 0.0) {
    const double q0 = ParseQ0(opt);
    command += " --q0 " + opt.q0;
    double q_max = 0.0;
    if (opt.scheme == "ts") {
      swipt_ts_design d;
      const swipt_status s =
          swipt_optimize_ts(params.get(), c.get(), q0, &d, &q_max);
      if (s == SWIPT_E_INFEASIBLE) return ReportInfeasible(q0, q_max);
      Check(s);
      rho = d.rho_ts;
      p_eh = d.p_eh;
      p_info = d.p_info;
    } else {
      swipt_ps_design d;
      const swipt_status s =
          swipt_optimize_ps(params.get(), c.get(), q0, &d, &q_max);
      if (s == SWIPT_E_INFEASIBLE) return ReportInfeasible(q0, q_max);
      Check(s);
      rho = d.rho_ps;
      p_tx = d.p_tx;
    }
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", rho);
    command += std::string(" --rho ") + buf;
    if (opt.scheme == "ts") {
      // Full-power energy phase, remaining budget on information.
      const double papr = swipt_constellation_papr(c.get());
      p_eh = rho > 0.0 ? std::min(p_peak, p_ave / rho) : 0.0;
      p_info = rho < 1.0 ? std::min(p_peak / papr,
                                    (p_ave - rho * p_eh) / (1.0 - rho))
                         : 0.0;
    }
  }

  Report report(command, Hash(params.get()), opt.seed);
  report.Add("receiver", opt.scheme);
  report.Add("rho", rho);
  swipt_sim_result r;
  if (opt.scheme == "ts") {
    Check(swipt_simulate_ts(params.get(), c.get(), rho, p_eh, p_info, &cfg,
                            &r));
    swipt_harvest_report h;
    swipt_id_report id;
    Check(swipt_harvest_ts(params.get(), rho, p_eh, &h));
    Check(swipt_ssr_ts(params.get(), c.get(), rho, p_info, &id));
    report.Add("p_eh_W", p_eh);
    report.Add("p_info_W", p_info);
    report.Add("q_closed_form_W", h.avg_harvested_power);
    report.Add("ssr_closed_form", id.ssr);
  } else {
    Check(swipt_simulate_ps(params.get(), c.get(), rho, p_tx, &cfg, &r));
    swipt_harvest_report h;
    swipt_id_report id;
    Check(swipt_harvest_ps(params.get(), c.get(), rho, p_tx, &h));
    Check(swipt_ssr_ps(params.get(), c.get(), rho, p_tx, &id));
    report.Add("p_tx_W", p_tx);
    report.Add("q_closed_form_W", h.avg_harvested_power);
    report.Add("ssr_closed_form", id.ssr);
  }
  report.Add("q_hat_W", r.q_hat);
  report.Add("q_std_error_W", r.q_std_error);
  report.Add("ssr_hat", r.ssr_hat);
  report.Add("ssr_std_error", r.ssr_std_error);
  report.Add("aser_hat", r.aser_hat);
  report.Add("aser_std_error", r.aser_std_error);
  report.Add("n_blocks", r.n_blocks);
  report.Add("n_symbols", r.n_symbols);
  Emit(opt, report.Render(opt.format));
  return 0;
}

int RunValidate(const Options& opt) {
  auto params = LoadParams(opt);
  const std::string command = "swipt validate --suite " + opt.suite;
  CString text;
  int passed = 0;
  Check(swipt_validate(params.get(), opt.suite.c_str(), opt.seed, opt.workers,
                       opt.scale, command.c_str(), &text.text, &passed));
  Emit(opt, text.text);
  return passed ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"SWIPT link tradeoff toolkit"};
  app.set_version_flag("--version", std::string(swipt_version()));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--config", opt.config, "YAML link-budget file")
      ->envname("SWIPT_CONFIG")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", opt.seed, "master seed")->envname("SWIPT_SEED");
  app.add_option("--out", opt.out, "output file (default stdout)")
      ->envname("SWIPT_OUT");
  app.add_option("--format", opt.format, "csv or json")
      ->envname("SWIPT_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", opt.workers, "worker threads")
      ->envname("SWIPT_WORKERS")
      ->check(CLI::Range(1, 256));

  auto add_design = [&](CLI::App* sub) {
    sub->add_option("--scheme", opt.scheme, "receiver: ps or ts")
        ->envname("SWIPT_SCHEME")
        ->check(CLI::IsMember({"ps", "ts"}));
    sub->add_option("--mod", opt.mod, "psk, pam or qam")
        ->envname("SWIPT_MOD")
        ->check(CLI::IsMember({"psk", "pam", "qam"}));
    sub->add_option("--order", opt.order, "constellation size M")
        ->envname("SWIPT_ORDER");
  };

  auto* tradeoff = app.add_subcommand("tradeoff", "SSR versus harvested power");
  add_design(tradeoff);
  tradeoff->add_option("--points", opt.points, "grid points per curve")
      ->envname("SWIPT_POINTS")
      ->check(CLI::Range(2, 1000000));
  tradeoff->add_option("--recipe", opt.recipe, "fig1, fig2, fig3 or fig4")
      ->envname("SWIPT_RECIPE")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));

  auto* optimize = app.add_subcommand("optimize", "single operating point");
  add_design(optimize);
  optimize->add_option("--q0", opt.q0, "harvested power target, W or dBm")
      ->envname("SWIPT_Q0");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo replay");
  add_design(simulate);
  simulate->add_option("--q0", opt.q0, "harvested power target, W or dBm")
      ->envname("SWIPT_Q0");
  simulate->add_option("--rho", opt.rho, "fixed split instead of --q0")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--blocks", opt.blocks, "fading blocks")
      ->envname("SWIPT_BLOCKS");

  auto* validate = app.add_subcommand("validate", "oracle suites");
  validate->add_option("--suite", opt.suite, "harvest, decode, optimize, all")
      ->envname("SWIPT_SUITE")
      ->check(CLI::IsMember({"harvest", "decode", "optimize", "all"}));
  validate->add_option("--scale", opt.scale, "Monte Carlo size multiplier")
      ->envname("SWIPT_SCALE")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tradeoff->parsed()) return RunTradeoff(opt);
    if (optimize->parsed()) return RunOptimize(opt);
    if (simulate->parsed()) return RunSimulate(opt);
    return RunValidate(opt);
  } catch (const Failure& f) {
    std::fprintf(stderr, "swipt: %s: %s\n", swipt_status_name(f.status),
                 f.message.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "swipt: %s\n", e.what());
  }
  return kExitError;
}
