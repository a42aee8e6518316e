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

#include "swipt/swipt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/config.hpp"
#include "swipt/decode.hpp"
#include "swipt/errors.hpp"
#include "swipt/harvest.hpp"
#include "swipt/modulation.hpp"
#include "swipt/montecarlo.hpp"
#include "swipt/optimize.hpp"
#include "swipt/params.hpp"
#include "swipt/sweep.hpp"
#include "swipt/validation.hpp"

struct swipt_params_s {
  swipt::SystemParams value;
};

struct swipt_constellation_s {
  swipt::Constellation value;
};

struct swipt_table_s {
  swipt::SweepTable value;
};

namespace {

thread_local std::string g_last_error;

swipt_status ToStatus(swipt::ErrorCode code) {
  switch (code) {
    case swipt::ErrorCode::kInvalidArgument: return SWIPT_E_INVALID_ARGUMENT;
    case swipt::ErrorCode::kInvalidParams: return SWIPT_E_INVALID_PARAMS;
    case swipt::ErrorCode::kInfeasible: return SWIPT_E_INFEASIBLE;
    case swipt::ErrorCode::kPeakViolation: return SWIPT_E_PEAK_VIOLATION;
    case swipt::ErrorCode::kConfig: return SWIPT_E_CONFIG;
    case swipt::ErrorCode::kIo: return SWIPT_E_IO;
  }
  return SWIPT_E_INTERNAL;
}

// Runs `fn`, translating exceptions into a status and the thread-local error.
template <class Fn>
swipt_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SWIPT_OK;
  } catch (const swipt::Error& e) {
    g_last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return SWIPT_E_INTERNAL;
}

void NotNull(const void* p, const char* what) {
  if (p == nullptr) {
    throw swipt::Error(swipt::ErrorCode::kInvalidArgument,
                       std::string(what) + " must not be null");
  }
}

swipt::Scheme ToScheme(swipt_modulation m) {
  switch (m) {
    case SWIPT_PSK: return swipt::Scheme::kPsk;
    case SWIPT_PAM: return swipt::Scheme::kPam;
    case SWIPT_QAM: return swipt::Scheme::kQam;
  }
  throw swipt::Error(swipt::ErrorCode::kInvalidArgument, "unknown modulation");
}

swipt_modulation FromScheme(swipt::Scheme s) {
  switch (s) {
    case swipt::Scheme::kPsk: return SWIPT_PSK;
    case swipt::Scheme::kPam: return SWIPT_PAM;
    case swipt::Scheme::kQam: return SWIPT_QAM;
  }
  return SWIPT_PSK;
}

swipt::Receiver ToReceiver(swipt_receiver r) {
  if (r == SWIPT_RX_PS) return swipt::Receiver::kPs;
  if (r == SWIPT_RX_TS) return swipt::Receiver::kTs;
  throw swipt::Error(swipt::ErrorCode::kInvalidArgument, "unknown receiver");
}

swipt::ValidatedParams Checked(swipt_params p) {
  NotNull(p, "params");
  return swipt::Validate(p->value);
}

const swipt::Constellation& Get(swipt_constellation c) {
  NotNull(c, "constellation");
  return c->value;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

swipt::SimConfig ToSimConfig(const swipt_sim_config* cfg) {
  NotNull(cfg, "sim config");
  swipt::SimConfig out;
  out.n_blocks = cfg->n_blocks;
  out.symbols_per_block = cfg->symbols_per_block;
  out.master_seed = cfg->master_seed;
  out.worker_count = cfg->worker_count;
  out.fading_tilt_mean = cfg->fading_tilt_mean < 1.0 ? 1.0 : cfg->fading_tilt_mean;
  return out;
}

void FromSimResult(const swipt::SimResult& r, swipt_sim_result* out) {
  out->q_hat = r.q_hat;
  out->q_std_error = r.q_std_error;
  out->ssr_hat = r.ssr_hat;
  out->ssr_std_error = r.ssr_std_error;
  out->aser_hat = r.aser_hat;
  out->aser_std_error = r.aser_std_error;
  out->p_rx_hat = r.p_rx_hat;
  out->n_blocks = r.n_blocks;
  out->n_symbols = r.n_symbols;
}

}  // namespace

extern "C" {

const char* swipt_version(void) { return SWIPT_VERSION_STRING; }

const char* swipt_last_error(void) { return g_last_error.c_str(); }

const char* swipt_status_name(swipt_status status) {
  switch (status) {
    case SWIPT_OK: return "ok";
    case SWIPT_E_INVALID_ARGUMENT: return "invalid argument";
    case SWIPT_E_INVALID_PARAMS: return "invalid parameters";
    case SWIPT_E_INFEASIBLE: return "infeasible";
    case SWIPT_E_PEAK_VIOLATION: return "peak power violation";
    case SWIPT_E_CONFIG: return "config error";
    case SWIPT_E_IO: return "i/o error";
    case SWIPT_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void swipt_string_free(char* text) { std::free(text); }

double swipt_dbm_to_watts(double dbm) { return swipt::DbmToWatts(dbm); }

double swipt_watts_to_dbm(double watts) { return swipt::WattsToDbm(watts); }

swipt_status swipt_parse_power(const char* text, double* watts) {
  return Guard([&] {
    NotNull(text, "text");
    NotNull(watts, "watts");
    *watts = swipt::ParsePower(text);
  });
}

swipt_status swipt_params_create_default(swipt_params* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new swipt_params_s{swipt::ReferenceParams()};
  });
}

swipt_status swipt_params_load(const char* path, swipt_params* out) {
  return Guard([&] {
    NotNull(path, "path");
    NotNull(out, "out");
    *out = new swipt_params_s{swipt::LoadConfigFile(path)};
  });
}

swipt_status swipt_params_clone(swipt_params params, swipt_params* out) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(out, "out");
    *out = new swipt_params_s{params->value};
  });
}

void swipt_params_destroy(swipt_params params) { delete params; }

swipt_status swipt_params_set(swipt_params params, const char* key,
                              double value) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(key, "key");
    swipt::SetField(params->value, key, value);
  });
}

swipt_status swipt_params_get(swipt_params params, const char* key,
                              double* value) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(key, "key");
    NotNull(value, "value");
    *value = swipt::GetField(params->value, key);
  });
}

size_t swipt_params_field_count(void) { return swipt::FieldNames().size(); }

const char* swipt_params_field_name(size_t index) {
  const auto& names = swipt::FieldNames();
  return index < names.size() ? names[index].c_str() : nullptr;
}

swipt_status swipt_params_validate(swipt_params params) {
  return Guard([&] { Checked(params); });
}

swipt_status swipt_params_hash(swipt_params params, char* buf, size_t size) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(buf, "buf");
    const std::string h = swipt::ConfigHash(params->value);
    if (size < h.size() + 1) {
      throw swipt::Error(swipt::ErrorCode::kInvalidArgument,
                         "hash buffer needs at least 17 bytes");
    }
    std::memcpy(buf, h.c_str(), h.size() + 1);
  });
}

swipt_status swipt_constellation_create(swipt_modulation modulation, int order,
                                        swipt_constellation* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new swipt_constellation_s{
        swipt::Constellation::Build(ToScheme(modulation), order)};
  });
}

void swipt_constellation_destroy(swipt_constellation c) { delete c; }

int swipt_constellation_order(swipt_constellation c) {
  return c ? c->value.order() : 0;
}

double swipt_constellation_papr(swipt_constellation c) {
  return c ? c->value.papr() : 0.0;
}

swipt_status swipt_constellation_power(swipt_constellation c, int index,
                                       double* value) {
  return Guard([&] {
    const auto& con = Get(c);
    NotNull(value, "value");
    swipt::Require(index >= 0 && index < con.order(),
                   "symbol index out of range");
    *value = con.normalized_powers()[index];
  });
}

swipt_status swipt_ser_conditional(swipt_constellation c, double snr,
                                   double* ser) {
  return Guard([&] {
    NotNull(ser, "ser");
    *ser = swipt::SerConditional(Get(c), snr);
  });
}

swipt_status swipt_fading_pdf(int m, double v, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::FadingModel(m).Pdf(v);
  });
}

swipt_status swipt_fading_upper_tail(int m, double a, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::FadingModel(m).UpperTail(a);
  });
}

swipt_status swipt_fading_upper_partial_mean(int m, double a, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::FadingModel(m).UpperPartialMean(a);
  });
}

swipt_status swipt_harvest_ps(swipt_params params, swipt_constellation c,
                              double rho_ps, double p_tx,
                              swipt_harvest_report* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto r = swipt::AvgPowerPs(Checked(params), Get(c), rho_ps, p_tx);
    *out = {r.avg_harvested_power, r.activation_prob};
  });
}

swipt_status swipt_harvest_ts(swipt_params params, double rho_ts, double p_eh,
                              swipt_harvest_report* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto r = swipt::AvgPowerTs(Checked(params), rho_ts, p_eh);
    *out = {r.avg_harvested_power, r.activation_prob};
  });
}

swipt_status swipt_jensen_lower_bound(swipt_params params,
                                      swipt_constellation c, double rho_ps,
                                      double p_tx, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::JensenLowerBound(Checked(params), Get(c), rho_ps, p_tx);
  });
}

swipt_status swipt_psi(swipt_params params, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::Psi(Checked(params));
  });
}

double swipt_gaussian_tail(double x) { return swipt::GaussianTail(x); }

swipt_status swipt_aser(swipt_params params, swipt_constellation c,
                        double effective_power, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::Aser(Checked(params), Get(c), effective_power);
  });
}

swipt_status swipt_ssr_ps(swipt_params params, swipt_constellation c,
                          double rho_ps, double p_tx, swipt_id_report* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto r = swipt::SsrPs(Checked(params), Get(c), rho_ps, p_tx);
    *out = {r.aser, r.ssr};
  });
}

swipt_status swipt_ssr_ts(swipt_params params, swipt_constellation c,
                          double rho_ts, double p_info, swipt_id_report* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto r = swipt::SsrTs(Checked(params), Get(c), rho_ts, p_info);
    *out = {r.aser, r.ssr};
  });
}

swipt_status swipt_q_max(swipt_params params, swipt_constellation c,
                         swipt_receiver receiver, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::QMax(Checked(params), Get(c), ToReceiver(receiver));
  });
}

swipt_status swipt_optimize_ps(swipt_params params, swipt_constellation c,
                               double q0, swipt_ps_design* out,
                               double* feasible_max) {
  return Guard([&] {
    NotNull(out, "out");
    try {
      const auto d = swipt::SolveP1(Checked(params), Get(c), q0);
      *out = {d.rho_ps,       d.p_tx,          d.achieved_q, d.achieved_ssr,
              d.achieved_aser, d.converged ? 1 : 0, d.iterations,
              d.peak_exceeded ? 1 : 0};
    } catch (const swipt::InfeasibleError& e) {
      if (feasible_max) *feasible_max = e.feasible_max();
      throw;
    }
  });
}

swipt_status swipt_optimize_ts(swipt_params params, swipt_constellation c,
                               double q0, swipt_ts_design* out,
                               double* feasible_max) {
  return Guard([&] {
    NotNull(out, "out");
    try {
      const auto d = swipt::SolveP2(Checked(params), Get(c), q0);
      *out = {d.rho_ts,        d.p_eh,
              d.p_info,        d.achieved_q,
              d.achieved_ssr,  d.achieved_aser,
              d.peak_clamped ? 1 : 0, d.avg_power_slack};
    } catch (const swipt::InfeasibleError& e) {
      if (feasible_max) *feasible_max = e.feasible_max();
      throw;
    }
  });
}

swipt_status swipt_rho_star_psk_rayleigh(swipt_params params, double q0,
                                         double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::RhoStarPskRayleigh(Checked(params), q0);
  });
}

swipt_status swipt_lambert_w0(double x, double* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = swipt::LambertW0(x);
  });
}

void swipt_sim_config_default(swipt_sim_config* cfg) {
  if (cfg == nullptr) return;
  const swipt::SimConfig d;
  cfg->n_blocks = d.n_blocks;
  cfg->symbols_per_block = d.symbols_per_block;
  cfg->master_seed = d.master_seed;
  cfg->worker_count = d.worker_count;
  cfg->fading_tilt_mean = 0.0;
}

swipt_status swipt_simulate_ps(swipt_params params, swipt_constellation c,
                               double rho_ps, double p_tx,
                               const swipt_sim_config* cfg,
                               swipt_sim_result* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto vp = Checked(params);
    auto sc = ToSimConfig(cfg);
    if (cfg->fading_tilt_mean == 0.0) {
      sc.fading_tilt_mean = swipt::SuggestedTiltPs(vp, Get(c), rho_ps, p_tx);
    }
    FromSimResult(swipt::SimulatePs(vp, Get(c), rho_ps, p_tx, sc), out);
  });
}

swipt_status swipt_simulate_ts(swipt_params params, swipt_constellation c,
                               double rho_ts, double p_eh, double p_info,
                               const swipt_sim_config* cfg,
                               swipt_sim_result* out) {
  return Guard([&] {
    NotNull(out, "out");
    const auto vp = Checked(params);
    const auto signal =
        swipt::OptimalEnergySignal(p_eh, vp->p_peak, vp->eh_sensitivity);
    auto sc = ToSimConfig(cfg);
    if (cfg->fading_tilt_mean == 0.0) {
      sc.fading_tilt_mean = swipt::SuggestedTiltTs(vp, signal);
    }
    FromSimResult(
        swipt::SimulateTs(vp, rho_ts, p_eh, p_info, Get(c), signal, sc), out);
  });
}

swipt_status swipt_table_create(swipt_table* out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new swipt_table_s{};
  });
}

void swipt_table_destroy(swipt_table table) { delete table; }

swipt_status swipt_table_add_curve(swipt_table table, swipt_params params,
                                   swipt_modulation modulation, int order,
                                   swipt_receiver receiver, int n_points,
                                   int workers) {
  return Guard([&] {
    NotNull(table, "table");
    NotNull(params, "params");
    const swipt::CurveSpec spec{params->value, ToScheme(modulation), order,
                                ToReceiver(receiver)};
    auto part = swipt::RunSweep({&spec, 1}, n_points, workers);
    auto& rows = table->value.rows;
    rows.insert(rows.end(), part.rows.begin(), part.rows.end());
  });
}

swipt_status swipt_table_add_recipe(swipt_table table, const char* recipe,
                                    swipt_params params, int n_points,
                                    int workers) {
  return Guard([&] {
    NotNull(table, "table");
    NotNull(recipe, "recipe");
    NotNull(params, "params");
    const auto specs = swipt::Recipe(recipe, params->value);
    auto part = swipt::RunSweep(specs, n_points, workers);
    auto& rows = table->value.rows;
    rows.insert(rows.end(), part.rows.begin(), part.rows.end());
  });
}

size_t swipt_table_size(swipt_table table) {
  return table ? table->value.rows.size() : 0;
}

swipt_status swipt_table_get(swipt_table table, size_t index,
                             swipt_tradeoff_point* out) {
  return Guard([&] {
    NotNull(table, "table");
    NotNull(out, "out");
    swipt::Require(index < table->value.rows.size(), "row index out of range");
    const auto& r = table->value.rows[index];
    out->q0 = r.q0;
    out->ssr_star = r.ssr_star;
    out->receiver = r.receiver == swipt::Receiver::kPs ? SWIPT_RX_PS
                                                       : SWIPT_RX_TS;
    out->modulation = FromScheme(r.scheme);
    out->order = r.order;
    out->fading_m = r.fading_m;
    out->p_th = r.p_th;
    out->rho = r.rho;
    out->p_tx = r.p_tx;
    out->p_eh = r.p_eh;
    out->p_info = r.p_info;
    out->feasible = r.feasible ? 1 : 0;
  });
}

swipt_status swipt_table_render(swipt_table table, swipt_format format,
                                const char* command, const char* config_hash,
                                uint64_t seed, char** out) {
  return Guard([&] {
    NotNull(table, "table");
    NotNull(out, "out");
    const swipt::OutputHeader header{command ? command : "",
                                     config_hash ? config_hash : "", seed};
    *out = CopyString(format == SWIPT_FORMAT_JSON
                          ? swipt::RenderJson(table->value, header)
                          : swipt::RenderCsv(table->value, header));
  });
}

swipt_status swipt_validate(swipt_params params, const char* suite,
                            uint64_t seed, int workers, double scale,
                            const char* command, char** report, int* passed) {
  return Guard([&] {
    NotNull(params, "params");
    NotNull(suite, "suite");
    NotNull(report, "report");
    NotNull(passed, "passed");
    swipt::ValidationOptions opt;
    opt.seed = seed;
    opt.workers = workers;
    opt.scale = scale;
    const auto r = swipt::RunValidation(params->value, suite, opt);
    const swipt::OutputHeader header{command ? command : "",
                                     swipt::ConfigHash(params->value), seed};
    *report = CopyString(r.Render(header));
    *passed = r.AllPassed() ? 1 : 0;
  });
}

}  // extern "C"
