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

/*
 * swipt-link C API.
 *
 * Every function returns a swipt_status. On failure the thread-local message
 * from swipt_last_error() explains what went wrong; output arguments are left
 * untouched. Handles are opaque and owned by the caller, who releases them
 * with the matching *_destroy function. Strings returned through char** are
 * released with swipt_string_free.
 *
 * Powers are in watts, times in seconds, distances in meters.
 */
#ifndef SWIPT_SWIPT_H_
#define SWIPT_SWIPT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SWIPT_BUILDING_LIBRARY)
#define SWIPT_API __declspec(dllexport)
#else
#define SWIPT_API __declspec(dllimport)
#endif
#else
#define SWIPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swipt_status {
  SWIPT_OK = 0,
  SWIPT_E_INVALID_ARGUMENT = 1,
  SWIPT_E_INVALID_PARAMS = 2,
  SWIPT_E_INFEASIBLE = 3,
  SWIPT_E_PEAK_VIOLATION = 4,
  SWIPT_E_CONFIG = 5,
  SWIPT_E_IO = 6,
  SWIPT_E_INTERNAL = 7
} swipt_status;

typedef enum swipt_modulation {
  SWIPT_PSK = 0,
  SWIPT_PAM = 1,
  SWIPT_QAM = 2
} swipt_modulation;

typedef enum swipt_receiver { SWIPT_RX_PS = 0, SWIPT_RX_TS = 1 } swipt_receiver;

typedef enum swipt_format { SWIPT_FORMAT_CSV = 0, SWIPT_FORMAT_JSON = 1 } swipt_format;

typedef struct swipt_params_s* swipt_params;
typedef struct swipt_constellation_s* swipt_constellation;
typedef struct swipt_table_s* swipt_table;

typedef struct swipt_harvest_report {
  double avg_harvested_power;
  double activation_prob;
} swipt_harvest_report;

typedef struct swipt_id_report {
  double aser;
  double ssr;
} swipt_id_report;

typedef struct swipt_ps_design {
  double rho_ps;
  double p_tx;
  double achieved_q;
  double achieved_ssr;
  double achieved_aser;
  int converged;
  int iterations;
  int peak_exceeded; /* papr * p_tx > p_peak */
} swipt_ps_design;

typedef struct swipt_ts_design {
  double rho_ts;
  double p_eh;
  double p_info;
  double achieved_q;
  double achieved_ssr;
  double achieved_aser;
  int peak_clamped;
  double avg_power_slack;
} swipt_ts_design;

typedef struct swipt_sim_config {
  uint64_t n_blocks;
  int symbols_per_block;
  uint64_t master_seed;
  int worker_count;
  /* <= 1 disables the defensive fading mixture; 0 selects it automatically. */
  double fading_tilt_mean;
} swipt_sim_config;

typedef struct swipt_sim_result {
  double q_hat;
  double q_std_error;
  double ssr_hat;
  double ssr_std_error;
  double aser_hat;
  double aser_std_error;
  double p_rx_hat;
  uint64_t n_blocks;
  uint64_t n_symbols;
} swipt_sim_result;

typedef struct swipt_tradeoff_point {
  double q0;
  double ssr_star;
  swipt_receiver receiver;
  swipt_modulation modulation;
  int order;
  int fading_m;
  double p_th;
  double rho;
  double p_tx;
  double p_eh;
  double p_info;
  int feasible;
} swipt_tradeoff_point;

/* ---- library ---------------------------------------------------------- */

SWIPT_API const char* swipt_version(void);
SWIPT_API const char* swipt_last_error(void);
SWIPT_API const char* swipt_status_name(swipt_status status);
SWIPT_API void swipt_string_free(char* text);

SWIPT_API double swipt_dbm_to_watts(double dbm);
SWIPT_API double swipt_watts_to_dbm(double watts);
/* "0.01", "1e-6", "1e-6W", "-30dBm". */
SWIPT_API swipt_status swipt_parse_power(const char* text, double* watts);

/* ---- link budget ------------------------------------------------------ */

SWIPT_API swipt_status swipt_params_create_default(swipt_params* out);
SWIPT_API swipt_status swipt_params_load(const char* path, swipt_params* out);
SWIPT_API swipt_status swipt_params_clone(swipt_params params, swipt_params* out);
SWIPT_API void swipt_params_destroy(swipt_params params);
/* Keys are field names or <power field>_dbm aliases. */
SWIPT_API swipt_status swipt_params_set(swipt_params params, const char* key,
                                        double value);
SWIPT_API swipt_status swipt_params_get(swipt_params params, const char* key,
                                        double* value);
SWIPT_API size_t swipt_params_field_count(void);
SWIPT_API const char* swipt_params_field_name(size_t index);
/* SWIPT_OK when every field invariant holds, else SWIPT_E_INVALID_PARAMS. */
SWIPT_API swipt_status swipt_params_validate(swipt_params params);
/* Writes a 16-hex-digit digest plus terminator into buf (>= 17 bytes). */
SWIPT_API swipt_status swipt_params_hash(swipt_params params, char* buf,
                                         size_t size);

/* ---- constellations --------------------------------------------------- */

SWIPT_API swipt_status swipt_constellation_create(swipt_modulation modulation,
                                                  int order,
                                                  swipt_constellation* out);
SWIPT_API void swipt_constellation_destroy(swipt_constellation c);
SWIPT_API int swipt_constellation_order(swipt_constellation c);
SWIPT_API double swipt_constellation_papr(swipt_constellation c);
SWIPT_API swipt_status swipt_constellation_power(swipt_constellation c,
                                                 int index, double* value);
SWIPT_API swipt_status swipt_ser_conditional(swipt_constellation c, double snr,
                                             double* ser);

/* ---- channel ---------------------------------------------------------- */

SWIPT_API swipt_status swipt_fading_pdf(int m, double v, double* out);
SWIPT_API swipt_status swipt_fading_upper_tail(int m, double a, double* out);
SWIPT_API swipt_status swipt_fading_upper_partial_mean(int m, double a,
                                                       double* out);

/* ---- energy harvesting ------------------------------------------------ */

SWIPT_API swipt_status swipt_harvest_ps(swipt_params params,
                                        swipt_constellation c, double rho_ps,
                                        double p_tx, swipt_harvest_report* out);
SWIPT_API swipt_status swipt_harvest_ts(swipt_params params, double rho_ts,
                                        double p_eh, swipt_harvest_report* out);
SWIPT_API swipt_status swipt_jensen_lower_bound(swipt_params params,
                                                swipt_constellation c,
                                                double rho_ps, double p_tx,
                                                double* out);
SWIPT_API swipt_status swipt_psi(swipt_params params, double* out);

/* ---- information decoding -------------------------------------------- */

SWIPT_API double swipt_gaussian_tail(double x);
SWIPT_API swipt_status swipt_aser(swipt_params params, swipt_constellation c,
                                  double effective_power, double* out);
SWIPT_API swipt_status swipt_ssr_ps(swipt_params params, swipt_constellation c,
                                    double rho_ps, double p_tx,
                                    swipt_id_report* out);
SWIPT_API swipt_status swipt_ssr_ts(swipt_params params, swipt_constellation c,
                                    double rho_ts, double p_info,
                                    swipt_id_report* out);

/* ---- optimization ----------------------------------------------------- */

SWIPT_API swipt_status swipt_q_max(swipt_params params, swipt_constellation c,
                                   swipt_receiver receiver, double* out);
/* On SWIPT_E_INFEASIBLE, *feasible_max (if non-null) receives q_max. */
SWIPT_API swipt_status swipt_optimize_ps(swipt_params params,
                                         swipt_constellation c, double q0,
                                         swipt_ps_design* out,
                                         double* feasible_max);
SWIPT_API swipt_status swipt_optimize_ts(swipt_params params,
                                         swipt_constellation c, double q0,
                                         swipt_ts_design* out,
                                         double* feasible_max);
SWIPT_API swipt_status swipt_rho_star_psk_rayleigh(swipt_params params,
                                                   double q0, double* out);
SWIPT_API swipt_status swipt_lambert_w0(double x, double* out);

/* ---- Monte Carlo ------------------------------------------------------ */

SWIPT_API void swipt_sim_config_default(swipt_sim_config* cfg);
SWIPT_API swipt_status swipt_simulate_ps(swipt_params params,
                                         swipt_constellation c, double rho_ps,
                                         double p_tx,
                                         const swipt_sim_config* cfg,
                                         swipt_sim_result* out);
/* Uses the on-off peak-power energy signal with average power p_eh. */
SWIPT_API swipt_status swipt_simulate_ts(swipt_params params,
                                         swipt_constellation c, double rho_ts,
                                         double p_eh, double p_info,
                                         const swipt_sim_config* cfg,
                                         swipt_sim_result* out);

/* ---- tradeoff tables -------------------------------------------------- */

SWIPT_API swipt_status swipt_table_create(swipt_table* out);
SWIPT_API void swipt_table_destroy(swipt_table table);
/* Appends one curve on a uniform q0 grid of n_points over [0, q_max]. */
SWIPT_API swipt_status swipt_table_add_curve(swipt_table table,
                                             swipt_params params,
                                             swipt_modulation modulation,
                                             int order, swipt_receiver receiver,
                                             int n_points, int workers);
/* Appends every curve of a named recipe (fig1..fig4) built from params. */
SWIPT_API swipt_status swipt_table_add_recipe(swipt_table table,
                                              const char* recipe,
                                              swipt_params params,
                                              int n_points, int workers);
SWIPT_API size_t swipt_table_size(swipt_table table);
SWIPT_API swipt_status swipt_table_get(swipt_table table, size_t index,
                                       swipt_tradeoff_point* out);
SWIPT_API swipt_status swipt_table_render(swipt_table table,
                                          swipt_format format,
                                          const char* command,
                                          const char* config_hash,
                                          uint64_t seed, char** out);

/* ---- validation ------------------------------------------------------- */

/* suite: harvest, decode, optimize or all. scale multiplies Monte Carlo
 * sizes. *passed is 1 when every check passed. */
SWIPT_API swipt_status swipt_validate(swipt_params params, const char* suite,
                                      uint64_t seed, int workers, double scale,
                                      const char* command, char** report,
                                      int* passed);

#ifdef __cplusplus
}
#endif

#endif /* SWIPT_SWIPT_H_ */
