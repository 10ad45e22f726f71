/*
 * Copyright 2026 The sdcsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the SDC constellation simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns an sdc_status;
 * on failure, sdc_last_error() describes the problem for the calling thread
 * (for config validation: one "section.key: message" line per issue).
 */
#ifndef SDCSIM_SDCSIM_H
#define SDCSIM_SDCSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef SDCSIM_BUILDING
#    define SDCSIM_API __declspec(dllexport)
#  else
#    define SDCSIM_API __declspec(dllimport)
#  endif
#else
#  define SDCSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdc_status {
  SDC_OK = 0,
  SDC_ERR_INVALID_ARGUMENT = 1,
  SDC_ERR_IO = 2,
  SDC_ERR_PARSE = 3,
  SDC_ERR_VALIDATION = 4,
  SDC_ERR_INFEASIBLE = 5,
  SDC_ERR_EMPTY = 6,
  SDC_ERR_INTERNAL = 7
} sdc_status;

typedef enum sdc_binding {
  SDC_BINDING_THERMAL = 0,
  SDC_BINDING_POWER = 1,
  SDC_BINDING_INFEASIBLE = 2
} sdc_binding;

typedef struct sdc_scenario sdc_scenario;
typedef struct sdc_metrics sdc_metrics;
typedef struct sdc_run_result sdc_run_result;

typedef struct sdc_metrics_row {
  double p_budget;
  double e1_max;
  double e2;
  double x_max_bits;
  double per_gs_rate_bitcom;
  double per_gs_rate_semcom;
  double gs_power_bitcom;
  double gs_power_semcom;
  double delivered_fraction;
  double final_backlog_bits;
  sdc_binding binding;
} sdc_metrics_row;

typedef struct sdc_run_summary {
  size_t slot_count;
  int64_t offered_bits;
  int64_t initial_backlog_bits;
  int64_t delivered_bits;
  int64_t final_backlog_bits;
  double delivered_fraction;
  double mean_slant_range_km; /* negative when nothing was scheduled */
} sdc_run_summary;

typedef struct sdc_codec_info {
  char name[64];
  int64_t bits_per_item;
  int64_t raw_bits_per_item;
  int64_t fixed_overhead_bits;
  double task_accuracy;
  double encoder_energy_per_item_j;
  double ratio;
  double reduction;
} sdc_codec_info;

SDCSIM_API const char* sdc_version(void);
SDCSIM_API const char* sdc_status_name(sdc_status status);
SDCSIM_API const char* sdc_last_error(void);

/* Scenario */
SDCSIM_API sdc_status sdc_scenario_load(const char* path, sdc_scenario** out);
SDCSIM_API sdc_status sdc_scenario_default(sdc_scenario** out);
SDCSIM_API void sdc_scenario_destroy(sdc_scenario* scenario);
SDCSIM_API sdc_status sdc_scenario_set_seed(sdc_scenario* scenario, uint64_t seed);
SDCSIM_API sdc_status sdc_scenario_get_seed(const sdc_scenario* scenario, uint64_t* out);
SDCSIM_API sdc_status sdc_scenario_set_budgets(sdc_scenario* scenario, const double* budgets_w,
                                               size_t count);
/* Replaces 'auto' calibration with a fixed energy per raw-equivalent bit. */
SDCSIM_API sdc_status sdc_scenario_set_energy_per_bit(sdc_scenario* scenario, double joules);
SDCSIM_API sdc_status sdc_scenario_set_encoder_energy_scale(sdc_scenario* scenario, double scale);

/* Energy per bit that puts the uncompressed per-GS rate at ref_bps when P = cross_w. */
SDCSIM_API sdc_status sdc_calibrate(const sdc_scenario* scenario, double cross_w, double ref_bps,
                                    double* out_joules_per_bit);

/* Sweep */
SDCSIM_API sdc_status sdc_sweep(const sdc_scenario* scenario, sdc_metrics** out);
SDCSIM_API size_t sdc_metrics_count(const sdc_metrics* metrics);
SDCSIM_API sdc_status sdc_metrics_get(const sdc_metrics* metrics, size_t index,
                                      sdc_metrics_row* out);
SDCSIM_API sdc_status sdc_metrics_write_csv(const sdc_metrics* metrics, const char* path);
SDCSIM_API void sdc_metrics_destroy(sdc_metrics* metrics);

/* Single budget with full scheduler detail */
SDCSIM_API sdc_status sdc_run(const sdc_scenario* scenario, double budget_w, sdc_run_result** out);
SDCSIM_API sdc_status sdc_run_get_summary(const sdc_run_result* run, sdc_run_summary* out);
SDCSIM_API sdc_status sdc_run_get_metrics(const sdc_run_result* run, sdc_metrics_row* out);
SDCSIM_API sdc_status sdc_run_write_report(const sdc_run_result* run, const char* path);
SDCSIM_API sdc_status sdc_run_write_slot_dump(const sdc_run_result* run, const char* path);
SDCSIM_API void sdc_run_destroy(sdc_run_result* run);

/* Codec profiles */
SDCSIM_API sdc_status sdc_codec_builtin(const char* name, sdc_codec_info* out);
SDCSIM_API sdc_status sdc_codec_load(const char* path, sdc_codec_info* out);

#ifdef __cplusplus
}
#endif

#endif /* SDCSIM_SDCSIM_H */
