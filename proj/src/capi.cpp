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

#include <cstring>
#include <exception>
#include <filesystem>
#include <new>
#include <string>

#include "sdcsim/error.hpp"
#include "sdcsim/experiment.hpp"
#include "sdcsim/sdcsim.h"

struct sdc_scenario {
  sdcsim::ScenarioConfig config;
};

struct sdc_metrics {
  std::vector<sdcsim::MetricsRow> rows;
};

struct sdc_run_result {
  sdcsim::PointResult result;
};

namespace {

thread_local std::string g_last_error;

sdc_status fail(sdc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

sdc_status status_for(sdcsim::ErrorKind kind) {
  switch (kind) {
    case sdcsim::ErrorKind::kInvalidArgument:
      return SDC_ERR_INVALID_ARGUMENT;
    case sdcsim::ErrorKind::kIo:
      return SDC_ERR_IO;
    case sdcsim::ErrorKind::kParse:
      return SDC_ERR_PARSE;
    case sdcsim::ErrorKind::kValidation:
      return SDC_ERR_VALIDATION;
    case sdcsim::ErrorKind::kInfeasible:
      return SDC_ERR_INFEASIBLE;
    case sdcsim::ErrorKind::kEmpty:
      return SDC_ERR_EMPTY;
  }
  return SDC_ERR_INTERNAL;
}

// Runs `body` and maps any exception onto a status code.
template <typename F>
sdc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const sdcsim::Error& e) {
    return fail(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SDC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SDC_ERR_INTERNAL, e.what());
  }
}

sdc_binding to_c(sdcsim::power::BindingConstraint b) {
  switch (b) {
    case sdcsim::power::BindingConstraint::kThermal:
      return SDC_BINDING_THERMAL;
    case sdcsim::power::BindingConstraint::kPower:
      return SDC_BINDING_POWER;
    case sdcsim::power::BindingConstraint::kInfeasible:
      break;
  }
  return SDC_BINDING_INFEASIBLE;
}

sdc_metrics_row to_c(const sdcsim::MetricsRow& r) {
  return {r.p_budget,        r.e1_max,          r.e2,
          r.x_max_bits,      r.per_gs_rate_bitcom, r.per_gs_rate_semcom,
          r.gs_power_bitcom, r.gs_power_semcom, r.delivered_fraction,
          r.final_backlog_bits, to_c(r.binding_constraint)};
}

void to_c(const sdcsim::codec::CodecProfile& p, sdc_codec_info* out) {
  std::memset(out, 0, sizeof *out);
  std::strncpy(out->name, p.name.c_str(), sizeof out->name - 1);
  out->bits_per_item = p.bits_per_item;
  out->raw_bits_per_item = p.raw_bits_per_item;
  out->fixed_overhead_bits = p.fixed_overhead_bits;
  out->task_accuracy = p.task_accuracy;
  out->encoder_energy_per_item_j = p.encoder_energy_per_item_j;
  const auto stats = sdcsim::codec::compression_stats(p);
  out->ratio = stats.ratio;
  out->reduction = stats.reduction;
}

sdc_status null_argument() { return fail(SDC_ERR_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* sdc_version(void) { return "0.3.0"; }

const char* sdc_status_name(sdc_status status) {
  switch (status) {
    case SDC_OK:
      return "ok";
    case SDC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SDC_ERR_IO:
      return "i/o error";
    case SDC_ERR_PARSE:
      return "parse error";
    case SDC_ERR_VALIDATION:
      return "validation error";
    case SDC_ERR_INFEASIBLE:
      return "infeasible";
    case SDC_ERR_EMPTY:
      return "empty";
    case SDC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* sdc_last_error(void) { return g_last_error.c_str(); }

sdc_status sdc_scenario_load(const char* path, sdc_scenario** out) {
  if (path == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    if (!std::filesystem::is_regular_file(path)) {
      return fail(SDC_ERR_IO, std::string("cannot read config file ") + path);
    }
    sdcsim::ValidationResult result = sdcsim::load_scenario(path);
    if (!result.ok()) {
      bool malformed = false;
      for (const auto& issue : result.issues) malformed = malformed || issue.key.empty();
      return fail(malformed ? SDC_ERR_PARSE : SDC_ERR_VALIDATION, result.summary());
    }
    *out = new sdc_scenario{std::move(*result.config)};
    return SDC_OK;
  });
}

sdc_status sdc_scenario_default(sdc_scenario** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = new sdc_scenario{sdcsim::default_scenario()};
    return SDC_OK;
  });
}

void sdc_scenario_destroy(sdc_scenario* scenario) { delete scenario; }

sdc_status sdc_scenario_set_seed(sdc_scenario* scenario, uint64_t seed) {
  if (scenario == nullptr) return null_argument();
  scenario->config.seed = seed;
  return SDC_OK;
}

sdc_status sdc_scenario_get_seed(const sdc_scenario* scenario, uint64_t* out) {
  if (scenario == nullptr || out == nullptr) return null_argument();
  *out = scenario->config.seed;
  return SDC_OK;
}

sdc_status sdc_scenario_set_budgets(sdc_scenario* scenario, const double* budgets_w, size_t count) {
  if (scenario == nullptr || (budgets_w == nullptr && count > 0)) return null_argument();
  if (count == 0) return fail(SDC_ERR_EMPTY, "sweep needs at least one budget");
  for (size_t i = 0; i < count; ++i) {
    if (!(budgets_w[i] >= 0.0)) return fail(SDC_ERR_INVALID_ARGUMENT, "budgets must be >= 0");
  }
  scenario->config.sweep_budgets_w.assign(budgets_w, budgets_w + count);
  return SDC_OK;
}

sdc_status sdc_scenario_set_energy_per_bit(sdc_scenario* scenario, double joules) {
  if (scenario == nullptr) return null_argument();
  if (!(joules > 0.0)) return fail(SDC_ERR_INVALID_ARGUMENT, "energy per bit must be > 0");
  scenario->config.energy_per_bit_auto = false;
  scenario->config.power.energy_per_bit_j = joules;
  return SDC_OK;
}

sdc_status sdc_scenario_set_encoder_energy_scale(sdc_scenario* scenario, double scale) {
  if (scenario == nullptr) return null_argument();
  if (!(scale >= 0.0)) return fail(SDC_ERR_INVALID_ARGUMENT, "encoder energy scale must be >= 0");
  scenario->config.encoder_energy_scale = scale;
  return SDC_OK;
}

sdc_status sdc_calibrate(const sdc_scenario* scenario, double cross_w, double ref_bps,
                         double* out_joules_per_bit) {
  if (scenario == nullptr || out_joules_per_bit == nullptr) return null_argument();
  return guarded([&] {
    *out_joules_per_bit = sdcsim::calibrate(scenario->config, cross_w, ref_bps);
    return SDC_OK;
  });
}

sdc_status sdc_sweep(const sdc_scenario* scenario, sdc_metrics** out) {
  if (scenario == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = new sdc_metrics{sdcsim::sweep(scenario->config)};
    return SDC_OK;
  });
}

size_t sdc_metrics_count(const sdc_metrics* metrics) {
  return metrics == nullptr ? 0 : metrics->rows.size();
}

sdc_status sdc_metrics_get(const sdc_metrics* metrics, size_t index, sdc_metrics_row* out) {
  if (metrics == nullptr || out == nullptr) return null_argument();
  if (index >= metrics->rows.size()) return fail(SDC_ERR_INVALID_ARGUMENT, "row index out of range");
  *out = to_c(metrics->rows[index]);
  return SDC_OK;
}

sdc_status sdc_metrics_write_csv(const sdc_metrics* metrics, const char* path) {
  if (metrics == nullptr || path == nullptr) return null_argument();
  return guarded([&] {
    sdcsim::write_text_file(path, sdcsim::metrics_csv(metrics->rows));
    return SDC_OK;
  });
}

void sdc_metrics_destroy(sdc_metrics* metrics) { delete metrics; }

sdc_status sdc_run(const sdc_scenario* scenario, double budget_w, sdc_run_result** out) {
  if (scenario == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  if (!(budget_w >= 0.0)) return fail(SDC_ERR_INVALID_ARGUMENT, "budget must be >= 0");
  return guarded([&] {
    *out = new sdc_run_result{sdcsim::run_point(scenario->config, budget_w)};
    return SDC_OK;
  });
}

sdc_status sdc_run_get_summary(const sdc_run_result* run, sdc_run_summary* out) {
  if (run == nullptr || out == nullptr) return null_argument();
  const sdcsim::sched::RunReport& r = run->result.report;
  out->slot_count = r.slots.size();
  out->offered_bits = r.offered_bits;
  out->initial_backlog_bits = r.initial_backlog_bits;
  out->delivered_bits = r.delivered_bits;
  out->final_backlog_bits = r.final_backlog_bits();
  out->delivered_fraction = r.delivered_fraction;
  out->mean_slant_range_km = r.mean_slant_range_km.value_or(-1.0);
  return SDC_OK;
}

sdc_status sdc_run_get_metrics(const sdc_run_result* run, sdc_metrics_row* out) {
  if (run == nullptr || out == nullptr) return null_argument();
  *out = to_c(run->result.row);
  return SDC_OK;
}

sdc_status sdc_run_write_report(const sdc_run_result* run, const char* path) {
  if (run == nullptr || path == nullptr) return null_argument();
  return guarded([&] {
    sdcsim::write_text_file(path, sdcsim::slot_summary_csv(run->result.report));
    return SDC_OK;
  });
}

sdc_status sdc_run_write_slot_dump(const sdc_run_result* run, const char* path) {
  if (run == nullptr || path == nullptr) return null_argument();
  return guarded([&] {
    sdcsim::write_text_file(path, sdcsim::slot_dump_csv(run->result.report));
    return SDC_OK;
  });
}

void sdc_run_destroy(sdc_run_result* run) { delete run; }

sdc_status sdc_codec_builtin(const char* name, sdc_codec_info* out) {
  if (name == nullptr || out == nullptr) return null_argument();
  const auto p = sdcsim::codec::builtin_profile(name);
  if (!p) return fail(SDC_ERR_INVALID_ARGUMENT, std::string("unknown built-in codec ") + name);
  to_c(*p, out);
  return SDC_OK;
}

sdc_status sdc_codec_load(const char* path, sdc_codec_info* out) {
  if (path == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    to_c(sdcsim::codec::load_profile_json(path), out);
    return SDC_OK;
  });
}

}  // extern "C"
