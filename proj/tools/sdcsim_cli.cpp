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

// Command-line front end. Talks to the simulator only through sdcsim.h.

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sdcsim/sdcsim.h"

namespace {

struct ScenarioDeleter {
  void operator()(sdc_scenario* s) const { sdc_scenario_destroy(s); }
};
struct MetricsDeleter {
  void operator()(sdc_metrics* m) const { sdc_metrics_destroy(m); }
};
struct RunDeleter {
  void operator()(sdc_run_result* r) const { sdc_run_destroy(r); }
};
using ScenarioPtr = std::unique_ptr<sdc_scenario, ScenarioDeleter>;
using MetricsPtr = std::unique_ptr<sdc_metrics, MetricsDeleter>;
using RunPtr = std::unique_ptr<sdc_run_result, RunDeleter>;

int report(sdc_status status, const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), sdc_status_name(status));
  const std::string detail = sdc_last_error();
  if (!detail.empty()) std::fprintf(stderr, "%s%s", detail.c_str(), detail.back() == '\n' ? "" : "\n");
  return static_cast<int>(status);
}

const char* binding_name(sdc_binding b) {
  switch (b) {
    case SDC_BINDING_THERMAL:
      return "thermal";
    case SDC_BINDING_POWER:
      return "power";
    case SDC_BINDING_INFEASIBLE:
      return "infeasible";
  }
  return "?";
}

// Loads the config and applies --seed; returns nonzero exit code on failure.
int open_scenario(const std::string& path, const std::optional<std::uint64_t>& seed,
                  ScenarioPtr& out) {
  sdc_scenario* raw = nullptr;
  const sdc_status st = sdc_scenario_load(path.c_str(), &raw);
  if (st != SDC_OK) return report(st, path);
  out.reset(raw);
  if (seed) sdc_scenario_set_seed(out.get(), *seed);
  return 0;
}

void print_row(const sdc_metrics_row& r) {
  std::printf("%14.6g W  X_max %.4e b  bitcom %.4e b/s  semcom %.4e b/s  "
              "P_gs bitcom %.4e W  semcom %.4e W  delivered %.4f  [%s]\n",
              r.p_budget, r.x_max_bits, r.per_gs_rate_bitcom, r.per_gs_rate_semcom,
              r.gs_power_bitcom, r.gs_power_semcom, r.delivered_fraction, binding_name(r.binding));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space data center constellation simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sdc_version()));

  std::string config;
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config, "Scenario file (INI)")->required();
    sub->add_option("--seed", seed, "Override run.seed");
  };

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  add_common(validate);

  auto* sweep = app.add_subcommand("sweep", "Evaluate every budget in sweep.budgets_w");
  add_common(sweep);
  std::string out_csv;
  sweep->add_option("--out", out_csv, "Metrics CSV path")->required();

  auto* run = app.add_subcommand("run", "Run one budget with per-slot detail");
  add_common(run);
  double budget = 0.0;
  std::string report_csv, dump_csv;
  run->add_option("--budget", budget, "SDC power budget P in watts")->required();
  run->add_option("--report", report_csv, "Per-slot summary CSV path")->required();
  run->add_option("--dump-slots", dump_csv, "Per-slot allocation dump CSV path");

  auto* calibrate = app.add_subcommand("calibrate", "Energy per bit for a rate crossover");
  add_common(calibrate);
  double cross_mw = 50.0, ref_gbps = 100.0;
  calibrate->add_option("--cross-mw", cross_mw, "Crossover budget in MW")->capture_default_str();
  calibrate->add_option("--ref-gbps", ref_gbps, "Reference per-GS rate in Gb/s")->capture_default_str();

  auto* codec = app.add_subcommand("codec", "Inspect a codec profile");
  std::string profile;
  codec->add_option("profile", profile, "JSON path or builtin:<name>")->required();

  CLI11_PARSE(app, argc, argv);

  if (*codec) {
    sdc_codec_info info{};
    const std::string prefix = "builtin:";
    const sdc_status st = profile.rfind(prefix, 0) == 0
                              ? sdc_codec_builtin(profile.substr(prefix.size()).c_str(), &info)
                              : sdc_codec_load(profile.c_str(), &info);
    if (st != SDC_OK) return report(st, profile);
    std::printf("name                %s\n", info.name);
    std::printf("bits_per_item       %" PRId64 "\n", info.bits_per_item);
    std::printf("raw_bits_per_item   %" PRId64 "\n", info.raw_bits_per_item);
    std::printf("fixed_overhead_bits %" PRId64 "\n", info.fixed_overhead_bits);
    std::printf("task_accuracy       %.4f\n", info.task_accuracy);
    std::printf("encoder_energy_j    %.6g\n", info.encoder_energy_per_item_j);
    std::printf("ratio               %.9g\n", info.ratio);
    std::printf("reduction           %.9g\n", info.reduction);
    return 0;
  }

  ScenarioPtr scenario;
  if (const int rc = open_scenario(config, seed, scenario); rc != 0) return rc;

  if (*validate) {
    std::printf("%s: ok\n", config.c_str());
    return 0;
  }

  if (*calibrate) {
    double e_bit = 0.0;
    const sdc_status st = sdc_calibrate(scenario.get(), cross_mw * 1e6, ref_gbps * 1e9, &e_bit);
    if (st != SDC_OK) return report(st, "calibrate");
    std::printf("# per-GS uncompressed rate = %g Gb/s at P = %g MW\n", ref_gbps, cross_mw);
    std::printf("energy_per_bit_j = %.9g\n", e_bit);
    return 0;
  }

  if (*sweep) {
    sdc_metrics* raw = nullptr;
    sdc_status st = sdc_sweep(scenario.get(), &raw);
    if (st != SDC_OK) return report(st, "sweep");
    MetricsPtr metrics(raw);
    st = sdc_metrics_write_csv(metrics.get(), out_csv.c_str());
    if (st != SDC_OK) return report(st, out_csv);
    for (size_t i = 0; i < sdc_metrics_count(metrics.get()); ++i) {
      sdc_metrics_row row{};
      sdc_metrics_get(metrics.get(), i, &row);
      print_row(row);
    }
    std::printf("wrote %zu rows to %s\n", sdc_metrics_count(metrics.get()), out_csv.c_str());
    return 0;
  }

  if (*run) {
    sdc_run_result* raw = nullptr;
    sdc_status st = sdc_run(scenario.get(), budget, &raw);
    if (st != SDC_OK) return report(st, "run");
    RunPtr result(raw);
    st = sdc_run_write_report(result.get(), report_csv.c_str());
    if (st != SDC_OK) return report(st, report_csv);
    if (!dump_csv.empty()) {
      st = sdc_run_write_slot_dump(result.get(), dump_csv.c_str());
      if (st != SDC_OK) return report(st, dump_csv);
    }
    sdc_metrics_row row{};
    sdc_run_summary summary{};
    sdc_run_get_metrics(result.get(), &row);
    sdc_run_get_summary(result.get(), &summary);
    print_row(row);
    std::printf("slots %zu  offered %" PRId64 " b  delivered %" PRId64 " b  backlog %" PRId64
                " b  mean range %.1f km\n",
                summary.slot_count, summary.offered_bits, summary.delivered_bits,
                summary.final_backlog_bits, summary.mean_slant_range_km);
    return 0;
  }
  return 0;
}
