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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sdcsim/scenario.hpp"
#include "sdcsim/scheduler.hpp"

namespace sdcsim {

/// One sweep point.
struct MetricsRow {
  double p_budget = 0.0;
  double e1_max = 0.0;
  double e2 = 0.0;
  double x_max_bits = 0.0;
  double per_gs_rate_bitcom = 0.0;
  double per_gs_rate_semcom = 0.0;
  double gs_power_bitcom = 0.0;
  double gs_power_semcom = 0.0;
  double delivered_fraction = 1.0;
  double final_backlog_bits = 0.0;
  power::BindingConstraint binding_constraint = power::BindingConstraint::kThermal;

  bool feasible() const { return binding_constraint != power::BindingConstraint::kInfeasible; }
};

inline constexpr std::string_view kMetricsCsvHeader =
    "p_budget,e1_max,e2,x_max_bits,per_gs_rate_bitcom,per_gs_rate_semcom,"
    "gs_power_bitcom,gs_power_semcom,delivered_fraction,final_backlog_bits,binding_constraint";

geometry::GeometryInputs geometry_inputs(const ScenarioConfig& config);
geometry::ContactTable build_contact_table(const ScenarioConfig& config);

/// Energy per bit used by sweeps: the configured constant, or the value
/// calibrated from the crossover anchor when the config says 'auto'.
double effective_energy_per_bit(const ScenarioConfig& config);

double calibrate(const ScenarioConfig& config, double cross_w, double ref_bps);

struct PointResult {
  MetricsRow row;
  sched::RunReport report;
};

/// Envelope, rate requirements, scheduled delivery and GS power at one budget.
PointResult run_point(const ScenarioConfig& config, const geometry::ContactTable& contacts,
                      double p_budget_w);
PointResult run_point(const ScenarioConfig& config, double p_budget_w);

/// Rows come back in the order of `config.sweep_budgets_w`.
std::vector<MetricsRow> sweep(const ScenarioConfig& config);

/// "%.9g" rendering shared by every CSV writer.
std::string format_number(double v);

/// Throws Error(kEmpty) for an empty row set.
std::string metrics_csv(const std::vector<MetricsRow>& rows);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// slot,offered_bits,delivered_bits,backlog_bits,channels,isl_flows
std::string slot_summary_csv(const sched::RunReport& report);
/// slot,kind,gs_id,channel,from,to,bits,range_km,hops  (kind = uplink|isl)
std::string slot_dump_csv(const sched::RunReport& report);

}  // namespace sdcsim
