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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdcsim/geometry.hpp"
#include "sdcsim/link_budget.hpp"
#include "sdcsim/power_thermal.hpp"
#include "sdcsim/traffic_codec.hpp"

namespace sdcsim {

struct TimeGrid {
  double horizon_s = 10.0;
  double slot_s = 1.0;

  int slot_count() const;
};

struct FleetConfig {
  int n_gs = 30;
  int n_relays = 24;
  int walker_planes = 4;
  int walker_phasing = 1;
  double relay_altitude_km = 500.0;
  double relay_inclination_deg = 53.0;
  geometry::OrbitalElements sdc{500.0, 53.0, 45.0, 0.0};
  double gs_lat_limit_deg = 60.0;
  int gs_channels = 2;
  double elevation_mask_deg = 10.0;
};

enum class ScheduledCodec { kBitcom, kSemcom };

/// One experiment. `power.p_budget_w` is overwritten per sweep point.
struct ScenarioConfig {
  TimeGrid time;
  FleetConfig fleet;
  std::uint64_t seed = 42;

  power::SdcPowerProfile power;
  bool energy_per_bit_auto = true;  // calibrate from the crossover anchor below
  double calibration_cross_w = 50e6;
  double calibration_ref_bps = 1e11;

  link::RfChannelSpec rf;
  double channel_capacity_bps = 1e11;
  double fallback_range_km = 1000.0;
  link::IslSpec isl;

  std::string bitcom_source = "builtin:bitcom-cifar10";
  std::string semcom_source = "builtin:semcom-cifar10-256";
  codec::CodecProfile bitcom = codec::bitcom_cifar10();
  codec::CodecProfile semcom = codec::semcom_cifar10_256();
  double encoder_energy_scale = 1.0;
  ScheduledCodec scheduled = ScheduledCodec::kSemcom;

  std::vector<double> sweep_budgets_w;

  int sdc_id() const { return fleet.n_relays; }
  int satellite_count() const { return fleet.n_relays + 1; }
};

/// One violated constraint, keyed by "section.key" (empty for file-level problems).
struct ConfigIssue {
  std::string key;
  std::string message;
};

struct ValidationResult {
  std::optional<ScenarioConfig> config;
  std::vector<ConfigIssue> issues;

  bool ok() const { return config.has_value(); }
  /// One "key: message" line per issue.
  std::string summary() const;
};

/// Built-in defaults with the 20-point sweep 5..100 MW.
ScenarioConfig default_scenario();

/// Checks every invariant of an assembled config.
std::vector<ConfigIssue> validate(const ScenarioConfig& config);

/// Parses INI text. Relative codec paths resolve against `base_dir`.
ValidationResult parse_scenario(std::string_view text, const std::filesystem::path& base_dir);
ValidationResult load_scenario(const std::filesystem::path& path);

}  // namespace sdcsim
