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

#include "sdcsim/scenario.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "sdcsim/error.hpp"

namespace sdcsim {

namespace pt = boost::property_tree;

int TimeGrid::slot_count() const { return static_cast<int>(std::llround(horizon_s / slot_s)); }

std::string ValidationResult::summary() const {
  std::string out;
  for (const ConfigIssue& i : issues) {
    out += i.key.empty() ? i.message : i.key + ": " + i.message;
    out += '\n';
  }
  return out;
}

ScenarioConfig default_scenario() {
  ScenarioConfig c;
  c.power.service_duration_s = c.time.horizon_s;
  for (int i = 1; i <= 20; ++i) c.sweep_budgets_w.push_back(5e6 * i);
  return c;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
bool parse_number(const std::string& text, T& out) {
  const std::string t = trim(text);
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::vector<ConfigIssue>& issues) : tree_(tree), issues_(issues) {}

  template <typename T>
  void number(const std::string& key, T& out) {
    known_.insert(key);
    const auto text = tree_.get_optional<std::string>(key);
    if (!text) return;
    if (!parse_number(*text, out)) issues_.push_back({key, "not a valid number: '" + *text + "'"});
  }

  bool text(const std::string& key, std::string& out) {
    known_.insert(key);
    const auto v = tree_.get_optional<std::string>(key);
    if (!v) return false;
    out = trim(*v);
    return true;
  }

  void number_list(const std::string& key, std::vector<double>& out) {
    std::string raw;
    if (!text(key, raw)) return;
    out.clear();
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      double v = 0.0;
      if (!parse_number(item, v)) {
        issues_.push_back({key, "not a valid number: '" + trim(item) + "'"});
        continue;
      }
      out.push_back(v);
    }
  }

  void report_unknown() {
    for (const auto& [section, body] : tree_) {
      if (body.empty()) {
        issues_.push_back({section, "key outside any section"});
        continue;
      }
      for (const auto& [name, value] : body) {
        const std::string key = section + "." + name;
        if (!known_.count(key)) issues_.push_back({key, "unknown key"});
      }
    }
  }

 private:
  const pt::ptree& tree_;
  std::vector<ConfigIssue>& issues_;
  std::set<std::string> known_;
};

void resolve_codec(const std::string& key, const std::string& source,
                   const std::filesystem::path& base_dir, codec::CodecProfile& out,
                   std::vector<ConfigIssue>& issues) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (source.rfind(kBuiltin, 0) == 0) {
    const auto p = codec::builtin_profile(std::string_view(source).substr(kBuiltin.size()));
    if (!p) {
      issues.push_back({key, "unknown built-in profile '" + source + "'"});
      return;
    }
    out = *p;
    return;
  }
  std::filesystem::path path(source);
  if (path.is_relative()) path = base_dir / path;
  if (!std::filesystem::exists(path)) {
    issues.push_back({key, "codec profile file not found: " + path.string()});
    return;
  }
  try {
    out = codec::load_profile_json(path);
  } catch (const Error& e) {
    issues.push_back({key, e.what()});
  }
}

}  // namespace

std::vector<ConfigIssue> validate(const ScenarioConfig& c) {
  std::vector<ConfigIssue> issues;
  auto require = [&](bool ok, const char* key, const std::string& message) {
    if (!ok) issues.push_back({key, message});
  };

  require(c.time.horizon_s > 0.0, "time.horizon_s", "must be > 0");
  require(c.time.slot_s > 0.0, "time.slot_s", "must be > 0");
  if (c.time.horizon_s > 0.0 && c.time.slot_s > 0.0) {
    const double slots = c.time.horizon_s / c.time.slot_s;
    require(std::abs(slots - std::round(slots)) <= 1e-9 * std::max(1.0, slots),
            "time.slot_s", "horizon_s is not divisible by slot_s");
  }

  const FleetConfig& f = c.fleet;
  require(f.n_gs > 0, "fleet.n_gs", "must be > 0");
  require(f.n_relays > 0, "fleet.n_relays", "must be > 0");
  require(f.walker_planes > 0, "fleet.walker_planes", "must be > 0");
  if (f.n_relays > 0 && f.walker_planes > 0) {
    require(f.n_relays % f.walker_planes == 0, "fleet.walker_planes",
            "n_relays must be divisible by walker_planes");
  }
  require(f.walker_phasing >= 0, "fleet.walker_phasing", "must be >= 0");
  require(f.relay_altitude_km > 0.0, "fleet.relay_altitude_km", "must be > 0");
  require(f.sdc.altitude_km > 0.0, "fleet.sdc_altitude_km", "must be > 0");
  require(f.gs_lat_limit_deg >= 0.0 && f.gs_lat_limit_deg <= 90.0, "fleet.gs_lat_limit_deg",
          "must be in [0, 90]");
  require(f.gs_channels >= 1, "fleet.gs_channels", "must be >= 1");
  require(f.elevation_mask_deg >= -90.0 && f.elevation_mask_deg < 90.0,
          "fleet.elevation_mask_deg", "must be in [-90, 90)");

  const power::SdcPowerProfile& p = c.power;
  require(p.pump_fraction >= 0.0 && p.pump_fraction < 1.0, "power.pump_fraction",
          "must be in [0, 1)");
  if (!c.energy_per_bit_auto) {
    require(p.energy_per_bit_j > 0.0, "power.energy_per_bit_j", "must be > 0 or 'auto'");
  }
  if (p.radiator.mode == power::RadiatorMode::kRatio) {
    require(p.radiator.ratio_rho >= 0.0, "power.radiator_ratio", "must be >= 0");
  } else {
    require(p.radiator.area_m2 >= 0.0, "power.radiator_area_m2", "must be >= 0");
    require(p.radiator.emissivity > 0.0 && p.radiator.emissivity <= 1.0,
            "power.radiator_emissivity", "must be in (0, 1]");
    require(p.radiator.panel_temp_k > 0.0, "power.radiator_temp_k", "must be > 0");
    require(p.radiator.absorbed_flux_w_m2 >= 0.0, "power.radiator_absorbed_w_m2", "must be >= 0");
  }
  require(c.calibration_cross_w > 0.0, "calibration.cross_w", "must be > 0");
  require(c.calibration_ref_bps > 0.0, "calibration.ref_bps", "must be > 0");

  require(c.rf.carrier_freq_hz > 0.0, "rf.carrier_hz", "must be > 0");
  require(c.rf.bandwidth_hz > 0.0, "rf.bandwidth_hz", "must be > 0");
  require(c.rf.noise_temp_k > 0.0, "rf.noise_temp_k", "must be > 0");
  require(c.rf.mimo_multiplier >= 1.0, "rf.mimo_multiplier", "must be >= 1");
  require(c.channel_capacity_bps > 0.0, "rf.channel_capacity_bps", "must be > 0");
  require(c.fallback_range_km > 0.0, "rf.fallback_range_km", "must be > 0");

  require(c.isl.capacity_bps > 0.0, "isl.capacity_bps", "must be > 0");
  require(c.isl.max_links_per_sat >= 1, "isl.max_links_per_sat", "must be >= 1");
  require(c.isl.max_range_km > 0.0, "isl.max_range_km", "must be > 0");
  require(c.isl.max_hops >= 0, "isl.max_hops", "must be >= 0");

  for (const auto& [key, profile] : {std::pair{"codec.bitcom", &c.bitcom},
                                     std::pair{"codec.semcom", &c.semcom}}) {
    try {
      codec::validate(*profile);
    } catch (const Error& e) {
      issues.push_back({key, e.what()});
    }
  }
  require(c.encoder_energy_scale >= 0.0, "codec.encoder_energy_scale", "must be >= 0");

  require(!c.sweep_budgets_w.empty(), "sweep.budgets_w", "needs at least one budget");
  for (double b : c.sweep_budgets_w) {
    if (!(b >= 0.0)) {
      issues.push_back({"sweep.budgets_w", "budgets must be >= 0"});
      break;
    }
  }
  return issues;
}

ValidationResult parse_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  ValidationResult result;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    result.issues.push_back({"", "malformed config (line " + std::to_string(e.line()) + "): " + e.message()});
    return result;
  }

  ScenarioConfig c = default_scenario();
  std::vector<ConfigIssue>& issues = result.issues;
  Reader r(tree, issues);

  r.number("time.horizon_s", c.time.horizon_s);
  r.number("time.slot_s", c.time.slot_s);
  r.number("run.seed", c.seed);

  FleetConfig& f = c.fleet;
  r.number("fleet.n_gs", f.n_gs);
  r.number("fleet.n_relays", f.n_relays);
  r.number("fleet.walker_planes", f.walker_planes);
  r.number("fleet.walker_phasing", f.walker_phasing);
  r.number("fleet.relay_altitude_km", f.relay_altitude_km);
  r.number("fleet.relay_inclination_deg", f.relay_inclination_deg);
  r.number("fleet.sdc_altitude_km", f.sdc.altitude_km);
  r.number("fleet.sdc_inclination_deg", f.sdc.inclination_deg);
  r.number("fleet.sdc_raan_deg", f.sdc.raan_deg);
  r.number("fleet.sdc_phase_deg", f.sdc.phase_deg);
  r.number("fleet.gs_lat_limit_deg", f.gs_lat_limit_deg);
  r.number("fleet.gs_channels", f.gs_channels);
  r.number("fleet.elevation_mask_deg", f.elevation_mask_deg);
  f.sdc.inclination_deg = geometry::normalize_deg(f.sdc.inclination_deg);
  f.sdc.raan_deg = geometry::normalize_deg(f.sdc.raan_deg);
  f.sdc.phase_deg = geometry::normalize_deg(f.sdc.phase_deg);

  power::SdcPowerProfile& p = c.power;
  r.number("power.pump_fraction", p.pump_fraction);
  std::string e_bit;
  if (r.text("power.energy_per_bit_j", e_bit)) {
    c.energy_per_bit_auto = e_bit == "auto";
    if (!c.energy_per_bit_auto && !parse_number(e_bit, p.energy_per_bit_j)) {
      issues.push_back({"power.energy_per_bit_j", "expected a number or 'auto'"});
    }
  }
  std::string mode;
  if (r.text("power.radiator_mode", mode)) {
    if (mode == "ratio") {
      p.radiator.mode = power::RadiatorMode::kRatio;
    } else if (mode == "physical") {
      p.radiator.mode = power::RadiatorMode::kPhysical;
    } else {
      issues.push_back({"power.radiator_mode", "expected 'ratio' or 'physical'"});
    }
  }
  r.number("power.radiator_ratio", p.radiator.ratio_rho);
  r.number("power.radiator_area_m2", p.radiator.area_m2);
  r.number("power.radiator_emissivity", p.radiator.emissivity);
  r.number("power.radiator_temp_k", p.radiator.panel_temp_k);
  r.number("power.radiator_absorbed_w_m2", p.radiator.absorbed_flux_w_m2);
  r.number("calibration.cross_w", c.calibration_cross_w);
  r.number("calibration.ref_bps", c.calibration_ref_bps);

  r.number("rf.carrier_hz", c.rf.carrier_freq_hz);
  r.number("rf.bandwidth_hz", c.rf.bandwidth_hz);
  r.number("rf.combined_gain_db", c.rf.combined_gain_db);
  r.number("rf.noise_temp_k", c.rf.noise_temp_k);
  r.number("rf.mimo_multiplier", c.rf.mimo_multiplier);
  r.number("rf.channel_capacity_bps", c.channel_capacity_bps);
  r.number("rf.fallback_range_km", c.fallback_range_km);

  r.number("isl.capacity_bps", c.isl.capacity_bps);
  r.number("isl.max_links_per_sat", c.isl.max_links_per_sat);
  r.number("isl.max_range_km", c.isl.max_range_km);
  r.number("isl.max_hops", c.isl.max_hops);

  r.text("codec.bitcom", c.bitcom_source);
  r.text("codec.semcom", c.semcom_source);
  resolve_codec("codec.bitcom", c.bitcom_source, base_dir, c.bitcom, issues);
  resolve_codec("codec.semcom", c.semcom_source, base_dir, c.semcom, issues);
  r.number("codec.encoder_energy_scale", c.encoder_energy_scale);
  std::string scheduled;
  if (r.text("codec.schedule", scheduled)) {
    if (scheduled == "semcom") {
      c.scheduled = ScheduledCodec::kSemcom;
    } else if (scheduled == "bitcom") {
      c.scheduled = ScheduledCodec::kBitcom;
    } else {
      issues.push_back({"codec.schedule", "expected 'bitcom' or 'semcom'"});
    }
  }

  r.number_list("sweep.budgets_w", c.sweep_budgets_w);
  r.report_unknown();

  c.power.service_duration_s = c.time.horizon_s;
  for (ConfigIssue& i : validate(c)) issues.push_back(std::move(i));
  if (issues.empty()) result.config = std::move(c);
  return result;
}

ValidationResult load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    ValidationResult r;
    r.issues.push_back({"", "cannot read config file " + path.string()});
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.parent_path());
}

}  // namespace sdcsim
