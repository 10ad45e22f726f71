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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sdcsim/error.hpp"
#include "sdcsim/experiment.hpp"
#include "sdcsim/scenario.hpp"

using namespace sdcsim;

namespace {

const std::filesystem::path kSource(SDCSIM_SOURCE_DIR);
const std::filesystem::path kDefaultConfig = kSource / "configs/default.ini";

bool names_key(const ValidationResult& r, const std::string& key) {
  for (const auto& i : r.issues) {
    if (i.key == key) return true;
  }
  return false;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("shipped scenario validates and equals the built-in defaults") {
  const ValidationResult r = load_scenario(kDefaultConfig);
  REQUIRE_MESSAGE(r.ok(), r.summary());
  const ScenarioConfig& c = *r.config;
  const ScenarioConfig d = default_scenario();
  CHECK(c.fleet.n_gs == 30);
  CHECK(c.fleet.n_relays == 24);
  CHECK(c.satellite_count() == 25);
  CHECK(c.time.slot_count() == 10);
  CHECK(c.energy_per_bit_auto);
  CHECK(c.sweep_budgets_w == d.sweep_budgets_w);
  CHECK(c.semcom.bits_per_item == 256);
  CHECK(c.rf.combined_gain_db == d.rf.combined_gain_db);
  CHECK(c.isl.capacity_bps == 4e11);
  CHECK(validate(d).empty());
}

TEST_CASE("validation names the offending key") {
  auto with = [](const std::string& body) { return parse_scenario(body, kSource / "configs"); };

  const auto zero_gs = with("[fleet]\nn_gs = 0\n");
  CHECK_FALSE(zero_gs.ok());
  CHECK(names_key(zero_gs, "fleet.n_gs"));

  const auto slots = with("[time]\nhorizon_s = 10\nslot_s = 3\n");
  CHECK_FALSE(slots.ok());
  CHECK(names_key(slots, "time.slot_s"));
  CHECK(slots.summary().find("divisible") != std::string::npos);

  const auto typo = with("[fleet]\nn_gss = 3\n");
  CHECK(names_key(typo, "fleet.n_gss"));

  const auto nan = with("[isl]\ncapacity_bps = lots\n");
  CHECK(names_key(nan, "isl.capacity_bps"));

  const auto codec = with("[codec]\nsemcom = missing.json\n");
  CHECK(names_key(codec, "codec.semcom"));

  const auto builtin = with("[codec]\nbitcom = builtin:nothing\n");
  CHECK(names_key(builtin, "codec.bitcom"));

  const auto many = with("[fleet]\nn_gs = 0\nn_relays = 0\n[rf]\nmimo_multiplier = 0.5\n");
  CHECK(names_key(many, "fleet.n_gs"));
  CHECK(names_key(many, "fleet.n_relays"));
  CHECK(names_key(many, "rf.mimo_multiplier"));

  const auto budgets = with("[sweep]\nbudgets_w = 1e6, -4\n");
  CHECK(names_key(budgets, "sweep.budgets_w"));

  const auto ebit = with("[power]\nenergy_per_bit_j = 2e-5\n");
  REQUIRE(ebit.ok());
  CHECK_FALSE(ebit.config->energy_per_bit_auto);
  CHECK(ebit.config->power.energy_per_bit_j == 2e-5);
}

TEST_CASE("malformed and missing config files") {
  const auto broken = parse_scenario("[fleet\nn_gs = 3\n", ".");
  CHECK_FALSE(broken.ok());
  REQUIRE(broken.issues.size() == 1);
  CHECK(broken.issues[0].key.empty());

  const auto missing = load_scenario("/nonexistent/scenario.ini");
  CHECK_FALSE(missing.ok());
  CHECK(missing.summary().find("cannot read") != std::string::npos);
}

TEST_CASE("sweep anchors and ratios") {
  ScenarioConfig c = default_scenario();
  c.sweep_budgets_w = {0.0, 50e6};
  const auto rows = sweep(c);
  REQUIRE(rows.size() == 2);

  CHECK(rows[0].per_gs_rate_bitcom == 0.0);
  CHECK(rows[0].per_gs_rate_semcom == 0.0);
  CHECK(rows[0].gs_power_bitcom == 0.0);
  CHECK(rows[0].gs_power_semcom == 0.0);

  CHECK(rows[1].per_gs_rate_bitcom == doctest::Approx(1e11).epsilon(1e-12));
  CHECK(rows[1].per_gs_rate_semcom == doctest::Approx(1e11 / 96).epsilon(1e-12));
  CHECK(rows[1].per_gs_rate_bitcom / rows[1].per_gs_rate_semcom == 96.0);
  CHECK(rows[1].e1_max == doctest::Approx(48.8e6));
  CHECK(rows[1].binding_constraint == power::BindingConstraint::kPower);
}

TEST_CASE("infeasible budgets are flagged, not dropped") {
  ScenarioConfig c = default_scenario();
  c.energy_per_bit_auto = false;
  c.power.energy_per_bit_j = 1e-5;
  c.power.radiator = power::RadiatorSpec::physical(1e6, 0.9, 300.0, 0.0);  // E2 ~ 413 MW
  c.sweep_budgets_w = {1e6, 50e6};
  const auto rows = sweep(c);
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].feasible());
  CHECK(rows[0].x_max_bits == 0.0);
  CHECK(rows[1].feasible());
  CHECK(metrics_csv(rows).find("infeasible") != std::string::npos);
}

TEST_CASE("run_point reports scheduler totals consistently") {
  const ScenarioConfig c = default_scenario();
  const PointResult p = run_point(c, 50e6);
  const auto& r = p.report;
  CHECK(r.slots.size() == 10);
  CHECK(r.offered_bits + r.initial_backlog_bits == r.delivered_bits + r.final_backlog_bits());
  CHECK(p.row.delivered_fraction == r.delivered_fraction);
  CHECK(p.row.final_backlog_bits == static_cast<double>(r.final_backlog_bits()));
  // Default semcom demand is 1e11/96 b/s per GS and 1 s slots.
  CHECK(r.offered_bits == 10 * 30 * sched::bits_per_slot(1e11 / 96, 1.0));
  REQUIRE(r.mean_slant_range_km.has_value());
  CHECK(*r.mean_slant_range_km >= 500.0);
  CHECK(*r.mean_slant_range_km <= 1700.0);
}

TEST_CASE("stations that always have a contact get everything delivered") {
  ScenarioConfig c = default_scenario();
  const auto contacts = build_contact_table(c);
  const PointResult p = run_point(c, contacts, 50e6);
  for (int g = 0; g < c.fleet.n_gs; ++g) {
    bool always = true;
    bool ever = false;
    for (const auto& slot : contacts.slots) {
      always = always && !slot.visible(g).empty();
      ever = ever || !slot.visible(g).empty();
    }
    if (always) CHECK(p.report.final_backlog[g] == 0);
    if (!ever) CHECK(p.report.final_backlog[g] == 10 * sched::bits_per_slot(1e11 / 96, 1.0));
  }
}

TEST_CASE("doubling every capacity does not reduce delivery on the default scenario") {
  ScenarioConfig c = default_scenario();
  c.scheduled = ScheduledCodec::kBitcom;
  for (double p : {20e6, 50e6, 100e6}) {
    const double base = run_point(c, p).row.delivered_fraction;
    ScenarioConfig d = c;
    d.channel_capacity_bps *= 2;
    d.isl.capacity_bps *= 2;
    CHECK(run_point(d, p).row.delivered_fraction >= base);
  }
}

TEST_CASE("calibration through the scenario") {
  const ScenarioConfig c = default_scenario();
  CHECK(calibrate(c, 50e6, 1e11) == doctest::Approx(48.8e6 / 3e12).epsilon(1e-14));
  CHECK(effective_energy_per_bit(c) == calibrate(c, 50e6, 1e11));
  ScenarioConfig fixed = c;
  fixed.energy_per_bit_auto = false;
  fixed.power.energy_per_bit_j = 3e-5;
  CHECK(effective_energy_per_bit(fixed) == 3e-5);
}

TEST_CASE("metrics CSV format") {
  CHECK_THROWS_AS(metrics_csv({}), Error);

  MetricsRow r;
  r.p_budget = 50e6;
  r.x_max_bits = 1.0 / 3.0;
  r.per_gs_rate_semcom = 1041666666.6666666;
  const std::string csv = metrics_csv({r});
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header == kMetricsCsvHeader);
  CHECK(header ==
        "p_budget,e1_max,e2,x_max_bits,per_gs_rate_bitcom,per_gs_rate_semcom,gs_power_bitcom,"
        "gs_power_semcom,delivered_fraction,final_backlog_bits,binding_constraint");
  CHECK(csv.find("50000000,0,0,0.333333333,0,1.04166667e+09,") != std::string::npos);
  CHECK(format_number(123456789012.0) == "1.23456789e+11");
}

TEST_CASE("CSV files are byte-identical across runs with the same seed") {
  ScenarioConfig c = default_scenario();
  c.sweep_budgets_w = {10e6, 50e6, 90e6};
  const auto dir = std::filesystem::temp_directory_path();
  write_text_file(dir / "sdcsim_det_a.csv", metrics_csv(sweep(c)));
  write_text_file(dir / "sdcsim_det_b.csv", metrics_csv(sweep(c)));
  CHECK(read_file(dir / "sdcsim_det_a.csv") == read_file(dir / "sdcsim_det_b.csv"));
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/x.csv", "x"), Error);
}

TEST_CASE("slot CSVs") {
  const PointResult p = run_point(default_scenario(), 50e6);
  const std::string summary = slot_summary_csv(p.report);
  CHECK(summary.rfind("slot,offered_bits,delivered_bits,backlog_bits,channels,isl_flows\n", 0) == 0);
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 11);
  const std::string dump = slot_dump_csv(p.report);
  CHECK(dump.rfind("slot,kind,gs_id,channel,from,to,bits,range_km,hops\n", 0) == 0);
  CHECK(dump.find(",uplink,") != std::string::npos);
}
