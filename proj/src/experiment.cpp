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

#include "sdcsim/experiment.hpp"

#include <cstdio>
#include <fstream>

#include "sdcsim/error.hpp"

namespace sdcsim {

geometry::GeometryInputs geometry_inputs(const ScenarioConfig& config) {
  const FleetConfig& f = config.fleet;
  geometry::GeometryInputs in;
  in.satellites = geometry::walker_delta(f.n_relays, f.walker_planes, f.walker_phasing,
                                         f.relay_altitude_km, f.relay_inclination_deg);
  in.satellites.push_back(geometry::OrbitalElements::make(
      f.sdc.altitude_km, f.sdc.inclination_deg, f.sdc.raan_deg, f.sdc.phase_deg));
  in.stations = geometry::place_ground_stations(f.n_gs, f.gs_lat_limit_deg, config.seed, f.gs_channels);
  in.slot_s = config.time.slot_s;
  in.n_slots = config.time.slot_count();
  in.elevation_mask_deg = f.elevation_mask_deg;
  return in;
}

geometry::ContactTable build_contact_table(const ScenarioConfig& config) {
  return geometry::build_contact_table(geometry_inputs(config));
}

double calibrate(const ScenarioConfig& config, double cross_w, double ref_bps) {
  return power::calibrate_energy_per_bit(cross_w, ref_bps, config.fleet.n_gs, config.power.radiator,
                                         config.power.pump_fraction, config.time.horizon_s);
}

double effective_energy_per_bit(const ScenarioConfig& config) {
  if (!config.energy_per_bit_auto) return config.power.energy_per_bit_j;
  return calibrate(config, config.calibration_cross_w, config.calibration_ref_bps);
}

namespace {

codec::CodecProfile scaled(codec::CodecProfile p, double scale) {
  p.encoder_energy_per_item_j *= scale;
  return p;
}

}  // namespace

PointResult run_point(const ScenarioConfig& config, const geometry::ContactTable& contacts,
                      double p_budget_w) {
  power::SdcPowerProfile profile = config.power;
  profile.p_budget_w = p_budget_w;
  profile.service_duration_s = config.time.horizon_s;
  profile.energy_per_bit_j = effective_energy_per_bit(config);
  const power::EnvelopeResult env = power::max_data_volume(profile);

  PointResult out;
  MetricsRow& row = out.row;
  row.p_budget = p_budget_w;
  row.e1_max = env.e1_max_w;
  row.e2 = env.e2_w;
  row.x_max_bits = env.x_max_bits;
  row.binding_constraint = env.binding;

  const int n_gs = config.fleet.n_gs;
  const codec::CodecProfile bitcom = scaled(config.bitcom, config.encoder_energy_scale);
  const codec::CodecProfile semcom = scaled(config.semcom, config.encoder_energy_scale);
  codec::RateRequirement req_bit, req_sem;
  if (env.feasible()) {
    req_bit = codec::required_rates(env, bitcom, n_gs, config.time.horizon_s);
    req_sem = codec::required_rates(env, semcom, n_gs, config.time.horizon_s);
  }
  row.per_gs_rate_bitcom = req_bit.per_gs_rate_bps;
  row.per_gs_rate_semcom = req_sem.per_gs_rate_bps;

  const double scheduled_rate = config.scheduled == ScheduledCodec::kSemcom
                                    ? req_sem.per_gs_rate_bps
                                    : req_bit.per_gs_rate_bps;
  const sched::Bits per_slot = sched::bits_per_slot(scheduled_rate, config.time.slot_s);
  const std::vector<std::vector<sched::Bits>> offered(
      contacts.slots.size(), std::vector<sched::Bits>(static_cast<std::size_t>(n_gs), per_slot));

  sched::RunOptions opts;
  opts.sdc_id = config.sdc_id();
  opts.isl = config.isl;
  opts.channel_capacity_bps = config.channel_capacity_bps;
  opts.channels_per_gs = config.fleet.gs_channels;
  out.report = sched::run(contacts, opts, offered);

  row.delivered_fraction = out.report.delivered_fraction;
  row.final_backlog_bits = static_cast<double>(out.report.final_backlog_bits());

  const double range = out.report.mean_slant_range_km.value_or(config.fallback_range_km);
  const int channels = config.fleet.gs_channels;
  row.gs_power_bitcom = codec::gs_power(req_bit, bitcom, config.rf, range, channels);
  row.gs_power_semcom = codec::gs_power(req_sem, semcom, config.rf, range, channels);
  return out;
}

PointResult run_point(const ScenarioConfig& config, double p_budget_w) {
  return run_point(config, build_contact_table(config), p_budget_w);
}

std::vector<MetricsRow> sweep(const ScenarioConfig& config) {
  const geometry::ContactTable contacts = build_contact_table(config);
  std::vector<MetricsRow> rows;
  rows.reserve(config.sweep_budgets_w.size());
  for (double p : config.sweep_budgets_w) rows.push_back(run_point(config, contacts, p).row);
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  if (rows.empty()) throw Error(ErrorKind::kEmpty, "no metrics rows to write");
  std::string out(kMetricsCsvHeader);
  out += '\n';
  for (const MetricsRow& r : rows) {
    for (double v : {r.p_budget, r.e1_max, r.e2, r.x_max_bits, r.per_gs_rate_bitcom,
                     r.per_gs_rate_semcom, r.gs_power_bitcom, r.gs_power_semcom,
                     r.delivered_fraction, r.final_backlog_bits}) {
      out += format_number(v);
      out += ',';
    }
    out += power::to_string(r.binding_constraint);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out << content;
  out.flush();
  if (!out) throw Error(ErrorKind::kIo, "failed writing " + path.string());
}

std::string slot_summary_csv(const sched::RunReport& report) {
  std::string out = "slot,offered_bits,delivered_bits,backlog_bits,channels,isl_flows\n";
  for (std::size_t k = 0; k < report.slots.size(); ++k) {
    const sched::SlotTotals& t = report.totals[k];
    out += std::to_string(k) + ',' + std::to_string(t.offered_bits) + ',' +
           std::to_string(t.delivered_bits) + ',' + std::to_string(t.backlog_bits) + ',' +
           std::to_string(report.slots[k].channels.size()) + ',' +
           std::to_string(report.slots[k].isl_flows.size()) + '\n';
  }
  return out;
}

std::string slot_dump_csv(const sched::RunReport& report) {
  std::string out = "slot,kind,gs_id,channel,from,to,bits,range_km,hops\n";
  for (const sched::SlotAllocation& a : report.slots) {
    const std::string slot = std::to_string(a.slot);
    for (const sched::ChannelAssignment& c : a.channels) {
      out += slot + ",uplink," + std::to_string(c.gs_id) + ',' + std::to_string(c.channel) +
             ",gs" + std::to_string(c.gs_id) + ',' + std::to_string(c.sat_id) + ',' +
             std::to_string(c.bits) + ',' + format_number(c.range_km) + ',' +
             std::to_string(c.hops) + '\n';
    }
    for (const sched::IslFlow& f : a.isl_flows) {
      out += slot + ",isl,,," + std::to_string(f.from) + ',' + std::to_string(f.to) + ',' +
             std::to_string(f.bits) + ",,\n";
    }
  }
  return out;
}

}  // namespace sdcsim
