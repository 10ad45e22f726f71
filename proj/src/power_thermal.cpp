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

#include "sdcsim/power_thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdcsim/error.hpp"

namespace sdcsim::power {

RadiatorSpec RadiatorSpec::ratio(double rho) {
  RadiatorSpec s;
  s.mode = RadiatorMode::kRatio;
  s.ratio_rho = rho;
  return s;
}

RadiatorSpec RadiatorSpec::physical(double area_m2, double emissivity, double panel_temp_k,
                                    double absorbed_flux_w_m2) {
  RadiatorSpec s;
  s.mode = RadiatorMode::kPhysical;
  s.area_m2 = area_m2;
  s.emissivity = emissivity;
  s.panel_temp_k = panel_temp_k;
  s.absorbed_flux_w_m2 = absorbed_flux_w_m2;
  return s;
}

std::string_view to_string(BindingConstraint b) {
  switch (b) {
    case BindingConstraint::kThermal:
      return "thermal";
    case BindingConstraint::kPower:
      return "power";
    case BindingConstraint::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

double radiator_capacity(const RadiatorSpec& spec, double p_budget_w) {
  if (spec.mode == RadiatorMode::kRatio) return spec.ratio_rho * p_budget_w;
  const double t2 = spec.panel_temp_k * spec.panel_temp_k;
  const double emitted = spec.emissivity * kStefanBoltzmann * t2 * t2;
  return std::max(0.0, (emitted - spec.absorbed_flux_w_m2) * spec.area_m2);
}

ComputePower max_compute_power(double p_budget_w, double e2_w, double pump_fraction) {
  const double budget_term = p_budget_w - pump_fraction * e2_w;
  if (budget_term <= 0.0 && p_budget_w > 0.0) return {0.0, BindingConstraint::kInfeasible};
  if (e2_w <= budget_term) return {std::max(0.0, e2_w), BindingConstraint::kThermal};
  return {std::max(0.0, budget_term), BindingConstraint::kPower};
}

void validate(const SdcPowerProfile& p) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::kInvalidArgument, msg); };
  if (!(p.p_budget_w >= 0.0)) fail("p_budget must be >= 0");
  if (!(p.pump_fraction >= 0.0 && p.pump_fraction < 1.0)) fail("pump_fraction must be in [0, 1)");
  if (!(p.energy_per_bit_j > 0.0)) fail("energy_per_bit must be > 0");
  if (!(p.service_duration_s > 0.0)) fail("service_duration must be > 0");
  const RadiatorSpec& r = p.radiator;
  if (r.mode == RadiatorMode::kRatio) {
    if (!(r.ratio_rho >= 0.0)) fail("radiator ratio must be >= 0");
  } else {
    if (!(r.area_m2 >= 0.0)) fail("radiator area must be >= 0");
    if (!(r.emissivity > 0.0 && r.emissivity <= 1.0)) fail("radiator emissivity must be in (0, 1]");
    if (!(r.panel_temp_k > 0.0)) fail("radiator temperature must be > 0");
    if (!(r.absorbed_flux_w_m2 >= 0.0)) fail("absorbed flux must be >= 0");
  }
}

EnvelopeResult max_data_volume(const SdcPowerProfile& profile) {
  validate(profile);
  EnvelopeResult out;
  out.p_budget_w = profile.p_budget_w;
  out.e2_w = radiator_capacity(profile.radiator, profile.p_budget_w);
  const ComputePower cp = max_compute_power(profile.p_budget_w, out.e2_w, profile.pump_fraction);
  out.e1_max_w = cp.e1_max_w;
  out.binding = cp.binding;
  out.x_max_bits = out.e1_max_w * profile.service_duration_s / profile.energy_per_bit_j;
  return out;
}

double calibrate_energy_per_bit(double p_cross_w, double rate_ref_bps, int n_gs,
                                const RadiatorSpec& radiator, double pump_fraction,
                                double service_duration_s) {
  if (!(p_cross_w > 0.0) || !(rate_ref_bps > 0.0) || n_gs <= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "calibration needs positive crossover budget, reference rate and GS count");
  }
  SdcPowerProfile probe;
  probe.p_budget_w = p_cross_w;
  probe.pump_fraction = pump_fraction;
  probe.radiator = radiator;
  probe.service_duration_s = service_duration_s;
  const EnvelopeResult env = max_data_volume(probe);
  if (!env.feasible() || env.e1_max_w <= 0.0) {
    throw Error(ErrorKind::kInfeasible,
                "envelope at " + std::to_string(p_cross_w) + " W admits no compute power");
  }
  return env.e1_max_w / (static_cast<double>(n_gs) * rate_ref_bps);
}

}  // namespace sdcsim::power
