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

#include <string_view>

namespace sdcsim::power {

inline constexpr double kStefanBoltzmann = 5.670374419e-8;  // W m^-2 K^-4

enum class RadiatorMode { kRatio, kPhysical };

/// Net heat rejection of the rear radiator. In ratio mode the capacity scales
/// with the solar budget; in physical mode it comes from the panel itself.
struct RadiatorSpec {
  RadiatorMode mode = RadiatorMode::kRatio;
  double ratio_rho = 1.2;
  double area_m2 = 0.0;
  double emissivity = 0.9;
  double panel_temp_k = 300.0;
  double absorbed_flux_w_m2 = 0.0;

  static RadiatorSpec ratio(double rho);
  static RadiatorSpec physical(double area_m2, double emissivity, double panel_temp_k,
                               double absorbed_flux_w_m2);
};

struct SdcPowerProfile {
  double p_budget_w = 0.0;
  double pump_fraction = 0.02;
  RadiatorSpec radiator;
  double energy_per_bit_j = 1.6266666666666667e-5;
  double service_duration_s = 10.0;
};

enum class BindingConstraint { kThermal, kPower, kInfeasible };

std::string_view to_string(BindingConstraint b);

struct ComputePower {
  double e1_max_w = 0.0;
  BindingConstraint binding = BindingConstraint::kThermal;
};

struct EnvelopeResult {
  double p_budget_w = 0.0;
  double e1_max_w = 0.0;
  double e2_w = 0.0;
  double x_max_bits = 0.0;
  BindingConstraint binding = BindingConstraint::kThermal;

  bool feasible() const { return binding != BindingConstraint::kInfeasible; }
};

double radiator_capacity(const RadiatorSpec& spec, double p_budget_w);

/// Largest E1 with E1 <= E2 and E1 + pump_fraction * E2 <= P.
ComputePower max_compute_power(double p_budget_w, double e2_w, double pump_fraction);

/// Throws Error(kInvalidArgument) when the profile breaks its invariants.
void validate(const SdcPowerProfile& profile);

EnvelopeResult max_data_volume(const SdcPowerProfile& profile);

/// Energy per raw-equivalent bit that puts the uncompressed per-GS rate at
/// `rate_ref_bps` exactly when the budget is `p_cross_w`.
/// Throws Error(kInfeasible) if the envelope at `p_cross_w` admits no compute.
double calibrate_energy_per_bit(double p_cross_w, double rate_ref_bps, int n_gs,
                                const RadiatorSpec& radiator, double pump_fraction,
                                double service_duration_s);

}  // namespace sdcsim::power
