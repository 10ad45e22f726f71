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

namespace sdcsim::link {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K

/// One orthogonal ground-space RF channel. Spatial multiplexing is folded
/// into `mimo_multiplier`; atmospheric losses into `combined_gain_db`.
struct RfChannelSpec {
  double carrier_freq_hz = 30e9;
  double bandwidth_hz = 2e9;
  double combined_gain_db = 20.0;
  double noise_temp_k = 300.0;
  double mimo_multiplier = 1.0;
};

struct IslSpec {
  double capacity_bps = 4.0e11;
  int max_links_per_sat = 6;
  double max_range_km = 5500.0;
  int max_hops = 0;  // 0 = unlimited
};

/// Throw Error(kInvalidArgument) on non-positive fields.
void validate(const RfChannelSpec& spec);
void validate(const IslSpec& spec);

double fspl_db(double freq_hz, double distance_km);

double noise_power_w(const RfChannelSpec& spec);

/// Shannon rate in bits/s for transmit power `p_tx_w` over `distance_km`.
double capacity(const RfChannelSpec& spec, double p_tx_w, double distance_km);

/// Inverse of capacity(): the transmit power that reaches `rate_bps`.
double required_tx_power(const RfChannelSpec& spec, double rate_bps, double distance_km);

}  // namespace sdcsim::link
