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

#include "sdcsim/link_budget.hpp"

#include <cmath>
#include <numbers>

#include "sdcsim/error.hpp"

namespace sdcsim::link {

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Path loss over antenna gain, linear.
double attenuation(const RfChannelSpec& spec, double distance_km) {
  return db_to_linear(fspl_db(spec.carrier_freq_hz, distance_km) - spec.combined_gain_db);
}

}  // namespace

void validate(const RfChannelSpec& s) {
  if (!(s.carrier_freq_hz > 0.0) || !(s.bandwidth_hz > 0.0) || !(s.noise_temp_k > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "rf channel frequency, bandwidth and noise temperature must be > 0");
  }
  if (!(s.mimo_multiplier >= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "mimo_multiplier must be >= 1");
  }
}

void validate(const IslSpec& s) {
  if (!(s.capacity_bps > 0.0) || s.max_links_per_sat < 1 || !(s.max_range_km > 0.0) ||
      s.max_hops < 0) {
    throw Error(ErrorKind::kInvalidArgument, "invalid ISL spec");
  }
}

double fspl_db(double freq_hz, double distance_km) {
  const double d_m = distance_km * 1000.0;
  return 20.0 * std::log10(4.0 * std::numbers::pi * d_m * freq_hz / kSpeedOfLight);
}

double noise_power_w(const RfChannelSpec& spec) {
  return kBoltzmann * spec.noise_temp_k * spec.bandwidth_hz;
}

double capacity(const RfChannelSpec& spec, double p_tx_w, double distance_km) {
  if (p_tx_w <= 0.0) return 0.0;
  const double snr = p_tx_w / (attenuation(spec, distance_km) * noise_power_w(spec));
  return spec.mimo_multiplier * spec.bandwidth_hz * std::log1p(snr) / std::numbers::ln2;
}

double required_tx_power(const RfChannelSpec& spec, double rate_bps, double distance_km) {
  if (rate_bps <= 0.0) return 0.0;
  const double spectral = rate_bps / (spec.mimo_multiplier * spec.bandwidth_hz);
  const double snr = std::expm1(spectral * std::numbers::ln2);
  return snr * attenuation(spec, distance_km) * noise_power_w(spec);
}

}  // namespace sdcsim::link
