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

#include "sdcsim/link_budget.hpp"
#include "sdcsim/power_thermal.hpp"

namespace sdcsim::codec {

/// Wire format of one source item. Ingested from and emitted as JSON:
/// {"name", "bits_per_item", "raw_bits_per_item", "task_accuracy",
///  "encoder_energy_per_item_j", "fixed_overhead_bits"}.
struct CodecProfile {
  std::string name;
  std::int64_t bits_per_item = 0;
  std::int64_t raw_bits_per_item = 0;
  double task_accuracy = 1.0;
  double encoder_energy_per_item_j = 0.0;
  std::int64_t fixed_overhead_bits = 0;
};

inline constexpr std::int64_t kCifar10RawBits = 32 * 32 * 3 * 8;
inline constexpr std::string_view kBitcomName = "bitcom-cifar10";
inline constexpr std::string_view kSemcomName = "semcom-cifar10-256";

CodecProfile bitcom_cifar10();
CodecProfile semcom_cifar10_256();
std::optional<CodecProfile> builtin_profile(std::string_view name);

/// Throws Error(kInvalidArgument) if sizes or accuracy are out of range.
void validate(const CodecProfile& profile);

/// Throws Error(kParse) on malformed JSON or missing/mistyped fields.
CodecProfile parse_profile_json(std::string_view text);
CodecProfile load_profile_json(const std::filesystem::path& path);
std::string to_json(const CodecProfile& profile);

struct CompressionStats {
  double ratio = 1.0;
  double reduction = 0.0;
};

CompressionStats compression_stats(const CodecProfile& profile);

struct RateRequirement {
  double p_budget_w = 0.0;
  double aggregate_rate_bps = 0.0;
  double per_gs_rate_bps = 0.0;
  std::string codec;
};

/// Uplink rate needed to feed x_max raw-equivalent bits through `codec`
/// over the service horizon. Throws Error(kInfeasible) for an infeasible envelope.
RateRequirement required_rates(const power::EnvelopeResult& envelope, const CodecProfile& codec,
                               int n_gs, double service_duration_s);

/// Average per-GS draw: transmit power over `channels_per_gs` equal channels
/// plus encoder energy for the items sent each second.
double gs_power(const RateRequirement& req, const CodecProfile& codec,
                const link::RfChannelSpec& channel, double mean_slant_range_km,
                int channels_per_gs);

}  // namespace sdcsim::codec
