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

#include "sdcsim/traffic_codec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sdcsim/error.hpp"

namespace sdcsim::codec {

using nlohmann::json;

CodecProfile bitcom_cifar10() {
  return {std::string(kBitcomName), kCifar10RawBits, kCifar10RawBits, 1.0, 0.0, 0};
}

CodecProfile semcom_cifar10_256() {
  // 80 latent dims x 3 bits + 16 framing bits
  return {std::string(kSemcomName), 256, kCifar10RawBits, 0.9443, 0.010, 16};
}

std::optional<CodecProfile> builtin_profile(std::string_view name) {
  if (name == kBitcomName) return bitcom_cifar10();
  if (name == kSemcomName) return semcom_cifar10_256();
  return std::nullopt;
}

void validate(const CodecProfile& p) {
  auto fail = [&p](const std::string& msg) {
    throw Error(ErrorKind::kInvalidArgument, "codec '" + p.name + "': " + msg);
  };
  if (p.bits_per_item <= 0) fail("bits_per_item must be > 0");
  if (p.bits_per_item > p.raw_bits_per_item) fail("bits_per_item exceeds raw_bits_per_item");
  if (p.fixed_overhead_bits < 0 || p.fixed_overhead_bits > p.bits_per_item) {
    fail("fixed_overhead_bits must be in [0, bits_per_item]");
  }
  if (!(p.task_accuracy >= 0.0 && p.task_accuracy <= 1.0)) fail("task_accuracy must be in [0, 1]");
  if (!(p.encoder_energy_per_item_j >= 0.0)) fail("encoder_energy_per_item_j must be >= 0");
}

CodecProfile parse_profile_json(std::string_view text) {
  CodecProfile p;
  try {
    const json doc = json::parse(text);
    p.name = doc.at("name").get<std::string>();
    p.bits_per_item = doc.at("bits_per_item").get<std::int64_t>();
    p.raw_bits_per_item = doc.at("raw_bits_per_item").get<std::int64_t>();
    p.task_accuracy = doc.at("task_accuracy").get<double>();
    p.encoder_energy_per_item_j = doc.at("encoder_energy_per_item_j").get<double>();
    p.fixed_overhead_bits = doc.at("fixed_overhead_bits").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("codec profile: ") + e.what());
  }
  validate(p);
  return p;
}

CodecProfile load_profile_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot read codec profile " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile_json(buf.str());
}

std::string to_json(const CodecProfile& p) {
  json doc = {
      {"name", p.name},
      {"bits_per_item", p.bits_per_item},
      {"raw_bits_per_item", p.raw_bits_per_item},
      {"task_accuracy", p.task_accuracy},
      {"encoder_energy_per_item_j", p.encoder_energy_per_item_j},
      {"fixed_overhead_bits", p.fixed_overhead_bits},
  };
  return doc.dump(2);
}

CompressionStats compression_stats(const CodecProfile& p) {
  const double ratio =
      static_cast<double>(p.raw_bits_per_item) / static_cast<double>(p.bits_per_item);
  return {ratio, 1.0 - static_cast<double>(p.bits_per_item) / static_cast<double>(p.raw_bits_per_item)};
}

RateRequirement required_rates(const power::EnvelopeResult& envelope, const CodecProfile& codec,
                               int n_gs, double service_duration_s) {
  if (!envelope.feasible()) {
    throw Error(ErrorKind::kInfeasible, "no rate requirement for an infeasible envelope");
  }
  if (n_gs <= 0 || !(service_duration_s > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "n_gs and service duration must be positive");
  }
  const double ratio = compression_stats(codec).ratio;
  const double raw_rate = envelope.x_max_bits / service_duration_s;
  RateRequirement r;
  r.p_budget_w = envelope.p_budget_w;
  r.codec = codec.name;
  r.aggregate_rate_bps = raw_rate / ratio;
  // Divide by the ratio last so that codecs sharing an envelope differ by
  // exactly their ratio.
  r.per_gs_rate_bps = (raw_rate / n_gs) / ratio;
  return r;
}

double gs_power(const RateRequirement& req, const CodecProfile& codec,
                const link::RfChannelSpec& channel, double mean_slant_range_km,
                int channels_per_gs) {
  if (channels_per_gs < 1) {
    throw Error(ErrorKind::kInvalidArgument, "channels_per_gs must be >= 1");
  }
  const double per_channel = req.per_gs_rate_bps / channels_per_gs;
  const double tx = channels_per_gs * link::required_tx_power(channel, per_channel, mean_slant_range_km);
  const double items_per_s = req.per_gs_rate_bps / static_cast<double>(codec.bits_per_item);
  return tx + items_per_s * codec.encoder_energy_per_item_j;
}

}  // namespace sdcsim::codec
