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
#include <optional>
#include <span>
#include <vector>

#include "sdcsim/geometry.hpp"
#include "sdcsim/link_budget.hpp"

namespace sdcsim::sched {

/// Data volumes are integer bits so that run-level conservation is exact.
/// A volume per slot divided by the slot length is the corresponding rate.
using Bits = std::int64_t;

Bits bits_per_slot(double rate_bps, double slot_s);

struct IslLink {
  int a = 0;  // a < b
  int b = 0;
  double range_km = 0.0;
};

/// Per-slot network: ground access edges plus the ISLs kept under the
/// degree cap. Satellite ids index the constellation; `sdc_id` is the sink.
struct SlotGraph {
  int n_sats = 0;
  int sdc_id = 0;
  std::vector<std::vector<geometry::Contact>> gs_links;  // [gs] -> visible sats, ascending id
  std::vector<IslLink> isls;

  int gs_count() const { return static_cast<int>(gs_links.size()); }
  /// Satellite adjacency over the kept ISLs, ascending neighbour id.
  std::vector<std::vector<int>> isl_adjacency() const;
};

/// Keeps at most `max_links_per_sat` ISLs per satellite among clear
/// segments within `max_range_km`. Pairs are admitted in order: links
/// touching the SDC first, then shorter range, then lower (a, b) ids.
SlotGraph build_topology(const geometry::SlotContacts& contacts, int sdc_id,
                         const link::IslSpec& isl);

struct Demand {
  int gs_id = 0;
  Bits offered_bits = 0;
  Bits buffered_bits = 0;
};

struct SlotLimits {
  Bits channel_bits = 0;  // per GS channel per slot
  Bits isl_bits = 0;      // per ISL direction per slot
  int channels_per_gs = 2;
  int max_hops = 0;  // ISL hops from the access satellite to the SDC; 0 = unlimited
};

struct ChannelAssignment {
  int gs_id = 0;
  int channel = 0;
  int sat_id = 0;
  Bits bits = 0;
  double range_km = 0.0;
  int hops = 0;
};

struct IslFlow {
  int from = 0;
  int to = 0;
  Bits bits = 0;
};

struct SlotAllocation {
  int slot = 0;
  std::vector<ChannelAssignment> channels;
  std::vector<IslFlow> isl_flows;  // directed, ascending (from, to)
  std::vector<Bits> delivered;     // [gs]
  std::vector<Bits> sat_load;      // [sat] inflow from GSs and ISLs
};

/// Greedy load-aware allocation for one slot.
///
/// Stations are served in ascending id. Each opens up to `channels_per_gs`
/// channels; every channel goes to the visible satellite with the lowest
/// committed inflow that still has a route to the SDC (satellites this GS
/// has not used yet come first, ties by lowest id). Traffic follows the
/// route minimising the largest ISL utilisation, then hop count, then the
/// lexicographically smallest satellite sequence. Each channel carries
/// min(remaining demand, channel capacity, route residual). Relays store
/// nothing; ungranted demand stays with the GS.
SlotAllocation allocate_slot(const SlotGraph& graph, std::span<const Demand> demands,
                             const SlotLimits& limits, int slot = 0);

struct RunOptions {
  int sdc_id = 0;
  link::IslSpec isl;
  double channel_capacity_bps = 1e11;
  int channels_per_gs = 2;
};

struct SlotTotals {
  Bits offered_bits = 0;
  Bits delivered_bits = 0;
  Bits backlog_bits = 0;  // after the slot
};

struct RunReport {
  double slot_s = 1.0;
  std::vector<SlotAllocation> slots;
  std::vector<SlotTotals> totals;  // [slot]
  Bits offered_bits = 0;
  Bits initial_backlog_bits = 0;
  Bits delivered_bits = 0;
  std::vector<Bits> final_backlog;  // [gs]
  double delivered_fraction = 1.0;
  /// Mean range over all channel assignments; empty when nothing was scheduled.
  std::optional<double> mean_slant_range_km;

  Bits final_backlog_bits() const;
};

/// Runs every slot of `contacts` in order. `offered[slot][gs]` is the new
/// traffic per slot; undelivered bits carry over in each GS buffer.
RunReport run(const geometry::ContactTable& contacts, const RunOptions& options,
              const std::vector<std::vector<Bits>>& offered,
              const std::vector<Bits>& initial_backlog = {});

}  // namespace sdcsim::sched
