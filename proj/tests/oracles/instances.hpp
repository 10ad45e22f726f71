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

// Random small scheduler instances and their max-flow relaxation.

#include <algorithm>
#include <random>
#include <vector>

#include "oracles/maxflow.hpp"
#include "sdcsim/scheduler.hpp"

namespace oracle {

struct SmallInstance {
  sdcsim::sched::SlotGraph graph;
  std::vector<sdcsim::sched::Demand> demands;
  sdcsim::sched::SlotLimits limits;
};

/// At most six nodes in total (GSs + relays + SDC). With `single_relay`,
/// every GS sees only the one relay.
inline SmallInstance random_small_instance(std::mt19937_64& rng, bool single_relay) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto coin = [&rng](double p) { return std::bernoulli_distribution(p)(rng); };

  SmallInstance inst;
  const int n_relays = single_relay ? 1 : pick(1, 3);
  const int n_gs = pick(1, 5 - n_relays);
  auto& g = inst.graph;
  g.n_sats = n_relays + 1;
  g.sdc_id = n_relays;
  g.gs_links.resize(static_cast<std::size_t>(n_gs));
  for (int i = 0; i < n_gs; ++i) {
    for (int s = 0; s < g.n_sats; ++s) {
      const bool allowed = !single_relay || s == 0;
      if (allowed && coin(0.6)) g.gs_links[i].push_back({s, 500.0 + pick(0, 2000)});
    }
  }
  for (int a = 0; a < g.n_sats; ++a) {
    for (int b = a + 1; b < g.n_sats; ++b) {
      if (coin(single_relay ? 0.85 : 0.6)) g.isls.push_back({a, b, 1000.0 + pick(0, 3000)});
    }
  }
  inst.limits.channel_bits = pick(1, 120);
  inst.limits.isl_bits = pick(1, 250);
  inst.limits.channels_per_gs = pick(1, 2);
  for (int i = 0; i < n_gs; ++i) inst.demands.push_back({i, pick(0, 200), pick(0, 100)});
  return inst;
}

/// Max-flow of the capacitated network the greedy allocator works on,
/// without channel-count or hop restrictions beyond the per-GS total.
inline std::int64_t max_flow_bound(const SmallInstance& inst) {
  const auto& g = inst.graph;
  const int n_gs = g.gs_count();
  const int source = 0;
  auto gs_node = [](int i) { return 1 + i; };
  auto sat_node = [n_gs](int s) { return 1 + n_gs + s; };
  MaxFlow mf(1 + n_gs + g.n_sats);
  const std::int64_t per_gs = inst.limits.channel_bits * inst.limits.channels_per_gs;
  for (const auto& d : inst.demands) {
    mf.add_arc(source, gs_node(d.gs_id), std::min(d.offered_bits + d.buffered_bits, per_gs));
  }
  for (int i = 0; i < n_gs; ++i) {
    for (const auto& c : g.gs_links[i]) mf.add_arc(gs_node(i), sat_node(c.sat_id), per_gs);
  }
  for (const auto& l : g.isls) {
    mf.add_arc(sat_node(l.a), sat_node(l.b), inst.limits.isl_bits);
    mf.add_arc(sat_node(l.b), sat_node(l.a), inst.limits.isl_bits);
  }
  return mf.solve(source, sat_node(g.sdc_id));
}

}  // namespace oracle
