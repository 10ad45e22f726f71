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

#include "sdcsim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "sdcsim/error.hpp"

namespace sdcsim::sched {

Bits bits_per_slot(double rate_bps, double slot_s) {
  if (!(rate_bps > 0.0)) return 0;
  return static_cast<Bits>(std::llround(rate_bps * slot_s));
}

std::vector<std::vector<int>> SlotGraph::isl_adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_sats));
  for (const IslLink& l : isls) {
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  for (auto& n : adj) std::sort(n.begin(), n.end());
  return adj;
}

SlotGraph build_topology(const geometry::SlotContacts& contacts, int sdc_id,
                         const link::IslSpec& isl) {
  SlotGraph g;
  g.n_sats = contacts.sat_count();
  g.sdc_id = sdc_id;
  g.gs_links.resize(static_cast<std::size_t>(contacts.gs_count()));
  for (int i = 0; i < contacts.gs_count(); ++i) g.gs_links[i] = contacts.visible(i);

  std::vector<IslLink> candidates;
  for (int a = 0; a < g.n_sats; ++a) {
    for (int b = a + 1; b < g.n_sats; ++b) {
      const double r = contacts.isl_range(a, b);
      if (r > 0.0 && r <= isl.max_range_km) candidates.push_back({a, b, r});
    }
  }
  auto key = [sdc_id](const IslLink& l) {
    const bool touches_sdc = l.a == sdc_id || l.b == sdc_id;
    return std::make_tuple(!touches_sdc, l.range_km, l.a, l.b);
  };
  std::sort(candidates.begin(), candidates.end(),
            [&](const IslLink& x, const IslLink& y) { return key(x) < key(y); });

  std::vector<int> degree(static_cast<std::size_t>(g.n_sats), 0);
  for (const IslLink& l : candidates) {
    if (degree[l.a] < isl.max_links_per_sat && degree[l.b] < isl.max_links_per_sat) {
      ++degree[l.a];
      ++degree[l.b];
      g.isls.push_back(l);
    }
  }
  std::sort(g.isls.begin(), g.isls.end(),
            [](const IslLink& x, const IslLink& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return g;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Mutable per-slot state of the allocator.
class SlotState {
 public:
  SlotState(const SlotGraph& graph, const SlotLimits& limits)
      : graph_(graph),
        limits_(limits),
        n_(graph.n_sats),
        adj_(graph.isl_adjacency()),
        flow_(static_cast<std::size_t>(n_) * n_, 0),
        load_(static_cast<std::size_t>(n_), 0) {}

  Bits residual(int from, int to) const { return limits_.isl_bits - flow(from, to); }
  Bits flow(int from, int to) const { return flow_[static_cast<std::size_t>(from) * n_ + to]; }
  double utilisation(int from, int to) const {
    return static_cast<double>(flow(from, to)) / static_cast<double>(limits_.isl_bits);
  }
  Bits load(int sat) const { return load_[sat]; }

  // Hop distance to the SDC over arcs with residual capacity and
  // utilisation <= max_util, honouring the hop limit.
  std::vector<int> distances(double max_util) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), kUnreached);
    std::deque<int> queue;
    dist[graph_.sdc_id] = 0;
    queue.push_back(graph_.sdc_id);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      if (limits_.max_hops > 0 && dist[v] >= limits_.max_hops) continue;
      for (int u : adj_[v]) {
        if (dist[u] != kUnreached || !usable(u, v, max_util)) continue;
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
    return dist;
  }

  // Satellite sequence from `sat` to the SDC, inclusive of both ends.
  std::vector<int> route(int sat) const {
    if (sat == graph_.sdc_id) return {sat};

    std::vector<double> levels;
    for (int a = 0; a < n_; ++a) {
      for (int b : adj_[a]) {
        if (residual(a, b) > 0) levels.push_back(utilisation(a, b));
      }
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    // Reachability is monotone in the utilisation ceiling.
    std::size_t lo = 0, hi = levels.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (distances(levels[mid])[sat] != kUnreached) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    const double ceiling = levels[lo];
    const std::vector<int> dist = distances(ceiling);

    std::vector<int> path{sat};
    int cur = sat;
    while (cur != graph_.sdc_id) {
      for (int next : adj_[cur]) {
        if (dist[next] == dist[cur] - 1 && usable(cur, next, ceiling)) {
          cur = next;
          break;
        }
      }
      path.push_back(cur);
    }
    return path;
  }

  Bits bottleneck(const std::vector<int>& path) const {
    Bits b = std::numeric_limits<Bits>::max();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) b = std::min(b, residual(path[i], path[i + 1]));
    return b;
  }

  void commit(const std::vector<int>& path, Bits bits) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      load_[path[i]] += bits;
      if (i + 1 < path.size()) flow_[static_cast<std::size_t>(path[i]) * n_ + path[i + 1]] += bits;
    }
  }

  std::vector<IslFlow> flows() const {
    std::vector<IslFlow> out;
    for (int a = 0; a < n_; ++a) {
      for (int b : adj_[a]) {
        if (flow(a, b) > 0) out.push_back({a, b, flow(a, b)});
      }
    }
    return out;
  }

  const std::vector<Bits>& loads() const { return load_; }

 private:
  bool usable(int from, int to, double max_util) const {
    return residual(from, to) > 0 && utilisation(from, to) <= max_util;
  }

  const SlotGraph& graph_;
  const SlotLimits& limits_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Bits> flow_;
  std::vector<Bits> load_;
};

}  // namespace

SlotAllocation allocate_slot(const SlotGraph& graph, std::span<const Demand> demands,
                             const SlotLimits& limits, int slot) {
  if (graph.sdc_id < 0 || graph.sdc_id >= graph.n_sats) {
    throw Error(ErrorKind::kInvalidArgument, "sdc id outside the satellite range");
  }
  SlotAllocation out;
  out.slot = slot;
  out.delivered.assign(static_cast<std::size_t>(graph.gs_count()), 0);

  std::vector<Demand> order(demands.begin(), demands.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const Demand& x, const Demand& y) { return x.gs_id < y.gs_id; });

  SlotState state(graph, limits);
  for (const Demand& d : order) {
    if (d.gs_id < 0 || d.gs_id >= graph.gs_count()) {
      throw Error(ErrorKind::kInvalidArgument, "demand for unknown GS " + std::to_string(d.gs_id));
    }
    Bits remaining = d.offered_bits + d.buffered_bits;
    const auto& visible = graph.gs_links[d.gs_id];
    std::vector<int> used;

    for (int ch = 0; ch < limits.channels_per_gs && remaining > 0 && limits.channel_bits > 0; ++ch) {
      const std::vector<int> dist = state.distances(std::numeric_limits<double>::infinity());
      const geometry::Contact* best = nullptr;
      auto rank = [&](const geometry::Contact& c) {
        const bool reused = std::find(used.begin(), used.end(), c.sat_id) != used.end();
        return std::make_tuple(reused, state.load(c.sat_id), c.sat_id);
      };
      for (const geometry::Contact& c : visible) {
        if (dist[c.sat_id] == kUnreached) continue;
        if (best == nullptr || rank(c) < rank(*best)) best = &c;
      }
      if (best == nullptr) break;

      const std::vector<int> path = state.route(best->sat_id);
      const Bits grant = std::min({remaining, limits.channel_bits, state.bottleneck(path)});
      state.commit(path, grant);
      remaining -= grant;
      out.delivered[d.gs_id] += grant;
      out.channels.push_back({d.gs_id, ch, best->sat_id, grant, best->range_km,
                              static_cast<int>(path.size()) - 1});
      used.push_back(best->sat_id);
    }
  }
  out.isl_flows = state.flows();
  out.sat_load = state.loads();
  return out;
}

Bits RunReport::final_backlog_bits() const {
  return std::accumulate(final_backlog.begin(), final_backlog.end(), Bits{0});
}

RunReport run(const geometry::ContactTable& contacts, const RunOptions& options,
              const std::vector<std::vector<Bits>>& offered,
              const std::vector<Bits>& initial_backlog) {
  link::validate(options.isl);
  if (offered.size() != contacts.slots.size()) {
    throw Error(ErrorKind::kInvalidArgument, "offered traffic must cover every slot");
  }
  const int n_gs = contacts.slots.empty() ? static_cast<int>(initial_backlog.size())
                                          : contacts.slots.front().gs_count();

  RunReport report;
  report.slot_s = contacts.slot_s;
  report.final_backlog = initial_backlog;
  report.final_backlog.resize(static_cast<std::size_t>(n_gs), 0);
  report.initial_backlog_bits = report.final_backlog_bits();

  const SlotLimits limits{bits_per_slot(options.channel_capacity_bps, contacts.slot_s),
                          bits_per_slot(options.isl.capacity_bps, contacts.slot_s),
                          options.channels_per_gs, options.isl.max_hops};

  double range_sum = 0.0;
  std::size_t range_count = 0;
  for (std::size_t k = 0; k < contacts.slots.size(); ++k) {
    if (offered[k].size() != static_cast<std::size_t>(n_gs)) {
      throw Error(ErrorKind::kInvalidArgument, "offered traffic must cover every GS");
    }
    const SlotGraph graph = build_topology(contacts.slots[k], options.sdc_id, options.isl);
    std::vector<Demand> demands;
    demands.reserve(static_cast<std::size_t>(n_gs));
    for (int g = 0; g < n_gs; ++g) {
      demands.push_back({g, offered[k][g], report.final_backlog[g]});
      report.offered_bits += offered[k][g];
    }
    SlotAllocation alloc = allocate_slot(graph, demands, limits, static_cast<int>(k));
    SlotTotals totals;
    for (int g = 0; g < n_gs; ++g) {
      report.final_backlog[g] += offered[k][g] - alloc.delivered[g];
      report.delivered_bits += alloc.delivered[g];
      totals.offered_bits += offered[k][g];
      totals.delivered_bits += alloc.delivered[g];
    }
    totals.backlog_bits = report.final_backlog_bits();
    report.totals.push_back(totals);
    for (const ChannelAssignment& c : alloc.channels) {
      range_sum += c.range_km;
      ++range_count;
    }
    report.slots.push_back(std::move(alloc));
  }

  const Bits owed = report.offered_bits + report.initial_backlog_bits;
  report.delivered_fraction =
      owed == 0 ? 1.0 : static_cast<double>(report.delivered_bits) / static_cast<double>(owed);
  if (range_count > 0) report.mean_slant_range_km = range_sum / static_cast<double>(range_count);
  return report;
}

}  // namespace sdcsim::sched
