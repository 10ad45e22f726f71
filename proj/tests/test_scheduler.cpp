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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles/instances.hpp"
#include "oracles/invariants.hpp"
#include "sdcsim/error.hpp"
#include "sdcsim/scheduler.hpp"

using namespace sdcsim;
using namespace sdcsim::sched;

namespace {

oracle::SlotRules rules_for(const SlotGraph& g, const SlotLimits& l) {
  oracle::SlotRules r;
  r.sdc_id = g.sdc_id;
  r.channels_per_gs = l.channels_per_gs;
  r.channel_bits = l.channel_bits;
  r.isl_bits = l.isl_bits;
  r.max_hops = l.max_hops;
  return r;
}

Bits total(const std::vector<Bits>& v) { return std::accumulate(v.begin(), v.end(), Bits{0}); }

}  // namespace

TEST_CASE("topology: GS that only sees the SDC gets a direct edge") {
  geometry::SlotContacts c(1, 3);
  c.visible(0).push_back({2, 600.0});
  const SlotGraph g = build_topology(c, 2, link::IslSpec{});
  REQUIRE(g.gs_links[0].size() == 1);
  CHECK(g.gs_links[0][0].sat_id == 2);
  CHECK(g.isls.empty());

  Demand d{0, 50, 0};
  const SlotAllocation a = allocate_slot(g, std::span(&d, 1), {100, 100, 2, 0});
  REQUIRE(a.channels.size() == 1);
  CHECK(a.channels[0].sat_id == 2);
  CHECK(a.channels[0].hops == 0);
  CHECK(a.delivered[0] == 50);
  CHECK(a.isl_flows.empty());
}

TEST_CASE("topology: relay with eight neighbours keeps six links") {
  // Sat 0 sees 1..8 and the SDC (9); no other pair is clear.
  geometry::SlotContacts c(0, 10);
  const double ranges[] = {0, 1000, 500, 1000, 500, 2000, 800, 2500, 900};
  for (int n = 1; n <= 8; ++n) c.set_isl(0, n, ranges[n]);
  c.set_isl(0, 9, 3000.0);
  const SlotGraph g = build_topology(c, 9, link::IslSpec{});

  // Rule oracle: SDC first, then nearest, ties by lowest id.
  std::vector<std::pair<double, int>> order;
  for (int n = 1; n <= 8; ++n) order.push_back({ranges[n], n});
  std::sort(order.begin(), order.end());
  std::set<int> expected{9};
  for (int i = 0; i < 5; ++i) expected.insert(order[i].second);

  std::set<int> kept;
  for (const auto& l : g.isls) kept.insert(l.a == 0 ? l.b : l.a);
  CHECK(g.isls.size() == 6);
  CHECK(kept == expected);
  CHECK(kept == std::set<int>{1, 2, 4, 6, 8, 9});
}

TEST_CASE("topology honours the ISL range limit") {
  geometry::SlotContacts c(0, 3);
  c.set_isl(0, 1, 4000.0);
  c.set_isl(1, 2, 7000.0);
  link::IslSpec isl;
  isl.max_range_km = 5000.0;
  const SlotGraph g = build_topology(c, 2, isl);
  REQUIRE(g.isls.size() == 1);
  CHECK(g.isls[0].a == 0);
  CHECK(g.isls[0].b == 1);
}

TEST_CASE("isolated GS keeps its demand") {
  SlotGraph g;
  g.n_sats = 2;
  g.sdc_id = 1;
  g.gs_links.resize(1);
  Demand d{0, 70, 5};
  const SlotAllocation a = allocate_slot(g, std::span(&d, 1), {100, 100, 2, 0});
  CHECK(a.channels.empty());
  CHECK(a.delivered[0] == 0);
}

TEST_CASE("load-aware spreading over two relays") {
  SlotGraph g;
  g.n_sats = 3;
  g.sdc_id = 2;
  g.gs_links = {{{0, 800.0}, {1, 900.0}}, {{0, 700.0}, {1, 750.0}}};
  g.isls = {{0, 2, 2000.0}, {1, 2, 2000.0}};
  const std::vector<Demand> d{{0, 80, 0}, {1, 80, 0}};
  const SlotAllocation a = allocate_slot(g, d, {100, 400, 2, 0});
  REQUIRE(a.channels.size() == 2);
  CHECK(a.channels[0].gs_id == 0);
  CHECK(a.channels[1].gs_id == 1);
  CHECK(a.channels[0].sat_id != a.channels[1].sat_id);
  CHECK(a.delivered == std::vector<Bits>{80, 80});
}

TEST_CASE("single relay bottleneck caps delivery at the ISL capacity") {
  // 400 Gb/s ISL, one GS offering 500 Gb/s with two 250 Gb/s channels, 1 s slot.
  SlotGraph g;
  g.n_sats = 2;
  g.sdc_id = 1;
  g.gs_links = {{{0, 900.0}}};
  g.isls = {{0, 1, 1500.0}};
  const Bits gbit = 1'000'000'000;
  Demand d{0, 500 * gbit, 0};
  const SlotAllocation a = allocate_slot(g, std::span(&d, 1), {250 * gbit, 400 * gbit, 2, 0});
  CHECK(a.delivered[0] == 400 * gbit);
  CHECK(d.offered_bits - a.delivered[0] == 100 * gbit);
  REQUIRE(a.isl_flows.size() == 1);
  CHECK(a.isl_flows[0].bits == 400 * gbit);
}

TEST_CASE("routing prefers the least utilised path, then fewer hops") {
  // Relays A=0, B=1, C=2; SDC=3. A-SDC, A-B, B-SDC, A-C, C-SDC.
  SlotGraph g;
  g.n_sats = 4;
  g.sdc_id = 3;
  g.gs_links = {{{0, 800.0}}, {{0, 800.0}}};
  g.isls = {{0, 3, 1000.0}, {0, 1, 1000.0}, {1, 3, 1000.0}, {0, 2, 1000.0}, {2, 3, 1000.0}};
  const std::vector<Demand> d{{0, 60, 0}, {1, 60, 0}};

  const SlotAllocation a = allocate_slot(g, d, {100, 100, 1, 0});
  REQUIRE(a.channels.size() == 2);
  CHECK(a.channels[0].hops == 1);
  CHECK(a.channels[1].hops == 2);
  const std::vector<std::tuple<int, int, Bits>> expected{{0, 1, 60}, {0, 3, 60}, {1, 3, 60}};
  REQUIRE(a.isl_flows.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(a.isl_flows[i].from == std::get<0>(expected[i]));
    CHECK(a.isl_flows[i].to == std::get<1>(expected[i]));
    CHECK(a.isl_flows[i].bits == std::get<2>(expected[i]));
  }

  // With a one-hop limit the second GS only gets the direct residual.
  const SlotAllocation h = allocate_slot(g, d, {100, 100, 1, 1});
  CHECK(h.delivered == std::vector<Bits>{60, 40});
  for (const auto& c : h.channels) CHECK(c.hops <= 1);
}

TEST_CASE("unknown GS in demands is rejected") {
  SlotGraph g;
  g.n_sats = 1;
  g.sdc_id = 0;
  g.gs_links.resize(1);
  Demand d{3, 10, 0};
  CHECK_THROWS_AS(allocate_slot(g, std::span(&d, 1), {10, 10, 2, 0}), Error);
}

TEST_CASE("greedy never beats max-flow and matches it on single-relay instances") {
  std::mt19937_64 rng(2024);
  int single = 0;
  for (int i = 0; i < 400; ++i) {
    const bool single_relay = i % 2 == 0;
    const auto inst = oracle::random_small_instance(rng, single_relay);
    const SlotAllocation a = allocate_slot(inst.graph, inst.demands, inst.limits);
    const Bits greedy = total(a.delivered);
    const Bits bound = oracle::max_flow_bound(inst);
    CHECK(greedy <= bound);
    if (single_relay) {
      CHECK(greedy == bound);
      ++single;
    }
    const auto v = oracle::check_slot(oracle::access_from(inst.graph), rules_for(inst.graph, inst.limits),
                                      inst.demands, a, inst.graph.n_sats);
    CHECK(v.empty());
  }
  CHECK(single == 200);
}

TEST_CASE("run: zero load, buffering and conservation") {
  // GS 0 sees the SDC only in slots 2 and 3.
  geometry::ContactTable table;
  table.slot_s = 1.0;
  for (int k = 0; k < 5; ++k) {
    geometry::SlotContacts c(1, 2);
    if (k == 2 || k == 3) c.visible(0).push_back({1, 700.0});
    table.slots.push_back(c);
  }
  RunOptions opt;
  opt.sdc_id = 1;
  opt.channel_capacity_bps = 100.0;
  opt.channels_per_gs = 2;

  const RunReport idle = run(table, opt, std::vector<std::vector<Bits>>(5, {0}));
  CHECK(idle.delivered_bits == 0);
  CHECK(idle.final_backlog_bits() == 0);
  CHECK(idle.delivered_fraction == 1.0);
  CHECK_FALSE(idle.mean_slant_range_km.has_value());

  const RunReport r = run(table, opt, std::vector<std::vector<Bits>>(5, {60}), {30});
  CHECK(r.offered_bits == 300);
  CHECK(r.initial_backlog_bits == 30);
  // Slot 2 drains 3*60+30 = 210 (two 100-bit channels cap it at 200), slot 3 the rest.
  CHECK(r.slots[2].delivered[0] == 200);
  CHECK(r.slots[3].delivered[0] == 70);
  CHECK(r.totals[3].backlog_bits == 0);
  CHECK(r.delivered_bits == 270);
  CHECK(r.final_backlog_bits() == 60);
  CHECK(r.offered_bits + r.initial_backlog_bits == r.delivered_bits + r.final_backlog_bits());
  CHECK(r.delivered_fraction == doctest::Approx(270.0 / 330.0));
  CHECK(*r.mean_slant_range_km == doctest::Approx(700.0));
}

TEST_CASE("run rejects mismatched traffic tables") {
  geometry::ContactTable table;
  table.slots.push_back(geometry::SlotContacts(2, 1));
  RunOptions opt;
  CHECK_THROWS_AS(run(table, opt, {}), Error);
  CHECK_THROWS_AS(run(table, opt, {{1}}), Error);
}

TEST_CASE("bits per slot rounding") {
  CHECK(bits_per_slot(1e11, 1.0) == 100'000'000'000);
  CHECK(bits_per_slot(1.0416666666e9, 1.0) == 1'041'666'667);
  CHECK(bits_per_slot(0.0, 1.0) == 0);
  CHECK(bits_per_slot(-5.0, 1.0) == 0);
}
