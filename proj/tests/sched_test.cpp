// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "bipsched/generators.hpp"
#include "bipsched/oracle.hpp"
#include "bipsched/sched.hpp"

namespace bipsched {
namespace {

using Loads = std::vector<std::size_t>;

MachineConfig speeds(std::initializer_list<std::int64_t> s) {
  std::vector<Rational> v;
  for (auto x : s) v.emplace_back(x);
  return MachineConfig(std::move(v));
}

void expect_feasible(const BipartiteGraph& g, const Schedule& s, const MachineConfig& cfg) {
  const auto report = verify_schedule(g, s, cfg);
  EXPECT_TRUE(report.ok) << to_string(report.violation) << ": " << report.detail;
}

TEST(MachineConfig, SortsDescendingAndFlagsReorder) {
  const auto cfg = MachineConfig::parse("1,2,3,4");
  EXPECT_TRUE(cfg.was_reordered());
  EXPECT_EQ(cfg.speed(0), Rational(4));
  EXPECT_EQ(cfg.speed(3), Rational(1));
  EXPECT_EQ(cfg.total_speed(), Rational(10));
  EXPECT_FALSE(MachineConfig::parse("3/2,1,1,1").was_reordered());
  EXPECT_EQ(MachineConfig::parse("3/2,1,1,1").speed(0), Rational(3, 2));
}

TEST(MachineConfig, RejectsBadSpeeds) {
  EXPECT_THROW(MachineConfig(std::vector<Rational>{}), Error);
  EXPECT_THROW(MachineConfig::parse("1,0,1"), Error);
  EXPECT_THROW(MachineConfig::parse("1,-2"), Error);
  EXPECT_THROW(MachineConfig::parse("1,x"), Error);
}

TEST(CMax, Examples) {
  const auto cfg = speeds({12, 1, 1, 1});
  Coloring c(4);
  EXPECT_EQ(c_max(c, cfg), Rational(0));
  for (Vertex v = 0; v < 12; ++v) c.classes[0].push_back(v);
  c.classes[1] = {12};
  c.classes[2] = {13};
  c.classes[3] = {14};
  EXPECT_EQ(c_max(c, cfg), Rational(1));

  // [6,1,1,0] with speeds (s1, s1, s3, s3) is max{6/s1, 1/s3}.
  Coloring t(4);
  t.classes[0] = {0, 1, 2, 3, 4, 5};
  t.classes[1] = {6};
  t.classes[2] = {7};
  EXPECT_EQ(c_max(t, speeds({5, 5, 1, 1})), Rational(6, 5));
  EXPECT_EQ(c_max(t, speeds({7, 7, 1, 1})), Rational(1));
  EXPECT_THROW(c_max(Coloring(3), cfg), Error);
}

TEST(IdealLength, Examples) {
  EXPECT_EQ(ideal_length(15, speeds({12, 1, 1, 1})), Rational(1));
  EXPECT_EQ(ideal_length(0, speeds({12, 1, 1, 1})), Rational(0));
  EXPECT_EQ(ideal_length(8, speeds({3, 3, 1, 1})), Rational(1));
}

TEST(Algorithm1, StarForest) {
  const auto g = star_forest(3, 4);
  const auto slow = speeds({2, 1, 1, 1});
  const auto s = algorithm1(g, slow);
  EXPECT_EQ(s.loads(), (Loads{12, 1, 1, 1}));
  EXPECT_EQ(s.makespan, Rational(6));
  expect_feasible(g, s, slow);

  const auto fast = speeds({12, 1, 1, 1});
  const auto t = algorithm1(g, fast);
  EXPECT_EQ(t.loads(), (Loads{12, 1, 1, 1}));
  EXPECT_EQ(t.makespan, Rational(1));
  EXPECT_EQ(t.algorithm, "alg1");
}

TEST(Algorithm1, SingleEdge) {
  const auto s = algorithm1(path_graph(2), speeds({12, 1, 1, 1}));
  EXPECT_EQ(s.loads(), (Loads{1, 1, 0, 0}));
  EXPECT_EQ(s.makespan, Rational(1));
}

TEST(Algorithm1, Preconditions) {
  EXPECT_THROW(algorithm1(path_graph(2), speeds({12, 2, 1, 1})), Error);
  EXPECT_THROW(algorithm1(path_graph(2), speeds({12, 1, 1})), Error);
  try {
    algorithm1(star_forest(1, 5), speeds({12, 1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeTooHigh);
  }
}

TEST(Algorithm1, RepairsK33RemainderBeforeColoring) {
  const auto g = k33_with_pendants(0x3f);
  const auto cfg = speeds({12, 1, 1, 1});
  const auto s = algorithm1(g, cfg);
  expect_feasible(g, s, cfg);
  EXPECT_EQ(s.makespan, opt_makespan(g, cfg));
}

TEST(Algorithm2, Examples) {
  const auto ds = double_star(3, 3);
  const auto s = algorithm2(ds, speeds({9, 9, 1, 1}));
  EXPECT_EQ(s.loads(), (Loads{6, 1, 1, 0}));
  expect_feasible(ds, s, speeds({9, 9, 1, 1}));

  const auto k33 = complete_bipartite(3, 3);
  const auto t = algorithm2(k33, speeds({3, 3, 1, 1}));
  EXPECT_EQ(t.loads(), (Loads{3, 3, 0, 0}));
  EXPECT_EQ(t.makespan, Rational(1));

  const auto e = algorithm2(path_graph(2), speeds({3, 3, 1, 1}));
  EXPECT_EQ(e.loads(), (Loads{1, 1, 0, 0}));
  EXPECT_EQ(e.makespan, Rational(1, 3));
}

TEST(Algorithm3, Examples) {
  const auto cfg = speeds({3, 3, 1, 1});
  const auto s = algorithm3(star_forest(3, 4), cfg);
  EXPECT_EQ(s.loads(), (Loads{4, 4, 4, 3}));
  EXPECT_EQ(s.makespan, Rational(4));

  const auto p = algorithm3(path_graph(7), cfg);
  EXPECT_EQ(p.loads(), (Loads{2, 2, 2, 1}));
  EXPECT_EQ(p.makespan, Rational(2));

  EXPECT_EQ(algorithm3(build_graph(4, {}), speeds({5, 2, 1, 1})).loads(), (Loads{1, 1, 1, 1}));
  EXPECT_THROW(algorithm3(path_graph(2), speeds({3, 3, 2, 1})), Error);
}

TEST(Algorithm4, DispatchBoundaryGoesToAlgorithm3) {
  EXPECT_TRUE(algorithm4_uses_alg2(speeds({9, 4, 1, 1})));
  EXPECT_FALSE(algorithm4_uses_alg2(speeds({3, 3, 1, 1})));
  EXPECT_FALSE(algorithm4_uses_alg2(speeds({6, 6, 2, 2})));
  EXPECT_EQ(algorithm4(path_graph(5), speeds({9, 4, 1, 1})).algorithm, "alg4:alg2");
  EXPECT_EQ(algorithm4(path_graph(5), speeds({3, 3, 1, 1})).algorithm, "alg4:alg3");
}

TEST(WideGap, MatchesAlgorithm1ForFourMachines) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_bounded(40, 4, 0.8, seed, true);
    const auto cfg = speeds({20, 1, 1, 1});
    const auto a = algorithm1(g, cfg);
    const auto b = schedule_wide_gap_m(g, cfg);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.makespan, b.makespan);
  }
}

TEST(WideGap, FiveMachines) {
  const auto cfg = speeds({30, 1, 1, 1, 1});
  const auto g = star_forest(4, 5);
  const auto s = schedule_wide_gap_m(g, cfg);
  EXPECT_EQ(s.loads(), (Loads{20, 1, 1, 1, 1}));
  EXPECT_EQ(s.makespan, Rational(1));
  expect_feasible(g, s, cfg);

  const auto e = schedule_wide_gap_m(path_graph(2), cfg);
  EXPECT_EQ(e.loads(), (Loads{1, 1, 0, 0, 0}));
  EXPECT_EQ(e.makespan, Rational(1, 1));

  EXPECT_THROW(schedule_wide_gap_m(path_graph(2), speeds({29, 1, 1, 1, 1})), Error);
}

TEST(WideGap, SixMachinesWithK55Remainder) {
  // K5,5 plus one pendant per vertex: a maximum independent set of pendants
  // leaves K5,5, which has no equitable 5-coloring until one swap.
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = 5; b < 10; ++b) edges.push_back({a, b});
  }
  for (Vertex v = 0; v < 10; ++v) edges.push_back({v, 10 + v});
  const auto g = build_graph(20, edges);
  const auto cfg = speeds({42, 1, 1, 1, 1, 1});
  const auto s = schedule_wide_gap_m(g, cfg);
  expect_feasible(g, s, cfg);
  EXPECT_EQ(s.loads().front(), 10u);
}

TEST(RunAlgorithm, NamesAndAdmissibility) {
  EXPECT_EQ(parse_algorithm("1"), Algorithm::kAlg1);
  EXPECT_EQ(parse_algorithm("auto-m"), Algorithm::kWideGapM);
  EXPECT_FALSE(parse_algorithm("5").has_value());
  EXPECT_TRUE(speeds_admissible(Algorithm::kAlg1, speeds({2, 1, 1, 1})));
  EXPECT_FALSE(speeds_admissible(Algorithm::kAlg1, speeds({3, 3, 1, 1})));
  EXPECT_TRUE(speeds_admissible(Algorithm::kAlg4, speeds({3, 3, 1, 1})));
  EXPECT_FALSE(speeds_admissible(Algorithm::kWideGapM, speeds({19, 1, 1, 1})));
  EXPECT_TRUE(speeds_admissible(Algorithm::kWideGapM, speeds({20, 1, 1, 1})));
}

TEST(Report, RatioAgainstOptimum) {
  const auto g = star_forest(3, 4);
  const auto cfg = speeds({2, 1, 1, 1});
  const auto s = algorithm1(g, cfg);
  const auto r = make_report(s, g.order(), cfg, opt_makespan(g, cfg));
  EXPECT_EQ(r.ratio, Rational(2));
  EXPECT_EQ(r.ideal_length, Rational(3));
}

}  // namespace
}  // namespace bipsched
