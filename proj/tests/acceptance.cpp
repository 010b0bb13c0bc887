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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact rational
// comparisons; the bounds below are the only tolerances.
//
// Instance pool: (a) every isolate-free bipartite graph with maximum degree
// at most 4 and at most 9 vertices, deduplicated up to permutations within
// the sides of a fixed bipartition; (b) 500 seeded random isolate-free
// graphs with 10 to 14 vertices.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

#ifndef BIPSCHED_BENCH_CONFIG
#error "BIPSCHED_BENCH_CONFIG must name the bench config used for the determinism check"
#endif

namespace {

using namespace bipsched;
using bipsched::testing::PoolInstance;

constexpr std::size_t kSmallPoolMaxN = 9;
constexpr std::size_t kRandomPoolSize = 500;
constexpr std::size_t kOracleVertices = 16;

// Pinned bounds (exact; no floating-point slack anywhere).
const Rational kExactRatio(1);
const Rational kRatioTwo(2);
const Rational kRatio32Over15(32, 15);

const OracleBudget kBudget{.max_vertices = kOracleVertices};

MachineConfig speeds(std::initializer_list<Rational> s) { return MachineConfig(std::vector(s)); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string witness;

  void fail(const std::string& what) {
    if (pass) witness = what;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!o.detail.empty()) std::cout << " | " << o.detail;
  if (!o.pass && !o.witness.empty()) std::cout << " | first failure: " << o.witness;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

std::string describe(const PoolInstance& inst, const MachineConfig& cfg, const Rational& got,
                     const Rational& opt) {
  return inst.id + " speeds " + cfg.to_string() + " cmax " + format_rational(got) + " opt " +
         format_rational(opt) + " ratio " + format_rational(got / opt);
}

// Memoized optimum per (instance, speeds).
class OptimumCache {
 public:
  explicit OptimumCache(const std::vector<PoolInstance>& pool) : pool_(pool) {}

  const Rational& get(std::size_t i, const MachineConfig& cfg) {
    auto& slot = cache_[cfg.to_string()];
    if (slot.empty()) slot.resize(pool_.size());
    if (!slot[i]) slot[i] = opt_makespan(pool_[i].graph, cfg, kBudget);
    return *slot[i];
  }

 private:
  const std::vector<PoolInstance>& pool_;
  std::map<std::string, std::vector<std::optional<Rational>>> cache_;
};

// Runs `alg` over the pool under `cfg`, checks ratio <= bound, tracks the
// maximum ratio.
void ratio_sweep(const std::vector<PoolInstance>& pool, OptimumCache& opt, const MachineConfig& cfg,
                 const std::function<Schedule(const BipartiteGraph&, const MachineConfig&)>& alg,
                 const Rational& bound, Outcome& out, Rational& max_ratio,
                 std::string* max_witness = nullptr) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& inst = pool[i];
    const Schedule s = alg(inst.graph, cfg);
    if (!verify_schedule(inst.graph, s, cfg).ok) {
      out.fail(inst.id + " speeds " + cfg.to_string() + ": infeasible schedule");
      continue;
    }
    const Rational& best = opt.get(i, cfg);
    const Rational ratio = s.makespan / best;
    if (ratio > max_ratio) {
      max_ratio = ratio;
      if (max_witness) *max_witness = describe(inst, cfg, s.makespan, best);
    }
    if (ratio > bound) out.fail(describe(inst, cfg, s.makespan, best));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  std::vector<PoolInstance> pool = bipsched::testing::small_graph_pool(kSmallPoolMaxN);
  const std::size_t small_count = pool.size();
  for (auto& inst : bipsched::testing::random_pool(kRandomPoolSize)) pool.push_back(std::move(inst));
  std::cout << "pool: " << small_count << " small graphs (n <= " << kSmallPoolMaxN << "), "
            << kRandomPoolSize << " random graphs (10 <= n <= 14)" << std::endl;
  for (const auto& inst : pool) {
    if (!inst.graph.isolated_vertices().empty() || inst.graph.max_degree() > 4) {
      std::cout << "FAIL pool construction: " << inst.id << " is not isolate-free with degree <= 4"
                << std::endl;
      return 1;
    }
  }
  OptimumCache opt(pool);

  // The search oracle is checked against plain enumeration on the small
  // pool before any criterion relies on it.
  {
    std::size_t pairs = 0;
    for (const auto& cfg : {speeds({12, 1, 1, 1}), speeds({2, 1, 1, 1}), speeds({3, 3, 1, 1}),
                            speeds({9, 4, 1, 1}), speeds({6, 3, 1, 1})}) {
      for (std::size_t i = 0; i < small_count; ++i) {
        ++pairs;
        if (opt.get(i, cfg) != opt_makespan_enumeration(pool[i].graph, cfg, kBudget)) {
          std::cout << "FAIL oracle cross-check: " << pool[i].id << " speeds " << cfg.to_string()
                    << std::endl;
          return 1;
        }
      }
    }
    std::cout << "oracle cross-check: search and enumeration agree on " << pairs << " pairs"
              << std::endl;
  }

  const auto star3 = star_forest(3, 4);
  const auto path7 = path_graph(7);

  // 1. Optimality of algorithm1 at speeds (12,1,1,1).
  {
    Outcome o;
    const auto cfg = speeds({12, 1, 1, 1});
    std::size_t checked = 0;
    for (const auto& inst : pool) {
      const Schedule a = algorithm1(inst.graph, cfg);
      const Schedule best = opt_schedule(inst.graph, cfg, kBudget);
      ++checked;
      if (!verify_schedule(inst.graph, a, cfg).ok) o.fail(inst.id + ": infeasible schedule");
      if (a.makespan / best.makespan != kExactRatio) o.fail(describe(inst, cfg, a.makespan, best.makespan));
    }
    o.detail = std::to_string(checked) + " instances, zero tolerance";
    report(1, "algorithm1 equals the optimum at speeds (12,1,1,1)", o);
  }

  // 2. Ratio at most 2 at speeds (2,1,1,1), attained on three K1,4 stars.
  {
    Outcome o;
    const auto cfg = speeds({2, 1, 1, 1});
    Rational max_ratio(0);
    ratio_sweep(pool, opt, cfg, algorithm1, kRatioTwo, o, max_ratio);
    const Rational c = algorithm1(star3, cfg).makespan;
    const Rational best = opt_makespan(star3, cfg);
    if (!(c == Rational(6) && best == Rational(3) && c / best == kRatioTwo)) {
      o.fail("3K1,4: cmax " + format_rational(c) + " opt " + format_rational(best));
    }
    o.detail = "pool max ratio " + format_rational(max_ratio) + "; 3K1,4 cmax " +
               format_rational(c) + " opt " + format_rational(best);
    report(2, "algorithm1 ratio <= 2 at speeds (2,1,1,1), tight on 3K1,4", o);
  }

  // 3. algorithm2 ratio at most 32/15.
  {
    Outcome o;
    std::ostringstream detail;
    for (const auto& cfg : {speeds({3, 3, 1, 1}), speeds({9, 4, 1, 1}), speeds({6, 3, 1, 1})}) {
      Rational max_ratio(0);
      ratio_sweep(pool, opt, cfg, algorithm2, kRatio32Over15, o, max_ratio);
      detail << "max " << format_rational(max_ratio) << " at (" << cfg.to_string() << ") ";
    }
    o.detail = detail.str() + "vs bound 32/15";
    report(3, "algorithm2 ratio <= 32/15 at (3,3,1,1), (9,4,1,1), (6,3,1,1)", o);
  }

  // 4. algorithm3 ratio at most 2 at (3,3,1,1), attained on 3K1,4 and P7.
  {
    Outcome o;
    const auto cfg = speeds({3, 3, 1, 1});
    Rational max_ratio(0);
    ratio_sweep(pool, opt, cfg, algorithm3, kRatioTwo, o, max_ratio);
    const Schedule s = algorithm3(star3, cfg);
    const Rational s_opt = opt_makespan(star3, cfg);
    if (!(s.loads() == std::vector<std::size_t>{4, 4, 4, 3} && s.makespan == Rational(4) &&
          s_opt == Rational(2))) {
      o.fail("3K1,4: cmax " + format_rational(s.makespan) + " opt " + format_rational(s_opt));
    }
    const Schedule p = algorithm3(path7, cfg);
    const Rational p_opt = opt_makespan(path7, cfg);
    if (!(p.makespan == Rational(2) && p_opt == Rational(1))) {
      o.fail("P7: cmax " + format_rational(p.makespan) + " opt " + format_rational(p_opt));
    }
    o.detail = "pool max ratio " + format_rational(max_ratio) + "; 3K1,4 " +
               format_rational(s.makespan) + " vs " + format_rational(s_opt) + "; P7 " +
               format_rational(p.makespan) + " vs " + format_rational(p_opt);
    report(4, "algorithm3 ratio <= 2 at (3,3,1,1), tight on 3K1,4 and P7", o);
  }

  // 5. algorithm4 ratio at most 32/15 over a grid with s3 = s4 = 1 crossing
  //    s2 = 3 s3: s2 in {1..5}, s1 in {s2, 3/2 s2, 2 s2, 4 s2}.
  {
    Outcome o;
    Rational max_ratio(0);
    std::string max_witness;
    std::size_t vectors = 0;
    std::size_t violating_vectors = 0;
    std::string violating_list;
    for (std::int64_t s2 = 1; s2 <= 5; ++s2) {
      for (const Rational factor : {Rational(1), Rational(3, 2), Rational(2), Rational(4)}) {
        const auto cfg = speeds({factor * s2, Rational(s2), 1, 1});
        Outcome local;
        Rational local_max(0);
        ratio_sweep(pool, opt, cfg, algorithm4, kRatio32Over15, local, local_max);
        ++vectors;
        if (!local.pass) {
          ++violating_vectors;
          violating_list += (violating_list.empty() ? "" : " ") + cfg.to_string();
          o.fail(local.witness);
        }
        if (local_max > max_ratio) {
          max_ratio = local_max;
          max_witness = cfg.to_string();
        }
      }
    }
    o.detail = std::to_string(vectors) + " speed vectors, " + std::to_string(violating_vectors) +
               " with violations; max ratio " + format_rational(max_ratio) + " at (" +
               max_witness + ")";
    if (!violating_list.empty()) o.detail += "; violating: " + violating_list;
    report(5, "algorithm4 ratio <= 32/15 on a grid with s3 = s4 across s2 = 3 s3", o);
  }

  // 6. Matching route and exact search agree on the independence number.
  {
    Outcome o;
    for (const auto& inst : pool) {
      const std::size_t by_matching = inst.graph.order() - maximum_matching(inst.graph).size();
      const std::size_t exact = alpha_exact(inst.graph, kBudget);
      const VertexSet mis = max_independent_set(inst.graph);
      if (by_matching != exact || mis.size() != exact ||
          !is_independent(inst.graph, mis.members)) {
        o.fail(inst.id + ": n - |M| = " + std::to_string(by_matching) + ", exact " +
               std::to_string(exact) + ", set size " + std::to_string(mis.size()));
      }
    }
    o.detail = std::to_string(pool.size()) + " instances";
    report(6, "n - |maximum matching| equals the exact independence number", o);
  }

  // 7. n/2 <= alpha <= 4n/5 on isolate-free graphs with maximum degree <= 4.
  {
    Outcome o;
    for (const auto& inst : pool) {
      const auto n = static_cast<std::int64_t>(inst.graph.order());
      const auto a = static_cast<std::int64_t>(alpha_exact(inst.graph, kBudget));
      if (!(Rational(n, 2) <= Rational(a) && Rational(a) <= Rational(4 * n, 5))) {
        o.fail(inst.id + ": n " + std::to_string(n) + " alpha " + std::to_string(a));
      }
    }
    o.detail = std::to_string(pool.size()) + " instances";
    report(7, "n/2 <= alpha <= 4n/5", o);
  }

  // 8. Equitable colorings and the K3,3 repair.
  {
    Outcome o;
    std::size_t colorings = 0;
    auto check = [&](const std::string& id, const BipartiteGraph& g, const Coloring& c,
                     std::size_t k) {
      ++colorings;
      if (c.k() != k || !is_proper_partition(g, c) || c.spread() > 1) {
        o.fail(id + ": equitable " + std::to_string(k) + "-coloring invalid");
      }
    };
    for (const auto& inst : pool) {
      const auto& g = inst.graph;
      check(inst.id, g, equitable_4_coloring(g), 4);
      const VertexSet i1 = k33_repair(g, max_independent_set(g));
      const Subgraph rest = induced_subgraph(g, i1);
      if (rest.graph.max_degree() > 3) o.fail(inst.id + ": degree of G - I1 above 3");
      check(inst.id, rest.graph, equitable_3_coloring(rest.graph), 3);
      const VertexSet i2 = max_independent_set(rest.graph);
      const Subgraph rest2 = induced_subgraph(rest.graph, i2);
      check(inst.id, rest2.graph, equitable_2_coloring(rest2.graph), 2);
    }
    if (equitable_exists_exact(complete_bipartite(3, 3), 3, kBudget)) {
      o.fail("exact search found an equitable 3-coloring of K3,3");
    }
    try {
      equitable_3_coloring(complete_bipartite(3, 3));
      o.fail("equitable_3_coloring accepted K3,3");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kK33Component) o.fail(std::string("K3,3: ") + e.what());
    }
    for (unsigned pattern = 1; pattern < 64; ++pattern) {
      const auto g = k33_with_pendants(pattern);
      const VertexSet i1 = k33_repair(g, max_independent_set(g));
      const Subgraph rest = induced_subgraph(g, i1);
      if (rest.graph.max_degree() > 3) {
        o.fail("pendant pattern " + std::to_string(pattern) + ": degree above 3");
      }
      for (const Subgraph& comp : connected_components(rest.graph)) {
        if (detail::is_complete_kk(comp.graph, 3)) {
          o.fail("pendant pattern " + std::to_string(pattern) + ": K3,3 component left");
        }
      }
    }
    o.detail = std::to_string(colorings) + " colorings checked; 63 pendant patterns";
    report(8, "equitable colorings proper with spread <= 1; K3,3 handling and repair", o);
  }

  // 9. ideal_length is a lower bound on the optimum, met on 3K1,4 at
  //    (12,1,1,1).
  {
    Outcome o;
    std::size_t pairs = 0;
    std::size_t equal = 0;
    for (const auto& cfg : {speeds({12, 1, 1, 1}), speeds({2, 1, 1, 1}), speeds({3, 3, 1, 1}),
                            speeds({9, 4, 1, 1}), speeds({6, 3, 1, 1})}) {
      for (std::size_t i = 0; i < pool.size(); ++i) {
        const Rational lower = ideal_length(pool[i].graph.order(), cfg);
        const Rational& best = opt.get(i, cfg);
        ++pairs;
        if (lower > best) o.fail(describe(pool[i], cfg, lower, best));
        if (lower == best) ++equal;
      }
    }
    const auto fast = speeds({12, 1, 1, 1});
    const Rational star_lower = ideal_length(star3.order(), fast);
    const Rational star_opt = opt_makespan(star3, fast);
    if (star_lower != star_opt || star_opt != Rational(1)) {
      o.fail("3K1,4 at (12,1,1,1): ideal " + format_rational(star_lower) + " opt " +
             format_rational(star_opt));
    }
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(equal) +
               " with equality; 3K1,4 ideal = opt = " + format_rational(star_opt);
    report(9, "ideal_length <= optimum, with equality observed", o);
  }

  // 10. The bench is byte-for-byte reproducible.
  {
    Outcome o;
    const std::string text = read_file(BIPSCHED_BENCH_CONFIG);
    const BenchConfig cfg = parse_bench_config(text);
    const std::string first = format_bench(run_bench(cfg), false);
    const std::string second = format_bench(run_bench(cfg), false);
    if (text.empty()) o.fail("bench config is empty or missing");
    if (first != second) o.fail("two runs differ");
    o.detail = std::to_string(std::count(first.begin(), first.end(), '\n')) +
               " output lines compared";
    report(10, "bench output identical across runs", o);
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
