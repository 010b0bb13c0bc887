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

// Exact reference solvers for small instances. Nothing here calls into the
// matching or coloring code; graphs are re-encoded as bitmasks.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bipsched/equicolor.hpp"
#include "bipsched/error.hpp"
#include "bipsched/graph.hpp"
#include "bipsched/rational.hpp"
#include "bipsched/sched.hpp"

namespace bipsched {

struct OracleBudget {
  std::size_t max_vertices = 16;
  std::size_t max_states = 200'000'000;
};

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const BipartiteGraph& g, const OracleBudget& budget) {
  if (g.order() > budget.max_vertices || g.order() > 64) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(g.order()) + " vertices exceeds oracle budget of " +
                    std::to_string(std::min<std::size_t>(budget.max_vertices, 64)));
  }
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

/// Depth-first search for an assignment of every vertex to a machine such
/// that machine j holds between lo[j] and hi[j] pairwise non-adjacent
/// vertices. Vertices are placed in `order`; machines are tried in index
/// order, so with the identity order and no symmetry breaking the first hit
/// is the lexicographically smallest assignment. With `break_symmetry`,
/// machines sharing (lo, hi) are interchangeable and an empty machine is
/// only opened when no earlier machine of its group is empty.
class LoadSearch {
 public:
  LoadSearch(const std::vector<Mask>& adj, std::vector<std::size_t> lo,
             std::vector<std::size_t> hi, std::vector<Vertex> order, bool break_symmetry,
             std::size_t max_states)
      : adj_(adj),
        lo_(std::move(lo)),
        hi_(std::move(hi)),
        order_(std::move(order)),
        m_(lo_.size()),
        n_(adj.size()),
        max_states_(max_states),
        load_(m_, 0),
        mask_(m_, 0),
        assign_(n_, 0),
        group_first_(m_) {
    for (std::size_t j = 0; j < m_; ++j) {
      group_first_[j] = j;
      if (!break_symmetry) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (lo_[i] == lo_[j] && hi_[i] == hi_[j]) {
          group_first_[j] = group_first_[i];
          break;
        }
      }
    }
  }

  std::optional<std::vector<std::uint8_t>> run() {
    std::size_t need = 0;
    std::size_t room = 0;
    for (std::size_t j = 0; j < m_; ++j) {
      if (lo_[j] > hi_[j]) return std::nullopt;
      need += lo_[j];
      room += hi_[j];
    }
    if (need > n_ || room < n_) return std::nullopt;
    if (rec(0)) return assign_;
    return std::nullopt;
  }

  std::size_t states() const { return states_; }

 private:
  bool rec(std::size_t i) {
    if (++states_ > max_states_) {
      throw Error(ErrorCode::kBudgetExceeded, "oracle state budget exhausted");
    }
    if (i == n_) return true;
    const std::size_t remaining = n_ - i;
    std::size_t need = 0;
    std::size_t room = 0;
    for (std::size_t j = 0; j < m_; ++j) {
      need += lo_[j] > load_[j] ? lo_[j] - load_[j] : 0;
      room += hi_[j] - load_[j];
    }
    if (need > remaining || room < remaining) return false;
    // Every pending vertex must still have somewhere to go.
    for (std::size_t t = i; t < n_; ++t) {
      const Mask a = adj_[order_[t]];
      bool any = false;
      for (std::size_t j = 0; j < m_ && !any; ++j) {
        any = load_[j] < hi_[j] && (a & mask_[j]) == 0;
      }
      if (!any) return false;
    }
    const Vertex v = order_[i];
    const Mask bit = Mask{1} << v;
    for (std::size_t j = 0; j < m_; ++j) {
      if (load_[j] == hi_[j] || (adj_[v] & mask_[j]) != 0) continue;
      if (load_[j] == 0 && group_first_[j] != j && earlier_empty(j)) continue;
      ++load_[j];
      mask_[j] |= bit;
      assign_[v] = static_cast<std::uint8_t>(j);
      if (rec(i + 1)) return true;
      --load_[j];
      mask_[j] &= ~bit;
    }
    return false;
  }

  bool earlier_empty(std::size_t j) const {
    for (std::size_t i = group_first_[j]; i < j; ++i) {
      if (group_first_[i] == group_first_[j] && load_[i] == 0) return true;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  std::vector<std::size_t> lo_;
  std::vector<std::size_t> hi_;
  std::vector<Vertex> order_;
  std::size_t m_;
  std::size_t n_;
  std::size_t max_states_;
  std::size_t states_ = 0;
  std::vector<std::size_t> load_;
  std::vector<Mask> mask_;
  std::vector<std::uint8_t> assign_;
  std::vector<std::size_t> group_first_;
};

/// Breadth-first from high-degree vertices, so neighbors are placed close
/// together and conflicts surface early.
inline std::vector<Vertex> search_order(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  std::vector<Vertex> order;
  Mask seen = 0;
  for (Vertex root : by_degree) {
    if (seen & (Mask{1} << root)) continue;
    seen |= Mask{1} << root;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const Vertex u = order[head++];
      Mask fresh = adj[u] & ~seen;
      while (fresh) {
        const auto w = static_cast<Vertex>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        seen |= Mask{1} << w;
        order.push_back(w);
      }
    }
  }
  return order;
}

inline std::vector<std::size_t> caps_for(const Rational& t, const MachineConfig& cfg,
                                         std::size_t n) {
  std::vector<std::size_t> hi(cfg.m());
  for (std::size_t j = 0; j < cfg.m(); ++j) {
    const std::int64_t c = floor_of(t * cfg.speed(j));
    hi[j] = static_cast<std::size_t>(std::clamp<std::int64_t>(c, 0, static_cast<std::int64_t>(n)));
  }
  return hi;
}

inline Coloring coloring_from(const std::vector<std::uint8_t>& assign, std::size_t m) {
  Coloring c(m);
  for (Vertex v = 0; v < assign.size(); ++v) c.classes[assign[v]].push_back(v);
  return c;
}

}  // namespace detail

/// Optimal makespan by exact search. Candidate values j/s_i are tried in
/// ascending order starting at the ideal-length bound; each is a
/// feasibility search with capacities floor(T * s_i).
inline Rational opt_makespan(const BipartiteGraph& g, const MachineConfig& cfg,
                             const OracleBudget& budget = {}) {
  const auto adj = detail::adjacency_masks(g, budget);
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::set<Rational> candidates;
  for (std::size_t j = 0; j < cfg.m(); ++j) {
    for (std::size_t c = 1; c <= n; ++c) {
      candidates.insert(Rational(static_cast<std::int64_t>(c)) / cfg.speed(j));
    }
  }
  const Rational lower = ideal_length(n, cfg);
  const auto order = detail::search_order(adj);
  for (auto it = candidates.lower_bound(lower); it != candidates.end(); ++it) {
    auto hi = detail::caps_for(*it, cfg, n);
    std::size_t room = 0;
    for (std::size_t h : hi) room += h;
    if (room < n) continue;
    detail::LoadSearch search(adj, std::vector<std::size_t>(cfg.m(), 0), std::move(hi), order,
                              true, budget.max_states);
    if (search.run()) return *it;
  }
  throw Error(ErrorCode::kInternalExhaustion, "no feasible makespan found");
}

/// Provably optimal schedule. Among optimal schedules the one with the
/// lexicographically smallest load vector is returned, and among those the
/// lexicographically smallest job-to-machine vector.
inline Schedule opt_schedule(const BipartiteGraph& g, const MachineConfig& cfg,
                             const OracleBudget& budget = {}) {
  const Rational best = opt_makespan(g, cfg, budget);
  const auto adj = detail::adjacency_masks(g, budget);
  const std::size_t n = g.order();
  const std::size_t m = cfg.m();
  const auto cap = detail::caps_for(best, cfg, n);
  const auto order = detail::search_order(adj);

  std::vector<std::size_t> lo(m, 0);
  std::vector<std::size_t> hi = cap;
  for (std::size_t j = 0; j < m; ++j) {
    bool fixed = false;
    for (std::size_t l = 0; l <= cap[j] && !fixed; ++l) {
      lo[j] = hi[j] = l;
      detail::LoadSearch search(adj, lo, hi, order, true, budget.max_states);
      fixed = search.run().has_value();
    }
    if (!fixed) throw Error(ErrorCode::kInternalExhaustion, "load vector search failed");
  }
  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  detail::LoadSearch search(adj, lo, hi, identity, false, budget.max_states);
  const auto assign = search.run();
  if (!assign) throw Error(ErrorCode::kInternalExhaustion, "assignment search failed");
  return make_schedule("optimal", detail::coloring_from(*assign, m), cfg);
}

/// Second, independent route: plain enumeration of every proper assignment
/// (pruned only by independence), keeping the minimum makespan.
inline Rational opt_makespan_enumeration(const BipartiteGraph& g, const MachineConfig& cfg,
                                         const OracleBudget& budget = {}) {
  const auto adj = detail::adjacency_masks(g, budget);
  const std::size_t n = g.order();
  const std::size_t m = cfg.m();
  std::vector<std::size_t> load(m, 0);
  std::vector<detail::Mask> mask(m, 0);
  std::optional<Rational> best;
  std::size_t states = 0;
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (++states > budget.max_states) {
      throw Error(ErrorCode::kBudgetExceeded, "enumeration state budget exhausted");
    }
    if (v == n) {
      Rational span = 0;
      for (std::size_t j = 0; j < m; ++j) {
        span = std::max(span, Rational(static_cast<std::int64_t>(load[j])) / cfg.speed(j));
      }
      if (!best || span < *best) best = span;
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (adj[v] & mask[j]) continue;
      ++load[j];
      mask[j] |= detail::Mask{1} << v;
      self(self, v + 1);
      --load[j];
      mask[j] &= ~(detail::Mask{1} << v);
    }
  };
  rec(rec, 0);
  return best.value_or(Rational(0));
}

/// Independence number by include/exclude branching with a size bound.
inline std::size_t alpha_exact(const BipartiteGraph& g, const OracleBudget& budget = {}) {
  const auto adj = detail::adjacency_masks(g, budget);
  const std::size_t n = g.order();
  const detail::Mask all = n == 64 ? ~detail::Mask{0} : (detail::Mask{1} << n) - 1;
  std::size_t best = 0;
  std::size_t states = 0;
  auto rec = [&](auto&& self, detail::Mask pool, std::size_t size) -> void {
    if (++states > budget.max_states) {
      throw Error(ErrorCode::kBudgetExceeded, "alpha search state budget exhausted");
    }
    if (pool == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(pool)) <= best) return;
    const auto v = static_cast<Vertex>(std::countr_zero(pool));
    const detail::Mask bit = detail::Mask{1} << v;
    self(self, pool & ~bit & ~adj[v], size + 1);
    if (adj[v] & pool) self(self, pool & ~bit, size);
  };
  rec(rec, all, 0);
  return best;
}

/// Exact test for an equitable k-coloring; the witness is returned when one
/// exists.
inline std::optional<Coloring> equitable_exists_exact(const BipartiteGraph& g, std::size_t k,
                                                      const OracleBudget& budget = {}) {
  if (k == 0) throw Error(ErrorCode::kInvalidParams, "k must be positive");
  const auto adj = detail::adjacency_masks(g, budget);
  const std::size_t n = g.order();
  const std::size_t lo = n / k;
  const std::size_t hi = lo + (n % k == 0 ? 0 : 1);
  detail::LoadSearch search(adj, std::vector<std::size_t>(k, lo), std::vector<std::size_t>(k, hi),
                            detail::search_order(adj), true, budget.max_states);
  if (auto a = search.run()) {
    Coloring c = detail::coloring_from(*a, k);
    return c;
  }
  return std::nullopt;
}

enum class Violation {
  kNone,
  kClassCountMismatch,
  kInvalidJob,
  kDuplicateJob,
  kPartitionIncomplete,
  kIndependenceViolation,
  kMakespanMismatch,
};

inline std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "None";
    case Violation::kClassCountMismatch: return "ClassCountMismatch";
    case Violation::kInvalidJob: return "InvalidJob";
    case Violation::kDuplicateJob: return "DuplicateJob";
    case Violation::kPartitionIncomplete: return "PartitionIncomplete";
    case Violation::kIndependenceViolation: return "IndependenceViolation";
    case Violation::kMakespanMismatch: return "MakespanMismatch";
  }
  return "?";
}

struct VerifyReport {
  bool ok = true;
  Violation violation = Violation::kNone;
  std::string detail;
};

/// Checks machine count, that every job appears exactly once, that every
/// load is independent and that the stored makespan is the recomputed one.
/// Stops at the first violation.
inline VerifyReport verify_schedule(const BipartiteGraph& g, const Schedule& s,
                                    const MachineConfig& cfg) {
  auto fail = [](Violation v, std::string what) { return VerifyReport{false, v, std::move(what)}; };
  if (s.assignment.k() != cfg.m()) {
    return fail(Violation::kClassCountMismatch,
                std::to_string(s.assignment.k()) + " loads for " + std::to_string(cfg.m()) +
                    " machines");
  }
  std::vector<std::size_t> machine(g.order(), cfg.m());
  for (std::size_t i = 0; i < cfg.m(); ++i) {
    for (Vertex v : s.assignment.classes[i]) {
      if (v >= g.order()) {
        return fail(Violation::kInvalidJob, "job " + std::to_string(v) + " does not exist");
      }
      if (machine[v] != cfg.m()) {
        return fail(Violation::kDuplicateJob, "job " + std::to_string(v) + " on M" +
                                                  std::to_string(machine[v] + 1) + " and M" +
                                                  std::to_string(i + 1));
      }
      machine[v] = i;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (machine[v] == cfg.m()) {
      return fail(Violation::kPartitionIncomplete, "job " + std::to_string(v) + " is unassigned");
    }
  }
  for (const Edge& e : g.edges()) {
    if (machine[e.u] == machine[e.v]) {
      return fail(Violation::kIndependenceViolation,
                  "jobs " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                      " are incompatible but share M" + std::to_string(machine[e.u] + 1));
    }
  }
  const Rational actual = c_max(s.assignment, cfg);
  if (actual != s.makespan) {
    return fail(Violation::kMakespanMismatch, "stored makespan " + format_rational(s.makespan) +
                                                  ", recomputed " + format_rational(actual));
  }
  return {};
}

}  // namespace bipsched
