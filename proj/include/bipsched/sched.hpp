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

// Unit jobs on uniform machines with a bipartite incompatibility graph.
// A schedule is a coloring whose class i is the load of machine i; a load of
// k jobs on a machine of speed s finishes at k/s.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bipsched/equicolor.hpp"
#include "bipsched/error.hpp"
#include "bipsched/graph.hpp"
#include "bipsched/matching.hpp"
#include "bipsched/rational.hpp"

namespace bipsched {

/// Machine speeds, canonicalized to non-increasing order at construction.
class MachineConfig {
 public:
  explicit MachineConfig(std::vector<Rational> speeds) : speeds_(std::move(speeds)) {
    if (speeds_.empty()) throw Error(ErrorCode::kInvalidParams, "no machines");
    for (const Rational& s : speeds_) {
      if (s <= 0) throw Error(ErrorCode::kInvalidParams, "speeds must be positive");
    }
    reordered_ = !std::is_sorted(speeds_.begin(), speeds_.end(), std::greater<>());
    std::stable_sort(speeds_.begin(), speeds_.end(), std::greater<>());
  }

  static MachineConfig parse(std::string_view text) {
    return MachineConfig(parse_rational_list(text));
  }

  std::size_t m() const { return speeds_.size(); }
  const std::vector<Rational>& speeds() const { return speeds_; }
  /// 0-based: speed(0) is s1.
  const Rational& speed(std::size_t i) const { return speeds_[i]; }
  bool was_reordered() const { return reordered_; }

  Rational total_speed() const {
    Rational s = 0;
    for (const Rational& x : speeds_) s += x;
    return s;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < speeds_.size(); ++i) {
      if (i > 0) out += ',';
      out += format_rational(speeds_[i]);
    }
    return out;
  }

 private:
  std::vector<Rational> speeds_;
  bool reordered_ = false;
};

struct Schedule {
  std::string algorithm;
  Coloring assignment;
  Rational makespan = 0;

  std::vector<std::size_t> loads() const { return assignment.sizes(); }
};

struct SolveReport {
  std::string algorithm;
  Schedule schedule;
  Rational ideal_length = 0;
  std::optional<Rational> optimum;
  std::optional<Rational> ratio;
};

/// max_i |class_i| / s_i.
inline Rational c_max(const Coloring& assignment, const MachineConfig& cfg) {
  if (assignment.k() != cfg.m()) {
    throw Error(ErrorCode::kClassCountMismatch,
                std::to_string(assignment.k()) + " loads for " + std::to_string(cfg.m()) +
                    " machines");
  }
  Rational best = 0;
  for (std::size_t i = 0; i < cfg.m(); ++i) {
    best = std::max(best, Rational(static_cast<std::int64_t>(assignment.classes[i].size())) /
                              cfg.speed(i));
  }
  return best;
}

/// Length of a schedule in which every machine finishes together: n / sum(s).
/// A lower bound on the optimum that integrality may keep out of reach.
inline Rational ideal_length(std::size_t n, const MachineConfig& cfg) {
  return Rational(static_cast<std::int64_t>(n)) / cfg.total_speed();
}

inline Schedule make_schedule(std::string algorithm, Coloring assignment,
                              const MachineConfig& cfg) {
  assignment.normalize();
  Schedule s{std::move(algorithm), std::move(assignment), 0};
  s.makespan = c_max(s.assignment, cfg);
  return s;
}

inline SolveReport make_report(const Schedule& schedule, std::size_t n, const MachineConfig& cfg,
                               std::optional<Rational> optimum = std::nullopt) {
  SolveReport r{schedule.algorithm, schedule, ideal_length(n, cfg), optimum, std::nullopt};
  if (optimum && *optimum > 0) r.ratio = schedule.makespan / *optimum;
  if (optimum && *optimum == Rational(0)) r.ratio = Rational(1);
  return r;
}

namespace detail {

inline void require_machines(const MachineConfig& cfg, std::size_t m) {
  if (cfg.m() != m) {
    throw Error(ErrorCode::kClassCountMismatch,
                "expected " + std::to_string(m) + " machines, got " + std::to_string(cfg.m()));
  }
}

inline void require_degree(const BipartiteGraph& g, std::size_t limit) {
  if (g.max_degree() > limit) {
    throw Error(ErrorCode::kDegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) +
                                               " exceeds " + std::to_string(limit));
  }
}

/// Slow machines i >= from all share one speed.
inline bool tail_equal(const MachineConfig& cfg, std::size_t from) {
  for (std::size_t i = from + 1; i < cfg.m(); ++i) {
    if (cfg.speed(i) != cfg.speed(from)) return false;
  }
  return true;
}

inline std::vector<Vertex> lift(std::span<const Vertex> local, std::span<const Vertex> to_parent) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return out;
}

/// Appends the classes of `c` (vertex ids via `to_parent`) to `dst` in
/// descending size order, stable.
inline void append_by_size(Coloring& dst, const Coloring& c, std::span<const Vertex> to_parent) {
  std::vector<std::size_t> idx(c.k());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return c.classes[a].size() > c.classes[b].size();
  });
  for (std::size_t i : idx) dst.classes.push_back(lift(c.classes[i], to_parent));
}

// Maximum independent set (with the exceptional-component exchange for odd
// k) on the fast machine, equitable k-coloring of the rest on the others.
inline Coloring wide_gap_assignment(const BipartiteGraph& g, std::size_t k) {
  const VertexSet i1 = exceptional_repair(g, max_independent_set(g), k);
  const Subgraph rest = induced_subgraph(g, i1);
  const Coloring tail = equitable_coloring(rest.graph, k);
  Coloring out;
  out.classes.push_back(i1.members);
  append_by_size(out, tail, rest.to_parent);
  return out;
}

}  // namespace detail

/// Four machines with s2 = s3 = s4: a maximum independent set, cleared of
/// K33 components in the remainder, goes to M1 and an equitable 3-coloring
/// of the remainder, merged over its components, to M2..M4.
inline Schedule algorithm1(const BipartiteGraph& g, const MachineConfig& cfg) {
  detail::require_machines(cfg, 4);
  if (!detail::tail_equal(cfg, 1)) {
    throw Error(ErrorCode::kPreconditionSpeed, "algorithm 1 needs s2 = s3 = s4");
  }
  detail::require_degree(g, 4);
  return make_schedule("alg1", detail::wide_gap_assignment(g, 3), cfg);
}

/// Four machines with s3 = s4: I1 = maximum independent set of G on M1,
/// I2 = maximum independent set of G - I1 on M2, and an equitable 2-coloring
/// of G - I1 - I2 (maximum degree <= 2) on M3, M4.
inline Schedule algorithm2(const BipartiteGraph& g, const MachineConfig& cfg) {
  detail::require_machines(cfg, 4);
  if (cfg.speed(2) != cfg.speed(3)) {
    throw Error(ErrorCode::kPreconditionSpeed, "algorithm 2 needs s3 = s4");
  }
  detail::require_degree(g, 4);
  const VertexSet i1 = max_independent_set(g);
  const Subgraph h1 = induced_subgraph(g, i1);
  const VertexSet i2_local = max_independent_set(h1.graph);
  const VertexSet i2(detail::lift(i2_local.members, h1.to_parent), SetRole::kIndependent);

  std::vector<Vertex> removed = i1.members;
  removed.insert(removed.end(), i2.members.begin(), i2.members.end());
  const Subgraph h2 = induced_subgraph(g, VertexSet(std::move(removed)));
  const Coloring cd = equitable_2_coloring(h2.graph);

  Coloring out;
  out.classes.push_back(i1.members);
  out.classes.push_back(i2.members);
  detail::append_by_size(out, cd, h2.to_parent);
  return make_schedule("alg2", std::move(out), cfg);
}

/// Four machines with s3 = s4: an equitable 4-coloring of G, classes handed
/// out largest first.
inline Schedule algorithm3(const BipartiteGraph& g, const MachineConfig& cfg) {
  detail::require_machines(cfg, 4);
  if (cfg.speed(2) != cfg.speed(3)) {
    throw Error(ErrorCode::kPreconditionSpeed, "algorithm 3 needs s3 = s4");
  }
  detail::require_degree(g, 4);
  const Coloring c = equitable_4_coloring(g);
  std::vector<Vertex> ids(g.order());
  std::iota(ids.begin(), ids.end(), 0);
  Coloring out;
  detail::append_by_size(out, c, ids);
  return make_schedule("alg3", std::move(out), cfg);
}

/// True when algorithm4 delegates to algorithm2 (s2 > 3 s3); s2 = 3 s3 goes to algorithm3.
inline bool algorithm4_uses_alg2(const MachineConfig& cfg) {
  detail::require_machines(cfg, 4);
  return cfg.speed(1) > 3 * cfg.speed(2);
}

inline Schedule algorithm4(const BipartiteGraph& g, const MachineConfig& cfg) {
  detail::require_machines(cfg, 4);
  if (cfg.speed(2) != cfg.speed(3)) {
    throw Error(ErrorCode::kPreconditionSpeed, "algorithm 4 needs s3 = s4");
  }
  Schedule s = algorithm4_uses_alg2(cfg) ? algorithm2(g, cfg) : algorithm3(g, cfg);
  s.algorithm = "alg4:" + s.algorithm;
  return s;
}

/// m >= 4 machines with s2 = ... = sm and s1 >= m(m+1) s2, maximum degree
/// <= m. Same shape as algorithm1 with an equitable (m-1)-coloring; K_{m-1,m-1}
/// components of the remainder (m-1 odd) are exchanged away first.
inline Schedule schedule_wide_gap_m(const BipartiteGraph& g, const MachineConfig& cfg) {
  const std::size_t m = cfg.m();
  if (m < 4) throw Error(ErrorCode::kClassCountMismatch, "needs at least 4 machines");
  if (!detail::tail_equal(cfg, 1)) {
    throw Error(ErrorCode::kPreconditionSpeed, "needs s2 = ... = sm");
  }
  const auto factor = static_cast<std::int64_t>(m * (m + 1));
  if (cfg.speed(0) < factor * cfg.speed(1)) {
    throw Error(ErrorCode::kPreconditionSpeed,
                "needs s1 >= " + std::to_string(factor) + " * s2");
  }
  detail::require_degree(g, m);
  return make_schedule("wide-gap-m", detail::wide_gap_assignment(g, m - 1), cfg);
}

enum class Algorithm { kAlg1, kAlg2, kAlg3, kAlg4, kWideGapM };

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "1" || s == "alg1") return Algorithm::kAlg1;
  if (s == "2" || s == "alg2") return Algorithm::kAlg2;
  if (s == "3" || s == "alg3") return Algorithm::kAlg3;
  if (s == "4" || s == "alg4") return Algorithm::kAlg4;
  if (s == "auto-m" || s == "m" || s == "wide-gap-m") return Algorithm::kWideGapM;
  return std::nullopt;
}

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kAlg1: return "alg1";
    case Algorithm::kAlg2: return "alg2";
    case Algorithm::kAlg3: return "alg3";
    case Algorithm::kAlg4: return "alg4";
    case Algorithm::kWideGapM: return "wide-gap-m";
  }
  return "?";
}

inline Schedule run_algorithm(Algorithm a, const BipartiteGraph& g, const MachineConfig& cfg) {
  switch (a) {
    case Algorithm::kAlg1: return algorithm1(g, cfg);
    case Algorithm::kAlg2: return algorithm2(g, cfg);
    case Algorithm::kAlg3: return algorithm3(g, cfg);
    case Algorithm::kAlg4: return algorithm4(g, cfg);
    case Algorithm::kWideGapM: return schedule_wide_gap_m(g, cfg);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown algorithm");
}

/// Whether the speeds satisfy the algorithm's input regime (not its
/// guarantee regime).
inline bool speeds_admissible(Algorithm a, const MachineConfig& cfg) {
  switch (a) {
    case Algorithm::kAlg1: return cfg.m() == 4 && detail::tail_equal(cfg, 1);
    case Algorithm::kAlg2:
    case Algorithm::kAlg3:
    case Algorithm::kAlg4: return cfg.m() == 4 && cfg.speed(2) == cfg.speed(3);
    case Algorithm::kWideGapM:
      return cfg.m() >= 4 && detail::tail_equal(cfg, 1) &&
             cfg.speed(0) >= static_cast<std::int64_t>(cfg.m() * (cfg.m() + 1)) * cfg.speed(1);
  }
  return false;
}

}  // namespace bipsched
