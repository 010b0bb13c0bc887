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

// Equitable and semi-equitable colorings of bounded-degree bipartite graphs.
//
// A bipartite graph with maximum degree <= k has an equitable k-coloring
// unless one of its components is K_{k,k} with k odd. Colorings are built per
// connected component and merged with combine_equitable().
//
// Per component:
//   1. Seed a proper coloring from the bipartition: left vertices fill
//      classes from the front, right vertices from the back, and the one
//      class where they meet only takes right vertices without a neighbor in
//      its left part.
//   2. Shift: while two class sizes differ by >= 2, find a shortest chain of
//      classes c0 -> c1 -> ... -> ct from a largest class to one at least two
//      smaller, where each arrow has a vertex of the tail class with no
//      neighbor in the head class, and move one vertex along every arrow
//      (last arrow first). Every chain strictly lowers the sum of squared
//      class sizes and keeps the coloring proper.
//   3. If no chain exists, force equitable sizes and run a tabu search over
//      moves and two-vertex exchanges that minimizes monochromatic edges.
//   4. Components up to EquitableOptions::exact_threshold vertices fall back
//      to exhaustive search when 2-3 fail.
// Every returned coloring is validated.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bipsched/error.hpp"
#include "bipsched/graph.hpp"
#include "bipsched/matching.hpp"

namespace bipsched {

/// Partition of the vertex set into k ordered classes; classes may be empty.
struct Coloring {
  std::vector<std::vector<Vertex>> classes;

  Coloring() = default;
  explicit Coloring(std::size_t k) : classes(k) {}
  explicit Coloring(std::vector<std::vector<Vertex>> c) : classes(std::move(c)) {}

  std::size_t k() const { return classes.size(); }

  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(c.size());
    return out;
  }

  std::size_t vertex_count() const {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    return total;
  }

  /// Largest minus smallest class size; 0 for k == 0.
  std::size_t spread() const {
    if (classes.empty()) return 0;
    const auto s = sizes();
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return *hi - *lo;
  }

  void normalize() {
    for (auto& c : classes) std::sort(c.begin(), c.end());
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class ColoringType : std::uint8_t { kEquitable, kSemiEquitable, kArbitrary };

struct ColoringKind {
  ColoringType type = ColoringType::kArbitrary;
  std::optional<std::size_t> oversized_index;
};

/// True when the classes partition 0..n-1 and each class is independent.
inline bool is_proper_partition(const BipartiteGraph& g, const Coloring& c) {
  std::vector<std::uint32_t> owner(g.order(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t i = 0; i < c.k(); ++i) {
    for (Vertex v : c.classes[i]) {
      if (v >= g.order() || owner[v] != std::numeric_limits<std::uint32_t>::max()) return false;
      owner[v] = i;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (owner[v] == std::numeric_limits<std::uint32_t>::max()) return false;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return owner[e.u] != owner[e.v]; });
}

/// Classifies class sizes only; properness is checked separately. A
/// semi-equitable coloring (k >= 3) has one class whose size is outside
/// {floor(n/k), ceil(n/k)} while the others pairwise differ by at most one.
inline ColoringKind classify(const Coloring& c) {
  const std::size_t k = c.k();
  if (k == 0 || c.spread() <= 1) return {ColoringType::kEquitable, std::nullopt};
  if (k < 3) return {};
  const auto s = c.sizes();
  const std::size_t n = c.vertex_count();
  const std::size_t lo = n / k;
  const std::size_t hi = (n + k - 1) / k;
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i] == lo || s[i] == hi) continue;
    std::size_t rest_lo = std::numeric_limits<std::size_t>::max();
    std::size_t rest_hi = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      rest_lo = std::min(rest_lo, s[j]);
      rest_hi = std::max(rest_hi, s[j]);
    }
    if (rest_hi - rest_lo <= 1) return {ColoringType::kSemiEquitable, i};
  }
  return {};
}

struct EquitableOptions {
  /// Components with at most this many vertices get an exhaustive fallback.
  std::size_t exact_threshold = 16;
  std::uint64_t seed = 0x5eedULL;
  /// Tabu iterations per restart are tabu_iterations_per_vertex * n + 2000.
  std::size_t tabu_iterations_per_vertex = 50;
  std::size_t restarts = 4;
};

/// Merges colorings of disjoint vertex sets, each with k classes and spread
/// <= 1, into one equitable coloring. Parts are taken in descending total
/// size (stable); a part's classes, largest first, go to the global slots in
/// ascending current total (ties by slot index).
inline Coloring combine_equitable(std::span<const Coloring> parts, std::size_t k) {
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  for (const Coloring& p : parts) {
    if (p.k() != k) {
      throw Error(ErrorCode::kClassCountMismatch,
                  "part has " + std::to_string(p.k()) + " classes, expected " +
                      std::to_string(k));
    }
    if (p.spread() > 1) throw Error(ErrorCode::kInvalidParams, "part is not equitable");
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return parts[a].vertex_count() > parts[b].vertex_count();
  });

  Coloring out(k);
  std::vector<std::size_t> slots(k);
  std::vector<std::size_t> cls(k);
  for (std::size_t idx : order) {
    const Coloring& p = parts[idx];
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) {
      return out.classes[a].size() < out.classes[b].size();
    });
    std::iota(cls.begin(), cls.end(), 0);
    std::stable_sort(cls.begin(), cls.end(), [&](std::size_t a, std::size_t b) {
      return p.classes[a].size() > p.classes[b].size();
    });
    for (std::size_t i = 0; i < k; ++i) {
      auto& dst = out.classes[slots[i]];
      const auto& src = p.classes[cls[i]];
      dst.insert(dst.end(), src.begin(), src.end());
    }
  }
  out.normalize();
  return out;
}

namespace detail {

inline bool is_complete_kk(const BipartiteGraph& comp, std::size_t k) {
  if (comp.order() != 2 * k || comp.size() != k * k) return false;
  for (Vertex v = 0; v < comp.order(); ++v) {
    if (comp.degree(v) != k) return false;
  }
  return true;
}

/// Local search state over a coloring of one component. Proper-coloring
/// moves only come from `movable(a, b)`: vertices of class a with no neighbor
/// in class b.
class EquitableSearch {
 public:
  EquitableSearch(const BipartiteGraph& g, std::size_t k, const std::vector<std::uint32_t>& color,
                  std::uint64_t seed)
      : g_(g), k_(k), n_(g.order()), rng_(seed) {
    color_.assign(n_, 0);
    cnt_.assign(n_ * k_, 0);
    size_.assign(k_, 0);
    members_.assign(k_, {});
    member_pos_.assign(n_, 0);
    buckets_.assign(k_ * k_, {});
    bucket_pos_.assign(n_ * k_, kAbsent);
    conflict_pos_.assign(n_, kAbsent);
    for (Vertex v = 0; v < n_; ++v) {
      color_[v] = color[v];
      ++size_[color[v]];
      member_pos_[v] = members_[color[v]].size();
      members_[color[v]].push_back(v);
    }
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g_.neighbors(v)) ++cnt_[v * k_ + color_[w]];
    }
    for (Vertex v = 0; v < n_; ++v) {
      for (std::uint32_t c = 0; c < k_; ++c) {
        if (c != color_[v] && cnt_[v * k_ + c] == 0) bucket_add(color_[v], c, v);
      }
      if (cnt_[v * k_ + color_[v]] > 0) conflict_add(v);
      conflicts_ += cnt_[v * k_ + color_[v]];
    }
    conflicts_ /= 2;
  }

  const std::vector<std::uint32_t>& colors() const { return color_; }

  bool balanced() const { return spread() <= 1; }
  bool done() const { return balanced() && conflicts_ == 0; }

  /// Phase 2. Returns true when the coloring is proper and equitable.
  bool shift() {
    if (conflicts_ != 0) return false;
    std::vector<std::int64_t> prev(k_);
    std::vector<std::uint32_t> path;
    while (!balanced()) {
      const std::size_t top = *std::max_element(size_.begin(), size_.end());
      std::fill(prev.begin(), prev.end(), -2);
      std::queue<std::uint32_t> q;
      for (std::uint32_t c = 0; c < k_; ++c) {
        if (size_[c] == top) {
          prev[c] = -1;
          q.push(c);
        }
      }
      std::int64_t target = -1;
      while (!q.empty() && target < 0) {
        const std::uint32_t a = q.front();
        q.pop();
        for (std::uint32_t b = 0; b < k_; ++b) {
          if (b == a || prev[b] != -2 || buckets_[a * k_ + b].empty()) continue;
          prev[b] = a;
          if (size_[b] + 2 <= top) {
            target = b;
            break;
          }
          q.push(b);
        }
      }
      if (target < 0) return false;
      path.clear();
      for (std::int64_t c = target; c >= 0; c = prev[c]) path.push_back(static_cast<std::uint32_t>(c));
      // path runs target ... source; move along arrows nearest the target first.
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const std::uint32_t to = path[i];
        const std::uint32_t from = path[i + 1];
        const auto& bucket = buckets_[from * k_ + to];
        set_color(bucket[rng_() % bucket.size()], to);
      }
    }
    return true;
  }

  /// Phase 3. Forces equitable sizes, then minimizes monochromatic edges.
  bool tabu(std::size_t max_iters) {
    force_balance();
    if (conflicts_ == 0) return true;
    const std::size_t lo = n_ / k_;
    std::vector<std::size_t> tabu_until(n_ * k_, 0);
    std::size_t best_ever = conflicts_;
    std::vector<Vertex> conf;
    for (std::size_t iter = 1; iter <= max_iters && conflicts_ > 0; ++iter) {
      conf = conflicted_;
      if (conf.size() > 48) {
        std::shuffle(conf.begin(), conf.end(), rng_);
        conf.resize(48);
      }
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      Vertex best_u = kNoVertex;
      Vertex best_w = kNoVertex;
      std::uint32_t best_b = 0;
      std::size_t ties = 0;
      auto consider = [&](std::int64_t delta, bool is_tabu, Vertex u, Vertex w, std::uint32_t b) {
        const bool aspire = static_cast<std::int64_t>(conflicts_) + delta <
                            static_cast<std::int64_t>(best_ever);
        if (is_tabu && !aspire) return;
        if (delta < best) {
          best = delta;
          ties = 1;
        } else if (delta == best) {
          ++ties;
          if (rng_() % ties != 0) return;
        } else {
          return;
        }
        best_u = u;
        best_w = w;
        best_b = b;
      };
      std::vector<Vertex> partners;
      for (Vertex u : conf) {
        const std::uint32_t a = color_[u];
        for (std::uint32_t b = 0; b < k_; ++b) {
          if (b == a) continue;
          const std::int64_t base = static_cast<std::int64_t>(cnt_[u * k_ + b]) -
                                    static_cast<std::int64_t>(cnt_[u * k_ + a]);
          const bool u_tabu = tabu_until[u * k_ + b] > iter;
          if (size_[a] == lo + 1 && size_[b] == lo) consider(base, u_tabu, u, kNoVertex, b);
          partners.clear();
          for (Vertex w : conflicted_) {
            if (color_[w] == b) partners.push_back(w);
          }
          const auto& bucket = buckets_[b * k_ + a];
          for (int s = 0; s < 6 && !bucket.empty(); ++s) {
            partners.push_back(bucket[rng_() % bucket.size()]);
          }
          for (Vertex w : partners) {
            const std::int64_t both = g_.adjacent(u, w) ? 2 : 0;
            const std::int64_t delta = base + static_cast<std::int64_t>(cnt_[w * k_ + a]) -
                                       static_cast<std::int64_t>(cnt_[w * k_ + b]) - both;
            consider(delta, u_tabu || tabu_until[w * k_ + a] > iter, u, w, b);
          }
        }
      }
      if (best_u == kNoVertex) continue;
      const std::uint32_t a = color_[best_u];
      const std::size_t tenure = 2 + rng_() % 8 + conflicted_.size() / 2;
      move(best_u, best_b);
      tabu_until[best_u * k_ + a] = iter + tenure;
      if (best_w != kNoVertex) {
        move(best_w, a);
        tabu_until[best_w * k_ + best_b] = iter + tenure;
      }
      best_ever = std::min(best_ever, conflicts_);
    }
    return conflicts_ == 0 && balanced();
  }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  std::size_t spread() const {
    const auto [lo, hi] = std::minmax_element(size_.begin(), size_.end());
    return *hi - *lo;
  }

  void bucket_add(std::uint32_t a, std::uint32_t b, Vertex v) {
    auto& bucket = buckets_[a * k_ + b];
    bucket_pos_[v * k_ + b] = bucket.size();
    bucket.push_back(v);
  }

  void bucket_remove(std::uint32_t a, std::uint32_t b, Vertex v) {
    auto& bucket = buckets_[a * k_ + b];
    const std::size_t pos = bucket_pos_[v * k_ + b];
    const Vertex last = bucket.back();
    bucket[pos] = last;
    bucket_pos_[last * k_ + b] = pos;
    bucket.pop_back();
    bucket_pos_[v * k_ + b] = kAbsent;
  }

  void conflict_add(Vertex v) {
    if (conflict_pos_[v] != kAbsent) return;
    conflict_pos_[v] = conflicted_.size();
    conflicted_.push_back(v);
  }

  void conflict_remove(Vertex v) {
    const std::size_t pos = conflict_pos_[v];
    if (pos == kAbsent) return;
    const Vertex last = conflicted_.back();
    conflicted_[pos] = last;
    conflict_pos_[last] = pos;
    conflicted_.pop_back();
    conflict_pos_[v] = kAbsent;
  }

  void move(Vertex v, std::uint32_t b) {
    conflicts_ = conflicts_ + cnt_[v * k_ + b] - cnt_[v * k_ + color_[v]];
    set_color(v, b);
  }

  void set_color(Vertex v, std::uint32_t b) {
    const std::uint32_t a = color_[v];
    if (a == b) return;
    for (std::uint32_t c = 0; c < k_; ++c) {
      if (c != a && cnt_[v * k_ + c] == 0) bucket_remove(a, c, v);
    }
    conflict_remove(v);
    {
      auto& from = members_[a];
      const Vertex last = from.back();
      from[member_pos_[v]] = last;
      member_pos_[last] = member_pos_[v];
      from.pop_back();
    }
    color_[v] = b;
    --size_[a];
    ++size_[b];
    member_pos_[v] = members_[b].size();
    members_[b].push_back(v);
    for (std::uint32_t c = 0; c < k_; ++c) {
      if (c != b && cnt_[v * k_ + c] == 0) bucket_add(b, c, v);
    }
    if (cnt_[v * k_ + b] > 0) conflict_add(v);
    for (Vertex w : g_.neighbors(v)) {
      const std::uint32_t cw = color_[w];
      if (--cnt_[w * k_ + a] == 0) {
        if (cw != a) {
          bucket_add(cw, a, w);
        } else {
          conflict_remove(w);
        }
      }
      if (++cnt_[w * k_ + b] == 1) {
        if (cw != b) {
          bucket_remove(cw, b, w);
        } else {
          conflict_add(w);
        }
      }
    }
  }

  void force_balance() {
    while (!balanced()) {
      const auto hi = static_cast<std::uint32_t>(
          std::max_element(size_.begin(), size_.end()) - size_.begin());
      const auto lo = static_cast<std::uint32_t>(
          std::min_element(size_.begin(), size_.end()) - size_.begin());
      const auto& bucket = buckets_[hi * k_ + lo];
      if (!bucket.empty()) {
        move(bucket[rng_() % bucket.size()], lo);
        continue;
      }
      Vertex pick = members_[hi].front();
      for (Vertex v : members_[hi]) {
        if (cnt_[v * k_ + lo] < cnt_[pick * k_ + lo]) pick = v;
      }
      move(pick, lo);
    }
  }

  const BipartiteGraph& g_;
  std::size_t k_;
  std::size_t n_;
  std::mt19937_64 rng_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> cnt_;  // cnt_[v*k + c]: neighbors of v in class c
  std::vector<std::size_t> size_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::size_t> member_pos_;
  std::vector<std::vector<Vertex>> buckets_;  // buckets_[a*k + b]
  std::vector<std::size_t> bucket_pos_;
  std::vector<Vertex> conflicted_;
  std::vector<std::size_t> conflict_pos_;
  std::size_t conflicts_ = 0;
};

/// Proper seed coloring from the bipartition. `order` lists the component's
/// vertices; its left vertices fill classes 0, 1, ... and its right vertices
/// fill classes k-1, k-2, ... up to the equitable sizes.
inline std::vector<std::uint32_t> seed_coloring(const BipartiteGraph& g, std::size_t k,
                                                const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cap(k, n / k);
  for (std::size_t c = 0; c < n % k; ++c) ++cap[c];
  std::vector<std::uint32_t> color(n, 0);
  std::vector<std::size_t> size(k, 0);

  std::vector<Vertex> left;
  std::vector<Vertex> right;
  for (Vertex v : order) (g.side(v) == Side::kLeft ? left : right).push_back(v);

  std::uint32_t c = 0;
  for (Vertex v : left) {
    while (c + 1 < k && size[c] == cap[c]) ++c;
    color[v] = c;
    ++size[c];
  }
  const std::uint32_t mixed = c;
  // Right vertices adjacent to the mixed class's left part go first so that
  // they land in pure classes.
  std::vector<bool> in_mixed(n, false);
  for (Vertex v : left) {
    if (color[v] == mixed) in_mixed[v] = true;
  }
  std::stable_partition(right.begin(), right.end(), [&](Vertex w) {
    const auto nb = g.neighbors(w);
    return std::any_of(nb.begin(), nb.end(), [&](Vertex x) { return in_mixed[x]; });
  });
  std::int64_t d = static_cast<std::int64_t>(k) - 1;
  for (Vertex w : right) {
    while (d > static_cast<std::int64_t>(mixed) && size[d] == cap[d]) --d;
    std::uint32_t to = static_cast<std::uint32_t>(d);
    if (to == mixed) {
      const auto nb = g.neighbors(w);
      const bool clash = std::any_of(nb.begin(), nb.end(), [&](Vertex x) { return in_mixed[x]; });
      if (clash) {
        // Overfill the smallest pure right class; the shift phase rebalances.
        to = static_cast<std::uint32_t>(k);
        for (std::uint32_t e = mixed + 1; e < k; ++e) {
          if (to == k || size[e] < size[to]) to = e;
        }
        if (to == k) {
          // No pure right class: any class without left neighbors of w.
          for (std::uint32_t e = 0; e < k && to == k; ++e) {
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex x) { return color[x] == e; })) {
              to = e;
            }
          }
        }
      }
    }
    color[w] = to;
    ++size[to];
  }
  return color;
}

inline std::vector<Vertex> bfs_order(const BipartiteGraph& g, Vertex root) {
  std::vector<Vertex> order;
  std::vector<bool> seen(g.order(), false);
  for (Vertex start = 0; start < g.order(); ++start) {
    const Vertex r = start == 0 ? root : start;
    if (seen[r]) continue;
    seen[r] = true;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      const Vertex u = order[head++];
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

/// Exhaustive equitable k-coloring of a small graph (depth-first, classes
/// opened in index order). Returns nullopt when none exists or when the node
/// limit is hit.
inline std::optional<std::vector<std::uint32_t>> exact_equitable(const BipartiteGraph& g,
                                                                 std::size_t k,
                                                                 std::size_t node_limit) {
  const std::size_t n = g.order();
  const std::size_t lo = n / k;
  const std::size_t big_allowed = n % k;
  const std::vector<Vertex> order = bfs_order(g, 0);
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> color(n, kUnset);
  std::vector<std::size_t> size(k, 0);
  std::size_t big = 0;
  std::size_t nodes = 0;

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (++nodes > node_limit) return false;
    if (i == n) return true;
    std::size_t deficit = 0;
    for (std::size_t c = 0; c < k; ++c) deficit += size[c] < lo ? lo - size[c] : 0;
    if (deficit > n - i) return false;
    const Vertex v = order[i];
    bool opened = false;
    for (std::uint32_t c = 0; c < k; ++c) {
      if (size[c] == 0) {
        if (opened) continue;
        opened = true;
      }
      if (size[c] > lo || (size[c] == lo && big == big_allowed)) continue;
      const auto nb = g.neighbors(v);
      if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return color[w] == c; })) continue;
      const bool grows_big = size[c] == lo;
      color[v] = c;
      ++size[c];
      if (grows_big) ++big;
      if (self(self, i + 1)) return true;
      if (grows_big) --big;
      --size[c];
      color[v] = kUnset;
    }
    return false;
  };
  if (rec(rec, 0)) return color;
  return std::nullopt;
}

inline bool coloring_ok(const BipartiteGraph& g, std::size_t k,
                        const std::vector<std::uint32_t>& color) {
  std::vector<std::size_t> size(k, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (color[v] >= k) return false;
    ++size[color[v]];
  }
  const auto [lo, hi] = std::minmax_element(size.begin(), size.end());
  if (*hi - *lo > 1) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return color[e.u] != color[e.v]; });
}

/// Equitable k-coloring of one connected component (local ids).
inline std::vector<std::uint32_t> equitable_component(const BipartiteGraph& comp, std::size_t k,
                                                      const EquitableOptions& opt) {
  const std::size_t n = comp.order();
  if (comp.size() == 0) {
    std::vector<std::uint32_t> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = static_cast<std::uint32_t>(v % k);
    return color;
  }
  std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  std::vector<Vertex> order = bfs_order(comp, 0);
  const std::size_t iters = opt.tabu_iterations_per_vertex * n + 2000;
  for (std::size_t attempt = 0; attempt <= opt.restarts; ++attempt) {
    if (attempt > 0) order = bfs_order(comp, static_cast<Vertex>(rng() % n));
    EquitableSearch search(comp, k, seed_coloring(comp, k, order), rng());
    if (search.shift() || search.tabu(iters)) {
      if (coloring_ok(comp, k, search.colors())) return search.colors();
    }
  }
  if (n <= opt.exact_threshold) {
    if (auto exact = exact_equitable(comp, k, std::size_t{50'000'000})) {
      if (coloring_ok(comp, k, *exact)) return *exact;
    }
  }
  throw Error(ErrorCode::kInternalExhaustion,
              "equitable " + std::to_string(k) + "-coloring search failed on a component of " +
                  std::to_string(n) + " vertices");
}

inline Coloring to_coloring(const std::vector<std::uint32_t>& color, std::size_t k,
                            std::span<const Vertex> to_parent) {
  Coloring c(k);
  for (Vertex v = 0; v < color.size(); ++v) c.classes[color[v]].push_back(to_parent[v]);
  c.normalize();
  return c;
}

}  // namespace detail

/// Equitable k-coloring of a bipartite graph with maximum degree <= k.
/// Throws kDegreeTooHigh, or (when k is odd and a component is K_{k,k})
/// kK33Component for k == 3 and kEquitableInfeasible otherwise, with the
/// component's vertices as witness.
inline Coloring equitable_coloring(const BipartiteGraph& g, std::size_t k,
                                   const EquitableOptions& opt = {}) {
  if (k == 0) throw Error(ErrorCode::kInvalidParams, "k must be positive");
  if (g.max_degree() > k) {
    throw Error(ErrorCode::kDegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) +
                                               " exceeds " + std::to_string(k));
  }
  const auto comps = connected_components(g);
  if (k % 2 == 1) {
    for (const auto& c : comps) {
      if (detail::is_complete_kk(c.graph, k)) {
        throw Error(k == 3 ? ErrorCode::kK33Component : ErrorCode::kEquitableInfeasible,
                    "component is K_{" + std::to_string(k) + "," + std::to_string(k) + "}",
                    c.to_parent);
      }
    }
  }
  std::vector<Coloring> parts;
  parts.reserve(comps.size());
  for (const auto& c : comps) {
    parts.push_back(detail::to_coloring(detail::equitable_component(c.graph, k, opt), k,
                                        c.to_parent));
  }
  Coloring out = combine_equitable(parts, k);
  if (!is_proper_partition(g, out) || out.spread() > 1) {
    throw Error(ErrorCode::kInternalExhaustion, "merged coloring failed validation");
  }
  return out;
}

/// Disjoint paths and even cycles.
inline Coloring equitable_2_coloring(const BipartiteGraph& g) {
  if (g.max_degree() > 2) throw Error(ErrorCode::kDegreeTooHigh, "2-coloring needs degree <= 2");
  return equitable_coloring(g, 2);
}

inline Coloring equitable_3_coloring(const BipartiteGraph& g) {
  if (g.max_degree() > 3) throw Error(ErrorCode::kDegreeTooHigh, "3-coloring needs degree <= 3");
  return equitable_coloring(g, 3);
}

/// Class sizes are ceil(n/4), ceil((n-1)/4), ceil((n-2)/4), ceil((n-3)/4) in
/// some order.
inline Coloring equitable_4_coloring(const BipartiteGraph& g) {
  if (g.max_degree() > 4) throw Error(ErrorCode::kDegreeTooHigh, "4-coloring needs degree <= 4");
  return equitable_coloring(g, 4);
}

/// Removes K_{k,k} components (k odd) from G - I1 by exchanging, in each
/// such component, its lowest-id vertex v having exactly one neighbor u in I1
/// with that neighbor: I1' = I1 + v - u. Components are handled in ascending
/// order of their lowest id; the graph is re-examined after each pass.
///
/// Throws kNotIndependent, kNotMaximum (|I1| < alpha), kEquitableInfeasible
/// when a component has no vertex with a unique I1-neighbor.
inline VertexSet exceptional_repair(const BipartiteGraph& g, const VertexSet& i1, std::size_t k) {
  if (!is_independent(g, i1.members)) {
    throw Error(ErrorCode::kNotIndependent, "I1 is not an independent set");
  }
  if (i1.size() != independence_number(g)) {
    throw Error(ErrorCode::kNotMaximum, "I1 is not a maximum independent set");
  }
  VertexSet current(i1.members, SetRole::kIndependent);
  if (k % 2 == 0) return current;

  std::vector<bool> in(g.order(), false);
  for (Vertex v : current.members) in[v] = true;
  std::size_t cap = 0;
  for (std::size_t pass = 0;; ++pass) {
    const Subgraph rest = induced_subgraph(g, current);
    std::vector<std::vector<Vertex>> bad;
    for (const auto& c : connected_components(rest.graph)) {
      if (!detail::is_complete_kk(c.graph, k)) continue;
      std::vector<Vertex> ids;
      for (Vertex local : c.to_parent) ids.push_back(rest.to_parent[local]);
      bad.push_back(std::move(ids));
    }
    if (bad.empty()) return current;
    if (pass == 0) cap = bad.size();
    if (pass >= cap) {
      throw Error(ErrorCode::kInternalExhaustion, "exceptional components keep reappearing");
    }
    for (const auto& comp : bad) {
      Vertex pick = kNoVertex;
      Vertex partner = kNoVertex;
      for (Vertex v : comp) {
        std::size_t hits = 0;
        Vertex only = kNoVertex;
        for (Vertex w : g.neighbors(v)) {
          if (in[w]) {
            ++hits;
            only = w;
          }
        }
        if (hits == 1) {
          pick = v;
          partner = only;
          break;
        }
      }
      if (pick == kNoVertex) {
        throw Error(ErrorCode::kEquitableInfeasible,
                    "no exchange vertex in a K_{" + std::to_string(k) + "," +
                        std::to_string(k) + "} component",
                    comp);
      }
      in[partner] = false;
      in[pick] = true;
    }
    std::vector<Vertex> next;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (in[v]) next.push_back(v);
    }
    if (!is_independent(g, next)) {
      throw Error(ErrorCode::kInternalExhaustion, "exchange broke independence");
    }
    current = VertexSet(std::move(next), SetRole::kIndependent);
  }
}

/// Step-2 exchange of the four-machine pipeline: K33 components of G - I1.
inline VertexSet k33_repair(const BipartiteGraph& g, const VertexSet& i1) {
  return exceptional_repair(g, i1, 3);
}

}  // namespace bipsched
