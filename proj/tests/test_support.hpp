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

// Instance pools shared by the property tests and the acceptance suite.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bipsched.hpp"

namespace bipsched::testing {

struct PoolInstance {
  std::string id;
  BipartiteGraph graph;
};

namespace internal {

// Biadjacency rows (bit j = edge to right vertex j) with a left part of
// `rows` vertices and a right part of `cols` vertices.
using Rows = std::vector<unsigned>;

inline unsigned permute_columns(unsigned row, const std::vector<int>& perm) {
  unsigned out = 0;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (row >> j & 1u) out |= 1u << perm[j];
  }
  return out;
}

// Canonical form under independent row and column permutations: the
// smallest sorted row list over all column permutations.
inline Rows canonical(const Rows& rows, int cols) {
  std::vector<int> perm(static_cast<std::size_t>(cols));
  std::iota(perm.begin(), perm.end(), 0);
  Rows best;
  do {
    Rows r;
    r.reserve(rows.size());
    for (unsigned row : rows) r.push_back(permute_columns(row, perm));
    std::sort(r.begin(), r.end());
    if (best.empty() || r < best) best = std::move(r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool admissible(const Rows& rows, int cols, std::size_t max_degree) {
  for (int j = 0; j < cols; ++j) {
    std::size_t deg = 0;
    for (unsigned row : rows) deg += row >> j & 1u;
    if (deg == 0 || deg > max_degree) return false;
  }
  return true;
}

inline BipartiteGraph from_rows(const Rows& rows, int cols) {
  const auto left = static_cast<Vertex>(rows.size());
  std::vector<Edge> edges;
  for (Vertex i = 0; i < left; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (rows[i] >> j & 1u) edges.push_back({i, left + static_cast<Vertex>(j)});
    }
  }
  return build_graph(left + static_cast<std::size_t>(cols), edges);
}

}  // namespace internal

/// Every isolate-free bipartite graph with at most `max_n` vertices and
/// maximum degree at most `max_degree`, deduplicated up to permutations
/// within each side of a fixed bipartition. Graphs with several
/// bipartitions (disconnected ones) may appear more than once.
inline std::vector<PoolInstance> small_graph_pool(std::size_t max_n, std::size_t max_degree = 4) {
  std::vector<PoolInstance> out;
  for (int n = 2; n <= static_cast<int>(max_n); ++n) {
    for (int cols = 1; cols <= n / 2; ++cols) {
      const int rows = n - cols;
      std::vector<unsigned> masks;
      for (unsigned m = 1; m < (1u << cols); ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) <= max_degree) masks.push_back(m);
      }
      std::set<internal::Rows> seen;
      internal::Rows current;
      // Nondecreasing sequences of row masks, i.e. row multisets.
      std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (static_cast<int>(current.size()) == rows) {
          if (!internal::admissible(current, cols, max_degree)) return;
          if (seen.insert(internal::canonical(current, cols)).second) {
            out.push_back({"small-n" + std::to_string(n) + "-" + std::to_string(out.size()),
                           internal::from_rows(current, cols)});
          }
          return;
        }
        for (std::size_t i = from; i < masks.size(); ++i) {
          current.push_back(masks[i]);
          extend(i);
          current.pop_back();
        }
      };
      extend(0);
    }
  }
  return out;
}

/// Seeded random instances: n = 10 + seed % 5, isolate-free, maximum
/// degree at most 4, density cycling through 0.4 .. 1.0.
inline std::vector<PoolInstance> random_pool(std::size_t count, std::uint64_t first_seed = 1) {
  std::vector<PoolInstance> out;
  out.reserve(count);
  for (std::uint64_t seed = first_seed; seed < first_seed + count; ++seed) {
    const std::size_t n = 10 + seed % 5;
    const double density = 0.4 + 0.1 * static_cast<double>(seed % 7);
    out.push_back({"random-n" + std::to_string(n) + "-s" + std::to_string(seed),
                   random_bounded(n, 4, density, seed, true)});
  }
  return out;
}

}  // namespace bipsched::testing
