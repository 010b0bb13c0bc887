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

// Hopcroft-Karp maximum matching, Konig minimum vertex cover and the
// maximum independent set obtained as the cover's complement.

#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bipsched/error.hpp"
#include "bipsched/graph.hpp"

namespace bipsched {

struct Matching {
  /// mate[v] is v's partner or kNoVertex.
  std::vector<Vertex> mate;

  std::size_t size() const {
    std::size_t count = 0;
    for (Vertex v = 0; v < mate.size(); ++v) {
      if (mate[v] != kNoVertex && v < mate[v]) ++count;
    }
    return count;
  }

  bool matched(Vertex v) const { return mate[v] != kNoVertex; }

  /// Matched pairs as normalized edges, sorted.
  std::vector<Edge> pairs() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < mate.size(); ++v) {
      if (mate[v] != kNoVertex && v < mate[v]) out.push_back({v, mate[v]});
    }
    return out;
  }
};

/// Free left vertices are processed in ascending id order, adjacency lists in
/// ascending order, so the result is a function of the graph alone. The loop
/// ends with a layered search that finds no free right vertex, i.e. no
/// augmenting path is left.
inline Matching maximum_matching(const BipartiteGraph& g) {
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.order();
  Matching m;
  m.mate.assign(n, kNoVertex);
  const std::vector<Vertex> left = g.vertices_on(Side::kLeft);
  std::vector<std::size_t> dist(n, kInf);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<Vertex> stack;
  std::vector<Vertex> via;

  auto layer = [&]() {
    std::queue<Vertex> q;
    for (Vertex u : left) {
      if (m.mate[u] == kNoVertex) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool reached_free = false;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        const Vertex x = m.mate[w];
        if (x == kNoVertex) {
          reached_free = true;
        } else if (dist[x] == kInf) {
          dist[x] = dist[u] + 1;
          q.push(x);
        }
      }
    }
    return reached_free;
  };

  auto augment = [&](Vertex root) {
    stack.assign(1, root);
    via.clear();
    while (!stack.empty()) {
      const Vertex u = stack.back();
      const auto nbrs = g.neighbors(u);
      if (next_edge[u] == nbrs.size()) {
        dist[u] = kInf;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const Vertex w = nbrs[next_edge[u]++];
      const Vertex x = m.mate[w];
      if (x == kNoVertex) {
        via.push_back(w);
        for (std::size_t i = 0; i < stack.size(); ++i) {
          m.mate[stack[i]] = via[i];
          m.mate[via[i]] = stack[i];
        }
        return true;
      }
      if (dist[x] == dist[u] + 1) {
        via.push_back(w);
        stack.push_back(x);
      }
    }
    return false;
  };

  while (layer()) {
    std::fill(next_edge.begin(), next_edge.end(), 0);
    for (Vertex u : left) {
      if (m.mate[u] == kNoVertex) augment(u);
    }
  }
  return m;
}

/// Konig construction: Z = vertices reachable from unmatched left vertices
/// along alternating paths; cover = (L \ Z) + (R & Z). Throws kNotMaximum when
/// the search reaches an unmatched right vertex (an augmenting path), and
/// kInvalidParams when `m` is not a matching of `g`.
inline VertexSet min_vertex_cover(const BipartiteGraph& g, const Matching& m) {
  const std::size_t n = g.order();
  if (m.mate.size() != n) throw Error(ErrorCode::kInvalidParams, "matching size mismatch");
  for (Vertex v = 0; v < n; ++v) {
    const Vertex w = m.mate[v];
    if (w == kNoVertex) continue;
    if (w >= n || m.mate[w] != v || !g.adjacent(v, w)) {
      throw Error(ErrorCode::kInvalidParams,
                  "not a matching of the graph at vertex " + std::to_string(v));
    }
  }
  std::vector<bool> seen(n, false);
  std::queue<Vertex> q;
  for (Vertex u = 0; u < n; ++u) {
    if (g.side(u) == Side::kLeft && m.mate[u] == kNoVertex) {
      seen[u] = true;
      q.push(u);
    }
  }
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w] || m.mate[u] == w) continue;
      seen[w] = true;
      const Vertex x = m.mate[w];
      if (x == kNoVertex) {
        throw Error(ErrorCode::kNotMaximum,
                    "augmenting path ends at vertex " + std::to_string(w), {w});
      }
      if (!seen[x]) {
        seen[x] = true;
        q.push(x);
      }
    }
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < n; ++v) {
    if ((g.side(v) == Side::kLeft) != seen[v]) cover.push_back(v);
  }
  VertexSet out(std::move(cover), SetRole::kCover);
  if (out.size() != m.size()) {
    throw Error(ErrorCode::kNotMaximum, "cover size differs from matching size");
  }
  return out;
}

/// Maximum independent set: V minus the Konig cover. Size n - |M| = alpha(G).
inline VertexSet max_independent_set(const BipartiteGraph& g) {
  const Matching m = maximum_matching(g);
  const VertexSet cover = min_vertex_cover(g, m);
  std::vector<Vertex> rest;
  rest.reserve(g.order() - cover.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!cover.contains(v)) rest.push_back(v);
  }
  if (!is_independent(g, rest)) {
    throw Error(ErrorCode::kInternalExhaustion, "cover complement is not independent");
  }
  return VertexSet(std::move(rest), SetRole::kIndependent);
}

inline std::size_t independence_number(const BipartiteGraph& g) {
  return g.order() - maximum_matching(g).size();
}

}  // namespace bipsched
