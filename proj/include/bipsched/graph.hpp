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

// Bipartite incompatibility graph: jobs are vertices, an edge forbids the two
// jobs from sharing a machine.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bipsched/error.hpp"

namespace bipsched {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side : std::uint8_t { kLeft, kRight };

enum class SetRole : std::uint8_t { kGeneric, kIndependent, kCover, kColorClass };

/// Sorted, duplicate-free set of vertex ids with a role tag.
struct VertexSet {
  std::vector<Vertex> members;
  SetRole role = SetRole::kGeneric;

  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> vs, SetRole r = SetRole::kGeneric)
      : members(std::move(vs)), role(r) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
  }
};

class BipartiteGraph;
BipartiteGraph build_graph(std::size_t n, std::span<const Edge> edges);

/// Immutable after construction. Adjacency lists are sorted ascending; the
/// bipartition is computed once per connected component with the larger
/// side labelled kLeft (ties: the side holding the component's lowest id).
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }
  Side side(Vertex v) const { return side_[v]; }

  /// Normalized (u < v) and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::vector<Vertex> vertices_on(Side s) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
      if (side_[v] == s) out.push_back(v);
    }
    return out;
  }

  std::vector<Vertex> isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
      if (adj_[v].empty()) out.push_back(v);
    }
    return out;
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  friend BipartiteGraph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  std::vector<Side> side_;
  std::size_t max_degree_ = 0;
};

namespace detail {

// Odd cycle through tree edge paths u -> lca <- w, closed by edge (u, w).
inline std::vector<Vertex> odd_cycle(const std::vector<Vertex>& parent,
                                     const std::vector<std::size_t>& depth,
                                     Vertex u, Vertex w) {
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  while (depth[u] > depth[w]) {
    up.push_back(u);
    u = parent[u];
  }
  while (depth[w] > depth[u]) {
    down.push_back(w);
    w = parent[w];
  }
  while (u != w) {
    up.push_back(u);
    down.push_back(w);
    u = parent[u];
    w = parent[w];
  }
  up.push_back(u);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace detail

/// Validates and builds. Throws kVertexOutOfRange, kSelfLoop, kDuplicateEdge,
/// or kNotBipartite (witness = vertices of an odd cycle, in cycle order).
inline BipartiteGraph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n >= static_cast<std::size_t>(kNoVertex)) {
    throw Error(ErrorCode::kInvalidParams, "too many vertices");
  }
  BipartiteGraph g;
  g.adj_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(e.u),
                  {e.u});
    }
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (std::size_t i = 1; i < g.edges_.size(); ++i) {
    if (g.edges_[i] == g.edges_[i - 1]) {
      const Edge& e = g.edges_[i];
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") listed twice",
                  {e.u, e.v});
    }
  }
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    g.max_degree_ = std::max(g.max_degree_, a.size());
  }

  // Breadth-first 2-coloring, one component at a time.
  std::vector<std::int8_t> color(n, -1);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<std::size_t> depth(n, 0);
  g.side_.assign(n, Side::kLeft);
  std::vector<Vertex> comp;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    comp.clear();
    std::queue<Vertex> q;
    color[root] = 0;
    q.push(root);
    std::size_t zeros = 0;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      comp.push_back(u);
      if (color[u] == 0) ++zeros;
      for (Vertex w : g.adj_[u]) {
        if (color[w] == -1) {
          color[w] = static_cast<std::int8_t>(1 - color[u]);
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          throw Error(ErrorCode::kNotBipartite, "odd cycle found",
                      detail::odd_cycle(parent, depth, u, w));
        }
      }
    }
    const bool flip = zeros * 2 < comp.size();
    for (Vertex u : comp) {
      const bool left = (color[u] == 0) != flip;
      g.side_[u] = left ? Side::kLeft : Side::kRight;
    }
  }
  return g;
}

inline BipartiteGraph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline BipartiteGraph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

/// Graph plus the map from its vertex ids back to the parent graph's ids.
/// `to_parent` is strictly increasing.
struct Subgraph {
  BipartiteGraph graph;
  std::vector<Vertex> to_parent;
};

/// Component label per vertex, labels assigned in order of lowest member id.
inline std::vector<std::uint32_t> component_labels(const BipartiteGraph& g,
                                                   std::uint32_t* count = nullptr) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.order(), kUnset);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

namespace detail {

// Induced subgraph on `keep_mask`; ids renumbered in ascending parent order.
inline Subgraph induce(const BipartiteGraph& g, const std::vector<bool>& keep_mask) {
  Subgraph sub;
  std::vector<Vertex> local(g.order(), kNoVertex);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep_mask[v]) {
      local[v] = static_cast<Vertex>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep_mask[e.u] && keep_mask[e.v]) edges.push_back({local[e.u], local[e.v]});
  }
  sub.graph = build_graph(sub.to_parent.size(), edges);
  return sub;
}

}  // namespace detail

/// G - remove. Ids in `remove` outside the graph are ignored.
inline Subgraph induced_subgraph(const BipartiteGraph& g, const VertexSet& remove) {
  std::vector<bool> keep(g.order(), true);
  for (Vertex v : remove.members) {
    if (v < g.order()) keep[v] = false;
  }
  return detail::induce(g, keep);
}

inline std::vector<Subgraph> connected_components(const BipartiteGraph& g) {
  std::uint32_t count = 0;
  const auto label = component_labels(g, &count);
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < g.order(); ++v) members[label[v]].push_back(v);

  std::vector<Vertex> local(g.order(), kNoVertex);
  std::vector<std::vector<Edge>> edges(count);
  for (std::uint32_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < members[c].size(); ++i) {
      local[members[c][i]] = static_cast<Vertex>(i);
    }
  }
  for (const Edge& e : g.edges()) edges[label[e.u]].push_back({local[e.u], local[e.v]});

  std::vector<Subgraph> out;
  out.reserve(count);
  for (std::uint32_t c = 0; c < count; ++c) {
    out.push_back({build_graph(members[c].size(), edges[c]), std::move(members[c])});
  }
  return out;
}

/// True when no edge of `g` has both endpoints in `vs`.
inline bool is_independent(const BipartiteGraph& g, std::span<const Vertex> vs) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : vs) {
    if (v >= g.order()) return false;
    in[v] = true;
  }
  for (Vertex v : vs) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w]) return false;
    }
  }
  return true;
}

/// Edge-by-edge check of the cached bipartition.
inline bool bipartition_is_proper(const BipartiteGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return g.side(e.u) != g.side(e.v);
  });
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   c <comment>
//   p <n> <m>          (also accepted: "p edge <n> <m>")
//   e <u> <v>          0-based ids
//
// Without a header, n is one past the largest id seen.

inline std::string serialize_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline BipartiteGraph parse_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t line_no = 0;
  std::vector<Edge> edges;
  std::size_t implied_n = 0;

  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line_no) + ": " + what,
                {}, line_no);
  };

  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c" || tag[0] == '#') continue;
    if (tag == "p") {
      if (have_header) fail("second header line");
      std::string first;
      if (!(ls >> first)) fail("header needs <n> <m>");
      if (first == "edge" && !(ls >> first)) fail("header needs <n> <m>");
      long long nn = -1;
      long long mm = -1;
      try {
        std::size_t pos = 0;
        nn = std::stoll(first, &pos);
        if (pos != first.size()) nn = -1;
      } catch (const std::exception&) {
        nn = -1;
      }
      if (!(ls >> mm) || nn < 0 || mm < 0) fail("malformed header");
      n = static_cast<std::size_t>(nn);
      m = static_cast<std::size_t>(mm);
      have_header = true;
    } else if (tag == "e") {
      long long u = -1;
      long long v = -1;
      if (!(ls >> u >> v) || u < 0 || v < 0) fail("malformed edge line");
      std::string extra;
      if (ls >> extra) fail("trailing tokens on edge line");
      if (u == v) {
        throw Error(ErrorCode::kSelfLoop,
                    "line " + std::to_string(line_no) + ": self-loop at vertex " +
                        std::to_string(u),
                    {static_cast<Vertex>(u)}, line_no);
      }
      if (u > static_cast<long long>(kNoVertex) - 2 ||
          v > static_cast<long long>(kNoVertex) - 2) {
        fail("vertex id too large");
      }
      if (have_header && (static_cast<std::size_t>(u) >= n ||
                          static_cast<std::size_t>(v) >= n)) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "line " + std::to_string(line_no) + ": vertex id out of range", {},
                    line_no);
      }
      implied_n = std::max<std::size_t>(implied_n, std::max(u, v) + 1);
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (have_header && edges.size() != m) {
    throw Error(ErrorCode::kSyntaxError,
                "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()),
                {}, line_no);
  }
  return build_graph(have_header ? n : implied_n, edges);
}

}  // namespace bipsched
