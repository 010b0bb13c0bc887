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

// Named graph families. All generators are deterministic; random_bounded is
// deterministic per seed on every platform (std::mt19937_64 output is fixed
// by the standard, and bounded draws do not go through std distributions).

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bipsched/error.hpp"
#include "bipsched/graph.hpp"

namespace bipsched {

enum class Family {
  kStarForest,
  kK33WithPendants,
  kDoubleStar,
  kPath,
  kCycle,
  kCompleteBipartite,
  kRandomBounded,
};

struct FamilyParams {
  std::size_t n = 0;          // path, cycle, random
  std::size_t stars = 1;      // star forest
  std::size_t leaves = 4;     // star forest
  std::size_t a = 3;          // double star, complete bipartite
  std::size_t b = 3;          // double star, complete bipartite
  unsigned pendants = 0x3f;   // K33 pendant pattern, bit i = pendant on vertex i
  std::size_t max_degree = 4; // random
  double density = 0.6;       // random: fraction of max_degree * n / 2 edges
  std::uint64_t seed = 0;     // random
  bool isolate_free = false;  // random: attach isolated vertices afterwards
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::kStarForest: return "star-forest";
    case Family::kK33WithPendants: return "k33-pendants";
    case Family::kDoubleStar: return "double-star";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kCompleteBipartite: return "complete-bipartite";
    case Family::kRandomBounded: return "random";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kStarForest, Family::kK33WithPendants, Family::kDoubleStar,
                   Family::kPath, Family::kCycle, Family::kCompleteBipartite,
                   Family::kRandomBounded}) {
    if (family_name(f) == name) return f;
  }
  std::string alt(name);
  for (char& c : alt) {
    if (c == '_') c = '-';
  }
  if (alt != name) return parse_family(alt);
  return std::nullopt;
}

/// k disjoint copies of K_{1,leaves}; star i has center i*(leaves+1).
inline BipartiteGraph star_forest(std::size_t stars, std::size_t leaves) {
  if (stars == 0 || leaves == 0) {
    throw Error(ErrorCode::kInvalidParams, "star forest needs stars >= 1 and leaves >= 1");
  }
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < stars; ++s) {
    const auto c = static_cast<Vertex>(s * (leaves + 1));
    for (std::size_t l = 1; l <= leaves; ++l) edges.push_back({c, static_cast<Vertex>(c + l)});
  }
  return build_graph(stars * (leaves + 1), edges);
}

inline BipartiteGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    }
  }
  return build_graph(a + b, edges);
}

/// K33 on 0..5 (sides {0,1,2} and {3,4,5}); for every set bit i of the
/// pattern a pendant vertex is attached to i. Pendants are numbered 6, 7, ...
/// in increasing i.
inline BipartiteGraph k33_with_pendants(unsigned pattern) {
  if (pattern > 0x3f) throw Error(ErrorCode::kInvalidParams, "pendant pattern has 6 bits");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 3; ++i) {
    for (Vertex j = 3; j < 6; ++j) edges.push_back({i, j});
  }
  Vertex next = 6;
  for (Vertex i = 0; i < 6; ++i) {
    if ((pattern >> i) & 1U) edges.push_back({i, next++});
  }
  return build_graph(next, edges);
}

/// Adjacent centers 0 and 1; center 0 carries leaves 2..a+1, center 1 the
/// next b leaves.
inline BipartiteGraph double_star(std::size_t a, std::size_t b) {
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < a; ++i) edges.push_back({0, next++});
  for (std::size_t i = 0; i < b; ++i) edges.push_back({1, next++});
  return build_graph(next, edges);
}

inline BipartiteGraph path_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidParams, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

inline BipartiteGraph cycle_graph(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidParams, "cycle must have even length >= 4");
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return build_graph(n, edges);
}

namespace detail {

// Unbiased draw in [0, bound) straight from the engine output.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// Random bipartite graph with maximum degree <= max_degree. Sides are drawn
/// uniformly; edges are sampled between sides until density * max_degree *
/// n / 2 edges exist or the attempt budget runs out.
inline BipartiteGraph random_bounded(std::size_t n, std::size_t max_degree, double density,
                                     std::uint64_t seed, bool isolate_free = false) {
  if (n == 0 || max_degree == 0 || !(density >= 0.0) || density > 1.0) {
    throw Error(ErrorCode::kInvalidParams,
                "random graph needs n >= 1, max degree >= 1, density in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> sides[2];
  std::vector<std::uint8_t> side_of(n);
  for (Vertex v = 0; v < n; ++v) {
    side_of[v] = static_cast<std::uint8_t>(detail::draw_below(rng, 2));
  }
  if (n >= 2 && std::all_of(side_of.begin(), side_of.end(),
                            [&](std::uint8_t s) { return s == side_of[0]; })) {
    side_of[n - 1] ^= 1U;
  }
  for (Vertex v = 0; v < n; ++v) sides[side_of[v]].push_back(v);

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  auto linked = [&](Vertex u, Vertex w) {
    return std::find(adj[u].begin(), adj[u].end(), w) != adj[u].end();
  };
  auto link = [&](Vertex u, Vertex w) {
    adj[u].push_back(w);
    adj[w].push_back(u);
    edges.push_back({u, w});
  };

  const std::size_t cap = std::min<std::size_t>(
      sides[0].size() * sides[1].size(),
      max_degree * std::min(sides[0].size(), sides[1].size()));
  const auto target = std::min<std::size_t>(
      cap, static_cast<std::size_t>(
               std::llround(density * static_cast<double>(max_degree * n / 2))));
  if (!sides[0].empty() && !sides[1].empty()) {
    const std::size_t budget = 50 * target + 100;
    for (std::size_t attempt = 0; attempt < budget && edges.size() < target; ++attempt) {
      const Vertex u = sides[0][detail::draw_below(rng, sides[0].size())];
      const Vertex w = sides[1][detail::draw_below(rng, sides[1].size())];
      if (adj[u].size() < max_degree && adj[w].size() < max_degree && !linked(u, w)) {
        link(u, w);
      }
    }
    if (isolate_free) {
      auto with_room = [&](const std::vector<Vertex>& pool) {
        for (int tries = 0; tries < 64; ++tries) {
          const Vertex w = pool[detail::draw_below(rng, pool.size())];
          if (adj[w].size() < max_degree) return w;
        }
        for (Vertex w : pool) {
          if (adj[w].size() < max_degree) return w;
        }
        return kNoVertex;
      };
      auto unlink = [&](Vertex u, Vertex w) {
        std::erase(adj[u], w);
        std::erase(adj[w], u);
        std::erase_if(edges, [&](const Edge& e) {
          return (e.u == u && e.v == w) || (e.u == w && e.v == u);
        });
      };
      for (Vertex v = 0; v < n; ++v) {
        if (!adj[v].empty()) continue;
        auto& own = sides[side_of[v]];
        auto& other = sides[side_of[v] ^ 1U];
        Vertex pick = with_room(other);
        if (pick == kNoVertex && own.size() > 1) {
          // An isolated vertex may switch sides freely.
          std::erase(own, v);
          side_of[v] ^= 1U;
          sides[side_of[v]].push_back(v);
          pick = with_room(sides[side_of[v] ^ 1U]);
        }
        if (pick == kNoVertex) {
          // Every candidate is saturated: free a slot on an edge whose
          // other end keeps a neighbour.
          for (Vertex w : sides[side_of[v] ^ 1U]) {
            const auto it = std::find_if(adj[w].begin(), adj[w].end(),
                                         [&](Vertex x) { return adj[x].size() > 1; });
            if (it != adj[w].end()) {
              unlink(w, *it);
              pick = w;
              break;
            }
          }
        }
        if (pick == kNoVertex) {
          throw Error(ErrorCode::kInvalidParams, "cannot make the graph isolate-free");
        }
        link(v, pick);
      }
    }
  }
  return build_graph(n, edges);
}

inline BipartiteGraph generate(Family family, const FamilyParams& p) {
  switch (family) {
    case Family::kStarForest: return star_forest(p.stars, p.leaves);
    case Family::kK33WithPendants: return k33_with_pendants(p.pendants);
    case Family::kDoubleStar: return double_star(p.a, p.b);
    case Family::kPath: return path_graph(p.n);
    case Family::kCycle: return cycle_graph(p.n);
    case Family::kCompleteBipartite: return complete_bipartite(p.a, p.b);
    case Family::kRandomBounded:
      return random_bounded(p.n, p.max_degree, p.density, p.seed, p.isolate_free);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown family");
}

}  // namespace bipsched
