// Copyright 2026 The ggt Authors
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

// Independent reference implementations used to cross-check the library.
// None of these reuse library code paths beyond the public element types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/groups.hpp"

namespace ggt::oracle {

// |B_r| for r = 0..R by enumerating every word of length <= R and
// deduplicating the evaluated elements. Exponential; keep R small.
inline std::vector<std::size_t> enumerate_ball_sizes(const MarkedGroup& group, int radius) {
  std::set<std::string> seen;
  std::vector<std::size_t> sizes;
  std::vector<Element> frontier{group.identity()};
  seen.insert(group.to_string(group.identity()));
  sizes.push_back(1);
  for (int r = 1; r <= radius; ++r) {
    std::vector<Element> next;
    for (const Element& x : frontier) {
      for (Symbol s = 0; s < group.num_generators(); ++s) {
        Element y = group.multiply(x, group.generator(s));
        seen.insert(group.to_string(y));
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);  // all words of length exactly r, with repetition
    sizes.push_back(seen.size());
  }
  return sizes;
}

// Lamplighter modelled directly as (set of lit lamps, pointer) with right
// multiplication by t (move right), T (move left), a (toggle lamp at pointer).
struct LampModel {
  std::set<std::int64_t> lamps;
  std::int64_t pos = 0;
  auto operator<=>(const LampModel&) const = default;
};

inline LampModel lamp_step(LampModel x, char g) {
  if (g == 't') ++x.pos;
  if (g == 'T') --x.pos;
  if (g == 'a') {
    if (!x.lamps.erase(x.pos)) x.lamps.insert(x.pos);
  }
  return x;
}

inline std::vector<std::size_t> lamplighter_sphere_sizes(int radius) {
  std::map<LampModel, int> dist{{LampModel{}, 0}};
  std::vector<LampModel> frontier{LampModel{}};
  std::vector<std::size_t> spheres{1};
  for (int r = 1; r <= radius; ++r) {
    std::vector<LampModel> next;
    for (const auto& x : frontier) {
      for (char g : {'t', 'T', 'a'}) {
        LampModel y = lamp_step(x, g);
        if (dist.emplace(y, r).second) next.push_back(y);
      }
    }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

// BS(1,2) modelled as affine maps u -> 2^k u + num / 2^e with the fraction reduced.
struct AffineModel {
  std::int64_t num = 0;
  std::int64_t e = 0;
  std::int64_t k = 0;
  auto operator<=>(const AffineModel&) const = default;
};

inline AffineModel affine_normalize(AffineModel x) {
  while (x.e > 0 && x.num % 2 == 0) {
    x.num /= 2;
    --x.e;
  }
  if (x.num == 0) x.e = 0;
  return x;
}

// x composed with the map u -> u + sign (t or T) or u -> 2^{+-1} u (s or S).
inline AffineModel affine_step(AffineModel x, char g) {
  if (g == 's') ++x.k;
  if (g == 'S') --x.k;
  if (g == 't' || g == 'T') {
    const std::int64_t sign = g == 't' ? 1 : -1;
    // add sign * 2^k
    if (x.k >= 0) {
      x.num += sign * (std::int64_t{1} << (x.k + x.e));
    } else {
      const std::int64_t target = std::max(x.e, -x.k);
      x.num <<= (target - x.e);
      x.e = target;
      x.num += sign * (std::int64_t{1} << (target + x.k));
    }
  }
  return affine_normalize(x);
}

inline std::vector<std::size_t> bs12_sphere_sizes(int radius) {
  std::set<AffineModel> seen{AffineModel{}};
  std::vector<AffineModel> frontier{AffineModel{}};
  std::vector<std::size_t> spheres{1};
  for (int r = 1; r <= radius; ++r) {
    std::vector<AffineModel> next;
    for (const auto& x : frontier) {
      for (char g : {'t', 'T', 's', 'S'}) {
        AffineModel y = affine_step(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return spheres;
}

// Component sizes of the graph minus the vertices in `removed` (bitmask, n <= 63).
inline std::vector<std::size_t> components_without(const FiniteGraph& g, std::uint64_t removed) {
  const std::size_t n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (removed >> u & 1) continue;
    for (Vertex v : g.neighbors(u)) {
      if (removed >> v & 1) continue;
      parent[find(static_cast<int>(u))] = find(static_cast<int>(v));
    }
  }
  std::map<int, std::size_t> sizes;
  for (Vertex u = 0; u < n; ++u) {
    if (!(removed >> u & 1)) ++sizes[find(static_cast<int>(u))];
  }
  std::vector<std::size_t> out;
  for (const auto& [root, size] : sizes) out.push_back(size);
  std::sort(out.rbegin(), out.rend());
  return out;
}

struct BruteCut {
  std::size_t size = 0;
  std::vector<Vertex> lex_least;  // lexicographically least optimal separator
};

// Exhaustive search over all 2^n vertex subsets.
inline BruteCut brute_force_cut(const FiniteGraph& g) {
  const std::size_t n = g.size();
  const std::size_t half = n / 2;
  std::optional<BruteCut> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto comps = components_without(g, mask);
    if (!comps.empty() && comps.front() > half) continue;
    std::vector<Vertex> set;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1) set.push_back(v);
    }
    if (!best || set.size() < best->size || (set.size() == best->size && set < best->lex_least)) {
      best = BruteCut{set.size(), set};
    }
  }
  return *best;
}

// G(n, p) with a seeded engine.
inline FiniteGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return FiniteGraph::from_edges(n, edges);
}

// The boustrophedon path through Z^2 written out cell by cell: shell r >= 1
// of the right half-plane runs along the row y = sr (s = +1 for odd r, -1 for
// even r) from x = 0 to r - 1, down the column x = r, and back along y = -sr;
// the left half-plane is the mirror image shifted one column left.
inline std::vector<std::pair<std::int64_t, std::int64_t>> snake_walk_right(std::size_t count) {
  std::vector<std::pair<std::int64_t, std::int64_t>> cells{{0, 0}};
  for (std::int64_t r = 1; cells.size() < count; ++r) {
    const std::int64_t s = r % 2 == 1 ? 1 : -1;
    for (std::int64_t x = 0; x < r; ++x) cells.emplace_back(x, s * r);
    for (std::int64_t y = r; y >= -r; --y) cells.emplace_back(r, s * y);
    for (std::int64_t x = r - 1; x >= 0; --x) cells.emplace_back(x, -s * r);
  }
  cells.resize(count);
  return cells;
}

// P(k) for k in [-count, count - 1].
inline std::pair<std::int64_t, std::int64_t> snake_walk_at(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& right, std::int64_t k) {
  if (k >= 0) return right.at(static_cast<std::size_t>(k));
  const auto [x, y] = right.at(static_cast<std::size_t>(-1 - k));
  return {-1 - x, y};
}

}  // namespace ggt::oracle
