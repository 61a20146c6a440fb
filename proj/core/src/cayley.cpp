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

#include "ggt/cayley.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <string>

#include "ggt/errors.hpp"

namespace ggt {

std::optional<Vertex> CayleyBall::find(const Element& x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex CayleyBall::index_of(const Element& x) const {
  if (auto v = find(x)) return *v;
  throw DomainError(group_.to_string(x) + " is not in the ball of radius " + std::to_string(radius_));
}

Word CayleyBall::geodesic_word(Vertex v) const {
  Word w;
  while (v != 0) {
    w.push_back(parent_symbol_[v]);
    v = parent_[v];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<std::size_t> CayleyBall::sphere_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius_) + 1, 0);
  for (int l : levels_) ++sizes[static_cast<std::size_t>(l)];
  return sizes;
}

CayleyBall build_ball(const MarkedGroup& group, int radius, std::size_t vertex_cap) {
  if (radius < 0) throw ParameterError("ball radius must be >= 0");
  CayleyBall ball(group);
  ball.radius_ = radius;
  auto add = [&](Element x, int level, Vertex parent, Symbol via) {
    if (ball.elements_.size() >= vertex_cap) {
      throw CapacityError("vertex cap " + std::to_string(vertex_cap) + " exceeded while building radius " +
                          std::to_string(level) + " of " + group.spec() + " (radius " +
                          std::to_string(level - 1) + " complete)");
    }
    const auto id = static_cast<Vertex>(ball.elements_.size());
    ball.index_.emplace(x, id);
    ball.elements_.push_back(std::move(x));
    ball.levels_.push_back(level);
    ball.parent_.push_back(parent);
    ball.parent_symbol_.push_back(via);
    ball.adjacency_.emplace_back();
    return id;
  };
  add(group.identity(), 0, 0, 0);

  // Vertices are appended in FIFO order, so scanning by index is the BFS.
  const auto num_gens = static_cast<Symbol>(group.num_generators());
  for (Vertex v = 0; v < ball.elements_.size(); ++v) {
    const int level = ball.levels_[v];
    for (Symbol s = 0; s < num_gens; ++s) {
      Element w = group.apply_generator(ball.elements_[v], s);
      Vertex target = 0;
      if (auto it = ball.index_.find(w); it != ball.index_.end()) {
        target = it->second;
      } else if (level < radius) {
        target = add(std::move(w), level + 1, v, s);
      } else {
        continue;
      }
      ball.adjacency_[v].push_back({target, s});
    }
  }
  return ball;
}

BallDistance distance_in_ball(const CayleyBall& ball, const Element& u, const Element& v) {
  const Vertex src = ball.index_of(u);
  const Vertex dst = ball.index_of(v);
  std::vector<std::int64_t> dist(ball.size(), -1);
  std::deque<Vertex> queue{src};
  dist[src] = 0;
  while (!queue.empty() && dist[dst] < 0) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const auto& e : ball.neighbors(x)) {
      if (dist[e.target] < 0) {
        dist[e.target] = dist[x] + 1;
        queue.push_back(e.target);
      }
    }
  }
  BallDistance d{dist[dst], false};
  d.exact = ball.level(src) + d.value <= ball.radius() || ball.level(dst) + d.value <= ball.radius();
  return d;
}

std::vector<std::size_t> growth(const MarkedGroup& group, int radius, std::size_t vertex_cap) {
  const auto spheres = build_ball(group, radius, vertex_cap).sphere_sizes();
  std::vector<std::size_t> out;
  std::size_t total = 0;
  for (auto s : spheres) out.push_back(total += s);
  return out;
}

GraphFile to_graph_file(const CayleyBall& ball) {
  GraphFile g;
  g.n = ball.size();
  g.levels = ball.levels();
  g.vertex_labels.reserve(ball.size());
  for (Vertex v = 0; v < ball.size(); ++v) {
    g.vertex_labels.push_back(ball.group().to_string(ball.element(v)));
    for (const auto& e : ball.neighbors(v)) {
      // Each undirected edge once, labelled from its lower endpoint.
      if (v < e.target) g.edges.push_back({v, e.target, ball.group().symbol_name(e.label)});
    }
  }
  return g;
}

FiniteGraph to_finite_graph(const CayleyBall& ball) { return FiniteGraph::from_file(to_graph_file(ball)); }

void export_graph(const CayleyBall& ball, GraphFormat format, std::ostream& out) {
  write_graph(to_graph_file(ball), format, out);
}

WordMetric::WordMetric(MarkedGroup group, int budget, std::size_t vertex_cap)
    : group_(std::move(group)), budget_(budget) {
  if (budget < 0) throw ParameterError("word metric budget must be >= 0");
  if (!group_.closed_form_length(group_.identity())) ball_ = build_ball(group_, budget, vertex_cap);
}

std::optional<std::int64_t> WordMetric::length(const Element& x) const {
  if (!ball_) {
    const auto l = group_.closed_form_length(x);
    if (l && *l <= budget_) return l;
    return std::nullopt;
  }
  if (auto v = ball_->find(x)) return ball_->level(*v);
  return std::nullopt;
}

std::optional<std::int64_t> WordMetric::distance(const Element& x, const Element& y) const {
  return length(group_.multiply(group_.invert(x), y));
}

std::int64_t WordMetric::require_length(const Element& x) const {
  if (auto l = length(x)) return *l;
  throw EnlargeBallError("word length of " + group_.to_string(x) + " exceeds budget " + std::to_string(budget_) +
                         " in " + group_.spec() + "; enlarge the ball");
}

}  // namespace ggt
