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

#ifndef GGT_CAYLEY_HPP_
#define GGT_CAYLEY_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ggt/graph.hpp"
#include "ggt/groups.hpp"

namespace ggt {

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

struct BallEdge {
  Vertex target = 0;
  Symbol label = 0;
};

// The ball B(e, R) of the right Cayley graph (x -- x s), numbered in BFS
// discovery order with generators tried in symbol order. Immutable once built.
class CayleyBall {
 public:
  const MarkedGroup& group() const { return group_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }

  const Element& element(Vertex v) const { return elements_[v]; }
  const std::vector<Element>& elements() const { return elements_; }
  // Distance from the identity, equal to the word length.
  int level(Vertex v) const { return levels_[v]; }
  const std::vector<int>& levels() const { return levels_; }
  std::span<const BallEdge> neighbors(Vertex v) const { return adjacency_[v]; }

  std::optional<Vertex> find(const Element& x) const;
  bool contains(const Element& x) const { return find(x).has_value(); }
  // Throws DomainError if x is outside the ball.
  Vertex index_of(const Element& x) const;

  // Shortest word for element(v), read off the BFS tree.
  Word geodesic_word(Vertex v) const;

  // |{v : level(v) = r}| for r = 0..radius.
  std::vector<std::size_t> sphere_sizes() const;

 private:
  friend CayleyBall build_ball(const MarkedGroup& group, int radius, std::size_t vertex_cap);
  explicit CayleyBall(MarkedGroup group) : group_(std::move(group)) {}

  MarkedGroup group_;
  int radius_ = 0;
  std::vector<Element> elements_;
  std::vector<int> levels_;
  std::vector<std::vector<BallEdge>> adjacency_;
  std::vector<Vertex> parent_;
  std::vector<Symbol> parent_symbol_;
  std::unordered_map<Element, Vertex> index_;
};

// Throws CapacityError once more than vertex_cap vertices would be stored.
CayleyBall build_ball(const MarkedGroup& group, int radius, std::size_t vertex_cap = kDefaultVertexCap);

struct BallDistance {
  std::int64_t value = 0;
  // Set when a geodesic between the endpoints provably stays inside the ball;
  // otherwise value is only an upper bound on d_G.
  bool exact = false;
};

// Graph distance inside the ball's induced subgraph.
BallDistance distance_in_ball(const CayleyBall& ball, const Element& u, const Element& v);

// |B_r| for r = 0..radius.
std::vector<std::size_t> growth(const MarkedGroup& group, int radius, std::size_t vertex_cap = kDefaultVertexCap);

GraphFile to_graph_file(const CayleyBall& ball);
FiniteGraph to_finite_graph(const CayleyBall& ball);
void export_graph(const CayleyBall& ball, GraphFormat format, std::ostream& out);

// Word length and left-invariant distance d(x, y) = l(x^-1 y). Uses closed
// forms where the group has them and an identity-centered ball of radius
// `budget` otherwise; lengths beyond the budget are reported as std::nullopt.
class WordMetric {
 public:
  WordMetric(MarkedGroup group, int budget, std::size_t vertex_cap = kDefaultVertexCap);

  const MarkedGroup& group() const { return group_; }
  int budget() const { return budget_; }

  std::optional<std::int64_t> length(const Element& x) const;
  std::optional<std::int64_t> distance(const Element& x, const Element& y) const;
  // Throws EnlargeBallError when the length exceeds the budget.
  std::int64_t require_length(const Element& x) const;

 private:
  MarkedGroup group_;
  int budget_;
  std::optional<CayleyBall> ball_;
};

}  // namespace ggt

#endif  // GGT_CAYLEY_HPP_
