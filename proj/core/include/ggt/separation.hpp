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

#ifndef GGT_SEPARATION_HPP_
#define GGT_SEPARATION_HPP_

// Half-size vertex cuts: cut(G) is the least |S| such that every connected
// component of G - S has at most floor(n/2) vertices. Separation profiles are
// bounded below by cut values of Cayley balls.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/cayley.hpp"
#include "ggt/graph.hpp"
#include "ggt/groups.hpp"

namespace ggt {

enum class CutMethod { exact, greedy_upper, trivial_lower };

std::string to_string(CutMethod method);

struct Certificate {
  bool valid = false;
  std::vector<std::size_t> component_sizes;  // descending
};

// Throws DomainError on an out-of-range vertex.
Certificate verify_certificate(const FiniteGraph& graph, std::span<const Vertex> separator);

struct CutResult {
  std::size_t cut_size = 0;
  std::vector<Vertex> separator;  // ascending
  CutMethod method = CutMethod::exact;
  std::vector<std::size_t> component_sizes;
  std::size_t lower_bound = 0;
  std::uint64_t nodes = 0;  // search nodes spent
};

struct CutOptions {
  std::size_t exact_limit = 48;
  std::uint64_t node_budget = 10'000'000;
};

// 0 if the graph already satisfies the half-size condition, else 1.
std::size_t trivial_cut_lower_bound(const FiniteGraph& graph);

// Iterative deepening branch-and-bound. The separator returned is the
// lexicographically least optimal one. When the node budget runs out the
// greedy upper bound is returned with method greedy_upper. Throws
// ParameterError if graph.size() > options.exact_limit.
CutResult exact_cut(const FiniteGraph& graph, const CutOptions& options = {});

// Best single vertex, then BFS level-set sweeps, repeated on oversized pieces.
CutResult greedy_cut_upper(const FiniteGraph& graph);

struct SeparationRow {
  int radius = 0;
  std::size_t n = 0;
  std::size_t cut = 0;    // proven lower bound on cut(B_r), hence on sep(n)
  std::size_t upper = 0;  // proven upper bound on cut(B_r)
  CutMethod method = CutMethod::exact;
};

struct SeparationReport {
  std::string group;
  std::vector<SeparationRow> rows;
};

// Rows use exact_cut within the exact limit; larger balls get the interval
// [trivial lower bound, greedy upper bound], reported as exact when it closes.
SeparationReport sep_lower_profile(const MarkedGroup& group, std::span<const int> radii,
                                   const CutOptions& options = {}, std::size_t vertex_cap = kDefaultVertexCap);

void write_csv(const SeparationReport& report, std::ostream& out);
nlohmann::json to_json(const SeparationReport& report);
nlohmann::json to_json(const CutResult& cut);

}  // namespace ggt

#endif  // GGT_SEPARATION_HPP_
