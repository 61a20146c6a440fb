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

#ifndef GGT_GRAPH_HPP_
#define GGT_GRAPH_HPP_

// Finite simple graphs and the on-disk graph formats shared by the Cayley
// ball exporter and the separator tools.
//
// edge-list  optional "# n=<N>" header, then one "u v [label]" line per
//            undirected edge; other '#' lines are comments.
// dot        "graph cayley { ... }" with level attributes.
// json       {"n": N, "edges": [[u, v, "label"], ...], "levels": [...]}

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ggt {

using Vertex = std::uint32_t;

struct LabeledEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::string label;
  bool operator==(const LabeledEdge&) const = default;
};

struct GraphFile {
  std::size_t n = 0;
  std::vector<LabeledEdge> edges;
  std::vector<int> levels;                 // empty when unknown
  std::vector<std::string> vertex_labels;  // empty when unknown; not stored in json/edge-list
};

enum class GraphFormat { edge_list, dot, json };

GraphFormat parse_graph_format(const std::string& name);

void write_graph(const GraphFile& graph, GraphFormat format, std::ostream& out);
nlohmann::json graph_to_json(const GraphFile& graph);
GraphFile graph_from_json(const nlohmann::json& j);
GraphFile read_edge_list(std::istream& in);
// JSON if the first non-blank character is '{', edge list otherwise.
GraphFile read_graph(std::istream& in);

// Undirected simple graph on 0..n-1 with sorted adjacency lists.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(std::size_t n) : adjacency_(n) {}

  // Throws ParseError on self-loops or out-of-range endpoints; parallel edges merge.
  static FiniteGraph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  static FiniteGraph from_file(const GraphFile& file);

  // Rows x cols grid graph, vertex r * cols + c.
  static FiniteGraph grid(std::size_t rows, std::size_t cols);
  static FiniteGraph path(std::size_t n);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t num_edges() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Induced subgraph; vertex i of the result is vertices[i].
  FiniteGraph induced(std::span<const Vertex> vertices) const;

  bool operator==(const FiniteGraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace ggt

#endif  // GGT_GRAPH_HPP_
