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

#include "ggt/graph.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "ggt/errors.hpp"

namespace ggt {

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw ParameterError("unknown graph format '" + name + "'");
}

nlohmann::json graph_to_json(const GraphFile& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) edges.push_back({e.u, e.v, e.label});
  return {{"n", graph.n}, {"edges", std::move(edges)}, {"levels", graph.levels}};
}

GraphFile graph_from_json(const nlohmann::json& j) {
  GraphFile g;
  try {
    g.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2) throw ParseError("edge entries must be [u, v, label]");
      LabeledEdge edge{e[0].get<Vertex>(), e[1].get<Vertex>(), {}};
      if (e.size() > 2) edge.label = e[2].get<std::string>();
      g.edges.push_back(std::move(edge));
    }
    if (j.contains("levels")) g.levels = j.at("levels").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("bad graph JSON: ") + err.what());
  }
  return g;
}

void write_graph(const GraphFile& graph, GraphFormat format, std::ostream& out) {
  switch (format) {
    case GraphFormat::edge_list:
      out << "# n=" << graph.n << '\n';
      for (const auto& e : graph.edges) {
        out << e.u << ' ' << e.v;
        if (!e.label.empty()) out << ' ' << e.label;
        out << '\n';
      }
      break;
    case GraphFormat::dot:
      out << "graph cayley {\n";
      for (std::size_t v = 0; v < graph.n; ++v) {
        out << "  " << v << " [";
        if (v < graph.vertex_labels.size()) out << "label=\"" << graph.vertex_labels[v] << "\"";
        if (v < graph.levels.size()) {
          if (v < graph.vertex_labels.size()) out << ", ";
          out << "level=" << graph.levels[v];
        }
        out << "];\n";
      }
      for (const auto& e : graph.edges) {
        out << "  " << e.u << " -- " << e.v;
        if (!e.label.empty()) out << " [label=\"" << e.label << "\"]";
        out << ";\n";
      }
      out << "}\n";
      break;
    case GraphFormat::json:
      out << graph_to_json(graph).dump() << '\n';
      break;
  }
}

GraphFile read_edge_list(std::istream& in) {
  GraphFile g;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t max_index_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto pos = line.find("n=");
      if (pos != std::string::npos) {
        try {
          declared = std::stoul(line.substr(pos + 2));
          has_declared = true;
        } catch (const std::exception&) {
          throw ParseError("bad vertex count header on line " + std::to_string(line_no));
        }
      }
      continue;
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || u < 0 || v < 0) {
      throw ParseError("expected 'u v [label]' on line " + std::to_string(line_no));
    }
    LabeledEdge e{static_cast<Vertex>(u), static_cast<Vertex>(v), {}};
    row >> e.label;
    max_index_plus_one = std::max<std::size_t>(max_index_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
    g.edges.push_back(std::move(e));
  }
  if (has_declared && declared < max_index_plus_one) {
    throw ParseError("edge endpoint exceeds declared vertex count");
  }
  g.n = has_declared ? declared : max_index_plus_one;
  return g;
}

GraphFile read_graph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& err) {
      throw ParseError(std::string("invalid graph JSON: ") + err.what());
    }
  }
  std::istringstream stream(text);
  return read_edge_list(stream);
}

FiniteGraph FiniteGraph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  FiniteGraph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

FiniteGraph FiniteGraph::from_file(const GraphFile& file) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(file.edges.size());
  for (const auto& e : file.edges) edges.emplace_back(e.u, e.v);
  return from_edges(file.n, edges);
}

FiniteGraph FiniteGraph::grid(std::size_t rows, std::size_t cols) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  }
  return from_edges(rows * cols, edges);
}

FiniteGraph FiniteGraph::path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return from_edges(n, edges);
}

std::size_t FiniteGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

bool FiniteGraph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

FiniteGraph FiniteGraph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::int64_t> position(size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= size()) throw DomainError("induced subgraph vertex out of range");
    position[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : adjacency_[vertices[i]]) {
      const auto j = position[w];
      if (j > static_cast<std::int64_t>(i)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return from_edges(vertices.size(), edges);
}

}  // namespace ggt
