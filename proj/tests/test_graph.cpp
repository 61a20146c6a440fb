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

#include <gtest/gtest.h>

#include <sstream>

#include "ggt/errors.hpp"
#include "ggt/graph.hpp"

namespace ggt {
namespace {

TEST(FiniteGraphTest, FromEdgesDeduplicates) {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 0}, {1, 2}, {0, 1}};
  const auto g = FiniteGraph::from_edges(3, edges);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(FiniteGraphTest, RejectsMalformedEdges) {
  const std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  EXPECT_THROW(FiniteGraph::from_edges(3, loop), ParseError);
  const std::vector<std::pair<Vertex, Vertex>> out_of_range{{0, 3}};
  EXPECT_THROW(FiniteGraph::from_edges(3, out_of_range), ParseError);
}

TEST(FiniteGraphTest, GridAndPath) {
  const auto grid = FiniteGraph::grid(3, 4);
  EXPECT_EQ(grid.size(), 12u);
  EXPECT_EQ(grid.num_edges(), 3u * 3 + 2u * 4);
  const auto path = FiniteGraph::path(5);
  EXPECT_EQ(path.num_edges(), 4u);
  EXPECT_TRUE(path.has_edge(3, 4));
}

TEST(FiniteGraphTest, InducedSubgraphRelabelsInOrder) {
  const auto path = FiniteGraph::path(5);
  const std::vector<Vertex> keep{1, 2, 4};
  const auto sub = path.induced(keep);
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_TRUE(sub.has_edge(0, 1));
  EXPECT_FALSE(sub.has_edge(1, 2));
}

TEST(GraphIoTest, EdgeListParsing) {
  std::istringstream in("# n=4\n0 1 a\n1 2\n\n# comment\n2 3 b\n");
  const auto file = read_edge_list(in);
  EXPECT_EQ(file.n, 4u);
  ASSERT_EQ(file.edges.size(), 3u);
  EXPECT_EQ(file.edges[1].label, "");
  std::istringstream bad("0 x\n");
  EXPECT_THROW(read_edge_list(bad), ParseError);
}

TEST(GraphIoTest, EdgeListWithoutHeaderInfersSize) {
  std::istringstream in("0 1\n4 2\n");
  EXPECT_EQ(read_edge_list(in).n, 5u);
}

TEST(GraphIoTest, JsonRoundTrip) {
  GraphFile file;
  file.n = 3;
  file.edges = {{0, 1, "a"}, {1, 2, "b"}};
  file.levels = {0, 1, 2};
  const auto back = graph_from_json(graph_to_json(file));
  EXPECT_EQ(back.n, 3u);
  EXPECT_EQ(back.edges, file.edges);
  EXPECT_EQ(back.levels, file.levels);
  std::stringstream ss;
  write_graph(file, GraphFormat::json, ss);
  EXPECT_EQ(read_graph(ss).edges, file.edges);
}

}  // namespace
}  // namespace ggt
