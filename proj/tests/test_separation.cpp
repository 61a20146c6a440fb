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

#include <random>
#include <sstream>

#include "ggt/cayley.hpp"
#include "ggt/errors.hpp"
#include "ggt/separation.hpp"
#include "oracles.hpp"

namespace ggt {
namespace {

const MarkedGroup kZ = MarkedGroup::free_abelian(1);
const MarkedGroup kZ2 = MarkedGroup::free_abelian(2);
const MarkedGroup kF2 = MarkedGroup::free(2);

FiniteGraph ball_graph(const MarkedGroup& g, int r) { return to_finite_graph(build_ball(g, r)); }

TEST(CertificateTest, Examples) {
  const auto p4 = FiniteGraph::path(4);
  const std::vector<Vertex> middle{1};
  const auto ok = verify_certificate(p4, middle);
  EXPECT_TRUE(ok.valid);
  EXPECT_EQ(ok.component_sizes, (std::vector<std::size_t>{2, 1}));
  EXPECT_FALSE(verify_certificate(p4, {}).valid);
  const auto b3 = ball_graph(kF2, 3);
  const std::vector<Vertex> root{0};
  const auto tree = verify_certificate(b3, root);
  EXPECT_TRUE(tree.valid);
  EXPECT_EQ(tree.component_sizes, (std::vector<std::size_t>{13, 13, 13, 13}));
  const std::vector<Vertex> bad{9};
  EXPECT_THROW(verify_certificate(p4, bad), DomainError);
}

TEST(ExactCutTest, Examples) {
  const auto p4 = exact_cut(FiniteGraph::path(4));
  EXPECT_EQ(p4.cut_size, 1u);
  EXPECT_EQ(p4.method, CutMethod::exact);
  const auto f2 = exact_cut(ball_graph(kF2, 2));
  EXPECT_EQ(f2.cut_size, 1u);
  EXPECT_EQ(f2.separator, std::vector<Vertex>{0});
  EXPECT_EQ(f2.component_sizes, (std::vector<std::size_t>{4, 4, 4, 4}));
  const auto grid = FiniteGraph::grid(3, 3);
  const auto cut = exact_cut(grid);
  EXPECT_EQ(cut.cut_size, oracle::brute_force_cut(grid).size);
  EXPECT_EQ(cut.cut_size, 3u);  // e.g. the middle column
}

TEST(ExactCutTest, DegenerateGraphs) {
  EXPECT_EQ(exact_cut(FiniteGraph(0)).cut_size, 0u);
  EXPECT_EQ(exact_cut(FiniteGraph(1)).cut_size, 1u);  // one vertex exceeds floor(1/2) = 0
  EXPECT_EQ(exact_cut(FiniteGraph(5)).cut_size, 0u);  // isolated vertices
  EXPECT_EQ(exact_cut(FiniteGraph::path(2)).cut_size, 1u);
}

TEST(ExactCutTest, RespectsLimitAndBudget) {
  const auto big = FiniteGraph::grid(8, 8);
  EXPECT_THROW(exact_cut(big, {48, 1000}), ParameterError);
  const auto starved = exact_cut(FiniteGraph::grid(6, 6), {48, 5});
  EXPECT_EQ(starved.method, CutMethod::greedy_upper);
  EXPECT_TRUE(verify_certificate(FiniteGraph::grid(6, 6), starved.separator).valid);
  EXPECT_LE(starved.lower_bound, starved.cut_size);
}

TEST(ExactCutTest, MatchesBruteForceOnRandomCorpus) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.08, 0.75);
  for (int i = 0; i < 600; ++i) {
    const auto g = oracle::random_graph(rng, size(rng), density(rng));
    const auto brute = oracle::brute_force_cut(g);
    const auto cut = exact_cut(g);
    ASSERT_EQ(cut.method, CutMethod::exact);
    ASSERT_EQ(cut.cut_size, brute.size) << "graph " << i;
    ASSERT_EQ(cut.separator, brute.lex_least) << "graph " << i;
    ASSERT_TRUE(verify_certificate(g, cut.separator).valid);
    const auto greedy = greedy_cut_upper(g);
    ASSERT_GE(greedy.cut_size, cut.cut_size);
    ASSERT_TRUE(verify_certificate(g, greedy.separator).valid);
    ASSERT_LE(trivial_cut_lower_bound(g), cut.cut_size);
  }
}

TEST(GreedyCutTest, Examples) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    // Random trees by attaching each vertex to an earlier one.
    const std::size_t n = 2 + rng() % 60;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    const auto tree = FiniteGraph::from_edges(n, edges);
    EXPECT_EQ(greedy_cut_upper(tree).cut_size, 1u);
  }
  const auto grid = FiniteGraph::grid(5, 5);
  const auto g = greedy_cut_upper(grid);
  EXPECT_LE(g.cut_size, 5u);
  EXPECT_EQ(g.method, CutMethod::greedy_upper);
  const auto z2 = ball_graph(kZ2, 4);
  EXPECT_GE(greedy_cut_upper(z2).cut_size, exact_cut(z2).cut_size);
}

TEST(SeparationProfileTest, TreesStayAtOne) {
  const std::vector<int> radii{1, 2, 3, 4, 5, 6};
  const auto report = sep_lower_profile(kF2, radii);
  ASSERT_EQ(report.rows.size(), 6u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.cut, 1u);
    EXPECT_EQ(row.upper, 1u);
    EXPECT_EQ(row.method, CutMethod::exact);
  }
  const std::vector<int> line{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (const auto& row : sep_lower_profile(kZ, line).rows) EXPECT_EQ(row.cut, 1u);
}

TEST(SeparationProfileTest, FreeGroupBallSubgraphsHaveCutAtMostOne) {
  std::mt19937_64 rng(8);
  const auto ball = ball_graph(kF2, 4);
  for (int i = 0; i < 40; ++i) {
    // Connected subtrees: grow from a random vertex.
    std::vector<Vertex> keep{static_cast<Vertex>(rng() % ball.size())};
    std::vector<bool> in(ball.size());
    in[keep[0]] = true;
    const std::size_t target = 2 + rng() % 30;
    while (keep.size() < target) {
      const Vertex u = keep[rng() % keep.size()];
      const auto nb = ball.neighbors(u);
      const Vertex w = nb[rng() % nb.size()];
      if (!in[w]) {
        in[w] = true;
        keep.push_back(w);
      }
    }
    std::sort(keep.begin(), keep.end());
    EXPECT_LE(exact_cut(ball.induced(keep)).cut_size, 1u);
  }
}

TEST(SeparationProfileTest, GridBallsGrow) {
  // Under the floor(n/2) convention cut(B_2) = cut(B_3) = 3, so strict growth
  // is witnessed on radii 1, 2, 4.
  const std::vector<int> radii{1, 2, 3, 4};
  const auto report = sep_lower_profile(kZ2, radii);
  std::vector<std::size_t> cuts;
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.method, CutMethod::exact);
    cuts.push_back(row.cut);
  }
  EXPECT_EQ(cuts, (std::vector<std::size_t>{1, 3, 3, 5}));
  for (std::size_t i = 1; i < cuts.size(); ++i) EXPECT_LE(cuts[i - 1], cuts[i]);
  EXPECT_LT(cuts[0], cuts[1]);
  EXPECT_LT(cuts[1], cuts[3]);
}

TEST(SeparationProfileTest, BracketsBeyondExactLimit) {
  const std::vector<int> radii{2, 5};
  const auto report = sep_lower_profile(kZ2, radii, {20, 1000});
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].method, CutMethod::exact);
  EXPECT_EQ(report.rows[1].n, 61u);
  EXPECT_EQ(report.rows[1].method, CutMethod::trivial_lower);
  EXPECT_LE(report.rows[1].cut, report.rows[1].upper);
  std::ostringstream csv;
  write_csv(report, csv);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "radius,n,cut,method");
  EXPECT_NE(csv.str().find("5,61,1,trivial-lower"), std::string::npos);
  EXPECT_EQ(to_json(report).at("rows").size(), 2u);
}

}  // namespace
}  // namespace ggt
