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

// Micro-benchmarks for the hot paths: ball construction, the cocycle audit,
// the regular-map audits and the exact cut solver.

#include <benchmark/benchmark.h>

#include <limits>
#include <memory>
#include <random>

#include "ggt/cayley.hpp"
#include "ggt/regmap.hpp"
#include "ggt/separation.hpp"
#include "ggt/tla.hpp"

namespace {

using namespace ggt;

MarkedGroup group_for(int64_t index) {
  switch (index) {
    case 0: return MarkedGroup::free_abelian(2);
    case 1: return MarkedGroup::free(2);
    case 2: return MarkedGroup::lamplighter();
    default: return MarkedGroup::bs1n(2);
  }
}

void BM_BuildBall(benchmark::State& state) {
  const MarkedGroup g = group_for(state.range(0));
  const int radius = static_cast<int>(state.range(1));
  std::size_t size = 0;
  for (auto _ : state) {
    const auto ball = build_ball(g, radius);
    size = ball.size();
    benchmark::DoNotOptimize(size);
  }
  state.SetLabel(g.spec());
  state.counters["vertices"] = static_cast<double>(size);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(size));
}
BENCHMARK(BM_BuildBall)->Args({0, 40})->Args({1, 9})->Args({2, 12})->Args({3, 10})->Unit(benchmark::kMillisecond);

void BM_GroupMultiply(benchmark::State& state) {
  const MarkedGroup g = group_for(state.range(0));
  std::mt19937_64 rng(1);
  const Element x = g.evaluate(g.random_word(rng, 24));
  const Element y = g.evaluate(g.random_word(rng, 24));
  for (auto _ : state) benchmark::DoNotOptimize(g.multiply(x, y));
  state.SetLabel(g.spec());
}
BENCHMARK(BM_GroupMultiply)->DenseRange(0, 3);

void BM_SnakeCocycleAudit(benchmark::State& state) {
  const auto action = grid_snake_action();
  const auto h_ball = build_ball(MarkedGroup::free_abelian(1), static_cast<int>(state.range(0)));
  const auto g_ball = build_ball(MarkedGroup::free_abelian(2), 12);
  std::size_t checked = 0;
  for (auto _ : state) {
    checked = audit_cocycle_law(action, h_ball, g_ball).checked;
    benchmark::DoNotOptimize(checked);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(checked));
}
BENCHMARK(BM_SnakeCocycleAudit)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SnakeRegularMapAudit(benchmark::State& state) {
  const auto action = std::make_shared<const TranslationAction>(grid_snake_action());
  const auto map = build_regular_map(action, MarkedGroup::free_abelian(2).identity(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit_lipschitz(map, 5).passed());
    benchmark::DoNotOptimize(audit_multiplicity(map, 5, BallConvention::closed).passed());
  }
}
BENCHMARK(BM_SnakeRegularMapAudit)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ExactCutGridBall(benchmark::State& state) {
  const auto graph = to_finite_graph(build_ball(MarkedGroup::free_abelian(2), static_cast<int>(state.range(0))));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto cut = exact_cut(graph, {64, 10'000'000});
    nodes = cut.nodes;
    benchmark::DoNotOptimize(cut.cut_size);
  }
  state.counters["n"] = static_cast<double>(graph.size());
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExactCutGridBall)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GreedyCutFreeBall(benchmark::State& state) {
  const auto graph = to_finite_graph(build_ball(MarkedGroup::free(2), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_cut_upper(graph).cut_size);
  state.counters["n"] = static_cast<double>(graph.size());
}
BENCHMARK(BM_GreedyCutFreeBall)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
