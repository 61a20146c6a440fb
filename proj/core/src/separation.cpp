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

#include "ggt/separation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "ggt/errors.hpp"

namespace ggt {

using nlohmann::json;

std::string to_string(CutMethod method) {
  switch (method) {
    case CutMethod::exact:
      return "exact";
    case CutMethod::greedy_upper:
      return "greedy-upper";
    case CutMethod::trivial_lower:
      return "trivial-lower";
  }
  return {};
}

namespace {

// Connected components of the graph minus `removed`. Vertices of component i
// are order[start[i] .. start[i + 1]), discovered by BFS from their least vertex.
struct Components {
  std::vector<std::size_t> start;
  std::vector<Vertex> order;
  std::size_t count() const { return start.size() - 1; }
  std::size_t size(std::size_t i) const { return start[i + 1] - start[i]; }
  std::span<const Vertex> members(std::size_t i) const {
    return {order.data() + start[i], order.data() + start[i + 1]};
  }
};

Components components(const FiniteGraph& g, const std::vector<char>& removed) {
  Components c;
  std::vector<char> seen(g.size(), 0);
  c.order.reserve(g.size());
  for (Vertex s = 0; s < g.size(); ++s) {
    if (removed[s] || seen[s]) continue;
    c.start.push_back(c.order.size());
    seen[s] = 1;
    std::size_t head = c.order.size();
    c.order.push_back(s);
    while (head < c.order.size()) {
      const Vertex v = c.order[head++];
      for (Vertex w : g.neighbors(v)) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          c.order.push_back(w);
        }
      }
    }
  }
  c.start.push_back(c.order.size());
  return c;
}

std::vector<char> mask_of(std::size_t n, std::span<const Vertex> vertices) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vertices) {
    if (v >= n) throw DomainError("separator vertex " + std::to_string(v) + " out of range");
    mask[v] = 1;
  }
  return mask;
}

bool is_valid_cut(const FiniteGraph& g, const std::vector<char>& removed) {
  const std::size_t half = g.size() / 2;
  const auto c = components(g, removed);
  for (std::size_t i = 0; i < c.count(); ++i) {
    if (c.size(i) > half) return false;
  }
  return true;
}

struct BudgetExhausted {};

// Decides whether some separator of size <= k exists, given vertices that must
// be in it and vertices that must not.
class CutSearch {
 public:
  CutSearch(const FiniteGraph& g, std::uint64_t budget)
      : g_(g), half_(g.size() / 2), budget_(budget), removed_(g.size(), 0), forbidden_(g.size(), 0) {}

  // Separators containing `forced` and avoiding every u <= forbid_through not in `forced`.
  bool feasible(std::size_t k, std::span<const Vertex> forced, std::optional<Vertex> forbid_through) {
    if (forced.size() > k) return false;
    std::fill(removed_.begin(), removed_.end(), 0);
    std::fill(forbidden_.begin(), forbidden_.end(), 0);
    if (forbid_through) {
      for (Vertex u = 0; u <= *forbid_through; ++u) forbidden_[u] = 1;
    }
    for (Vertex v : forced) {
      removed_[v] = 1;
      forbidden_[v] = 0;
    }
    return search(k - forced.size());
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Least j such that deleting j vertices from a connected piece of c vertices
  // and max degree delta can leave pieces of size <= half: deleting a vertex of
  // degree d adds at most d - 1 pieces.
  std::size_t pieces_lower_bound(std::size_t c, std::size_t delta) const {
    for (std::size_t j = 1;; ++j) {
      if (j >= c) return c;
      const std::size_t max_pieces = 1 + j * (delta > 0 ? delta - 1 : 0);
      if (c - j <= half_ * max_pieces) return j;
    }
  }

  bool search(std::size_t remaining) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    const auto comps = components(g_, removed_);
    std::size_t needed = 0;
    std::optional<std::size_t> branch;
    std::size_t branch_candidates = 0;
    for (std::size_t i = 0; i < comps.count(); ++i) {
      if (comps.size(i) <= half_) continue;
      std::size_t delta = 0;
      std::size_t candidates = 0;
      for (Vertex v : comps.members(i)) {
        std::size_t d = 0;
        for (Vertex w : g_.neighbors(v)) d += removed_[w] ? 0 : 1;
        delta = std::max(delta, d);
        candidates += forbidden_[v] ? 0 : 1;
      }
      needed += pieces_lower_bound(comps.size(i), delta);
      if (!branch || candidates < branch_candidates) {
        branch = i;
        branch_candidates = candidates;
      }
    }
    if (!branch) return true;
    if (needed > remaining || branch_candidates == 0) return false;

    // Every valid separator meets the oversized component.
    std::vector<Vertex> candidates;
    for (Vertex v : comps.members(*branch)) {
      if (!forbidden_[v]) candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [this](Vertex a, Vertex b) { return g_.neighbors(a).size() > g_.neighbors(b).size(); });
    std::vector<Vertex> excluded;
    bool found = false;
    for (Vertex v : candidates) {
      removed_[v] = 1;
      found = search(remaining - 1);
      removed_[v] = 0;
      if (found) break;
      // Later branches avoid v, so each set is enumerated once.
      forbidden_[v] = 1;
      excluded.push_back(v);
    }
    for (Vertex v : excluded) forbidden_[v] = 0;
    return found;
  }

  const FiniteGraph& g_;
  std::size_t half_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> removed_;
  std::vector<char> forbidden_;
};

// For every vertex of a component: the largest piece left after deleting it.
// Iterative Tarjan low-link DFS on the component.
std::pair<Vertex, std::size_t> best_single_vertex(const FiniteGraph& g, const std::vector<char>& removed,
                                                  std::span<const Vertex> comp) {
  const std::size_t n = g.size();
  std::vector<std::int64_t> disc(n, -1);
  std::vector<std::int64_t> low(n, 0);
  std::vector<std::size_t> subtree(n, 1);
  std::vector<std::size_t> cut_pieces_sum(n, 0);
  std::vector<std::size_t> cut_pieces_max(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::int64_t timer = 0;
  const Vertex root = comp.front();
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, 0}};
  disc[root] = low[root] = timer++;
  parent[root] = root;
  while (!stack.empty()) {
    auto& frame = stack.back();
    const Vertex v = frame.v;
    const auto nbrs = g.neighbors(v);
    if (frame.next < nbrs.size()) {
      const Vertex w = nbrs[frame.next++];
      if (removed[w]) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        parent[w] = v;
        stack.push_back({w, 0});
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (v == root) break;
    const Vertex p = parent[v];
    subtree[p] += subtree[v];
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      cut_pieces_sum[p] += subtree[v];
      cut_pieces_max[p] = std::max(cut_pieces_max[p], subtree[v]);
    }
  }
  Vertex best = root;
  std::size_t best_piece = comp.size();
  for (Vertex v : comp) {
    const std::size_t rest = comp.size() - 1 - cut_pieces_sum[v];
    const std::size_t piece = std::max(cut_pieces_max[v], rest);
    if (piece < best_piece || (piece == best_piece && v < best)) {
      best = v;
      best_piece = piece;
    }
  }
  return {best, best_piece};
}

// BFS layers of a component from `seed`.
std::vector<std::vector<Vertex>> bfs_layers(const FiniteGraph& g, const std::vector<char>& removed, Vertex seed) {
  std::vector<std::vector<Vertex>> layers{{seed}};
  std::vector<char> seen(g.size(), 0);
  seen[seed] = 1;
  while (true) {
    std::vector<Vertex> next;
    for (Vertex v : layers.back()) {
      for (Vertex w : g.neighbors(v)) {
        if (!removed[w] && !seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

Certificate verify_certificate(const FiniteGraph& graph, std::span<const Vertex> separator) {
  const auto removed = mask_of(graph.size(), separator);
  const auto c = components(graph, removed);
  Certificate cert;
  for (std::size_t i = 0; i < c.count(); ++i) cert.component_sizes.push_back(c.size(i));
  std::sort(cert.component_sizes.rbegin(), cert.component_sizes.rend());
  const std::size_t half = graph.size() / 2;
  cert.valid = cert.component_sizes.empty() || cert.component_sizes.front() <= half;
  return cert;
}

std::size_t trivial_cut_lower_bound(const FiniteGraph& graph) {
  return is_valid_cut(graph, std::vector<char>(graph.size(), 0)) ? 0 : 1;
}

CutResult greedy_cut_upper(const FiniteGraph& graph) {
  const std::size_t n = graph.size();
  const std::size_t half = n / 2;
  std::vector<char> removed(n, 0);
  while (true) {
    const auto comps = components(graph, removed);
    std::optional<std::size_t> largest;
    for (std::size_t i = 0; i < comps.count(); ++i) {
      if (comps.size(i) > half && (!largest || comps.size(i) > comps.size(*largest))) largest = i;
    }
    if (!largest) break;
    const auto comp = comps.members(*largest);

    const auto [single, single_piece] = best_single_vertex(graph, removed, comp);
    if (single_piece <= half) {
      removed[single] = 1;
      continue;
    }

    // Level-set sweeps from a few deterministic seeds.
    std::vector<Vertex> seeds{comp.front(), single};
    {
      const auto layers = bfs_layers(graph, removed, comp.front());
      const Vertex far = layers.back().front();
      seeds.push_back(far);
      seeds.push_back(bfs_layers(graph, removed, far).back().front());
    }
    std::vector<Vertex> best_valid;
    std::vector<Vertex> best_median;
    for (Vertex seed : seeds) {
      const auto layers = bfs_layers(graph, removed, seed);
      std::size_t prefix = 0;
      bool median_taken = false;
      for (const auto& layer : layers) {
        const std::size_t suffix = comp.size() - prefix - layer.size();
        if (prefix <= half && suffix <= half && (best_valid.empty() || layer.size() < best_valid.size())) {
          best_valid = layer;
        }
        if (!median_taken && 2 * (prefix + layer.size()) > comp.size()) {
          median_taken = true;
          if (best_median.empty() || layer.size() < best_median.size()) best_median = layer;
        }
        prefix += layer.size();
      }
    }
    const auto& chosen = best_valid.empty() ? best_median : best_valid;
    for (Vertex v : chosen) removed[v] = 1;
  }

  // Drop separator vertices that are not needed.
  std::vector<Vertex> separator;
  for (Vertex v = 0; v < n; ++v) {
    if (removed[v]) separator.push_back(v);
  }
  if (separator.size() * (n + graph.num_edges()) <= 50'000'000) {
    for (Vertex v : separator) {
      removed[v] = 0;
      if (!is_valid_cut(graph, removed)) removed[v] = 1;
    }
    separator.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (removed[v]) separator.push_back(v);
    }
  }

  CutResult result;
  result.cut_size = separator.size();
  result.separator = std::move(separator);
  result.method = CutMethod::greedy_upper;
  const auto cert = verify_certificate(graph, result.separator);
  if (!cert.valid) throw std::logic_error("greedy separator failed its certificate");
  result.component_sizes = cert.component_sizes;
  result.lower_bound = trivial_cut_lower_bound(graph);
  return result;
}

CutResult exact_cut(const FiniteGraph& graph, const CutOptions& options) {
  const std::size_t n = graph.size();
  if (n > options.exact_limit) {
    throw ParameterError("graph has " + std::to_string(n) + " vertices, above the exact limit " +
                         std::to_string(options.exact_limit));
  }
  CutSearch search(graph, options.node_budget);
  std::size_t k = trivial_cut_lower_bound(graph);
  std::vector<Vertex> chosen;
  try {
    while (!search.feasible(k, {}, std::nullopt)) ++k;
    // Lexicographically least optimum, one position at a time.
    for (std::size_t pos = 0; pos < k; ++pos) {
      const Vertex from = chosen.empty() ? 0 : chosen.back() + 1;
      bool placed = false;
      for (Vertex v = from; v < n && !placed; ++v) {
        std::vector<Vertex> forced = chosen;
        forced.push_back(v);
        if (search.feasible(k, forced, v)) {
          chosen.push_back(v);
          placed = true;
        }
      }
      if (!placed) throw std::logic_error("lexicographic reconstruction failed");
    }
  } catch (const BudgetExhausted&) {
    CutResult fallback = greedy_cut_upper(graph);
    fallback.lower_bound = k;  // every size below k was refuted
    fallback.nodes = search.nodes();
    return fallback;
  }
  CutResult result;
  result.cut_size = k;
  result.separator = std::move(chosen);
  result.method = CutMethod::exact;
  result.lower_bound = k;
  result.nodes = search.nodes();
  const auto cert = verify_certificate(graph, result.separator);
  if (!cert.valid) throw std::logic_error("exact separator failed its certificate");
  result.component_sizes = cert.component_sizes;
  return result;
}

SeparationReport sep_lower_profile(const MarkedGroup& group, std::span<const int> radii, const CutOptions& options,
                                   std::size_t vertex_cap) {
  SeparationReport report;
  report.group = group.spec();
  std::vector<int> sorted(radii.begin(), radii.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int r : sorted) {
    const auto graph = to_finite_graph(build_ball(group, r, vertex_cap));
    SeparationRow row;
    row.radius = r;
    row.n = graph.size();
    if (graph.size() <= options.exact_limit) {
      const auto cut = exact_cut(graph, options);
      row.cut = cut.lower_bound;
      row.upper = cut.cut_size;
    } else {
      row.cut = trivial_cut_lower_bound(graph);
      row.upper = greedy_cut_upper(graph).cut_size;
    }
    row.method = row.cut == row.upper ? CutMethod::exact : CutMethod::trivial_lower;
    report.rows.push_back(row);
  }
  return report;
}

void write_csv(const SeparationReport& report, std::ostream& out) {
  out << "radius,n,cut,method\n";
  for (const auto& row : report.rows) {
    out << row.radius << ',' << row.n << ',' << row.cut << ',' << to_string(row.method) << '\n';
  }
}

json to_json(const SeparationReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"radius", row.radius},
                    {"n", row.n},
                    {"cut", row.cut},
                    {"upper", row.upper},
                    {"method", to_string(row.method)}});
  }
  return {{"group", report.group}, {"rows", std::move(rows)}};
}

json to_json(const CutResult& cut) {
  return {{"cut", cut.cut_size},
          {"separator", cut.separator},
          {"method", to_string(cut.method)},
          {"component_sizes", cut.component_sizes},
          {"lower_bound", cut.lower_bound},
          {"nodes", cut.nodes}};
}

}  // namespace ggt
