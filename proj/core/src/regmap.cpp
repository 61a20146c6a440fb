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

#include "ggt/regmap.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <random>
#include <unordered_map>

#include "ggt/element_json.hpp"
#include "ggt/errors.hpp"
#include "ggt/parallel.hpp"

namespace ggt {

using nlohmann::json;

KappaCertificate kappa_certificate(const TranslationAction& action, const CayleyBall& g_ball,
                                   const WordMetric& metric) {
  KappaCertificate cert;
  cert.generating_set_size = action.base().num_generators();
  const auto reports = measure_generator_displacements(action, g_ball, metric);
  for (const auto& d : reports) {
    if (d.sampled == 0 && !d.declared) {
      throw DomainError("no displacement data for generator " + action.acting().to_string(d.h));
    }
    std::int64_t used = d.lambda_hat;
    if (d.declared) {
      if (d.lambda_hat > *d.declared) {
        cert.declared_bound_violated = true;
      } else {
        used = *d.declared;
      }
    } else {
      cert.lower_bound_based = true;
    }
    cert.lambda_used.push_back(used);
    cert.lambda_hat.push_back(d.lambda_hat);
    cert.declared.push_back(d.declared);
    cert.max_lambda = std::max(cert.max_lambda, used);
  }
  cert.kappa = cert.max_lambda + static_cast<std::int64_t>(cert.generating_set_size);
  return cert;
}

RegularMapSample build_regular_map(ActionPtr action, const Element& basepoint, int h_radius) {
  if (!action) throw ParameterError("regular map needs an action");
  const MarkedGroup& H = action->acting();
  const MarkedGroup& G = action->base();
  if (!G.owns(basepoint)) throw ParameterError("base point is not an element of " + G.spec());
  RegularMapSample map;
  map.basepoint = G.canonicalize(basepoint);
  map.domain = std::make_shared<const CayleyBall>(build_ball(H, h_radius));
  map.values.reserve(map.domain->size());
  for (Vertex v = 0; v < map.domain->size(); ++v) {
    const auto c = action->cocycle(H.invert(map.domain->element(v)), map.basepoint);
    if (!c) {
      throw DomainError("orbit of " + G.to_string(map.basepoint) + " under " + H.to_string(map.domain->element(v)) +
                        " leaves the action's domain");
    }
    map.values.push_back(G.invert(*c));
  }
  map.action = std::move(action);
  return map;
}

namespace {

struct PairJob {
  Vertex a;
  Vertex b;
  bool adjacent;
};

__extension__ typedef __int128 i128;

void record_ratio(LipschitzReport& r, std::int64_t num, std::int64_t den) {
  // num/den > r.max_ratio_num/r.max_ratio_den
  if (static_cast<i128>(num) * r.max_ratio_den > static_cast<i128>(r.max_ratio_num) * den) {
    r.max_ratio_num = num;
    r.max_ratio_den = den;
  }
}

}  // namespace

LipschitzReport audit_lipschitz(const RegularMapSample& map, std::int64_t kappa, const LipschitzOptions& options) {
  if (kappa < 0) throw ParameterError("kappa must be nonnegative");
  const MarkedGroup& H = map.source();
  const MarkedGroup& G = map.target();
  const CayleyBall& domain = *map.domain;
  if (map.values.size() != domain.size()) throw ParameterError("map values do not match the domain");

  const int h_budget = 2 * domain.radius();
  const WordMetric h_metric(H, h_budget, options.vertex_cap);
  const bool g_closed = G.closed_form_length(G.identity()).has_value();
  const WordMetric g_metric(G, g_closed ? std::numeric_limits<int>::max() : options.g_budget, options.vertex_cap);

  std::vector<PairJob> jobs;
  for (Vertex v = 0; v < domain.size(); ++v) {
    for (const auto& e : domain.neighbors(v)) {
      if (v < e.target) jobs.push_back({v, e.target, true});
    }
  }
  const std::size_t n = domain.size();
  if (options.all_pairs) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) jobs.push_back({a, b, false});
    }
  } else if (n > 1) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (std::size_t i = 0; i < options.random_pairs; ++i) {
      Vertex a = pick(rng);
      Vertex b = pick(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      jobs.push_back({a, b, false});
    }
  }

  std::vector<LipschitzReport> partial(num_chunks(jobs.size()));
  parallel_chunks(jobs.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    LipschitzReport& out = partial[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const auto& job = jobs[i];
      const Element& h1 = domain.element(job.a);
      const Element& h2 = domain.element(job.b);
      std::int64_t d_h = 1;
      if (!job.adjacent) {
        const auto d = h_metric.distance(h1, h2);
        if (!d) throw EnlargeBallError("d_H exceeds the acting-group budget");
        d_h = *d;
        if (d_h == 1) continue;  // already covered as an adjacent pair
      }
      const auto d_g = g_metric.distance(map.values[job.a], map.values[job.b]);
      const std::int64_t bound = kappa * d_h;
      if (!d_g && bound > g_metric.budget()) {
        throw EnlargeBallError("cannot decide d_G <= " + std::to_string(bound) + " within budget " +
                               std::to_string(g_metric.budget()) + " in " + G.spec() + "; enlarge the ball");
      }
      if (job.adjacent) {
        ++out.adjacent_pairs;
        if (d_g) out.max_adjacent_distance = std::max(out.max_adjacent_distance, *d_g);
      } else {
        ++out.distant_pairs;
      }
      if (d_g) record_ratio(out, *d_g, d_h);
      // An unknown distance exceeds the budget, hence the bound.
      const bool strong_ok = d_g && *d_g <= bound;
      const bool defining_ok = d_g && *d_g <= kappa * (1 + d_h);
      if (!defining_ok && (d_g || kappa * (1 + d_h) <= g_metric.budget())) ++out.defining_violations;
      if (!strong_ok) {
        ++out.strong_violations;
        if (out.violations.size() < kMaxWitnesses) out.violations.push_back({h1, h2, d_h, d_g});
      }
    }
  });

  LipschitzReport total;
  total.kappa = kappa;
  total.certified = options.certified;
  for (auto& p : partial) {
    total.adjacent_pairs += p.adjacent_pairs;
    total.distant_pairs += p.distant_pairs;
    total.max_adjacent_distance = std::max(total.max_adjacent_distance, p.max_adjacent_distance);
    record_ratio(total, p.max_ratio_num, p.max_ratio_den);
    total.strong_violations += p.strong_violations;
    total.defining_violations += p.defining_violations;
    for (auto& v : p.violations) {
      if (total.violations.size() < kMaxWitnesses) total.violations.push_back(std::move(v));
    }
  }
  return total;
}

std::string to_string(BallConvention convention) {
  return convention == BallConvention::open ? "open" : "closed";
}

BallConvention parse_ball_convention(const std::string& name) {
  if (name == "open") return BallConvention::open;
  if (name == "closed") return BallConvention::closed;
  throw ParameterError("unknown ball convention '" + name + "'");
}

namespace {

// Minimum number of closed unit balls of H covering `points` (all distinct).
std::size_t min_unit_ball_cover(const MarkedGroup& H, const std::vector<Element>& points) {
  const std::size_t m = points.size();
  if (m == 0) return 0;
  std::unordered_map<Element, std::size_t> position;
  for (std::size_t i = 0; i < m; ++i) position.emplace(points[i], i);

  // A ball B(c, 1) meets the point set only if c is a point or a neighbour of one.
  std::unordered_map<Element, std::vector<std::size_t>> cover_of;
  for (std::size_t i = 0; i < m; ++i) {
    cover_of[points[i]];
    for (Symbol s = 0; s < H.num_generators(); ++s) cover_of[H.apply_generator(points[i], s)];
  }
  std::vector<std::vector<std::size_t>> sets;
  for (auto& [center, covered] : cover_of) {
    if (auto it = position.find(center); it != position.end()) covered.push_back(it->second);
    for (Symbol s = 0; s < H.num_generators(); ++s) {
      if (auto it = position.find(H.apply_generator(center, s)); it != position.end()) covered.push_back(it->second);
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    sets.push_back(covered);
  }
  // Sets covering point i.
  std::vector<std::vector<std::size_t>> containing(m);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (auto i : sets[j]) containing[i].push_back(j);
  }

  std::vector<int> cover_count(m, 0);
  auto search = [&](auto&& self, std::size_t budget) -> bool {
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (cover_count[i] == 0) {
        first = i;
        break;
      }
    }
    if (first == m) return true;
    if (budget == 0) return false;
    for (auto j : containing[first]) {
      for (auto i : sets[j]) ++cover_count[i];
      const bool ok = self(self, budget - 1);
      for (auto i : sets[j]) --cover_count[i];
      if (ok) return true;
    }
    return false;
  };
  for (std::size_t k = 1;; ++k) {
    if (search(search, k)) return k;
  }
}

}  // namespace

MultiplicityReport audit_multiplicity(const RegularMapSample& map, std::int64_t kappa, BallConvention convention,
                                      bool certified) {
  const MarkedGroup& H = map.source();
  const MarkedGroup& G = map.target();
  const CayleyBall& domain = *map.domain;
  MultiplicityReport report;
  report.convention = convention;
  report.kappa = kappa;
  report.certified = certified;

  // Fibers in first-appearance order.
  std::unordered_map<Element, std::vector<Vertex>> fibers;
  std::vector<Element> image;
  for (Vertex v = 0; v < domain.size(); ++v) {
    auto [it, inserted] = fibers.try_emplace(map.values[v]);
    if (inserted) image.push_back(map.values[v]);
    it->second.push_back(v);
  }
  for (const auto& g : image) report.max_fiber = std::max(report.max_fiber, fibers.at(g).size());
  report.injective = report.max_fiber <= 1;

  auto flag = [&report](const Element& g) {
    ++report.violation_count;
    if (report.violating_centers.size() < kMaxWitnesses) report.violating_centers.push_back(g);
  };

  if (convention == BallConvention::open) {
    for (const auto& g : image) {
      ++report.balls_checked;
      if (static_cast<std::int64_t>(fibers.at(g).size()) > kappa) flag(g);
    }
    report.max_cover = report.max_fiber;
    return report;
  }

  // Centers: the image and its 1-neighbourhood, deduplicated in discovery order.
  std::vector<Element> centers;
  std::unordered_map<Element, bool> seen;
  for (const auto& g : image) {
    if (seen.emplace(g, true).second) centers.push_back(g);
    for (Symbol t = 0; t < G.num_generators(); ++t) {
      Element n = G.apply_generator(g, t);
      if (seen.emplace(n, true).second) centers.push_back(std::move(n));
    }
  }
  for (const auto& g : centers) {
    std::vector<Element> preimage;
    auto collect = [&](const Element& y) {
      if (auto it = fibers.find(y); it != fibers.end()) {
        for (Vertex v : it->second) preimage.push_back(domain.element(v));
      }
    };
    collect(g);
    for (Symbol t = 0; t < G.num_generators(); ++t) collect(G.apply_generator(g, t));
    ++report.balls_checked;
    const std::size_t cover = min_unit_ball_cover(H, preimage);
    report.max_cover = std::max(report.max_cover, cover);
    if (static_cast<std::int64_t>(cover) > kappa) flag(g);
  }
  return report;
}

json to_json(const KappaCertificate& kappa) {
  json declared = json::array();
  for (const auto& d : kappa.declared) declared.push_back(d ? json(*d) : json(nullptr));
  return {{"kappa", kappa.kappa},
          {"max_lambda", kappa.max_lambda},
          {"generating_set_size", kappa.generating_set_size},
          {"lambda_used", kappa.lambda_used},
          {"lambda_hat", kappa.lambda_hat},
          {"declared", std::move(declared)},
          {"lower_bound_based", kappa.lower_bound_based},
          {"declared_bound_violated", kappa.declared_bound_violated},
          {"certified", kappa.certified()}};
}

json to_json(const LipschitzReport& report, const MarkedGroup& source) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"h1", element_to_json(source, v.h1)},
                          {"h2", element_to_json(source, v.h2)},
                          {"d_h", v.d_h},
                          {"d_g", v.d_g ? json(*v.d_g) : json(nullptr)}});
  }
  return {{"kappa", report.kappa},
          {"verified_form", "d_G <= kappa * d_H"},
          {"adjacent_pairs", report.adjacent_pairs},
          {"distant_pairs", report.distant_pairs},
          {"max_adjacent_distance", report.max_adjacent_distance},
          {"max_ratio", {report.max_ratio_num, report.max_ratio_den}},
          {"strong_violations", report.strong_violations},
          {"defining_violations", report.defining_violations},
          {"violations", std::move(violations)},
          {"status", report.passed() ? (report.certified ? "certified" : "consistent") : "failed"}};
}

json to_json(const MultiplicityReport& report, const MarkedGroup& target) {
  json centers = json::array();
  for (const auto& g : report.violating_centers) centers.push_back(element_to_json(target, g));
  return {{"convention", to_string(report.convention)},
          {"kappa", report.kappa},
          {"max_fiber", report.max_fiber},
          {"injective", report.injective},
          {"balls_checked", report.balls_checked},
          {"max_cover", report.max_cover},
          {"violations", report.violation_count},
          {"violating_centers", std::move(centers)},
          {"status", report.passed() ? (report.certified ? "certified" : "consistent") : "failed"}};
}

json to_json(const RegularMapSample& map, std::int64_t kappa, const json& audits) {
  json pairs = json::array();
  for (Vertex v = 0; v < map.domain->size(); ++v) {
    pairs.push_back({element_to_json(map.source(), map.domain->element(v)), element_to_json(map.target(), map.values[v])});
  }
  return {{"action", map.action->name()},
          {"source", map.source().spec()},
          {"target", map.target().spec()},
          {"h_radius", map.domain->radius()},
          {"basepoint", element_to_json(map.target(), map.basepoint)},
          {"kappa", kappa},
          {"pairs", std::move(pairs)},
          {"audits", audits}};
}

void write_length_csv(const RegularMapSample& map, const WordMetric& target_metric, std::ostream& out) {
  out << "l_H,l_G\n";
  for (Vertex v = 0; v < map.domain->size(); ++v) {
    out << map.domain->level(v) << ',';
    if (auto l = target_metric.length(map.values[v])) out << *l;
    out << '\n';
  }
}

}  // namespace ggt
