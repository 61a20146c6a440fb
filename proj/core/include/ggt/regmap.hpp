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

#ifndef GGT_REGMAP_HPP_
#define GGT_REGMAP_HPP_

// Regular maps built from translation-like actions. For a base point x the map
// f(h) = c(h^-1, x)^-1 satisfies
//
//   d_G(f(h1), f(h2)) <= kappa * d_H(h1, h2),   kappa = max_s lambda_s + #T,
//
// and is injective whenever the action is free.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/cayley.hpp"
#include "ggt/tla.hpp"

namespace ggt {

struct KappaCertificate {
  std::int64_t kappa = 0;
  std::int64_t max_lambda = 0;
  std::size_t generating_set_size = 0;  // #T of the base group
  // Per acting generator: the bound used, the sampled maximum and the declared bound.
  std::vector<std::int64_t> lambda_used;
  std::vector<std::int64_t> lambda_hat;
  std::vector<std::optional<std::int64_t>> declared;
  // Some lambda_s had no declared bound and was replaced by its sampled lower bound.
  bool lower_bound_based = false;
  // Some sampled maximum exceeded its declared bound.
  bool declared_bound_violated = false;
  bool certified() const { return !lower_bound_based && !declared_bound_violated; }
};

// Throws DomainError when a generator has neither a declared bound nor samples.
KappaCertificate kappa_certificate(const TranslationAction& action, const CayleyBall& g_ball,
                                   const WordMetric& metric);

struct RegularMapSample {
  ActionPtr action;
  Element basepoint;
  std::shared_ptr<const CayleyBall> domain;  // ball in the acting group
  std::vector<Element> values;               // values[v] = f(domain->element(v))

  const MarkedGroup& source() const { return action->acting(); }
  const MarkedGroup& target() const { return action->base(); }
};

// Throws DomainError if the orbit of the base point leaves a partial action's domain.
RegularMapSample build_regular_map(ActionPtr action, const Element& basepoint, int h_radius);

struct LipschitzOptions {
  std::size_t random_pairs = 2000;  // distant pairs sampled when all_pairs is false
  bool all_pairs = false;
  std::uint64_t seed = 0x5eed;
  // Word-length budget in the base group when it has no closed-form length.
  int g_budget = 12;
  std::size_t vertex_cap = kDefaultVertexCap;
  // Label passing reports as certified rather than merely consistent.
  bool certified = false;
};

struct LipschitzViolation {
  Element h1;
  Element h2;
  std::int64_t d_h = 0;
  std::optional<std::int64_t> d_g;  // std::nullopt: larger than the metric budget
};

struct LipschitzReport {
  std::int64_t kappa = 0;
  std::size_t adjacent_pairs = 0;
  std::size_t distant_pairs = 0;
  std::int64_t max_adjacent_distance = 0;
  // Largest d_G / d_H among pairs whose d_G is known exactly.
  std::int64_t max_ratio_num = 0;
  std::int64_t max_ratio_den = 1;
  std::size_t strong_violations = 0;    // d_G > kappa * d_H
  std::size_t defining_violations = 0;  // d_G > kappa * (1 + d_H)
  std::vector<LipschitzViolation> violations;
  bool certified = false;
  double max_ratio() const { return static_cast<double>(max_ratio_num) / static_cast<double>(max_ratio_den); }
  bool passed() const { return strong_violations == 0; }
};

// Checks d_G(f(h1), f(h2)) <= kappa * d_H(h1, h2) on every adjacent pair of the
// domain and on sampled (or all) distant pairs. Throws EnlargeBallError when a
// needed distance cannot be decided within the base group's budget.
LipschitzReport audit_lipschitz(const RegularMapSample& map, std::int64_t kappa, const LipschitzOptions& options = {});

enum class BallConvention { open, closed };

std::string to_string(BallConvention convention);
BallConvention parse_ball_convention(const std::string& name);

struct MultiplicityReport {
  BallConvention convention = BallConvention::open;
  std::int64_t kappa = 0;
  std::size_t max_fiber = 0;
  bool injective = false;
  std::size_t balls_checked = 0;
  // Closed convention: largest minimum number of closed unit balls covering a preimage.
  std::size_t max_cover = 0;
  std::size_t violation_count = 0;
  std::vector<Element> violating_centers;  // base-group centers, first kMaxWitnesses
  bool certified = false;
  bool passed() const { return violation_count == 0; }
};

// open:   unit open balls in a graph are points, so every fiber must have <= kappa points.
// closed: for every g within distance 1 of the image, the preimage of the closed
//         unit ball around g must be covered by <= kappa closed unit balls of H
//         (exact minimum, by exhaustive set cover).
MultiplicityReport audit_multiplicity(const RegularMapSample& map, std::int64_t kappa, BallConvention convention,
                                      bool certified = false);

nlohmann::json to_json(const KappaCertificate& kappa);
nlohmann::json to_json(const LipschitzReport& report, const MarkedGroup& source);
nlohmann::json to_json(const MultiplicityReport& report, const MarkedGroup& target);
// {"basepoint", "kappa", "pairs": [[h, f(h)], ...], "audits": {...}}
nlohmann::json to_json(const RegularMapSample& map, std::int64_t kappa, const nlohmann::json& audits);
// "l_H,l_G" rows; l_G is left empty beyond the metric budget.
void write_length_csv(const RegularMapSample& map, const WordMetric& target_metric, std::ostream& out);

}  // namespace ggt

#endif  // GGT_REGMAP_HPP_
