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

#ifndef GGT_TLA_HPP_
#define GGT_TLA_HPP_

// Translation-like actions of a marked group H on a marked group G, given by
// generator maps x -> s * x and extended to words right-to-left:
// (s_1 ... s_k) * x = s_1 * (... (s_k * x)).
//
// L(h, x) = x^-1 (h * x) and the cocycle c(h, x) = L(h, x)^-1 satisfy
// c(h1 h2, x) = c(h1, h2 * x) c(h2, x).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/cayley.hpp"
#include "ggt/groups.hpp"

namespace ggt {

// s * x, or std::nullopt where a partial action is undefined.
using GeneratorStep = std::function<std::optional<Element>(const Element&)>;

class TranslationAction {
 public:
  TranslationAction(std::string name, MarkedGroup acting, MarkedGroup base, std::vector<GeneratorStep> steps,
                    std::vector<std::optional<std::int64_t>> declared_bounds = {}, bool partial = false);

  const std::string& name() const { return name_; }
  const MarkedGroup& acting() const { return acting_; }
  const MarkedGroup& base() const { return base_; }
  bool is_partial() const { return partial_; }

  // Proof-level bound on sup_x l_G(c(s, x)), when the action ships one.
  std::optional<std::int64_t> declared_bound(Symbol s) const { return declared_[s]; }
  bool all_bounds_declared() const;

  // Partial actions are defined on the points where some generator step is;
  // total actions everywhere. Outside the domain even the identity is Unknown.
  bool in_domain(const Element& x) const;
  std::optional<Element> step(Symbol s, const Element& x) const;
  std::optional<Element> act_word(std::span<const Symbol> word, const Element& x) const;
  std::optional<Element> act(const Element& h, const Element& x) const;
  // x^-1 (h * x)
  std::optional<Element> displacement(const Element& h, const Element& x) const;
  // (x^-1 (h * x))^-1
  std::optional<Element> cocycle(const Element& h, const Element& x) const;

 private:
  std::string name_;
  MarkedGroup acting_;
  MarkedGroup base_;
  std::vector<GeneratorStep> steps_;
  std::vector<std::optional<std::int64_t>> declared_;
  bool partial_;
};

using ActionPtr = std::shared_ptr<const TranslationAction>;

// Right action of H on G through an injective homomorphism phi, written as a
// left action: h * x = x phi(h)^-1, so c(h, x) = phi(h) for every x.
// images[s] is phi(s); an entry may be left empty when its inverse symbol is given.
// Throws HomomorphismError if a relator of H is not killed, FreenessError if
// phi is not injective on the H-ball of radius check_radius.
TranslationAction subgroup_action(const MarkedGroup& acting, const MarkedGroup& base,
                                  const std::vector<std::optional<Element>>& images, int check_radius = 6);

// Parses {"acting": "<spec>", "images": {"<symbol>": <element>, ...}}, or a bare
// images object with acting group Z.
TranslationAction subgroup_action_from_json(const MarkedGroup& base, const nlohmann::json& spec,
                                            int check_radius = 6);

// The bi-infinite unit-step Hamiltonian path P: Z -> Z^2. The right half-plane
// x >= 0 is swept by C-shaped shells max(x, |y|) = r starting from P(0) = (0,0);
// the left half-plane x <= -1 is its mirror image starting from P(-1) = (-1,0).
std::pair<std::int64_t, std::int64_t> snake_point(std::int64_t k);
std::int64_t snake_index(std::int64_t x, std::int64_t y);

// Transitive free Z-action on Z^2: n * x = P(P^-1(x) + n). Declared bounds 1.
TranslationAction grid_snake_action();

// Reads "s <x-json> <y-json>" lines. '#' lines are comments; "# acting: <spec>"
// selects the acting group (default Z). The base group comes from the elements'
// "group" fields. Throws ParseError or InconsistentTableError.
TranslationAction action_from_table(std::istream& in, const std::string& name = "table");

// Writes the table of `action` restricted to x in g_ball.
void write_action_table(const TranslationAction& action, const CayleyBall& g_ball, std::ostream& out);

struct CocycleViolation {
  Element h1;
  Element h2;
  Element x;
};

struct CocycleAudit {
  std::size_t checked = 0;
  std::size_t uncovered = 0;
  std::size_t violation_count = 0;
  std::vector<CocycleViolation> violations;  // first kMaxWitnesses, in scan order
  bool vacuous() const { return checked == 0; }
  bool passed() const { return violation_count == 0; }
};

inline constexpr std::size_t kMaxWitnesses = 64;

// Exhaustive check of the cocycle identity over h1, h2 in h_ball and x in g_ball.
// Triples with an undefined term are counted as uncovered.
CocycleAudit audit_cocycle_law(const TranslationAction& action, const CayleyBall& h_ball, const CayleyBall& g_ball);

struct FreenessWitness {
  Element h;
  Element other;  // identity for a fixed point h * x = x
  Element x;
};

struct FreenessAudit {
  std::size_t checked_points = 0;
  std::size_t checked_pairs = 0;
  std::size_t uncovered = 0;
  std::size_t witness_count = 0;
  std::vector<FreenessWitness> witnesses;
  bool vacuous() const { return checked_pairs == 0; }
  bool passed() const { return witness_count == 0; }
};

// For every x in g_ball, h -> c(h, x) must be injective on h_ball.
FreenessAudit audit_freeness(const TranslationAction& action, const CayleyBall& h_ball, const CayleyBall& g_ball);

struct DisplacementReport {
  Element h;
  std::int64_t lambda_hat = 0;  // max l_G(c(h, x)) over the sampled x: a lower bound for lambda_h
  std::optional<Element> argmax;
  std::size_t sampled = 0;
  std::size_t uncovered = 0;
  std::optional<std::int64_t> declared;
  bool within_declared() const { return !declared || lambda_hat <= *declared; }
};

// Throws EnlargeBallError if some l_G(c(h, x)) exceeds the metric's budget.
DisplacementReport measure_displacement(const TranslationAction& action, const Element& h, const CayleyBall& g_ball,
                                        const WordMetric& metric);

// One report per generator of the acting group, in symbol order.
std::vector<DisplacementReport> measure_generator_displacements(const TranslationAction& action,
                                                                const CayleyBall& g_ball, const WordMetric& metric);

struct ActionAuditReport {
  CocycleAudit cocycle;
  FreenessAudit freeness;
  std::vector<DisplacementReport> displacement;
  bool passed() const;
};

nlohmann::json to_json(const TranslationAction& action, const ActionAuditReport& report);

}  // namespace ggt

#endif  // GGT_TLA_HPP_
