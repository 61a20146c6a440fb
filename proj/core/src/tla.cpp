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

#include "ggt/tla.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "ggt/element_json.hpp"
#include "ggt/errors.hpp"
#include "ggt/parallel.hpp"

namespace ggt {

using nlohmann::json;

TranslationAction::TranslationAction(std::string name, MarkedGroup acting, MarkedGroup base,
                                     std::vector<GeneratorStep> steps,
                                     std::vector<std::optional<std::int64_t>> declared_bounds, bool partial)
    : name_(std::move(name)),
      acting_(std::move(acting)),
      base_(std::move(base)),
      steps_(std::move(steps)),
      declared_(std::move(declared_bounds)),
      partial_(partial) {
  if (steps_.size() != acting_.num_generators()) {
    throw ParameterError("action needs one generator map per generator of " + acting_.spec());
  }
  if (declared_.empty()) declared_.resize(steps_.size());
  if (declared_.size() != steps_.size()) throw ParameterError("declared bounds do not match the generators");
}

bool TranslationAction::all_bounds_declared() const {
  return std::all_of(declared_.begin(), declared_.end(), [](const auto& b) { return b.has_value(); });
}

std::optional<Element> TranslationAction::step(Symbol s, const Element& x) const {
  if (s >= steps_.size()) throw ParseError("invalid acting generator " + std::to_string(s));
  return steps_[s](x);
}

bool TranslationAction::in_domain(const Element& x) const {
  if (!partial_) return true;
  for (Symbol s = 0; s < steps_.size(); ++s) {
    if (step(s, x)) return true;
  }
  return false;
}

std::optional<Element> TranslationAction::act_word(std::span<const Symbol> word, const Element& x) const {
  if (word.empty() && !in_domain(x)) return std::nullopt;
  std::optional<Element> y = x;
  for (auto it = word.rbegin(); it != word.rend() && y; ++it) y = step(*it, *y);
  return y;
}

std::optional<Element> TranslationAction::act(const Element& h, const Element& x) const {
  return act_word(acting_.normal_word(h), x);
}

std::optional<Element> TranslationAction::displacement(const Element& h, const Element& x) const {
  auto y = act(h, x);
  if (!y) return std::nullopt;
  return base_.multiply(base_.invert(x), *y);
}

std::optional<Element> TranslationAction::cocycle(const Element& h, const Element& x) const {
  auto y = act(h, x);
  if (!y) return std::nullopt;
  return base_.multiply(base_.invert(*y), x);
}

// ---------------------------------------------------------------------------
// Subgroup actions

TranslationAction subgroup_action(const MarkedGroup& acting, const MarkedGroup& base,
                                  const std::vector<std::optional<Element>>& images, int check_radius) {
  const std::size_t k = acting.num_generators();
  if (images.size() != k) throw ParameterError("need one image slot per generator of " + acting.spec());
  std::vector<Element> phi(k);
  for (Symbol s = 0; s < k; ++s) {
    const Symbol inv = acting.inverse(s);
    if (images[s]) {
      if (!base.owns(*images[s])) throw ParameterError("generator image is not an element of " + base.spec());
      phi[s] = base.canonicalize(*images[s]);
    } else if (images[inv]) {
      if (!base.owns(*images[inv])) throw ParameterError("generator image is not an element of " + base.spec());
      phi[s] = base.invert(base.canonicalize(*images[inv]));
    } else {
      throw ParameterError("no image given for generator " + acting.symbol_name(s));
    }
  }
  const Element e = base.identity();
  for (Symbol s = 0; s < k; ++s) {
    if (base.multiply(phi[s], phi[acting.inverse(s)]) != e) {
      throw HomomorphismError("images of " + acting.symbol_name(s) + " and its inverse are not inverse");
    }
  }
  auto image_of_word = [&](std::span<const Symbol> w) {
    Element y = e;
    for (Symbol s : w) y = base.multiply(y, phi[s]);
    return y;
  };
  for (const Word& r : acting.relators()) {
    if (image_of_word(r) != e) {
      throw HomomorphismError("relator " + acting.format_word(r) + " maps to " + base.to_string(image_of_word(r)));
    }
  }
  const CayleyBall h_ball = build_ball(acting, check_radius);
  std::unordered_map<Element, Vertex> seen;
  for (Vertex v = 0; v < h_ball.size(); ++v) {
    const Element y = image_of_word(h_ball.geodesic_word(v));
    const auto [it, inserted] = seen.emplace(y, v);
    if (!inserted) {
      throw FreenessError("homomorphism is not injective: " + acting.to_string(h_ball.element(v)) + " and " +
                          acting.to_string(h_ball.element(it->second)) + " both map to " + base.to_string(y));
    }
  }

  std::vector<GeneratorStep> steps;
  std::vector<std::optional<std::int64_t>> declared;
  for (Symbol s = 0; s < k; ++s) {
    Element inv_image = base.invert(phi[s]);
    steps.emplace_back([base, inv_image](const Element& x) -> std::optional<Element> {
      return base.multiply(x, inv_image);
    });
    declared.push_back(word_length(base, phi[s], 64));
  }
  return TranslationAction("subgroup", acting, base, std::move(steps), std::move(declared));
}

TranslationAction subgroup_action_from_json(const MarkedGroup& base, const json& spec, int check_radius) {
  MarkedGroup acting = MarkedGroup::free_abelian(1);
  const json* images = &spec;
  if (spec.is_object() && spec.contains("images")) {
    if (spec.contains("acting")) acting = MarkedGroup::parse(spec.at("acting").get<std::string>());
    images = &spec.at("images");
  }
  std::vector<std::optional<Element>> slots(acting.num_generators());
  if (images->is_object()) {
    for (const auto& [name, value] : images->items()) {
      slots[acting.parse_symbol(name)] = element_from_json(base, value);
    }
  } else if (images->is_array()) {
    if (images->size() > slots.size()) throw ParseError("too many generator images");
    for (std::size_t i = 0; i < images->size(); ++i) slots[i] = element_from_json(base, (*images)[i]);
  } else {
    throw ParseError("subgroup action spec must map generator names to elements");
  }
  return subgroup_action(acting, base, slots, check_radius);
}

// ---------------------------------------------------------------------------
// Grid snake

namespace {

__extension__ typedef __int128 i128;

// Cells before shell r of the right half-plane: (2r - 1) r.
i128 shell_base(i128 r) { return (2 * r - 1) * r; }

std::pair<std::int64_t, std::int64_t> right_point(std::int64_t m) {
  if (m == 0) return {0, 0};
  auto r = static_cast<i128>((1.0L + std::sqrt(1.0L + 8.0L * static_cast<long double>(m))) / 4.0L);
  while (shell_base(r + 1) <= m) ++r;
  while (shell_base(r) > m) --r;
  const i128 o = m - shell_base(r);
  const i128 sigma = (r % 2 == 1) ? 1 : -1;
  i128 x = 0;
  i128 y = 0;
  if (o < r) {
    x = o;
    y = sigma * r;
  } else if (o <= 3 * r) {
    x = r;
    y = sigma * (2 * r - o);
  } else {
    x = 4 * r - o;
    y = -sigma * r;
  }
  return {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)};
}

i128 right_index(i128 x, i128 y) {
  const i128 r = std::max(x, y < 0 ? -y : y);
  if (r == 0) return 0;
  const i128 sigma = (r % 2 == 1) ? 1 : -1;
  i128 o = 0;
  if (y == sigma * r && x < r) {
    o = x;
  } else if (x == r) {
    o = 2 * r - sigma * y;
  } else {
    o = 4 * r - x;
  }
  return shell_base(r) + o;
}

constexpr std::int64_t kSnakeLimit = std::int64_t{1} << 40;

}  // namespace

std::pair<std::int64_t, std::int64_t> snake_point(std::int64_t k) {
  if (k > kSnakeLimit || k < -kSnakeLimit) throw OverflowError("snake index out of supported range");
  if (k >= 0) return right_point(k);
  const auto [x, y] = right_point(-1 - k);
  return {-1 - x, y};
}

std::int64_t snake_index(std::int64_t x, std::int64_t y) {
  if (x > kSnakeLimit / 4 || x < -kSnakeLimit / 4 || y > kSnakeLimit / 4 || y < -kSnakeLimit / 4) {
    throw OverflowError("snake cell out of supported range");
  }
  if (x >= 0) return static_cast<std::int64_t>(right_index(x, y));
  return static_cast<std::int64_t>(-1 - right_index(-1 - static_cast<i128>(x), y));
}

TranslationAction grid_snake_action() {
  auto shift = [](std::int64_t by) {
    return [by](const Element& x) -> std::optional<Element> {
      const auto& c = std::get<ZdElement>(x).coords;
      const auto [px, py] = snake_point(snake_index(c[0], c[1]) + by);
      return ZdElement{{px, py}};
    };
  };
  std::vector<GeneratorStep> steps{shift(1), shift(-1)};
  return TranslationAction("snake", MarkedGroup::free_abelian(1), MarkedGroup::free_abelian(2), std::move(steps),
                           {1, 1});
}

// ---------------------------------------------------------------------------
// Table-backed actions

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits off one whitespace-delimited token or one bracketed JSON value.
std::string_view next_value(std::string_view& rest) {
  rest = trim(rest);
  if (rest.empty()) return {};
  std::size_t end = 0;
  if (rest.front() == '{' || rest.front() == '[') {
    int depth = 0;
    bool in_string = false;
    for (; end < rest.size(); ++end) {
      const char c = rest[end];
      if (in_string) {
        if (c == '\\') {
          ++end;
        } else if (c == '"') {
          in_string = false;
        }
      } else if (c == '"') {
        in_string = true;
      } else if (c == '{' || c == '[') {
        ++depth;
      } else if (c == '}' || c == ']') {
        if (--depth == 0) {
          ++end;
          break;
        }
      }
    }
    if (depth != 0) throw ParseError("unbalanced JSON value");
  } else {
    while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
  }
  const auto value = rest.substr(0, end);
  rest.remove_prefix(end);
  return value;
}

std::optional<std::string> directive(std::string_view line, std::string_view key) {
  line = trim(line.substr(1));
  if (line.substr(0, key.size()) != key) return std::nullopt;
  line.remove_prefix(key.size());
  line = trim(line);
  if (line.empty() || line.front() != ':') return std::nullopt;
  return std::string(trim(line.substr(1)));
}

}  // namespace

TranslationAction action_from_table(std::istream& in, const std::string& name) {
  MarkedGroup acting = MarkedGroup::free_abelian(1);
  std::optional<MarkedGroup> base;
  struct Row {
    std::string symbol;
    json x;
    json y;
    std::size_t line;
  };
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      if (auto spec = directive(text, "acting")) acting = MarkedGroup::parse(*spec);
      if (auto spec = directive(text, "base")) base = MarkedGroup::parse(*spec);
      continue;
    }
    std::string_view rest = text;
    Row row;
    row.symbol = std::string(next_value(rest));
    const auto xs = next_value(rest);
    const auto ys = next_value(rest);
    if (xs.empty() || ys.empty() || !trim(rest).empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 's <x-json> <y-json>'");
    }
    try {
      row.x = json::parse(xs);
      row.y = json::parse(ys);
    } catch (const json::parse_error& err) {
      throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
    }
    row.line = line_no;
    if (!base && row.x.is_object() && row.x.contains("group")) {
      base = MarkedGroup::parse(row.x.at("group").get<std::string>());
    }
    rows.push_back(std::move(row));
  }
  if (!base) {
    if (!rows.empty()) throw ParseError("cannot determine the base group of the action table");
    base = acting;
  }

  using Table = std::unordered_map<Element, Element>;
  auto tables = std::make_shared<std::vector<Table>>(acting.num_generators());
  for (const auto& row : rows) {
    try {
      const Symbol s = acting.parse_symbol(row.symbol);
      Element x = element_from_json(*base, row.x);
      Element y = element_from_json(*base, row.y);
      auto [it, inserted] = (*tables)[s].emplace(std::move(x), y);
      if (!inserted && it->second != y) {
        throw InconsistentTableError("line " + std::to_string(row.line) + ": " + row.symbol + " * " +
                                     base->to_string(it->first) + " listed as both " +
                                     base->to_string(it->second) + " and " + base->to_string(y));
      }
    } catch (const InconsistentTableError&) {
      throw;
    } catch (const Error& err) {
      throw ParseError("line " + std::to_string(row.line) + ": " + err.what());
    }
  }

  std::vector<GeneratorStep> steps;
  for (std::size_t s = 0; s < acting.num_generators(); ++s) {
    steps.emplace_back([tables, s](const Element& x) -> std::optional<Element> {
      const auto& table = (*tables)[s];
      const auto it = table.find(x);
      if (it == table.end()) return std::nullopt;
      return it->second;
    });
  }
  return TranslationAction(name, acting, *base, std::move(steps), {}, true);
}

void write_action_table(const TranslationAction& action, const CayleyBall& g_ball, std::ostream& out) {
  out << "# acting: " << action.acting().spec() << '\n';
  out << "# base: " << action.base().spec() << '\n';
  for (Vertex v = 0; v < g_ball.size(); ++v) {
    const Element& x = g_ball.element(v);
    for (Symbol s = 0; s < action.acting().num_generators(); ++s) {
      if (auto y = action.step(s, x)) {
        out << action.acting().symbol_name(s) << ' ' << element_to_json(action.base(), x).dump() << ' '
            << element_to_json(action.base(), *y).dump() << '\n';
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Audits

CocycleAudit audit_cocycle_law(const TranslationAction& action, const CayleyBall& h_ball, const CayleyBall& g_ball) {
  if (!(h_ball.group() == action.acting()) || !(g_ball.group() == action.base())) {
    throw ParameterError("balls do not match the action's groups");
  }
  const MarkedGroup& H = action.acting();
  const MarkedGroup& G = action.base();
  const std::size_t nh = h_ball.size();
  std::vector<Word> words(nh);
  for (Vertex v = 0; v < nh; ++v) words[v] = H.normal_word(h_ball.element(v));
  // Words for all products h1 h2, shared across base points.
  std::vector<Word> product_words(nh * nh);
  for (Vertex a = 0; a < nh; ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      product_words[a * nh + b] = H.normal_word(H.multiply(h_ball.element(a), h_ball.element(b)));
    }
  }

  std::vector<CocycleAudit> partial(num_chunks(g_ball.size()));
  parallel_chunks(g_ball.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    CocycleAudit& out = partial[chunk];
    for (std::size_t xi = begin; xi < end; ++xi) {
      const Element& x = g_ball.element(static_cast<Vertex>(xi));
      const Element x_inv = G.invert(x);
      std::vector<std::optional<Element>> moved(nh);  // h2 * x
      std::vector<std::optional<Element>> cocycles(nh);  // c(h2, x)
      for (Vertex b = 0; b < nh; ++b) {
        moved[b] = action.act_word(words[b], x);
        if (moved[b]) cocycles[b] = G.multiply(G.invert(*moved[b]), x);
      }
      for (Vertex a = 0; a < nh; ++a) {
        for (Vertex b = 0; b < nh; ++b) {
          const auto product = action.act_word(product_words[a * nh + b], x);
          if (!product || !moved[b]) {
            ++out.uncovered;
            continue;
          }
          const auto outer = action.act_word(words[a], *moved[b]);
          if (!outer) {
            ++out.uncovered;
            continue;
          }
          const Element lhs = G.multiply(G.invert(*product), x);
          const Element rhs = G.multiply(G.multiply(G.invert(*outer), *moved[b]), *cocycles[b]);
          ++out.checked;
          if (lhs != rhs) {
            ++out.violation_count;
            if (out.violations.size() < kMaxWitnesses) {
              out.violations.push_back({h_ball.element(a), h_ball.element(b), x});
            }
          }
        }
      }
    }
  });

  CocycleAudit total;
  for (auto& p : partial) {
    total.checked += p.checked;
    total.uncovered += p.uncovered;
    total.violation_count += p.violation_count;
    for (auto& v : p.violations) {
      if (total.violations.size() < kMaxWitnesses) total.violations.push_back(std::move(v));
    }
  }
  return total;
}

FreenessAudit audit_freeness(const TranslationAction& action, const CayleyBall& h_ball, const CayleyBall& g_ball) {
  if (!(h_ball.group() == action.acting()) || !(g_ball.group() == action.base())) {
    throw ParameterError("balls do not match the action's groups");
  }
  const MarkedGroup& H = action.acting();
  const MarkedGroup& G = action.base();
  std::vector<Word> words(h_ball.size());
  for (Vertex v = 0; v < h_ball.size(); ++v) words[v] = H.normal_word(h_ball.element(v));

  std::vector<FreenessAudit> partial(num_chunks(g_ball.size()));
  parallel_chunks(g_ball.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    FreenessAudit& out = partial[chunk];
    for (std::size_t xi = begin; xi < end; ++xi) {
      const Element& x = g_ball.element(static_cast<Vertex>(xi));
      std::unordered_map<Element, Vertex> first_seen;
      bool covered_any = false;
      for (Vertex v = 0; v < h_ball.size(); ++v) {
        const auto y = action.act_word(words[v], x);
        if (!y) {
          ++out.uncovered;
          continue;
        }
        covered_any = true;
        ++out.checked_pairs;
        const auto [it, inserted] = first_seen.emplace(G.multiply(G.invert(*y), x), v);
        if (!inserted) {
          ++out.witness_count;
          if (out.witnesses.size() < kMaxWitnesses) {
            out.witnesses.push_back({h_ball.element(v), h_ball.element(it->second), x});
          }
        }
      }
      if (covered_any) ++out.checked_points;
    }
  });

  FreenessAudit total;
  for (auto& p : partial) {
    total.checked_points += p.checked_points;
    total.checked_pairs += p.checked_pairs;
    total.uncovered += p.uncovered;
    total.witness_count += p.witness_count;
    for (auto& w : p.witnesses) {
      if (total.witnesses.size() < kMaxWitnesses) total.witnesses.push_back(std::move(w));
    }
  }
  return total;
}

DisplacementReport measure_displacement(const TranslationAction& action, const Element& h, const CayleyBall& g_ball,
                                        const WordMetric& metric) {
  if (!(metric.group() == action.base())) throw ParameterError("metric does not match the base group");
  const MarkedGroup& H = action.acting();
  DisplacementReport report;
  report.h = H.canonicalize(h);
  const Word w = H.normal_word(report.h);
  if (w.size() == 1) report.declared = action.declared_bound(w.front());
  for (Vertex v = 0; v < g_ball.size(); ++v) {
    const Element& x = g_ball.element(v);
    const auto y = action.act_word(w, x);
    if (!y) {
      ++report.uncovered;
      continue;
    }
    const Element c = action.base().multiply(action.base().invert(*y), x);
    const auto l = metric.require_length(c);
    ++report.sampled;
    if (!report.argmax || l > report.lambda_hat) {
      report.lambda_hat = l;
      report.argmax = x;
    }
  }
  return report;
}

std::vector<DisplacementReport> measure_generator_displacements(const TranslationAction& action,
                                                                const CayleyBall& g_ball, const WordMetric& metric) {
  std::vector<DisplacementReport> out;
  for (Symbol s = 0; s < action.acting().num_generators(); ++s) {
    out.push_back(measure_displacement(action, action.acting().generator(s), g_ball, metric));
  }
  return out;
}

bool ActionAuditReport::passed() const {
  return cocycle.passed() && freeness.passed() &&
         std::all_of(displacement.begin(), displacement.end(), [](const auto& d) { return d.within_declared(); });
}

json to_json(const TranslationAction& action, const ActionAuditReport& report) {
  const MarkedGroup& H = action.acting();
  const MarkedGroup& G = action.base();
  json violations = json::array();
  for (const auto& v : report.cocycle.violations) {
    violations.push_back({{"kind", "cocycle"},
                          {"h1", element_to_json(H, v.h1)},
                          {"h2", element_to_json(H, v.h2)},
                          {"x", element_to_json(G, v.x)}});
  }
  for (const auto& w : report.freeness.witnesses) {
    const bool fixed = w.other == H.identity();
    json entry = {{"kind", fixed ? "fixed-point" : "collision"},
                  {"h", element_to_json(H, w.h)},
                  {"x", element_to_json(G, w.x)}};
    if (!fixed) entry["other"] = element_to_json(H, w.other);
    violations.push_back(std::move(entry));
  }
  json lambda_hat = json::object();
  json declared = json::object();
  for (const auto& d : report.displacement) {
    const Word w = H.normal_word(d.h);
    const std::string key = w.empty() ? std::string("e") : H.format_word(w);
    lambda_hat[key] = d.lambda_hat;
    if (d.declared) declared[key] = *d.declared;
    if (!d.within_declared()) {
      violations.push_back({{"kind", "displacement"}, {"h", element_to_json(H, d.h)},
                            {"lambda_hat", d.lambda_hat}, {"declared", *d.declared}});
    }
  }
  const std::size_t checked = report.cocycle.checked + report.freeness.checked_pairs;
  return {{"action", action.name()},
          {"acting", H.spec()},
          {"base", G.spec()},
          {"checked", checked},
          {"uncovered", report.cocycle.uncovered + report.freeness.uncovered},
          {"vacuous", checked == 0},
          {"cocycle",
           {{"checked", report.cocycle.checked},
            {"uncovered", report.cocycle.uncovered},
            {"violations", report.cocycle.violation_count}}},
          {"freeness",
           {{"checked_points", report.freeness.checked_points},
            {"checked_pairs", report.freeness.checked_pairs},
            {"uncovered", report.freeness.uncovered},
            {"violations", report.freeness.witness_count}}},
          {"lambda_hat", std::move(lambda_hat)},
          {"declared", std::move(declared)},
          {"violations", std::move(violations)},
          {"passed", report.passed()}};
}

}  // namespace ggt
