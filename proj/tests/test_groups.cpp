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

#include <limits>
#include <random>

#include "ggt/element_json.hpp"
#include "ggt/errors.hpp"
#include "ggt/groups.hpp"
#include "oracles.hpp"

namespace ggt {
namespace {

std::vector<MarkedGroup> builtin_groups() {
  return {MarkedGroup::free_abelian(1), MarkedGroup::free_abelian(2), MarkedGroup::free_abelian(3),
          MarkedGroup::free(2),         MarkedGroup::free(3),         MarkedGroup::lamplighter(),
          MarkedGroup::bs1n(2),         MarkedGroup::bs1n(3)};
}

Element zd(std::vector<std::int64_t> c) { return ZdElement{std::move(c)}; }

TEST(MarkedGroupTest, StandardMarkings) {
  const auto z2 = make_group(GroupKind::free_abelian, 2);
  EXPECT_EQ(z2.num_generators(), 4u);
  const auto lamp = make_group(GroupKind::lamplighter);
  EXPECT_EQ(lamp.num_generators(), 3u);
  const Symbol a = lamp.parse_symbol("a");
  EXPECT_EQ(lamp.inverse(a), a);
  EXPECT_EQ(lamp.generator(a), lamp.invert(lamp.generator(a)));
  const auto bs = make_group(GroupKind::bs1n, 2);
  EXPECT_EQ(bs.evaluate(bs.parse_word("s t S")), bs.evaluate(bs.parse_word("t t")));
}

TEST(MarkedGroupTest, SpecRoundTrip) {
  for (const auto& g : builtin_groups()) EXPECT_EQ(MarkedGroup::parse(g.spec()), g);
  EXPECT_THROW(MarkedGroup::parse("zd:0"), ParameterError);
  EXPECT_THROW(MarkedGroup::parse("free:x"), ParameterError);
  EXPECT_THROW(MarkedGroup::parse("bs1n:1"), ParameterError);
  EXPECT_THROW(MarkedGroup::parse("heisenberg"), ParameterError);
}

TEST(MarkedGroupTest, MultiplyExamples) {
  const auto z2 = MarkedGroup::free_abelian(2);
  EXPECT_EQ(z2.multiply(zd({1, 0}), zd({0, 1})), zd({1, 1}));
  const auto lamp = MarkedGroup::lamplighter();
  const Element lit = LampElement{{0}, 0};
  EXPECT_EQ(lamp.multiply(lit, lit), lamp.identity());
  const auto bs = MarkedGroup::bs1n(2);
  EXPECT_EQ(bs.evaluate(bs.parse_word("s t S")), Element(AffineElement{2, 0, 0}));
}

TEST(MarkedGroupTest, InvertExamples) {
  const auto z2 = MarkedGroup::free_abelian(2);
  EXPECT_EQ(z2.invert(zd({3, -1})), zd({-3, 1}));
  const auto f2 = MarkedGroup::free(2);
  EXPECT_EQ(f2.invert(f2.evaluate(f2.parse_word("a B"))), f2.evaluate(f2.parse_word("b A")));
  const auto lamp = MarkedGroup::lamplighter();
  EXPECT_EQ(lamp.invert(LampElement{{2}, 1}), Element(LampElement{{1}, -1}));
}

TEST(MarkedGroupTest, EvaluateExamples) {
  const auto z2 = MarkedGroup::free_abelian(2);
  EXPECT_EQ(z2.evaluate(z2.parse_word("e1 e2 E1")), zd({0, 1}));
  const auto f2 = MarkedGroup::free(2);
  EXPECT_EQ(f2.evaluate(f2.parse_word("a A")), f2.identity());
  const auto bs = MarkedGroup::bs1n(2);
  EXPECT_EQ(bs.evaluate(bs.parse_word("s t S T T")), bs.identity());
  EXPECT_THROW(f2.parse_word("a c"), ParseError);
  const Symbol bad = static_cast<Symbol>(f2.num_generators());
  EXPECT_THROW(f2.evaluate(std::vector<Symbol>{bad}), ParseError);
}

TEST(MarkedGroupTest, WordParsingIsLongestMatch) {
  const auto z12 = MarkedGroup::free_abelian(12);
  const Word w = z12.parse_word("e12e1");
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(z12.symbol_name(w[0]), "e12");
  EXPECT_EQ(z12.symbol_name(w[1]), "e1");
}

TEST(WordLengthTest, Examples) {
  const auto z2 = MarkedGroup::free_abelian(2);
  EXPECT_EQ(word_length(z2, zd({3, -2}), 5), 5);
  const auto f2 = MarkedGroup::free(2);
  EXPECT_EQ(word_length(f2, f2.evaluate(f2.parse_word("a b a B")), 4), 4);
  EXPECT_FALSE(word_length(z2, zd({3, -2}), 4).has_value());  // the budget binds closed forms too
  const auto lamp = MarkedGroup::lamplighter();
  EXPECT_EQ(word_length(lamp, LampElement{{0, 1}, 0}, 6), 4);
  EXPECT_EQ(word_length_bfs(lamp, LampElement{{0, 1}, 0}, 6), 4);
}

TEST(WordLengthTest, UnknownBeyondBudget) {
  const auto lamp = MarkedGroup::lamplighter();
  EXPECT_FALSE(word_length(lamp, LampElement{{0, 1}, 0}, 3).has_value());
  const auto bs = MarkedGroup::bs1n(2);
  EXPECT_FALSE(word_length(bs, AffineElement{100, 0, 0}, 2).has_value());
}

TEST(WordLengthTest, ClosedFormsAgreeWithBfs) {
  std::mt19937_64 rng(7);
  for (const auto& g : {MarkedGroup::free_abelian(2), MarkedGroup::free_abelian(3), MarkedGroup::free(2)}) {
    for (int i = 0; i < 200; ++i) {
      const Element x = g.evaluate(g.random_word(rng, rng() % 7));
      EXPECT_EQ(word_length(g, x, 6), word_length_bfs(g, x, 6)) << g.to_string(x);
    }
  }
}

TEST(WordLengthTest, SymmetricSubadditiveLeftInvariant) {
  std::mt19937_64 rng(11);
  constexpr int kBudget = 8;
  for (const auto& g : builtin_groups()) {
    for (int i = 0; i < 60; ++i) {
      const Element x = g.evaluate(g.random_word(rng, rng() % 5));
      const Element y = g.evaluate(g.random_word(rng, rng() % 5));
      const Element z = g.evaluate(g.random_word(rng, rng() % 4));
      const auto lx = word_length(g, x, kBudget);
      const auto ly = word_length(g, y, kBudget);
      ASSERT_TRUE(lx && ly);
      EXPECT_EQ(word_length(g, g.invert(x), kBudget), lx);
      const auto lxy = word_length(g, g.multiply(x, y), kBudget);
      ASSERT_TRUE(lxy);
      EXPECT_LE(*lxy, *lx + *ly);
      const auto d = word_length(g, g.multiply(g.invert(x), y), kBudget);
      const auto dz = word_length(g, g.multiply(g.invert(g.multiply(z, x)), g.multiply(z, y)), kBudget);
      EXPECT_EQ(d, dz);
    }
  }
}

TEST(GroupLawTest, ExhaustiveShortWords) {
  for (const auto& g : builtin_groups()) {
    std::vector<Element> elems{g.identity()};
    std::vector<Element> frontier{g.identity()};
    for (int len = 1; len <= 2; ++len) {
      std::vector<Element> next;
      for (const auto& x : frontier) {
        for (Symbol s = 0; s < g.num_generators(); ++s) next.push_back(g.apply_generator(x, s));
      }
      elems.insert(elems.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    const Element e = g.identity();
    for (const auto& x : elems) {
      EXPECT_EQ(g.multiply(x, e), x);
      EXPECT_EQ(g.multiply(e, x), x);
      EXPECT_EQ(g.multiply(x, g.invert(x)), e);
      EXPECT_EQ(g.canonicalize(g.canonicalize(x)), g.canonicalize(x));
      EXPECT_TRUE(g.is_canonical(x));
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          ASSERT_EQ(g.multiply(g.multiply(x, y), z), g.multiply(x, g.multiply(y, z))) << g.spec();
        }
      }
    }
  }
}

TEST(GroupLawTest, RandomizedAuditPassesForEveryGroup) {
  for (const auto& g : builtin_groups()) {
    const auto report = audit_relations(g, 2000, 12, 1234);
    EXPECT_TRUE(report.passed()) << g.spec() << ": " << (report.violations.empty() ? "" : report.violations[0]);
    EXPECT_GT(report.checked, 2000u);
  }
}

TEST(GroupLawTest, RelatorsEvaluateToIdentity) {
  for (const auto& g : builtin_groups()) {
    for (const Word& r : g.relators()) EXPECT_EQ(g.evaluate(r), g.identity()) << g.format_word(r);
  }
  const auto lamp = MarkedGroup::lamplighter();
  EXPECT_EQ(lamp.evaluate(lamp.parse_word("a a")), lamp.identity());
  // [a, t^2 a t^-2] commutes lamps two apart.
  EXPECT_EQ(lamp.evaluate(lamp.parse_word("a t t a T T a t t a T T")), lamp.identity());
}

TEST(GroupLawTest, NormalWordEvaluatesBack) {
  std::mt19937_64 rng(3);
  for (const auto& g : builtin_groups()) {
    for (int i = 0; i < 100; ++i) {
      const Element x = g.evaluate(g.random_word(rng, 10));
      EXPECT_EQ(g.evaluate(g.normal_word(x)), x) << g.spec();
    }
  }
}

TEST(CanonicalFormTest, AffineDenominatorsAreReduced) {
  const auto bs = MarkedGroup::bs1n(2);
  EXPECT_EQ(bs.canonicalize(AffineElement{4, 1, 3}), Element(AffineElement{2, 0, 3}));
  EXPECT_EQ(bs.canonicalize(AffineElement{0, 5, 0}), bs.identity());
  EXPECT_FALSE(bs.is_canonical(AffineElement{6, 1, 0}));
  EXPECT_TRUE(bs.is_canonical(AffineElement{3, 1, 0}));
  // t^(2^70) stays exact.
  Element x = bs.generator(bs.parse_symbol("t"));
  for (int i = 0; i < 70; ++i) x = bs.multiply(x, x);
  EXPECT_EQ(std::get<AffineElement>(x).q_num, BigInt(1) << 70);
}

TEST(CanonicalFormTest, FreeWordsAreReduced) {
  const auto f2 = MarkedGroup::free(2);
  EXPECT_EQ(f2.canonicalize(FreeElement{f2.parse_word("a b B A b")}), f2.evaluate(f2.parse_word("b")));
  EXPECT_FALSE(f2.is_canonical(FreeElement{f2.parse_word("a A")}));
}

TEST(CanonicalFormTest, ForeignElementsAreRejected) {
  const auto z2 = MarkedGroup::free_abelian(2);
  EXPECT_FALSE(z2.owns(zd({1, 2, 3})));
  EXPECT_THROW(z2.multiply(zd({1}), zd({1, 2})), DomainError);
  EXPECT_THROW(z2.invert(FreeElement{}), DomainError);
}

TEST(OverflowTest, CoordinateOverflowIsReported) {
  const auto z1 = MarkedGroup::free_abelian(1);
  const Element big = zd({std::numeric_limits<std::int64_t>::max()});
  EXPECT_THROW(z1.multiply(big, zd({1})), OverflowError);
  EXPECT_THROW(z1.invert(zd({std::numeric_limits<std::int64_t>::min()})), OverflowError);
}

TEST(ElementJsonTest, RoundTripsEveryGroup) {
  std::mt19937_64 rng(5);
  for (const auto& g : builtin_groups()) {
    for (int i = 0; i < 50; ++i) {
      const Element x = g.evaluate(g.random_word(rng, 9));
      const auto j = element_to_json(g, x);
      EXPECT_EQ(j.at("group"), g.spec());
      EXPECT_EQ(element_from_json(g, j), x);
      EXPECT_EQ(parse_element(g, j.dump()), x);
      const auto [g2, x2] = parse_element_json(j);
      EXPECT_EQ(g2, g);
      EXPECT_EQ(x2, x);
    }
  }
  const auto z2 = MarkedGroup::free_abelian(2);
  EXPECT_THROW(parse_element(z2, R"({"group":"zd:3","repr":[1,2,3]})"), ParseError);
  EXPECT_THROW(parse_element(z2, "[1,"), ParseError);
}

TEST(OracleAgreementTest, IndependentModelsMatchBallSizes) {
  const auto lamp_spheres = oracle::lamplighter_sphere_sizes(6);
  EXPECT_EQ(lamp_spheres, (std::vector<std::size_t>{1, 3, 6, 12, 22, 40, 71}));
  const auto bs_spheres = oracle::bs12_sphere_sizes(6);
  std::vector<std::size_t> cumulative;
  std::size_t total = 0;
  for (auto s : bs_spheres) cumulative.push_back(total += s);
  EXPECT_EQ(cumulative, (std::vector<std::size_t>{1, 5, 17, 43, 93, 191, 375}));
  EXPECT_EQ(oracle::enumerate_ball_sizes(MarkedGroup::bs1n(2), 4), (std::vector<std::size_t>{1, 5, 17, 43, 93}));
  EXPECT_EQ(oracle::enumerate_ball_sizes(MarkedGroup::lamplighter(), 4),
            (std::vector<std::size_t>{1, 4, 10, 22, 44}));
}

}  // namespace
}  // namespace ggt
