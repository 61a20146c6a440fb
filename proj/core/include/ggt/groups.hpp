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

#ifndef GGT_GROUPS_HPP_
#define GGT_GROUPS_HPP_

// Exact arithmetic for the built-in marked groups:
//
//   zd:<d>       free abelian Z^d, generators +e_i / -e_i
//   free:<k>     free group F_k, generators a_i / a_i^-1
//   lamplighter  (Z/2Z) wr Z, generators t, t^-1 and the self-inverse lamp a
//   bs1n:<n>     BS(1,n) = <s, t | s t s^-1 = t^n>, realized as affine maps
//                x -> n^k x + q of the dyadic-style rationals Z[1/n]
//
// Every Element is kept in a canonical normal form, so equality of group
// elements is equality of representations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ggt {

using BigInt = boost::multiprecision::cpp_int;

// Index into the symmetric generating set T of a marked group.
using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

enum class GroupKind { free_abelian, free, lamplighter, bs1n };

struct ZdElement {
  std::vector<std::int64_t> coords;
  bool operator==(const ZdElement&) const = default;
};

// Freely reduced word over the free group's symbols.
struct FreeElement {
  std::vector<Symbol> word;
  bool operator==(const FreeElement&) const = default;
};

// (lamps, pos): lamps is the strictly increasing list of lit positions.
struct LampElement {
  std::vector<std::int64_t> lamps;
  std::int64_t pos = 0;
  bool operator==(const LampElement&) const = default;
};

// The affine map x -> n^k x + q_num / n^q_exp.
// Normal form: q_exp == 0 or n does not divide q_num; q_num == 0 forces q_exp == 0.
struct AffineElement {
  BigInt q_num = 0;
  std::uint64_t q_exp = 0;
  std::int64_t k = 0;
  bool operator==(const AffineElement&) const = default;
};

using Element = std::variant<ZdElement, FreeElement, LampElement, AffineElement>;

struct GeneratorSymbol {
  Symbol index = 0;
  Symbol inverse_index = 0;
  std::string name;
};

class MarkedGroup {
 public:
  static MarkedGroup free_abelian(int d);
  static MarkedGroup free(int k);
  static MarkedGroup lamplighter();
  static MarkedGroup bs1n(int n);

  // Parses "zd:<d>", "free:<k>", "lamplighter" or "bs1n:<n>".
  static MarkedGroup parse(std::string_view spec);

  GroupKind kind() const { return kind_; }
  // d for zd, k for free, n for bs1n, 0 for the lamplighter.
  int parameter() const { return param_; }
  // Inverse of parse().
  std::string spec() const;
  bool is_abelian() const { return kind_ == GroupKind::free_abelian; }

  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  Symbol inverse(Symbol s) const;
  const std::string& symbol_name(Symbol s) const;
  // Throws ParseError on an unknown name.
  Symbol parse_symbol(std::string_view name) const;

  Element identity() const;
  Element generator(Symbol s) const;
  Element multiply(const Element& x, const Element& y) const;
  Element invert(const Element& x) const;
  // x * generator(s), with a fast path per kind.
  Element apply_generator(const Element& x, Symbol s) const;
  // Brings an arbitrary representation of the right alternative into normal form.
  Element canonicalize(Element x) const;
  bool is_canonical(const Element& x) const;
  // True iff x holds the alternative used by this group (and, for Z^d, has d coordinates).
  bool owns(const Element& x) const;

  // Left-to-right product of generators. Throws ParseError on an invalid symbol.
  Element evaluate(std::span<const Symbol> word) const;
  Word parse_word(std::string_view text) const;
  std::string format_word(std::span<const Symbol> word) const;

  // A word evaluating to x. Geodesic for Z^d and free groups; for the lamplighter
  // and BS(1,n) it is a normal-form word, not necessarily shortest.
  Word normal_word(const Element& x) const;

  // Defining relators of the standard presentation. For the lamplighter the
  // commutators [a, t^j a t^-j] are listed for 1 <= j <= depth.
  std::vector<Word> relators(int depth = 3) const;

  // Exact word length when a closed form is available (Z^d, free groups).
  std::optional<std::int64_t> closed_form_length(const Element& x) const;

  Word random_word(std::mt19937_64& rng, std::size_t length) const;

  std::string to_string(const Element& x) const;

  bool operator==(const MarkedGroup& other) const {
    return kind_ == other.kind_ && param_ == other.param_;
  }

 private:
  MarkedGroup(GroupKind kind, int param);

  GroupKind kind_;
  int param_;
  std::vector<GeneratorSymbol> generators_;
};

MarkedGroup make_group(GroupKind kind, int parameter = 0);

// Word length with respect to the standard marking. Exact if the length is
// at most `budget`, std::nullopt otherwise. Closed forms are used for Z^d and
// free groups; the remaining groups are resolved by breadth-first search.
std::optional<std::int64_t> word_length(const MarkedGroup& group, const Element& x, int budget);

// Same contract, but always resolved by breadth-first search from the identity.
std::optional<std::int64_t> word_length_bfs(const MarkedGroup& group, const Element& x, int budget);

struct RelationAudit {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Randomized check of the group axioms on `samples` word triples of length
// <= max_len, plus every defining relator and the apply_generator contract.
RelationAudit audit_relations(const MarkedGroup& group, std::size_t samples, std::size_t max_len,
                              std::uint64_t seed = 0x5eed);

std::size_t hash_value(const Element& x);

}  // namespace ggt

template <>
struct std::hash<ggt::Element> {
  std::size_t operator()(const ggt::Element& x) const noexcept { return ggt::hash_value(x); }
};

#endif  // GGT_GROUPS_HPP_
