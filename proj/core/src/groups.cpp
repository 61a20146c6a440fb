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

#include "ggt/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_set>
#include <utility>

#include <boost/container_hash/hash.hpp>

#include "ggt/errors.hpp"

namespace ggt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in group arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in group arithmetic");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

// Symmetric difference of two strictly increasing lists.
std::vector<std::int64_t> symmetric_difference(const std::vector<std::int64_t>& a,
                                               const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

BigInt power(int base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) r *= b;
    b *= b;
    exp >>= 1U;
  }
  return r;
}

void normalize_affine(AffineElement& x, int n) {
  if (x.q_num == 0) {
    x.q_exp = 0;
    return;
  }
  const BigInt base = n;
  while (x.q_exp > 0) {
    BigInt quotient;
    BigInt remainder;
    boost::multiprecision::divide_qr(x.q_num, base, quotient, remainder);
    if (remainder != 0) break;
    x.q_num = std::move(quotient);
    --x.q_exp;
  }
}

// a/n^ea + b/n^eb over a common power of n.
std::pair<BigInt, std::uint64_t> add_fractions(const BigInt& a, std::uint64_t ea, const BigInt& b,
                                               std::uint64_t eb, int n) {
  const std::uint64_t e = std::max(ea, eb);
  return {a * power(n, e - ea) + b * power(n, e - eb), e};
}

std::uint64_t to_exponent(std::int64_t k) {
  if (k < 0) throw OverflowError("negative exponent");
  return static_cast<std::uint64_t>(k);
}

std::uint64_t checked_uadd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow in BS(1,n)");
  return r;
}

}  // namespace

MarkedGroup::MarkedGroup(GroupKind kind, int param) : kind_(kind), param_(param) {
  auto add_pair = [this](std::string name, std::string inverse_name) {
    const auto i = static_cast<Symbol>(generators_.size());
    generators_.push_back({i, static_cast<Symbol>(i + 1), std::move(name)});
    generators_.push_back({static_cast<Symbol>(i + 1), i, std::move(inverse_name)});
  };
  switch (kind) {
    case GroupKind::free_abelian:
      for (int i = 1; i <= param; ++i) add_pair("e" + std::to_string(i), "E" + std::to_string(i));
      break;
    case GroupKind::free:
      for (int i = 0; i < param; ++i) {
        if (param <= 26) {
          add_pair(std::string(1, static_cast<char>('a' + i)),
                   std::string(1, static_cast<char>('A' + i)));
        } else {
          add_pair("a" + std::to_string(i + 1), "A" + std::to_string(i + 1));
        }
      }
      break;
    case GroupKind::lamplighter:
      add_pair("t", "T");
      generators_.push_back({2, 2, "a"});
      break;
    case GroupKind::bs1n:
      add_pair("t", "T");
      add_pair("s", "S");
      break;
  }
}

MarkedGroup MarkedGroup::free_abelian(int d) {
  if (d < 1) throw ParameterError("free abelian rank must be >= 1, got " + std::to_string(d));
  if (d > 1000) throw ParameterError("free abelian rank too large");
  return MarkedGroup(GroupKind::free_abelian, d);
}

MarkedGroup MarkedGroup::free(int k) {
  if (k < 1) throw ParameterError("free group rank must be >= 1, got " + std::to_string(k));
  if (k > 1000) throw ParameterError("free group rank too large");
  return MarkedGroup(GroupKind::free, k);
}

MarkedGroup MarkedGroup::lamplighter() { return MarkedGroup(GroupKind::lamplighter, 0); }

MarkedGroup MarkedGroup::bs1n(int n) {
  if (n < 2) throw ParameterError("BS(1,n) requires n >= 2, got " + std::to_string(n));
  return MarkedGroup(GroupKind::bs1n, n);
}

MarkedGroup MarkedGroup::parse(std::string_view spec) {
  if (spec == "lamplighter") return lamplighter();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("unknown group spec '" + std::string(spec) + "'");
  }
  const auto head = spec.substr(0, colon);
  const auto tail = spec.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
  if (ec != std::errc() || ptr != tail.data() + tail.size()) {
    throw ParameterError("bad group parameter in '" + std::string(spec) + "'");
  }
  if (head == "zd") return free_abelian(value);
  if (head == "free") return free(value);
  if (head == "bs1n") return bs1n(value);
  throw ParameterError("unknown group spec '" + std::string(spec) + "'");
}

std::string MarkedGroup::spec() const {
  switch (kind_) {
    case GroupKind::free_abelian:
      return "zd:" + std::to_string(param_);
    case GroupKind::free:
      return "free:" + std::to_string(param_);
    case GroupKind::lamplighter:
      return "lamplighter";
    case GroupKind::bs1n:
      return "bs1n:" + std::to_string(param_);
  }
  return {};
}

MarkedGroup make_group(GroupKind kind, int parameter) {
  switch (kind) {
    case GroupKind::free_abelian:
      return MarkedGroup::free_abelian(parameter);
    case GroupKind::free:
      return MarkedGroup::free(parameter);
    case GroupKind::lamplighter:
      return MarkedGroup::lamplighter();
    case GroupKind::bs1n:
      return MarkedGroup::bs1n(parameter);
  }
  throw ParameterError("unknown group kind");
}

Symbol MarkedGroup::inverse(Symbol s) const {
  if (s >= generators_.size()) throw ParseError("invalid generator symbol " + std::to_string(s));
  return generators_[s].inverse_index;
}

const std::string& MarkedGroup::symbol_name(Symbol s) const {
  if (s >= generators_.size()) throw ParseError("invalid generator symbol " + std::to_string(s));
  return generators_[s].name;
}

Symbol MarkedGroup::parse_symbol(std::string_view name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return g.index;
  }
  throw ParseError("unknown generator '" + std::string(name) + "' for group " + spec());
}

Element MarkedGroup::identity() const {
  switch (kind_) {
    case GroupKind::free_abelian:
      return ZdElement{std::vector<std::int64_t>(static_cast<std::size_t>(param_), 0)};
    case GroupKind::free:
      return FreeElement{};
    case GroupKind::lamplighter:
      return LampElement{};
    case GroupKind::bs1n:
      return AffineElement{};
  }
  return {};
}

Element MarkedGroup::generator(Symbol s) const {
  if (s >= generators_.size()) throw ParseError("invalid generator symbol " + std::to_string(s));
  switch (kind_) {
    case GroupKind::free_abelian: {
      ZdElement e{std::vector<std::int64_t>(static_cast<std::size_t>(param_), 0)};
      e.coords[s / 2] = (s % 2 == 0) ? 1 : -1;
      return e;
    }
    case GroupKind::free:
      return FreeElement{{s}};
    case GroupKind::lamplighter:
      if (s == 2) return LampElement{{0}, 0};
      return LampElement{{}, s == 0 ? 1 : -1};
    case GroupKind::bs1n:
      switch (s) {
        case 0:
          return AffineElement{1, 0, 0};
        case 1:
          return AffineElement{-1, 0, 0};
        case 2:
          return AffineElement{0, 0, 1};
        default:
          return AffineElement{0, 0, -1};
      }
  }
  return {};
}

bool MarkedGroup::owns(const Element& x) const {
  switch (kind_) {
    case GroupKind::free_abelian: {
      const auto* z = std::get_if<ZdElement>(&x);
      return z != nullptr && z->coords.size() == static_cast<std::size_t>(param_);
    }
    case GroupKind::free: {
      const auto* f = std::get_if<FreeElement>(&x);
      if (f == nullptr) return false;
      return std::all_of(f->word.begin(), f->word.end(),
                         [this](Symbol s) { return s < generators_.size(); });
    }
    case GroupKind::lamplighter:
      return std::holds_alternative<LampElement>(x);
    case GroupKind::bs1n:
      return std::holds_alternative<AffineElement>(x);
  }
  return false;
}

Element MarkedGroup::multiply(const Element& x, const Element& y) const {
  if (!owns(x) || !owns(y)) throw DomainError("element does not belong to group " + spec());
  switch (kind_) {
    case GroupKind::free_abelian: {
      const auto& a = std::get<ZdElement>(x).coords;
      const auto& b = std::get<ZdElement>(y).coords;
      ZdElement r{a};
      for (std::size_t i = 0; i < a.size(); ++i) r.coords[i] = checked_add(a[i], b[i]);
      return r;
    }
    case GroupKind::free: {
      FreeElement r = std::get<FreeElement>(x);
      for (Symbol s : std::get<FreeElement>(y).word) {
        if (!r.word.empty() && r.word.back() == generators_[s].inverse_index) {
          r.word.pop_back();
        } else {
          r.word.push_back(s);
        }
      }
      return r;
    }
    case GroupKind::lamplighter: {
      const auto& a = std::get<LampElement>(x);
      const auto& b = std::get<LampElement>(y);
      std::vector<std::int64_t> shifted;
      shifted.reserve(b.lamps.size());
      for (auto l : b.lamps) shifted.push_back(checked_add(l, a.pos));
      return LampElement{symmetric_difference(a.lamps, shifted), checked_add(a.pos, b.pos)};
    }
    case GroupKind::bs1n: {
      // (f1 f2)(v) = f1(f2(v)) = n^(k1+k2) v + q1 + n^k1 q2
      const auto& a = std::get<AffineElement>(x);
      const auto& b = std::get<AffineElement>(y);
      BigInt num = b.q_num;
      std::uint64_t exp = b.q_exp;
      if (a.k >= 0) {
        num *= power(param_, to_exponent(a.k));
      } else {
        exp = checked_uadd(exp, to_exponent(checked_neg(a.k)));
      }
      auto [sum, e] = add_fractions(a.q_num, a.q_exp, num, exp, param_);
      AffineElement r{std::move(sum), e, checked_add(a.k, b.k)};
      normalize_affine(r, param_);
      return r;
    }
  }
  return {};
}

Element MarkedGroup::invert(const Element& x) const {
  if (!owns(x)) throw DomainError("element does not belong to group " + spec());
  switch (kind_) {
    case GroupKind::free_abelian: {
      ZdElement r = std::get<ZdElement>(x);
      for (auto& c : r.coords) c = checked_neg(c);
      return r;
    }
    case GroupKind::free: {
      const auto& w = std::get<FreeElement>(x).word;
      FreeElement r;
      r.word.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) r.word.push_back(generators_[*it].inverse_index);
      return r;
    }
    case GroupKind::lamplighter: {
      // (L, p)^-1 = (L - p, -p)
      const auto& a = std::get<LampElement>(x);
      LampElement r{{}, checked_neg(a.pos)};
      r.lamps.reserve(a.lamps.size());
      for (auto l : a.lamps) r.lamps.push_back(checked_sub(l, a.pos));
      return r;
    }
    case GroupKind::bs1n: {
      // v -> n^-k (v - q)
      const auto& a = std::get<AffineElement>(x);
      AffineElement r{-a.q_num, a.q_exp, checked_neg(a.k)};
      if (a.k >= 0) {
        r.q_exp = checked_uadd(r.q_exp, to_exponent(a.k));
      } else {
        r.q_num *= power(param_, to_exponent(checked_neg(a.k)));
      }
      normalize_affine(r, param_);
      return r;
    }
  }
  return {};
}

Element MarkedGroup::apply_generator(const Element& x, Symbol s) const {
  if (s >= generators_.size()) throw ParseError("invalid generator symbol " + std::to_string(s));
  if (!owns(x)) throw DomainError("element does not belong to group " + spec());
  switch (kind_) {
    case GroupKind::free_abelian: {
      ZdElement r = std::get<ZdElement>(x);
      auto& c = r.coords[s / 2];
      c = checked_add(c, (s % 2 == 0) ? 1 : -1);
      return r;
    }
    case GroupKind::free: {
      FreeElement r = std::get<FreeElement>(x);
      if (!r.word.empty() && r.word.back() == generators_[s].inverse_index) {
        r.word.pop_back();
      } else {
        r.word.push_back(s);
      }
      return r;
    }
    case GroupKind::lamplighter: {
      LampElement r = std::get<LampElement>(x);
      if (s == 2) {
        auto it = std::lower_bound(r.lamps.begin(), r.lamps.end(), r.pos);
        if (it != r.lamps.end() && *it == r.pos) {
          r.lamps.erase(it);
        } else {
          r.lamps.insert(it, r.pos);
        }
      } else {
        r.pos = checked_add(r.pos, s == 0 ? 1 : -1);
      }
      return r;
    }
    case GroupKind::bs1n:
      return multiply(x, generator(s));
  }
  return {};
}

Element MarkedGroup::canonicalize(Element x) const {
  if (!owns(x)) throw DomainError("element does not belong to group " + spec());
  switch (kind_) {
    case GroupKind::free_abelian:
      return x;
    case GroupKind::free: {
      FreeElement r;
      for (Symbol s : std::get<FreeElement>(x).word) {
        if (!r.word.empty() && r.word.back() == generators_[s].inverse_index) {
          r.word.pop_back();
        } else {
          r.word.push_back(s);
        }
      }
      return r;
    }
    case GroupKind::lamplighter: {
      // A lamp listed twice is toggled twice.
      auto lamps = std::get<LampElement>(x).lamps;
      std::sort(lamps.begin(), lamps.end());
      std::vector<std::int64_t> out;
      for (auto l : lamps) {
        if (!out.empty() && out.back() == l) {
          out.pop_back();
        } else {
          out.push_back(l);
        }
      }
      return LampElement{std::move(out), std::get<LampElement>(x).pos};
    }
    case GroupKind::bs1n: {
      auto r = std::get<AffineElement>(x);
      normalize_affine(r, param_);
      return r;
    }
  }
  return x;
}

bool MarkedGroup::is_canonical(const Element& x) const { return owns(x) && canonicalize(x) == x; }

Element MarkedGroup::evaluate(std::span<const Symbol> word) const {
  Element r = identity();
  for (Symbol s : word) r = apply_generator(r, s);
  return r;
}

Word MarkedGroup::parse_word(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '.' || c == '*') {
      ++i;
      continue;
    }
    // Longest symbol name matching at position i.
    std::size_t best_len = 0;
    Symbol best = 0;
    for (const auto& g : generators_) {
      if (g.name.size() > best_len && text.substr(i, g.name.size()) == g.name) {
        best_len = g.name.size();
        best = g.index;
      }
    }
    if (best_len == 0) {
      throw ParseError("cannot parse word '" + std::string(text) + "' at offset " + std::to_string(i));
    }
    out.push_back(best);
    i += best_len;
  }
  return out;
}

std::string MarkedGroup::format_word(std::span<const Symbol> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += symbol_name(word[i]);
  }
  return out;
}

Word MarkedGroup::normal_word(const Element& x) const {
  if (!owns(x)) throw DomainError("element does not belong to group " + spec());
  Word w;
  auto repeat = [&w](Symbol s, std::int64_t times) {
    for (std::int64_t i = 0; i < times; ++i) w.push_back(s);
  };
  auto signed_power = [&](Symbol positive, std::int64_t e) {
    if (e >= 0) {
      repeat(positive, e);
    } else {
      repeat(generators_[positive].inverse_index, checked_neg(e));
    }
  };
  constexpr std::int64_t kMaxWord = 50'000'000;
  switch (kind_) {
    case GroupKind::free_abelian: {
      const auto& c = std::get<ZdElement>(x).coords;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (checked_abs(c[i]) > kMaxWord) throw CapacityError("normal word too long");
        signed_power(static_cast<Symbol>(2 * i), c[i]);
      }
      return w;
    }
    case GroupKind::free:
      return std::get<FreeElement>(x).word;
    case GroupKind::lamplighter: {
      // t^l1 a t^(l2-l1) a ... a t^(pos-lm)
      const auto& e = std::get<LampElement>(x);
      std::int64_t at = 0;
      for (auto l : e.lamps) {
        const auto step = checked_sub(l, at);
        if (checked_abs(step) > kMaxWord) throw CapacityError("normal word too long");
        signed_power(0, step);
        w.push_back(2);
        at = l;
      }
      const auto step = checked_sub(e.pos, at);
      if (checked_abs(step) > kMaxWord) throw CapacityError("normal word too long");
      signed_power(0, step);
      return w;
    }
    case GroupKind::bs1n: {
      // (q_num / n^e, k) = s^-e t^q_num s^(e+k)
      const auto& e = std::get<AffineElement>(x);
      if (boost::multiprecision::abs(e.q_num) > kMaxWord || e.q_exp > static_cast<std::uint64_t>(kMaxWord)) {
        throw CapacityError("normal word too long");
      }
      const auto exp = static_cast<std::int64_t>(e.q_exp);
      repeat(3, exp);
      signed_power(0, static_cast<std::int64_t>(e.q_num));
      signed_power(2, checked_add(exp, e.k));
      return w;
    }
  }
  return w;
}

std::vector<Word> MarkedGroup::relators(int depth) const {
  std::vector<Word> out;
  switch (kind_) {
    case GroupKind::free_abelian:
      for (int i = 0; i < param_; ++i) {
        for (int j = i + 1; j < param_; ++j) {
          const auto a = static_cast<Symbol>(2 * i);
          const auto b = static_cast<Symbol>(2 * j);
          out.push_back({a, b, static_cast<Symbol>(a + 1), static_cast<Symbol>(b + 1)});
        }
      }
      break;
    case GroupKind::free:
      break;
    case GroupKind::lamplighter:
      out.push_back({2, 2});
      for (int j = 1; j <= depth; ++j) {
        // [a, t^j a t^-j]; both factors are involutions.
        Word conj;
        conj.insert(conj.end(), static_cast<std::size_t>(j), Symbol{0});
        conj.push_back(2);
        conj.insert(conj.end(), static_cast<std::size_t>(j), Symbol{1});
        Word r{2};
        r.insert(r.end(), conj.begin(), conj.end());
        r.push_back(2);
        r.insert(r.end(), conj.begin(), conj.end());
        out.push_back(std::move(r));
      }
      break;
    case GroupKind::bs1n: {
      // s t s^-1 t^-n
      Word r{2, 0, 3};
      r.insert(r.end(), static_cast<std::size_t>(param_), Symbol{1});
      out.push_back(std::move(r));
      break;
    }
  }
  return out;
}

std::optional<std::int64_t> MarkedGroup::closed_form_length(const Element& x) const {
  if (!owns(x)) throw DomainError("element does not belong to group " + spec());
  switch (kind_) {
    case GroupKind::free_abelian: {
      std::int64_t total = 0;
      for (auto c : std::get<ZdElement>(x).coords) total = checked_add(total, checked_abs(c));
      return total;
    }
    case GroupKind::free:
      return static_cast<std::int64_t>(std::get<FreeElement>(x).word.size());
    default:
      return std::nullopt;
  }
}

Word MarkedGroup::random_word(std::mt19937_64& rng, std::size_t length) const {
  std::uniform_int_distribution<std::size_t> pick(0, generators_.size() - 1);
  Word w(length);
  for (auto& s : w) s = static_cast<Symbol>(pick(rng));
  return w;
}

std::string MarkedGroup::to_string(const Element& x) const {
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::free_abelian: {
      os << '(';
      const auto& c = std::get<ZdElement>(x).coords;
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << ')';
      break;
    }
    case GroupKind::free: {
      const auto& w = std::get<FreeElement>(x).word;
      os << (w.empty() ? std::string("e") : format_word(w));
      break;
    }
    case GroupKind::lamplighter: {
      const auto& e = std::get<LampElement>(x);
      os << "({";
      for (std::size_t i = 0; i < e.lamps.size(); ++i) os << (i ? "," : "") << e.lamps[i];
      os << "}," << e.pos << ')';
      break;
    }
    case GroupKind::bs1n: {
      const auto& e = std::get<AffineElement>(x);
      os << '(' << e.q_num;
      if (e.q_exp > 0) os << '/' << param_ << '^' << e.q_exp;
      os << ',' << e.k << ')';
      break;
    }
  }
  return os.str();
}

std::optional<std::int64_t> word_length(const MarkedGroup& group, const Element& x, int budget) {
  if (budget < 0) return std::nullopt;
  if (auto l = group.closed_form_length(x)) {
    if (*l <= budget) return l;
    return std::nullopt;
  }
  return word_length_bfs(group, x, budget);
}

std::optional<std::int64_t> word_length_bfs(const MarkedGroup& group, const Element& x, int budget) {
  if (!group.owns(x)) throw DomainError("element does not belong to group " + group.spec());
  if (budget < 0) return std::nullopt;
  const Element target = group.canonicalize(x);
  std::unordered_set<Element> seen;
  std::vector<Element> frontier{group.identity()};
  seen.insert(frontier.front());
  for (int level = 0;; ++level) {
    for (const auto& v : frontier) {
      if (v == target) return level;
    }
    if (level == budget) return std::nullopt;
    std::vector<Element> next;
    for (const auto& v : frontier) {
      for (Symbol s = 0; s < group.num_generators(); ++s) {
        Element w = group.apply_generator(v, s);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
}

RelationAudit audit_relations(const MarkedGroup& group, std::size_t samples, std::size_t max_len,
                              std::uint64_t seed) {
  RelationAudit report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  const Element e = group.identity();
  auto fail = [&](const std::string& what, std::initializer_list<const Word*> words) {
    std::string msg = what + ":";
    for (const Word* w : words) msg += " [" + group.format_word(*w) + "]";
    report.violations.push_back(std::move(msg));
  };

  for (std::size_t i = 0; i < samples; ++i) {
    const Word w1 = group.random_word(rng, length(rng));
    const Word w2 = group.random_word(rng, length(rng));
    const Word w3 = group.random_word(rng, length(rng));
    const Element x = group.evaluate(w1);
    const Element y = group.evaluate(w2);
    const Element z = group.evaluate(w3);
    const Element xi = group.invert(x);

    if (group.multiply(group.multiply(x, y), z) != group.multiply(x, group.multiply(y, z))) {
      fail("associativity", {&w1, &w2, &w3});
    }
    if (group.multiply(x, e) != x || group.multiply(e, x) != x) fail("identity", {&w1});
    if (group.multiply(x, xi) != e || group.multiply(xi, x) != e) fail("inverse", {&w1});
    Word w12 = w1;
    w12.insert(w12.end(), w2.begin(), w2.end());
    if (group.evaluate(w12) != group.multiply(x, y)) fail("word evaluation", {&w1, &w2});
    if (!group.is_canonical(x)) fail("canonical form", {&w1});
    if (group.canonicalize(group.canonicalize(x)) != group.canonicalize(x)) fail("idempotence", {&w1});
    report.checked += 6;
  }

  for (const Word& r : group.relators()) {
    if (group.evaluate(r) != e) fail("relator", {&r});
    ++report.checked;
  }

  // apply_generator(x, s) == x * generator(s), on a handful of points.
  for (std::size_t i = 0; i < std::min<std::size_t>(samples, 256); ++i) {
    const Word w = group.random_word(rng, length(rng));
    const Element x = group.evaluate(w);
    for (Symbol s = 0; s < group.num_generators(); ++s) {
      if (group.apply_generator(x, s) != group.multiply(x, group.generator(s))) {
        fail("apply_generator(" + group.symbol_name(s) + ")", {&w});
      }
      if (group.multiply(group.generator(s), group.generator(group.inverse(s))) != e) {
        fail("generator inverse " + group.symbol_name(s), {});
      }
      ++report.checked;
    }
  }
  return report;
}

std::size_t hash_value(const Element& x) {
  std::size_t seed = x.index();
  std::visit(
      [&seed](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZdElement>) {
          boost::hash_range(seed, v.coords.begin(), v.coords.end());
        } else if constexpr (std::is_same_v<T, FreeElement>) {
          boost::hash_range(seed, v.word.begin(), v.word.end());
        } else if constexpr (std::is_same_v<T, LampElement>) {
          boost::hash_range(seed, v.lamps.begin(), v.lamps.end());
          boost::hash_combine(seed, v.pos);
        } else {
          boost::hash_combine(seed, boost::multiprecision::hash_value(v.q_num));
          boost::hash_combine(seed, v.q_exp);
          boost::hash_combine(seed, v.k);
        }
      },
      x);
  return seed;
}

}  // namespace ggt
