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

#include "ggt/element_json.hpp"

#include <string>

#include "ggt/errors.hpp"

namespace ggt {

using nlohmann::json;

json element_to_json(const MarkedGroup& group, const Element& x) {
  if (!group.owns(x)) throw DomainError("element does not belong to group " + group.spec());
  json repr;
  switch (group.kind()) {
    case GroupKind::free_abelian:
      repr = std::get<ZdElement>(x).coords;
      break;
    case GroupKind::free: {
      repr = json::array();
      for (Symbol s : std::get<FreeElement>(x).word) repr.push_back(group.symbol_name(s));
      break;
    }
    case GroupKind::lamplighter: {
      const auto& e = std::get<LampElement>(x);
      repr = {{"lamps", e.lamps}, {"pos", e.pos}};
      break;
    }
    case GroupKind::bs1n: {
      const auto& e = std::get<AffineElement>(x);
      repr = {{"q_num", e.q_num.str()}, {"q_exp", e.q_exp}, {"k", e.k}};
      break;
    }
  }
  return {{"group", group.spec()}, {"repr", std::move(repr)}};
}

namespace {

Element payload_to_element(const MarkedGroup& group, const json& repr) {
  switch (group.kind()) {
    case GroupKind::free_abelian: {
      if (!repr.is_array() || repr.size() != static_cast<std::size_t>(group.parameter())) {
        throw ParseError("zd element needs an array of " + std::to_string(group.parameter()) + " integers");
      }
      ZdElement e;
      for (const auto& v : repr) {
        if (!v.is_number_integer()) throw ParseError("zd coordinates must be integers");
        e.coords.push_back(v.get<std::int64_t>());
      }
      return e;
    }
    case GroupKind::free: {
      FreeElement e;
      if (repr.is_string()) {
        e.word = group.parse_word(repr.get<std::string>());
      } else if (repr.is_array()) {
        for (const auto& v : repr) {
          if (!v.is_string()) throw ParseError("free group word entries must be symbol names");
          e.word.push_back(group.parse_symbol(v.get<std::string>()));
        }
      } else {
        throw ParseError("free group element needs a word");
      }
      return group.canonicalize(std::move(e));
    }
    case GroupKind::lamplighter: {
      if (!repr.is_object() || !repr.contains("lamps") || !repr.contains("pos")) {
        throw ParseError("lamplighter element needs {\"lamps\", \"pos\"}");
      }
      LampElement e;
      for (const auto& v : repr.at("lamps")) {
        if (!v.is_number_integer()) throw ParseError("lamp positions must be integers");
        e.lamps.push_back(v.get<std::int64_t>());
      }
      if (!repr.at("pos").is_number_integer()) throw ParseError("pos must be an integer");
      e.pos = repr.at("pos").get<std::int64_t>();
      return group.canonicalize(std::move(e));
    }
    case GroupKind::bs1n: {
      if (!repr.is_object() || !repr.contains("q_num") || !repr.contains("k")) {
        throw ParseError("bs1n element needs {\"q_num\", \"q_exp\", \"k\"}");
      }
      AffineElement e;
      const auto& q = repr.at("q_num");
      try {
        if (q.is_string()) {
          e.q_num = BigInt(q.get<std::string>());
        } else if (q.is_number_integer()) {
          e.q_num = q.get<std::int64_t>();
        } else {
          throw ParseError("q_num must be an integer or decimal string");
        }
      } catch (const std::runtime_error& err) {
        throw ParseError(std::string("bad q_num: ") + err.what());
      }
      if (repr.contains("q_exp")) {
        if (!repr.at("q_exp").is_number_unsigned()) throw ParseError("q_exp must be a nonnegative integer");
        e.q_exp = repr.at("q_exp").get<std::uint64_t>();
      }
      if (!repr.at("k").is_number_integer()) throw ParseError("k must be an integer");
      e.k = repr.at("k").get<std::int64_t>();
      return group.canonicalize(std::move(e));
    }
  }
  throw ParseError("unknown group kind");
}

}  // namespace

Element element_from_json(const MarkedGroup& group, const json& j) {
  if (j.is_object() && j.contains("repr")) {
    if (j.contains("group") && j.at("group") != group.spec()) {
      throw ParseError("element belongs to " + j.at("group").dump() + ", expected " + group.spec());
    }
    return payload_to_element(group, j.at("repr"));
  }
  return payload_to_element(group, j);
}

std::pair<MarkedGroup, Element> parse_element_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.at("group").is_string()) {
    throw ParseError("element JSON needs a \"group\" string");
  }
  MarkedGroup group = MarkedGroup::parse(j.at("group").get<std::string>());
  Element x = element_from_json(group, j);
  return {std::move(group), std::move(x)};
}

Element parse_element(const MarkedGroup& group, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid element JSON: ") + err.what());
  }
  return element_from_json(group, j);
}

}  // namespace ggt
