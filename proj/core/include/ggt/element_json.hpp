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

#ifndef GGT_ELEMENT_JSON_HPP_
#define GGT_ELEMENT_JSON_HPP_

// JSON form of group elements: {"group": <group spec>, "repr": <payload>}.
//
//   zd:<d>       "repr": [x_1, ..., x_d]
//   free:<k>     "repr": ["a", "B", ...]         reduced word, symbol names
//   lamplighter  "repr": {"lamps": [...], "pos": p}
//   bs1n:<n>     "repr": {"q_num": "<decimal>", "q_exp": e, "k": k}
//
// Parsing canonicalizes, so print(parse(j)) == j for every printed j.

#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "ggt/groups.hpp"

namespace ggt {

nlohmann::json element_to_json(const MarkedGroup& group, const Element& x);

// Accepts the full object (its "group" must match) or a bare payload.
Element element_from_json(const MarkedGroup& group, const nlohmann::json& j);

// Reads the group from the "group" field.
std::pair<MarkedGroup, Element> parse_element_json(const nlohmann::json& j);

// Parses JSON text, then element_from_json.
Element parse_element(const MarkedGroup& group, std::string_view text);

}  // namespace ggt

#endif  // GGT_ELEMENT_JSON_HPP_
