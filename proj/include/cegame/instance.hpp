// Copyright 2026 The cegame Authors.
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

// Instance files.
//
// A JSON document:
//
//   {
//     "players": [
//       {"id": "1", "capacity": "14", "fixed_cost": "15"},
//       ...
//     ],
//     "price": "21",
//     "mqc": "68.5",
//     "under_penalty": "10",
//     "over_penalty": "0",          // optional, default 0
//     "weights": {"4": "130"}       // optional, id -> alpha
//   }
//
// Numbers are decimal or fraction strings ("58.125", "137/2"), JSON
// integers, or [numerator, denominator] integer pairs. JSON floating point
// literals are rejected because they cannot be read exactly.

#ifndef CEGAME_INSTANCE_HPP_
#define CEGAME_INSTANCE_HPP_

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cegame/error.hpp"
#include "cegame/model.hpp"
#include "cegame/rational.hpp"
#include "json.hpp"

namespace cegame {

struct Instance {
  CESituation situation;
  std::map<std::string, Rational> weights;  // by player id

  // Weights as a vector over player positions, or nullopt if none given.
  std::optional<std::vector<Rational>> weight_vector() const {
    if (weights.empty()) return std::nullopt;
    std::vector<Rational> out(static_cast<std::size_t>(situation.player_count()),
                              Rational(0));
    for (int i = 0; i < situation.player_count(); ++i) {
      auto it = weights.find(situation.player(i).id);
      if (it != weights.end()) out[static_cast<std::size_t>(i)] = it->second;
    }
    return out;
  }
};

namespace internal {

inline Rational json_to_rational(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(std::to_string(j.get<unsigned long long>()))
                                  : Rational(std::to_string(j.get<long long>()));
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer()) {
    const long long den = j[1].get<long long>();
    if (den == 0) throw ParseError(where + ": zero denominator");
    return parse_rational(std::to_string(j[0].get<long long>()) + "/" +
                          std::to_string(den));
  }
  if (j.is_number_float()) {
    throw ParseError(where + ": write non-integer numbers as strings, e.g. \"5.5\"");
  }
  throw ParseError(where + ": expected a number");
}

inline void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                         const std::set<std::string>& required,
                         const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown key '" + key + "'");
  }
  for (const std::string& key : required) {
    if (!obj.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  }
}

}  // namespace internal

// Throws ParseError for malformed or schema-violating documents and
// DomainError for well-formed data with invalid values (negative costs...).
inline Instance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  internal::require_keys(
      doc, {"players", "price", "mqc", "under_penalty", "over_penalty", "weights"},
      {"players", "price", "mqc", "under_penalty"}, "instance");
  const nlohmann::json& list = doc["players"];
  if (!list.is_array() || list.empty()) {
    throw ParseError("instance: 'players' must be a non-empty list");
  }
  std::vector<Player> players;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "players[" + std::to_string(k) + "]";
    internal::require_keys(list[k], {"id", "capacity", "fixed_cost"},
                           {"id", "capacity", "fixed_cost"}, where);
    const nlohmann::json& id = list[k]["id"];
    std::string id_text;
    if (id.is_string()) {
      id_text = id.get<std::string>();
    } else if (id.is_number_integer()) {
      id_text = std::to_string(id.get<long long>());
    } else {
      throw ParseError(where + ".id: expected a string");
    }
    if (id_text.empty()) throw ParseError(where + ".id: empty");
    players.push_back({id_text,
                       internal::json_to_rational(list[k]["capacity"], where + ".capacity"),
                       internal::json_to_rational(list[k]["fixed_cost"], where + ".fixed_cost")});
  }
  Rational over = 0;
  if (doc.contains("over_penalty")) {
    over = internal::json_to_rational(doc["over_penalty"], "over_penalty");
  }
  Instance inst{CESituation(std::move(players),
                            internal::json_to_rational(doc["price"], "price"),
                            internal::json_to_rational(doc["mqc"], "mqc"),
                            internal::json_to_rational(doc["under_penalty"], "under_penalty"),
                            std::move(over)),
                {}};
  if (doc.contains("weights")) {
    const nlohmann::json& w = doc["weights"];
    if (!w.is_object()) throw ParseError("weights: expected an object");
    std::set<std::string> ids;
    for (const Player& p : inst.situation.players()) ids.insert(p.id);
    for (const auto& [key, value] : w.items()) {
      if (!ids.count(key)) throw ParseError("weights: unknown player '" + key + "'");
      inst.weights[key] = internal::json_to_rational(value, "weights." + key);
    }
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

// Exact serialisation; parse_instance(serialize_instance(x)) reproduces x.
inline std::string serialize_instance(const Instance& inst) {
  const CESituation& sit = inst.situation;
  nlohmann::ordered_json doc;
  doc["players"] = nlohmann::ordered_json::array();
  for (const Player& p : sit.players()) {
    nlohmann::ordered_json row;
    row["id"] = p.id;
    row["capacity"] = to_exact_string(p.capacity);
    row["fixed_cost"] = to_exact_string(p.fixed_cost);
    doc["players"].push_back(std::move(row));
  }
  doc["price"] = to_exact_string(sit.price());
  doc["mqc"] = to_exact_string(sit.mqc());
  doc["under_penalty"] = to_exact_string(sit.under_penalty());
  doc["over_penalty"] = to_exact_string(sit.over_penalty());
  if (!inst.weights.empty()) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [id, alpha] : inst.weights) w[id] = to_exact_string(alpha);
    doc["weights"] = std::move(w);
  }
  return doc.dump(2) + "\n";
}

}  // namespace cegame

#endif  // CEGAME_INSTANCE_HPP_
