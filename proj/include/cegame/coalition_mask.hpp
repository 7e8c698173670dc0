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

// Coalitions are bitmasks over the situation's player order: bit i set means
// player i (0-based) belongs to the coalition.

#ifndef CEGAME_COALITION_MASK_HPP_
#define CEGAME_COALITION_MASK_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cegame/error.hpp"

namespace cegame {

using Coalition = std::uint64_t;

inline constexpr int kMaxPlayers = 64;

inline constexpr Coalition empty_coalition() { return 0; }

inline constexpr Coalition singleton(int player) {
  return Coalition{1} << player;
}

inline constexpr Coalition grand_coalition(int n) {
  return n >= kMaxPlayers ? ~Coalition{0} : (Coalition{1} << n) - 1;
}

inline constexpr bool contains(Coalition s, int player) {
  return (s >> player) & 1U;
}

inline constexpr bool is_subset(Coalition s, Coalition t) {
  return (s & ~t) == 0;
}

inline constexpr int coalition_size(Coalition s) { return std::popcount(s); }

inline std::vector<int> members(Coalition s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

// Calls fn(player) for every member in increasing order.
template <typename Fn>
void for_each_member(Coalition s, Fn&& fn) {
  while (s != 0) {
    fn(std::countr_zero(s));
    s &= s - 1;
  }
}

// Calls fn(sub) for every subset of `s` in increasing numeric order,
// starting with the empty set and ending with `s` itself.
template <typename Fn>
void for_each_subset(Coalition s, Fn&& fn) {
  Coalition sub = 0;
  do {
    fn(sub);
    sub = (sub - s) & s;
  } while (sub != 0);
}

// "{1,3}" with 1-based player positions; "{}" for the empty coalition.
inline std::string coalition_label(Coalition s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](int i) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  });
  out += "}";
  return out;
}

// Inverse of coalition_label without braces: "3,4" -> players {2,3}.
// Braces and whitespace are tolerated. Throws ParseError on bad ids.
inline Coalition parse_coalition(std::string_view text, int player_count) {
  Coalition s = 0;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    int id = 0;
    for (char c : token) {
      if (c < '0' || c > '9' || id > 1000) {
        throw ParseError("bad player id '" + token + "' in coalition");
      }
      id = id * 10 + (c - '0');
    }
    if (id < 1 || id > player_count) {
      throw ParseError("player id " + token + " out of range");
    }
    s |= singleton(id - 1);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != '{' && c != '}' && c != ' ') {
      token += c;
    }
  }
  flush();
  return s;
}

}  // namespace cegame

#endif  // CEGAME_COALITION_MASK_HPP_
