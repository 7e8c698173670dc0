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

// Seeded random SME situations for property tests and the `gen` command.
// Output depends only on (n, seed, profile): the engine is mt19937_64 and
// all draws are plain modular reductions of its output.

#ifndef CEGAME_GENERATE_HPP_
#define CEGAME_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cegame/error.hpp"
#include "cegame/model.hpp"
#include "cegame/rational.hpp"

namespace cegame {

enum class Profile { kMixed, kEssentialHeavy, kComplementaryHeavy };

inline Profile parse_profile(const std::string& name) {
  if (name == "mixed") return Profile::kMixed;
  if (name == "essential-heavy") return Profile::kEssentialHeavy;
  if (name == "complementary-heavy") return Profile::kComplementaryHeavy;
  throw ParseError("unknown profile '" + name + "'");
}

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  CESituation generate(int n, Profile profile) {
    if (n < 1 || n > kMaxPlayers) throw DomainError("n must be in 1..64");
    // mqc in [20, 120] in halves; capacities in (0, mqc) in quarters.
    const Rational mqc = fraction(static_cast<long>(40 + draw(201)), 2);
    const Rational price = fraction(static_cast<long>(2 + draw(19)), 2);
    const Rational penalty(static_cast<long>(1 + draw(20)));
    const long quarters = Rational(mqc * 4).get_num().get_si();

    std::vector<PlayerClass> classes = draw_classes(n, profile);
    std::vector<Player> players;
    for (int i = 0; i < n; ++i) {
      const Rational q = fraction(
          1 + static_cast<long>(draw(static_cast<std::uint64_t>(quarters - 1))), 4);
      Rational cost;
      switch (classes[static_cast<std::size_t>(i)]) {
        case PlayerClass::kEssential:
          // c in [0, Q p]: Delta >= 0.
          cost = q * price * fraction(static_cast<long>(draw(9)), 8);
          break;
        case PlayerClass::kComplementary:
          // c in (Q p, Q (p + r)]: Delta < 0 <= delta.
          cost = q * price + q * penalty * fraction(1 + static_cast<long>(draw(8)), 8);
          break;
        default:
          // c > Q (p + r): delta < 0.
          cost = q * (price + penalty) + q * fraction(1 + static_cast<long>(draw(8)), 4);
          break;
      }
      players.push_back({std::to_string(i + 1), q, cost});
    }
    return CESituation(std::move(players), price, mqc, penalty, price);
  }

 private:
  std::uint64_t draw(std::uint64_t bound) { return engine_() % bound; }

  std::vector<PlayerClass> draw_classes(int n, Profile profile) {
    std::vector<PlayerClass> classes;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t roll = draw(10);
      switch (profile) {
        case Profile::kMixed:
          classes.push_back(roll < 5   ? PlayerClass::kEssential
                            : roll < 8 ? PlayerClass::kComplementary
                                       : PlayerClass::kNonPotential);
          break;
        case Profile::kEssentialHeavy:
          // At least ceil(n/2) essential players; order is shuffled below.
          classes.push_back(i < (n + 1) / 2 || roll < 8
                                ? PlayerClass::kEssential
                                : PlayerClass::kComplementary);
          break;
        case Profile::kComplementaryHeavy:
          classes.push_back(i < (n + 1) / 2 ? PlayerClass::kComplementary
                            : roll < 7      ? PlayerClass::kEssential
                                            : PlayerClass::kComplementary);
          break;
      }
    }
    if (profile == Profile::kMixed) {
      bool any = false;
      for (PlayerClass c : classes) any = any || c == PlayerClass::kEssential;
      if (!any) classes[static_cast<std::size_t>(draw(static_cast<std::uint64_t>(n)))] = PlayerClass::kEssential;
    }
    for (std::size_t k = classes.size(); k > 1; --k) {
      std::swap(classes[k - 1], classes[static_cast<std::size_t>(draw(k))]);
    }
    return classes;
  }

  std::mt19937_64 engine_;
};

inline CESituation generate_situation(int n, std::uint64_t seed,
                                      Profile profile = Profile::kMixed) {
  return InstanceGenerator(seed).generate(n, profile);
}

}  // namespace cegame

#endif  // CEGAME_GENERATE_HPP_
