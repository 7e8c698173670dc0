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


#include "cegame/nucleolus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cegame/error.hpp"
#include "cegame/generate.hpp"
#include "support.hpp"

namespace cegame {
namespace {

using testing::fixture_situation;
using testing::payoffs;

Payoffs nucleolus_of(int k) { return nucleolus(build_game(fixture_situation(k))).payoffs; }

TEST(Nucleolus, ExampleTwo) { EXPECT_EQ(nucleolus_of(2), payoffs({"5.5", "5.5", "2"})); }

TEST(Nucleolus, ExampleThree) {
  EXPECT_EQ(nucleolus_of(3), payoffs({"46.5", "52.5", "52.5", "17.5"}));
}

TEST(Nucleolus, ExampleFour) {
  EXPECT_EQ(nucleolus_of(4), payoffs({"25", "23.5", "106.25", "106.25"}));
}

TEST(Nucleolus, ExampleFive) {
  EXPECT_EQ(nucleolus_of(5), payoffs({"36.5", "36.5", "35.5", "31.5"}));
}

TEST(Nucleolus, AdditiveGame) {
  const Payoffs a = payoffs({"3", "0.5", "7", "2"});
  std::vector<Rational> v(16);
  for (Coalition s = 0; s < 16; ++s) v[s] = coalition_payoff(a, s);
  EXPECT_EQ(nucleolus(TuGame(4, v)), a);
}

TEST(Nucleolus, SymmetricMajorityGameWithEmptyCore) {
  std::vector<Rational> v(8);
  for (Coalition s = 0; s < 8; ++s) v[s] = coalition_size(s) >= 2 ? 1 : 0;
  EXPECT_EQ(nucleolus(TuGame(3, v)), (Payoffs(3, Rational(1, 3))));
}

TEST(Nucleolus, SinglePlayerGetsEverything) {
  EXPECT_EQ(nucleolus(TuGame(1, {0, 7})), payoffs({"7"}));
}

TEST(Nucleolus, EmptyImputationSetIsAnError) {
  EXPECT_THROW(nucleolus(TuGame(2, {0, 1, 1, 1})), DomainError);
}

TEST(Nucleolus, AllocationCarriesRuleTag) {
  EXPECT_EQ(nucleolus(build_game(fixture_situation(2))).rule, Rule::kNucleolus);
}

TEST(Nucleolus, CoreEfficiencyAndRationalityOnGeneratedGames) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const CEGame g = build_game(generate_situation(2 + static_cast<int>(seed % 5), seed,
                                                   static_cast<Profile>(seed % 3)));
    const Payoffs x = nucleolus(g).payoffs;
    EXPECT_TRUE(testing::oracle_in_core(g.tu(), x)) << seed;
    for (int i = 0; i < g.player_count(); ++i) EXPECT_GE(x[static_cast<std::size_t>(i)], g.value(singleton(i)));
  }
}

TEST(Nucleolus, BothTightnessTestsAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const CEGame g = build_game(generate_situation(2 + static_cast<int>(seed % 5), 300 + seed,
                                                   static_cast<Profile>(seed % 3)));
    EXPECT_EQ(nucleolus(g.tu(), NucleolusMethod::kDualPrices),
              nucleolus(g.tu(), NucleolusMethod::kTightnessProbe))
        << seed;
  }
  std::vector<Rational> v(8);
  for (Coalition s = 0; s < 8; ++s) v[s] = coalition_size(s) >= 2 ? 1 : 0;
  EXPECT_EQ(nucleolus(TuGame(3, v), NucleolusMethod::kTightnessProbe),
            (Payoffs(3, Rational(1, 3))));
}

TEST(Nucleolus, InvariantUnderPlayerRelabelling) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CESituation sit = generate_situation(5, 700 + seed, static_cast<Profile>(seed % 3));
    const Payoffs base = nucleolus(build_game(sit)).payoffs;
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Player> players;
    for (int k : perm) players.push_back(sit.player(k));
    const CESituation permuted(players, sit.price(), sit.mqc(), sit.under_penalty(),
                               sit.over_penalty());
    const Payoffs x = nucleolus(build_game(permuted)).payoffs;
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(x[static_cast<std::size_t>(j)], base[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
    }
  }
}

TEST(Nucleolus, NoSampledImputationHasLexicographicallyLargerExcesses) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CEGame g = build_game(generate_situation(3, 50 + seed));
    const Payoffs eta = nucleolus(g).payoffs;
    const auto best = testing::sorted_excesses(g.tu(), eta);
    for (int k = 0; k < 300; ++k) {
      const Payoffs x = testing::random_imputation(g.tu(), rng);
      EXPECT_FALSE(testing::sorted_excesses(g.tu(), x) > best);
    }
  }
}

}  // namespace
}  // namespace cegame
