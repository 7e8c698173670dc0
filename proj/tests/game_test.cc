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


#include "cegame/game.hpp"

#include <gtest/gtest.h>

#include "cegame/error.hpp"
#include "cegame/generate.hpp"
#include "support.hpp"

namespace cegame {
namespace {

using testing::fixture_situation;
using testing::oracle_value;
using testing::q;

std::vector<Rational> values_from(std::initializer_list<const char*> texts) {
  std::vector<Rational> v{Rational(0)};
  for (const char* t : texts) v.push_back(q(t));
  return v;
}

TEST(BuildGame, ExampleOneTable) {
  const CEGame g = build_game(fixture_situation(1));
  EXPECT_EQ(g.values(), values_from({"0", "406", "825", "18", "437", "1034", "1383"}));
  EXPECT_EQ(g.solution(1).exporters, 0u);
  for (Coalition s = 2; s <= 7; ++s) EXPECT_EQ(g.solution(s).exporters, s);
}

TEST(BuildGame, ExampleTwoTable) {
  const CEGame g = build_game(fixture_situation(2));
  EXPECT_EQ(g.values(), values_from({"0", "0", "9", "0", "5.5", "5.5", "13"}));
}

TEST(BuildGame, ExampleThreeTable) {
  // Masks 1..15 in increasing order.
  const CEGame g = build_game(fixture_situation(3));
  EXPECT_EQ(g.values(), values_from({"0", "0", "0", "0", "0", "30", "139", "0", "0",
                                     "20", "104", "20", "104", "110", "169"}));
}

TEST(BuildGame, ExamplesFourAndFiveNonZeroValues) {
  const CEGame four = build_game(fixture_situation(4));
  for (Coalition s = 1; s <= four.grand(); ++s) {
    switch (s) {
      case 0b1100: EXPECT_EQ(four.value(s), 104); break;
      case 0b1101: EXPECT_EQ(four.value(s), 214); break;
      case 0b1110: EXPECT_EQ(four.value(s), 211); break;
      case 0b1111: EXPECT_EQ(four.value(s), 261); break;
      default: EXPECT_EQ(four.value(s), 0) << coalition_label(s);
    }
  }
  const CEGame five = build_game(fixture_situation(5));
  for (Coalition s = 1; s <= five.grand(); ++s) {
    switch (s) {
      case 0b0011: EXPECT_EQ(five.value(s), 6); break;
      case 0b0111: EXPECT_EQ(five.value(s), 77); break;
      case 0b1011: EXPECT_EQ(five.value(s), 69); break;
      case 0b1111: EXPECT_EQ(five.value(s), 140); break;
      default: EXPECT_EQ(five.value(s), 0) << coalition_label(s);
    }
  }
}

TEST(BuildGame, SinglePlayerBelowBreakEvenIsWorthless) {
  const CEGame g = build_game(testing::make_situation({"5"}, {"10"}, "4", "10", "3"));
  EXPECT_EQ(g.value(1), 0);
}

TEST(BuildGame, GrandCoalitionAccessors) {
  const CEGame g = build_game(fixture_situation(4));
  EXPECT_EQ(g.essential(), 0b1101u);
  EXPECT_EQ(g.grand_exporters(), 0b1111u);
  EXPECT_EQ(g.grand_complementary_exporters(), 0b0010u);
}

TEST(BuildGame, RejectsNonSmeSituations) {
  EXPECT_THROW(build_game(testing::make_situation({"20"}, {"1"}, "5", "10", "1")),
               DomainError);
}

TEST(TuGame, ValidatesShape) {
  EXPECT_THROW(TuGame(0, {Rational(0)}), DomainError);
  EXPECT_THROW(TuGame(2, {0, 1, 1}), DomainError);
  EXPECT_THROW(TuGame(1, {1, 1}), DomainError);
  EXPECT_NO_THROW(TuGame(1, {0, 1}));
}

TEST(LazyGame, MatchesFullTable) {
  const CESituation sit = generate_situation(7, 4);
  const CEGame full = build_game(sit);
  LazyGame lazy(sit);
  for (Coalition s = 0; s <= sit.grand(); ++s) {
    EXPECT_EQ(lazy.solution(s), full.solution(s));
    EXPECT_EQ(lazy.value(s), full.value(s));
  }
}

TEST(LazyGame, HandlesSituationsBeyondTheTableLimit) {
  const CESituation sit = generate_situation(40, 9);
  EXPECT_THROW(build_game(sit), DomainError);
  LazyGame lazy(sit);
  const Coalition s = 0xFFFFF;  // first 20 players
  EXPECT_EQ(lazy.value(s), solve_coalition(sit, s).value);
  EXPECT_GE(sgn(lazy.value(sit.grand())), 0);
}

TEST(Superadditivity, HoldsOnExampleOne) {
  const CEGame g = build_game(fixture_situation(1));
  EXPECT_TRUE(check_superadditive(g.tu()).holds);
  EXPECT_TRUE(check_monotone(g.tu()).holds);
}

TEST(Superadditivity, ReportsConstructedViolation) {
  const TuGame g(2, {0, 3, 3, 5});
  const PairCheck c = check_superadditive(g);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.violation);
  EXPECT_EQ(c.violation->first | c.violation->second, 3u);
}

TEST(Monotonicity, ReportsConstructedViolation) {
  const TuGame g(2, {0, 4, 0, 3});
  const PairCheck c = check_monotone(g);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.violation);
  EXPECT_EQ(c.violation->first, 1u);
  EXPECT_EQ(c.violation->second, 3u);
}

TEST(Convexity, ExampleOneWitness) {
  const ConvexityCheck c = check_convex(build_game(fixture_situation(1)).tu());
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.violation);
  EXPECT_EQ(c.violation->player, 0);
  EXPECT_EQ(c.violation->smaller, 0b010u);
  EXPECT_EQ(c.violation->larger, 0b110u);
  EXPECT_EQ(c.violation->smaller_gain, 419);
  EXPECT_EQ(c.violation->larger_gain, 349);
}

TEST(Convexity, ExampleTwoIsNotConvex) {
  const ConvexityCheck c = check_convex(build_game(fixture_situation(2)).tu());
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.violation);
  EXPECT_EQ(c.violation->player, 0);
  EXPECT_EQ(c.violation->smaller, 0b010u);
  EXPECT_EQ(c.violation->larger, 0b110u);
  EXPECT_EQ(c.violation->smaller_gain, 9);
  EXPECT_EQ(c.violation->larger_gain, Rational(15, 2));
}

TEST(Convexity, AdditiveGameIsConvex) {
  std::vector<Rational> v(8);
  const Rational a[3] = {2, Rational(1, 2), 7};
  for (Coalition s = 0; s < 8; ++s) {
    for_each_member(s, [&](int i) { v[s] += a[i]; });
  }
  EXPECT_TRUE(check_convex(TuGame(3, v)).holds);
}

TEST(StructuralProperties, HoldOnGeneratedGames) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Profile profile = static_cast<Profile>(seed % 3);
    const CEGame g = build_game(generate_situation(2 + static_cast<int>(seed % 6), seed, profile));
    EXPECT_TRUE(check_superadditive(g.tu()).holds) << seed;
    EXPECT_TRUE(check_monotone(g.tu()).holds) << seed;
    EXPECT_FALSE(find_valuable_inessential_coalition(g)) << seed;
    EXPECT_FALSE(find_nonpotential_influence(g)) << seed;
  }
}

TEST(StructuralProperties, DetectorsFireOnBrokenTables) {
  // Situation 3's table with a value planted on the coalition {4}, which
  // has no essential member.
  const CEGame ok = build_game(fixture_situation(3));
  std::vector<CoalitionSolution> sols;
  for (Coalition s = 0; s <= ok.grand(); ++s) sols.push_back(ok.solution(s));
  sols[0b1000].value = 1;
  const CEGame broken(ok.situation(), sols);
  ASSERT_TRUE(find_valuable_inessential_coalition(broken));
  EXPECT_EQ(*find_valuable_inessential_coalition(broken), 0b1000u);

  // A non-potential player that changes a coalition's value.
  const CESituation sit = testing::make_situation({"6", "3"}, {"10", "100"}, "5", "8", "1");
  const CEGame base = build_game(sit);
  std::vector<CoalitionSolution> s2;
  for (Coalition s = 0; s <= base.grand(); ++s) s2.push_back(base.solution(s));
  s2[0b11].value += 1;
  EXPECT_TRUE(find_nonpotential_influence(CEGame(sit, s2)));
}

TEST(Subgame, EqualsGameOfRestrictedSituation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CESituation sit = generate_situation(6, 40 + seed);
    const CEGame g = build_game(sit);
    for (Coalition t : {Coalition{0b101101}, Coalition{0b000011}, Coalition{0b111110},
                        Coalition{0b100000}}) {
      const CEGame sub = subgame(g, t);
      const CEGame direct = build_game(sit.restrict_to(t));
      ASSERT_EQ(sub.player_count(), coalition_size(t));
      EXPECT_EQ(sub.values(), direct.values());
      for (Coalition s = 0; s <= sub.grand(); ++s) {
        EXPECT_EQ(sub.solution(s), direct.solution(s));
        EXPECT_EQ(sub.value(s), g.value(expand_mask(s, t)));
      }
    }
  }
}

TEST(Subgame, MaskCompressionRoundTrips) {
  const Coalition t = 0b101101;
  for (Coalition s = 0; s < 16; ++s) {
    EXPECT_EQ(compress_mask(expand_mask(s, t), t), s);
  }
  EXPECT_THROW(subgame(build_game(fixture_situation(1)), 0), DomainError);
}

TEST(BuildGame, ValuesAgreeWithOracleOnRandomSituations) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const CESituation sit = generate_situation(6, 900 + seed);
    const CEGame g = build_game(sit);
    for (Coalition s = 0; s <= g.grand(); ++s) EXPECT_EQ(g.value(s), oracle_value(sit, s));
  }
}

}  // namespace
}  // namespace cegame
