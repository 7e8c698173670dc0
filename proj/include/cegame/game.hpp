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

// Transferable-utility games over bitmask coalitions, and the cooperative
// export game whose value v(S) is the optimal joint export profit of S.

#ifndef CEGAME_GAME_HPP_
#define CEGAME_GAME_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cegame/coalition.hpp"
#include "cegame/coalition_mask.hpp"
#include "cegame/error.hpp"
#include "cegame/model.hpp"
#include "cegame/rational.hpp"

namespace cegame {

inline constexpr int kMaxTablePlayers = 24;

// Explicit characteristic function: one value per coalition mask.
class TuGame {
 public:
  TuGame(int player_count, std::vector<Rational> values)
      : player_count_(player_count), values_(std::move(values)) {
    if (player_count_ < 1 || player_count_ > kMaxTablePlayers) {
      throw DomainError("table games support 1..24 players");
    }
    if (values_.size() != (std::size_t{1} << player_count_)) {
      throw DomainError("value table must have 2^n entries");
    }
    if (sgn(values_[0]) != 0) throw DomainError("v(empty) must be 0");
  }

  int player_count() const { return player_count_; }
  Coalition grand() const { return grand_coalition(player_count_); }
  const Rational& value(Coalition s) const { return values_[s]; }
  const Rational& operator()(Coalition s) const { return values_[s]; }
  const std::vector<Rational>& values() const { return values_; }

 private:
  int player_count_;
  std::vector<Rational> values_;
};

// Full table of the cooperative export game together with the optimal
// export plan of every coalition.
class CEGame {
 public:
  CEGame(CESituation situation, std::vector<CoalitionSolution> solutions)
      : situation_(std::move(situation)),
        solutions_(std::move(solutions)),
        table_(situation_.player_count(), extract_values(solutions_)) {}

  const CESituation& situation() const { return situation_; }
  const TuGame& tu() const { return table_; }
  int player_count() const { return table_.player_count(); }
  Coalition grand() const { return table_.grand(); }
  const Rational& value(Coalition s) const { return table_.value(s); }
  const CoalitionSolution& solution(Coalition s) const { return solutions_[s]; }
  const std::vector<Rational>& values() const { return table_.values(); }

  // N^E, D^N and R^N of the grand coalition.
  Coalition essential() const { return essential_members(situation_, grand()); }
  Coalition grand_exporters() const { return solution(grand()).exporters; }
  Coalition grand_complementary_exporters() const {
    return grand_exporters() & ~essential();
  }

 private:
  static std::vector<Rational> extract_values(
      const std::vector<CoalitionSolution>& solutions) {
    std::vector<Rational> v;
    v.reserve(solutions.size());
    for (const CoalitionSolution& s : solutions) v.push_back(s.value);
    return v;
  }

  CESituation situation_;
  std::vector<CoalitionSolution> solutions_;
  TuGame table_;
};

inline CEGame build_game(const CESituation& sit) {
  if (sit.player_count() > kMaxTablePlayers) {
    throw DomainError("full game tables are limited to 24 players; use "
                      "LazyGame for larger situations");
  }
  require_smes(sit, sit.grand());
  const std::size_t count = std::size_t{1} << sit.player_count();
  std::vector<CoalitionSolution> solutions;
  solutions.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    solutions.push_back(solve_coalition(sit, static_cast<Coalition>(s)));
  }
  return CEGame(sit, std::move(solutions));
}

// Per-coalition evaluation with memoisation, for situations too large for a
// full table. Not thread-safe.
class LazyGame {
 public:
  explicit LazyGame(CESituation sit) : situation_(std::move(sit)) {
    require_smes(situation_, situation_.grand());
  }

  const CESituation& situation() const { return situation_; }

  const CoalitionSolution& solution(Coalition s) {
    auto it = cache_.find(s);
    if (it == cache_.end()) {
      it = cache_.emplace(s, solve_coalition(situation_, s)).first;
    }
    return it->second;
  }

  const Rational& value(Coalition s) { return solution(s).value; }

 private:
  CESituation situation_;
  std::unordered_map<Coalition, CoalitionSolution> cache_;
};

// Witness pair for a failed superadditivity or monotonicity check.
struct PairViolation {
  Coalition first = 0;
  Coalition second = 0;
};

struct PairCheck {
  bool holds = true;
  std::optional<PairViolation> violation;
};

// v(S u T) >= v(S) + v(T) for all disjoint S, T. O(3^n).
inline PairCheck check_superadditive(const TuGame& game) {
  const Coalition n = game.grand();
  for (Coalition s = 1; s <= n; ++s) {
    const Coalition rest = n & ~s;
    PairCheck result;
    for_each_subset(rest, [&](Coalition t) {
      if (!result.holds || t == 0 || t < s) return;
      if (game(s | t) < game(s) + game(t)) {
        result.holds = false;
        result.violation = PairViolation{s, t};
      }
    });
    if (!result.holds) return result;
  }
  return {};
}

// v(S) <= v(T) for all S subset of T. Checking single-player extensions is
// enough by transitivity; the witness is (S, S u {i}).
inline PairCheck check_monotone(const TuGame& game) {
  const Coalition n = game.grand();
  for (Coalition s = 0; s <= n; ++s) {
    for (int i = 0; i < game.player_count(); ++i) {
      if (contains(s, i)) continue;
      const Coalition t = s | singleton(i);
      if (game(t) < game(s)) return {false, PairViolation{s, t}};
    }
  }
  return {};
}

struct ConvexityViolation {
  int player = 0;
  Coalition smaller = 0;   // S
  Coalition larger = 0;    // T, with S subset of T
  Rational smaller_gain;   // v(S u {i}) - v(S)
  Rational larger_gain;    // v(T u {i}) - v(T)
};

struct ConvexityCheck {
  bool holds = true;
  std::optional<ConvexityViolation> violation;
};

// Marginal contributions grow along inclusion: for every player i and
// S subset of T subset of N \ {i}, v(S u i) - v(S) <= v(T u i) - v(T).
// Players, then T, then S are scanned in increasing order and the first
// violation is reported.
inline ConvexityCheck check_convex(const TuGame& game) {
  const Coalition n = game.grand();
  for (int i = 0; i < game.player_count(); ++i) {
    const Coalition others = n & ~singleton(i);
    const Coalition with_i = singleton(i);
    std::optional<ConvexityViolation> found;
    for_each_subset(others, [&](Coalition t) {
      if (found) return;
      const Rational larger_gain = game(t | with_i) - game(t);
      for_each_subset(t, [&](Coalition s) {
        if (found) return;
        Rational smaller_gain = game(s | with_i) - game(s);
        if (smaller_gain > larger_gain) {
          found = ConvexityViolation{i, s, t, std::move(smaller_gain),
                                     larger_gain};
        }
      });
    });
    if (found) return {false, std::move(found)};
  }
  return {};
}

// Coalitions without essential players never export: v(T) = 0 for every
// T within N \ N^E. Returns the first offending coalition, if any.
inline std::optional<Coalition> find_valuable_inessential_coalition(
    const CEGame& game) {
  const Coalition inessential = game.grand() & ~game.essential();
  std::optional<Coalition> bad;
  for_each_subset(inessential, [&](Coalition t) {
    if (!bad && sgn(game.value(t)) != 0) bad = t;
  });
  return bad;
}

// Players that cannot export profitably even with penalty relief are dummies:
// v(S \ T) = v(S) for T within S \ S^P. Returns (S, T) of the first failure.
inline std::optional<PairViolation> find_nonpotential_influence(
    const CEGame& game) {
  const CESituation& sit = game.situation();
  for (Coalition s = 1; s <= game.grand(); ++s) {
    const Coalition removable = s & ~potential_members(sit, s);
    std::optional<PairViolation> bad;
    for_each_subset(removable, [&](Coalition t) {
      if (!bad && game.value(s & ~t) != game.value(s)) bad = PairViolation{s, t};
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

// Compresses a mask over the players of `t` into the renumbered subgame.
inline Coalition compress_mask(Coalition s, Coalition t) {
  Coalition out = 0;
  int k = 0;
  for_each_member(t, [&](int i) {
    if (contains(s, i)) out |= singleton(k);
    ++k;
  });
  return out;
}

inline Coalition expand_mask(Coalition s, Coalition t) {
  Coalition out = 0;
  int k = 0;
  for_each_member(t, [&](int i) {
    if (contains(s, k)) out |= singleton(i);
    ++k;
  });
  return out;
}

// Restriction of the game to the players in `t`, renumbered in increasing
// order. The result is again a cooperative export game.
inline CEGame subgame(const CEGame& game, Coalition t) {
  t &= game.grand();
  if (t == 0) throw DomainError("subgame needs at least one player");
  const int size = coalition_size(t);
  std::vector<CoalitionSolution> solutions;
  solutions.reserve(std::size_t{1} << size);
  for (Coalition local = 0; local < (Coalition{1} << size); ++local) {
    CoalitionSolution sol = game.solution(expand_mask(local, t));
    sol.members = local;
    sol.exporters = compress_mask(sol.exporters, t);
    solutions.push_back(std::move(sol));
  }
  return CEGame(game.situation().restrict_to(t), std::move(solutions));
}

}  // namespace cegame

#endif  // CEGAME_GAME_HPP_
