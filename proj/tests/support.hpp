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

// Test-only helpers and oracles. The oracles work from the raw situation
// data (capacities, costs, prices) and plain enumeration, so they share no
// code paths with the solvers they check.

#ifndef CEGAME_TESTS_SUPPORT_HPP_
#define CEGAME_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cegame/allocation.hpp"
#include "cegame/coalition_mask.hpp"
#include "cegame/game.hpp"
#include "cegame/instance.hpp"
#include "cegame/model.hpp"
#include "cegame/rational.hpp"

namespace cegame::testing {

inline Instance fixture(int k) {
  return load_instance(std::string(CEGAME_FIXTURE_DIR) + "/example" +
                       std::to_string(k) + ".json");
}

inline CESituation fixture_situation(int k) { return fixture(k).situation; }

inline Rational q(const char* text) { return parse_rational(text); }

// |x - printed| <= tol, with both bounds given as decimal text.
inline bool near(const Rational& x, const char* printed, const char* tol = "0.01") {
  Rational d = x - q(printed);
  if (sgn(d) < 0) d = -d;
  return d <= q(tol);
}

inline Payoffs payoffs(std::initializer_list<const char*> texts) {
  Payoffs out;
  for (const char* t : texts) out.push_back(q(t));
  return out;
}

// Situation from integer-or-decimal text data; ids are "1".."n".
inline CESituation make_situation(const std::vector<std::string>& capacity,
                                  const std::vector<std::string>& cost,
                                  const char* price, const char* mqc,
                                  const char* penalty) {
  std::vector<Player> players;
  for (std::size_t i = 0; i < capacity.size(); ++i) {
    players.push_back({std::to_string(i + 1), parse_rational(capacity[i]),
                       parse_rational(cost[i])});
  }
  return CESituation(std::move(players), q(price), q(mqc), q(penalty), q(price));
}

// v(S) straight from the definition: the best of not exporting and of
// exporting with any non-empty R within S, each exporter shipping full
// capacity and the group paying the penalty on any shortfall below the MQC.
inline Rational oracle_value(const CESituation& sit, Coalition s) {
  Rational best = 0;
  const std::vector<int> m = members(s);
  const std::size_t k = m.size();
  for (std::uint64_t r = 1; r < (std::uint64_t{1} << k); ++r) {
    Rational margin = 0;
    Rational quantity = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if ((r >> j & 1) == 0) continue;
      const Player& p = sit.player(m[j]);
      margin += p.capacity * sit.price() - p.fixed_cost;
      quantity += p.capacity;
    }
    Rational shortfall = sit.mqc() - quantity;
    if (sgn(shortfall) < 0) shortfall = 0;
    const Rational profit = margin - shortfall * sit.under_penalty();
    if (profit > best) best = profit;
  }
  return best;
}

inline Coalition oracle_essential(const CESituation& sit) {
  Coalition e = 0;
  for (int i = 0; i < sit.player_count(); ++i) {
    const Player& p = sit.player(i);
    if (p.capacity * sit.price() - p.fixed_cost >= 0) e |= singleton(i);
  }
  return e;
}

// Minimum of e(S, x) / |S^E| over every proper coalition with S^E nonempty.
inline std::optional<Rational> oracle_min_per_essential(const CEGame& game,
                                                        const Payoffs& x) {
  const Coalition e = oracle_essential(game.situation());
  std::optional<Rational> best;
  for (Coalition s = 1; s < game.grand(); ++s) {
    const int count = coalition_size(s & e);
    if (count == 0) continue;
    Rational ratio = (coalition_payoff(x, s) - game.value(s)) / count;
    if (!best || ratio < *best) best = ratio;
  }
  return best;
}

// Minimum of e(S, x) / x(S) over every proper coalition with S^E nonempty
// and x(S) > 0.
inline std::optional<Rational> oracle_min_ratio(const CEGame& game,
                                                const Payoffs& x) {
  const Coalition e = oracle_essential(game.situation());
  std::optional<Rational> best;
  for (Coalition s = 1; s < game.grand(); ++s) {
    if ((s & e) == 0) continue;
    const Rational share = coalition_payoff(x, s);
    if (sgn(share) <= 0) continue;
    Rational ratio = (share - game.value(s)) / share;
    if (!best || ratio < *best) best = ratio;
  }
  return best;
}

// Core membership by direct enumeration.
inline bool oracle_in_core(const TuGame& game, const Payoffs& x) {
  if (coalition_payoff(x, game.grand()) != game(game.grand())) return false;
  for (Coalition s = 1; s < game.grand(); ++s) {
    if (coalition_payoff(x, s) < game(s)) return false;
  }
  return true;
}

// Excesses of every proper non-empty coalition, in increasing order.
inline std::vector<Rational> sorted_excesses(const TuGame& game, const Payoffs& x) {
  std::vector<Rational> e;
  for (Coalition s = 1; s < game.grand(); ++s) {
    e.push_back(coalition_payoff(x, s) - game(s));
  }
  std::sort(e.begin(), e.end());
  return e;
}

// Random imputation with denominators up to `grain`: v({i}) plus a random
// share of the surplus v(N) - sum v({i}).
inline Payoffs random_imputation(const TuGame& game, std::mt19937_64& rng,
                                 long grain = 1000) {
  const int n = game.player_count();
  std::vector<long> w(static_cast<std::size_t>(n));
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& wi : w) {
      wi = static_cast<long>(rng() % static_cast<std::uint64_t>(grain + 1));
      total += wi;
    }
  }
  Rational surplus = game(game.grand());
  for (int i = 0; i < n; ++i) surplus -= game(singleton(i));
  Payoffs x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    x[k] = game(singleton(i)) + surplus * fraction(w[k], total);
  }
  return x;
}

// Imputation close to `center`: a zero-sum perturbation of size up to
// `scale`, clipped back into the imputation set. Returns nullopt if the
// perturbation leaves it.
inline std::optional<Payoffs> perturbed_imputation(const TuGame& game,
                                                   const Payoffs& center,
                                                   const Rational& scale,
                                                   std::mt19937_64& rng) {
  const int n = game.player_count();
  Payoffs x = center;
  for (int i = 0; i + 1 < n; ++i) {
    const long k = static_cast<long>(rng() % 2001) - 1000;
    const Rational step = scale * fraction(k, 1000);
    x[static_cast<std::size_t>(i)] += step;
    x[static_cast<std::size_t>(n - 1)] -= step;
  }
  for (int i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] < game(singleton(i))) return std::nullopt;
  }
  return x;
}

}  // namespace cegame::testing

#endif  // CEGAME_TESTS_SUPPORT_HPP_
