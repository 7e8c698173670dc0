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

// Gain-sharing rules for the grand coalition and core membership tests.
//
// Excess here is the coalition's surplus, e(S, x) = x(S) - v(S); x is in the
// core iff it is efficient and every excess is non-negative.
//
// Rules:
//   NEA                v(N) split among essential players in proportion to
//                      their full margins; everybody else gets 0. Always in
//                      the core.
//   delta-proportional v(N) split among all grand-coalition exporters in
//                      proportion to adjusted margins. Not always stable.
//   egalitarian rate   NEA minus a flat amount rho per essential player, the
//                      collected |N^E| * rho shared by complementary
//                      exporters according to weights alpha.
//   proportional rate  NEA scaled by (1 - rho), the collected rho * v(N)
//                      shared the same way.
//
// The default alpha is the adjusted margin delta_i; when every exporter in
// D^N has delta_i = 0 the share is split equally instead.

#ifndef CEGAME_ALLOCATION_HPP_
#define CEGAME_ALLOCATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cegame/coalition_mask.hpp"
#include "cegame/error.hpp"
#include "cegame/game.hpp"
#include "cegame/model.hpp"
#include "cegame/rational.hpp"

namespace cegame {

enum class Rule {
  kNea,
  kDeltaProportional,
  kEgalitarianRate,
  kProportionalRate,
  kNucleolus,
  kCustom,
};

inline const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::kNea: return "nea";
    case Rule::kDeltaProportional: return "delta";
    case Rule::kEgalitarianRate: return "egal";
    case Rule::kProportionalRate: return "prop";
    case Rule::kNucleolus: return "nucleolus";
    case Rule::kCustom: return "custom";
  }
  return "?";
}

using Payoffs = std::vector<Rational>;

struct Allocation {
  Payoffs payoffs;
  Rule rule = Rule::kCustom;
  std::optional<Rational> rho;
  std::optional<Payoffs> weights;  // alpha_i, zero outside D^N
  std::vector<std::string> warnings;

  const Rational& operator[](int i) const {
    return payoffs[static_cast<std::size_t>(i)];
  }
};

inline Rational coalition_payoff(const Payoffs& x, Coalition s) {
  Rational sum = 0;
  for_each_member(s, [&](int i) { sum += x[static_cast<std::size_t>(i)]; });
  return sum;
}

inline Rational excess(const TuGame& game, Coalition s, const Payoffs& x) {
  if (x.size() != static_cast<std::size_t>(game.player_count())) {
    throw DomainError("payoff vector length does not match the game");
  }
  return coalition_payoff(x, s) - game(s);
}

inline bool is_efficient(const TuGame& game, const Payoffs& x) {
  return excess(game, game.grand(), x) == 0;
}

struct CoreCheck {
  bool in_core = false;
  bool efficient = false;
  // Proper coalition with the smallest excess (smallest mask on ties).
  Coalition worst = 0;
  Rational worst_excess;
};

inline CoreCheck in_core(const TuGame& game, const Payoffs& x) {
  CoreCheck check;
  check.efficient = is_efficient(game, x);
  const Coalition n = game.grand();
  bool first = true;
  for (Coalition s = 1; s < n; ++s) {
    Rational e = coalition_payoff(x, s) - game(s);
    if (first || e < check.worst_excess) {
      check.worst = s;
      check.worst_excess = std::move(e);
      first = false;
    }
  }
  if (first) {  // single player: only efficiency matters
    check.worst = n;
    check.worst_excess = excess(game, n, x);
  }
  check.in_core = check.efficient && sgn(check.worst_excess) >= 0;
  return check;
}

inline Allocation nea(const CEGame& game) {
  const CESituation& sit = game.situation();
  const Coalition essential = game.essential();
  const Rational& total = game.value(game.grand());
  const Rational margin_sum = total_full_margin(sit, essential);
  Allocation a;
  a.rule = Rule::kNea;
  a.payoffs.assign(static_cast<std::size_t>(game.player_count()), Rational(0));
  // A zero margin sum forces v(N) = 0; everybody gets 0.
  if (sgn(margin_sum) == 0 || sgn(total) == 0) return a;
  for_each_member(essential, [&](int i) {
    a.payoffs[static_cast<std::size_t>(i)] =
        sit.full_margin(i) / margin_sum * total;
  });
  return a;
}

inline Allocation delta_proportional(const CEGame& game) {
  const CESituation& sit = game.situation();
  const Coalition exporters = game.grand_exporters();
  const Rational& total = game.value(game.grand());
  Allocation a;
  a.rule = Rule::kDeltaProportional;
  a.payoffs.assign(static_cast<std::size_t>(game.player_count()), Rational(0));
  const Rational weight_sum = total_adjusted_margin(sit, exporters);
  if (exporters == 0 || sgn(weight_sum) == 0) return a;
  for_each_member(exporters, [&](int i) {
    a.payoffs[static_cast<std::size_t>(i)] =
        sit.adjusted_margin(i) / weight_sum * total;
  });
  return a;
}

// Result of a restricted minimum search over proper coalitions.
struct CoalitionSearchResult {
  Coalition coalition = 0;
  Rational criterion;
  std::vector<Coalition> candidates;  // coalitions actually evaluated
};

// Minimiser of e(S, phi) / |S^E| over the family {N \ {i} : i in N} together
// with (N \ N^E) u {i*}, i* the essential player with the smallest full
// margin. Coalitions equal to N or without essential players are skipped.
inline CoalitionSearchResult min_excess_per_essential(const CEGame& game,
                                                      const Payoffs& phi) {
  const CESituation& sit = game.situation();
  const Coalition n = game.grand();
  const Coalition essential = game.essential();
  if (essential == 0) throw DomainError("no essential players");
  std::vector<Coalition> family;
  for (int i = 0; i < game.player_count(); ++i) family.push_back(n & ~singleton(i));
  int weakest = -1;
  for_each_member(essential, [&](int i) {
    if (weakest < 0 || sit.full_margin(i) < sit.full_margin(weakest)) weakest = i;
  });
  family.push_back((n & ~essential) | singleton(weakest));

  CoalitionSearchResult best;
  bool found = false;
  for (Coalition s : family) {
    const int count = coalition_size(s & essential);
    if (s == n || count == 0) continue;
    best.candidates.push_back(s);
    Rational ratio = excess(game.tu(), s, phi) / count;
    if (!found || ratio < best.criterion ||
        (ratio == best.criterion && s < best.coalition)) {
      best.coalition = s;
      best.criterion = std::move(ratio);
      found = true;
    }
  }
  if (!found) {
    throw DomainError("no proper coalition contains an essential player");
  }
  return best;
}

// Minimiser of e(S, phi) / phi(S) over {N \ {i} : i in N}, skipping
// coalitions without essential players or with phi(S) = 0.
inline CoalitionSearchResult min_excess_ratio(const CEGame& game,
                                              const Payoffs& phi) {
  const Coalition n = game.grand();
  const Coalition essential = game.essential();
  if (essential == 0) throw DomainError("no essential players");
  CoalitionSearchResult best;
  bool found = false;
  for (int i = 0; i < game.player_count(); ++i) {
    const Coalition s = n & ~singleton(i);
    if (s == 0 || (s & essential) == 0) continue;
    const Rational share = coalition_payoff(phi, s);
    if (sgn(share) == 0) continue;
    best.candidates.push_back(s);
    Rational ratio = excess(game.tu(), s, phi) / share;
    if (!found || ratio < best.criterion ||
        (ratio == best.criterion && s < best.coalition)) {
      best.coalition = s;
      best.criterion = std::move(ratio);
      found = true;
    }
  }
  if (!found) {
    throw DomainError("every candidate coalition has a zero NEA share");
  }
  return best;
}

namespace internal {

inline void require_complementary_exporters(const CEGame& game) {
  if (game.grand_complementary_exporters() == 0) {
    throw DomainError(
        "rate rules need at least one complementary exporter in the grand "
        "coalition");
  }
}

// alpha over D^N; defaults to the adjusted margins.
inline Payoffs resolve_weights(const CEGame& game,
                               const std::optional<Payoffs>& weights) {
  const Coalition comp = game.grand_complementary_exporters();
  Payoffs alpha(static_cast<std::size_t>(game.player_count()), Rational(0));
  Rational sum = 0;
  for_each_member(comp, [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    if (weights) {
      if (weights->size() != alpha.size()) {
        throw DomainError("weight vector length does not match the game");
      }
      alpha[k] = (*weights)[k];
    } else {
      alpha[k] = game.situation().adjusted_margin(i);
    }
    if (sgn(alpha[k]) < 0) throw DomainError("weights must be non-negative");
    sum += alpha[k];
  });
  if (sgn(sum) == 0 && !weights) {
    for_each_member(comp, [&](int i) { alpha[static_cast<std::size_t>(i)] = 1; });
  } else if (sgn(sum) == 0) {
    throw DomainError("at least one complementary exporter needs a positive weight");
  }
  return alpha;
}

// Shares `amount` among D^N in proportion to alpha.
inline void distribute(const CEGame& game, const Payoffs& alpha,
                       const Rational& amount, Payoffs& x) {
  const Coalition comp = game.grand_complementary_exporters();
  const Rational sum = coalition_payoff(alpha, comp);
  for_each_member(comp, [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    x[k] = alpha[k] / sum * amount;
  });
}

// sum_{D^N} delta_j / sum_{R^N} delta_j: the share complementary exporters
// get under the delta-proportional rule.
inline Rational complementary_delta_share(const CEGame& game) {
  const CESituation& sit = game.situation();
  return total_adjusted_margin(sit, game.grand_complementary_exporters()) /
         total_adjusted_margin(sit, game.grand_exporters());
}

}  // namespace internal

inline Allocation egalitarian_rate(
    const CEGame& game, const Rational& rho,
    const std::optional<Payoffs>& weights = std::nullopt) {
  if (sgn(rho) < 0) throw DomainError("rho must be non-negative");
  internal::require_complementary_exporters(game);
  Allocation a = nea(game);
  a.rule = Rule::kEgalitarianRate;
  a.rho = rho;
  a.weights = internal::resolve_weights(game, weights);
  const Coalition essential = game.essential();
  for_each_member(essential, [&](int i) {
    a.payoffs[static_cast<std::size_t>(i)] -= rho;
  });
  internal::distribute(game, *a.weights, rho * coalition_size(essential),
                       a.payoffs);
  for (int i = 0; i < game.player_count(); ++i) {
    if (sgn(a[i]) < 0) {
      a.warnings.push_back("player '" + game.situation().player(i).id +
                           "' receives a negative payoff");
    }
  }
  return a;
}

// Largest flat rate for which the egalitarian rule is guaranteed to stay in
// the core.
inline Rational egalitarian_stability_bound(const CEGame& game) {
  internal::require_complementary_exporters(game);
  return min_excess_per_essential(game, nea(game).payoffs).criterion;
}

// Largest proportional rate for which the proportional rule is guaranteed to
// stay in the core.
inline Rational proportional_stability_bound(const CEGame& game) {
  internal::require_complementary_exporters(game);
  return min_excess_ratio(game, nea(game).payoffs).criterion;
}

// Maximal flat rate keeping the egalitarian rule in the core, capped where
// complementary exporters receive their delta-proportional total.
inline Rational rho_egalitarian(const CEGame& game) {
  const Rational bound = egalitarian_stability_bound(game);
  const Rational target = game.value(game.grand()) *
                          internal::complementary_delta_share(game) /
                          coalition_size(game.essential());
  return min_of(bound, target);
}

// rho in [0, 1]; rho = 1 hands all of v(N) to the complementary exporters.
inline Allocation proportional_rate(
    const CEGame& game, const Rational& rho,
    const std::optional<Payoffs>& weights = std::nullopt) {
  if (sgn(rho) < 0 || rho > 1) throw DomainError("rho must lie in [0, 1]");
  internal::require_complementary_exporters(game);
  Allocation a = nea(game);
  a.rule = Rule::kProportionalRate;
  a.rho = rho;
  a.weights = internal::resolve_weights(game, weights);
  const Rational keep = 1 - rho;
  for_each_member(game.essential(), [&](int i) {
    a.payoffs[static_cast<std::size_t>(i)] *= keep;
  });
  internal::distribute(game, *a.weights, rho * game.value(game.grand()),
                       a.payoffs);
  return a;
}

inline Rational rho_proportional(const CEGame& game) {
  const Rational bound = proportional_stability_bound(game);
  return min_of(bound, internal::complementary_delta_share(game));
}

}  // namespace cegame

#endif  // CEGAME_ALLOCATION_HPP_
