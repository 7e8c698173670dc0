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

// Nucleolus by successive linear programs.
//
// Round k maximises the smallest excess eps over the imputation set, with
// the excesses of coalitions fixed in earlier rounds held at their values.
// Coalitions whose excess equals eps_k in every optimal solution are fixed
// at eps_k. Two exact tightness tests are available:
//
//   kDualPrices      a nonzero shadow price of the coalition's row at the
//                    optimal basis (strict complementary slackness). The
//                    prices of the eps rows sum to -1, so every round fixes
//                    at least one coalition. One LP per round.
//   kTightnessProbe  maximise the coalition's excess with eps held at eps_k;
//                    tight iff the maximum is eps_k. One LP per candidate.
//
// Coalitions whose characteristic vector is spanned by the fixed ones (and
// N) are dropped, so each round raises the rank and at most n - 1 rounds
// are needed. Once the fixed vectors span R^n the payoff is unique.

#ifndef CEGAME_NUCLEOLUS_HPP_
#define CEGAME_NUCLEOLUS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cegame/allocation.hpp"
#include "cegame/coalition_mask.hpp"
#include "cegame/error.hpp"
#include "cegame/game.hpp"
#include "cegame/lp.hpp"
#include "cegame/rational.hpp"

namespace cegame {

namespace internal {

// Incremental row-echelon basis of coalition indicator vectors.
class IndicatorSpan {
 public:
  explicit IndicatorSpan(int n) : n_(n) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  bool spans(Coalition s) const {
    std::vector<Rational> v = indicator(s);
    reduce(v);
    for (const Rational& x : v) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }

  void add(Coalition s) {
    std::vector<Rational> v = indicator(s);
    reduce(v);
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (sgn(v[p]) != 0) {
        const Rational lead = v[p];
        for (Rational& x : v) x /= lead;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return;
      }
    }
  }

 private:
  std::vector<Rational> indicator(Coalition s) const {
    std::vector<Rational> v(static_cast<std::size_t>(n_), Rational(0));
    for_each_member(s, [&](int i) { v[static_cast<std::size_t>(i)] = 1; });
    return v;
  }

  void reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational factor = v[pivots_[r]];
      if (sgn(factor) == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * rows_[r][k];
    }
  }

  int n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// v(S) - sum_{i in S} v({i}): the value of S in the shifted variables y.
inline Rational shifted_value(const TuGame& game, Coalition s) {
  Rational r = game(s);
  for_each_member(s, [&](int i) { r -= game(singleton(i)); });
  return r;
}

struct FixedExcess {
  Coalition coalition;
  Rational excess;
};

// Variables: y_i = x_i - v({i}) >= 0 for each player, then eps (free) when
// `eps_value` is empty. With a fixed eps the column is dropped.
inline LinearProgram round_program(const TuGame& game,
                                   const std::vector<Coalition>& active,
                                   const std::vector<FixedExcess>& fixed,
                                   const std::optional<Rational>& eps_value) {
  const int n = game.player_count();
  const std::size_t width = static_cast<std::size_t>(n) + (eps_value ? 0 : 1);
  auto row_for = [&](Coalition s) {
    std::vector<Rational> coeff(width, Rational(0));
    for_each_member(s, [&](int i) { coeff[static_cast<std::size_t>(i)] = 1; });
    return coeff;
  };
  LinearProgram lp;
  lp.objective.assign(width, Rational(0));
  if (!eps_value) {
    lp.objective[width - 1] = 1;
    lp.free_variables.assign(width, false);
    lp.free_variables[width - 1] = true;
  }
  lp.constraints.push_back({row_for(game.grand()), Sense::kEqual,
                            shifted_value(game, game.grand())});
  for (const FixedExcess& f : fixed) {
    lp.constraints.push_back({row_for(f.coalition), Sense::kEqual,
                              shifted_value(game, f.coalition) + f.excess});
  }
  for (Coalition s : active) {
    std::vector<Rational> coeff = row_for(s);
    Rational rhs = shifted_value(game, s);
    if (eps_value) {
      rhs += *eps_value;
    } else {
      coeff[width - 1] = -1;
    }
    lp.constraints.push_back({std::move(coeff), Sense::kGreaterEqual, std::move(rhs)});
  }
  return lp;
}

}  // namespace internal

enum class NucleolusMethod { kDualPrices, kTightnessProbe };

inline Payoffs nucleolus(const TuGame& game,
                         NucleolusMethod method = NucleolusMethod::kDualPrices) {
  const int n = game.player_count();
  const Coalition grand = game.grand();
  Rational singleton_sum = 0;
  for (int i = 0; i < n; ++i) singleton_sum += game(singleton(i));
  if (game(grand) < singleton_sum) {
    throw DomainError("imputation set is empty");
  }
  Payoffs x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = game(singleton(i));
  if (n == 1) {
    x[0] = game(grand);
    return x;
  }

  std::vector<Coalition> active;
  for (Coalition s = 1; s < grand; ++s) active.push_back(s);
  std::vector<internal::FixedExcess> fixed;
  internal::IndicatorSpan span(n);
  span.add(grand);

  while (span.rank() < n) {
    const LpResult round =
        lp_solve(internal::round_program(game, active, fixed, std::nullopt));
    if (round.status != LpStatus::kOptimal) {
      throw InvariantError("nucleolus round LP is not optimal");
    }
    const Rational eps = round.point.back();
    Payoffs y(round.point.begin(), round.point.end() - 1);

    // Rows: N, the fixed coalitions, then one per active coalition.
    const std::size_t first_active_row = 1 + fixed.size();
    const bool use_duals =
        method == NucleolusMethod::kDualPrices && !round.duals.empty();
    std::vector<Coalition> newly_fixed;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const Coalition s = active[k];
      const Rational target = internal::shifted_value(game, s) + eps;
      if (coalition_payoff(y, s) != target) {
        continue;  // slack at this optimum, hence not tight at all optima
      }
      if (use_duals) {
        if (sgn(round.duals[first_active_row + k]) != 0) newly_fixed.push_back(s);
        continue;
      }
      LinearProgram probe = internal::round_program(game, active, fixed, eps);
      probe.objective.assign(static_cast<std::size_t>(n), Rational(0));
      for_each_member(s, [&](int i) { probe.objective[static_cast<std::size_t>(i)] = 1; });
      const LpResult best = lp_solve(probe);
      if (best.status != LpStatus::kOptimal) {
        throw InvariantError("nucleolus tightness LP is not optimal");
      }
      if (best.value == target) newly_fixed.push_back(s);
    }
    if (newly_fixed.empty()) {
      throw InvariantError("nucleolus round fixed no coalition");
    }
    for (Coalition s : newly_fixed) {
      if (span.spans(s)) continue;
      fixed.push_back({s, eps});
      span.add(s);
    }
    std::vector<Coalition> still_active;
    for (Coalition s : active) {
      if (!span.spans(s)) still_active.push_back(s);
    }
    active = std::move(still_active);
    if (span.rank() == n) {
      for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
      }
    }
  }
  return x;
}

inline Allocation nucleolus(const CEGame& game,
                            NucleolusMethod method = NucleolusMethod::kDualPrices) {
  Allocation a;
  a.rule = Rule::kNucleolus;
  a.payoffs = nucleolus(game.tu(), method);
  return a;
}

}  // namespace cegame

#endif  // CEGAME_NUCLEOLUS_HPP_
