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

// Optimal joint export strategy of a coalition of SMEs.
//
// At optimality every exporter ships its full capacity and the coalition
// commits max{mqc, total exported}, so a strategy is determined by its
// exporter set R. Essential members always export when anyone does; when
// their capacity alone falls short of the MQC the coalition may add a subset
// D of complementary members, chosen to maximise
//
//   G(D) = sum_{i in D} Delta_i + min{M, sum_{i in D} Q_i} * r^u,
//   M    = mqc - sum_{i in S^E} Q_i.
//
// This is NP-hard in general. Splitting on whether D over-fills M gives two
// knapsack problems: a 0/1 packing problem maximising sum delta_i under
// capacity M, and a covering problem minimising sum |Delta_i| subject to
// covering M. Both are solved by depth-first branch and bound with LP
// relaxation bounds.

#ifndef CEGAME_COALITION_HPP_
#define CEGAME_COALITION_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cegame/coalition_mask.hpp"
#include "cegame/error.hpp"
#include "cegame/model.hpp"
#include "cegame/rational.hpp"

namespace cegame {

struct CoalitionSolution {
  Coalition members = 0;
  Coalition exporters = 0;  // R^S; empty when the coalition does not export
  Rational commitment;      // m^S; 0 when not exporting
  Rational value;           // v(S)
  Rational under_supply;    // (mqc - sum_{R^S} Q_i)^+ when exporting

  bool exports() const { return exporters != 0; }
  bool operator==(const CoalitionSolution&) const = default;
};

// Profit of exporting with exactly the players in `r` at full capacity and
// the cheapest admissible commitment. Zero for the empty set.
inline Rational exporter_set_profit(const CESituation& sit, Coalition r) {
  if (r == 0) return 0;
  return total_full_margin(sit, r) -
         positive_part(sit.mqc() - total_capacity(sit, r)) *
             sit.under_penalty();
}

inline CoalitionSolution make_solution(const CESituation& sit, Coalition s,
                                       Coalition r) {
  CoalitionSolution sol;
  sol.members = s;
  sol.exporters = r;
  if (r != 0) {
    const Rational q = total_capacity(sit, r);
    sol.commitment = max_of(sit.mqc(), q);
    sol.under_supply = positive_part(sit.mqc() - q);
    sol.value = total_full_margin(sit, r) - sol.under_supply * sit.under_penalty();
  }
  return sol;
}

struct ComplementaryChoice {
  Coalition players = 0;  // D^S
  Rational contribution;  // G^S(D^S)
};

enum class ComplementarySearch { kAuto, kExhaustive, kBranchAndBound };

// Below this many complementary members plain enumeration is used.
inline constexpr int kExhaustiveComplementaryLimit = 12;

// Contribution G^S(D) of complementary exporters D joining S^E.
inline Rational g_contribution(const CESituation& sit, Coalition s,
                               Coalition d) {
  if (!is_subset(d, complementary_members(sit, s))) {
    throw DomainError("set " + coalition_label(d) +
                      " is not a subset of the complementary members of " +
                      coalition_label(s));
  }
  if (d == 0) return 0;
  const Rational gap =
      sit.mqc() - total_capacity(sit, essential_members(sit, s));
  return total_full_margin(sit, d) +
         min_of(gap, total_capacity(sit, d)) * sit.under_penalty();
}

namespace internal {

// Incumbent ordering: higher contribution, then larger exported capacity,
// then the numerically smallest mask.
struct Incumbent {
  Coalition players = 0;
  Rational value = 0;
  Rational quantity = 0;

  bool improves_on(const Rational& v, const Rational& q, Coalition mask) const;
  void offer(Coalition mask, const Rational& v, const Rational& q) {
    if (improves_on(v, q, mask)) {
      players = mask;
      value = v;
      quantity = q;
    }
  }
};

inline bool Incumbent::improves_on(const Rational& v, const Rational& q,
                                   Coalition mask) const {
  if (v != value) return v > value;
  if (q != quantity) return q > quantity;
  return mask < players;
}

struct Item {
  int player;
  Rational quantity;  // Q_i > 0
  Rational margin;    // Delta_i < 0
  Rational adjusted;  // delta_i >= 0
};

class ComplementarySearcher {
 public:
  ComplementarySearcher(std::vector<Item> items, Rational gap, Rational penalty)
      : items_(std::move(items)), gap_(std::move(gap)), penalty_(std::move(penalty)) {
    // delta_i / Q_i and Delta_i / Q_i differ by the constant r^u, so one order
    // serves both regimes: best packing density first, cheapest cover first.
    std::stable_sort(items_.begin(), items_.end(),
                     [](const Item& a, const Item& b) {
                       return a.margin / a.quantity > b.margin / b.quantity;
                     });
    suffix_quantity_.assign(items_.size() + 1, Rational(0));
    for (std::size_t k = items_.size(); k-- > 0;) {
      suffix_quantity_[k] = suffix_quantity_[k + 1] + items_[k].quantity;
    }
  }

  Incumbent run() {
    best_ = Incumbent{};  // D = empty, G = 0
    pack(0, 0, 0, 0);
    cover(0, 0, 0, 0);
    return best_;
  }

 private:
  // Regime D fits in the gap: G(D) = sum delta_i.
  void pack(std::size_t k, const Rational& used, const Rational& value,
            Coalition mask) {
    best_.offer(mask, value, used);
    if (k == items_.size()) return;
    if (packing_bound(k, gap_ - used, value) < best_.value) return;
    const Item& item = items_[k];
    const Rational with_item = used + item.quantity;
    if (with_item <= gap_) {
      pack(k + 1, with_item, value + item.adjusted,
           mask | singleton(item.player));
    }
    pack(k + 1, used, value, mask);
  }

  Rational packing_bound(std::size_t k, Rational room,
                         const Rational& value) const {
    Rational bound = value;
    for (std::size_t j = k; j < items_.size() && sgn(room) > 0; ++j) {
      const Item& item = items_[j];
      if (item.quantity <= room) {
        bound += item.adjusted;
        room -= item.quantity;
      } else {
        bound += item.adjusted * room / item.quantity;
        room = 0;
      }
    }
    return bound;
  }

  // Regime D covers the gap: G(D) = sum Delta_i + M r^u. Once covered, any
  // further item strictly lowers G, so covered nodes are leaves.
  void cover(std::size_t k, const Rational& used, const Rational& margin,
             Coalition mask) {
    if (used >= gap_) {
      best_.offer(mask, margin + gap_ * penalty_, used);
      return;
    }
    if (k == items_.size() || used + suffix_quantity_[k] < gap_) return;
    if (covering_bound(k, gap_ - used, margin) < best_.value) return;
    const Item& item = items_[k];
    cover(k + 1, used + item.quantity, margin + item.margin,
          mask | singleton(item.player));
    cover(k + 1, used, margin, mask);
  }

  Rational covering_bound(std::size_t k, Rational missing,
                          const Rational& margin) const {
    Rational bound = margin + gap_ * penalty_;
    for (std::size_t j = k; j < items_.size() && sgn(missing) > 0; ++j) {
      const Item& item = items_[j];
      if (item.quantity <= missing) {
        bound += item.margin;
        missing -= item.quantity;
      } else {
        bound += item.margin * missing / item.quantity;
        missing = 0;
      }
    }
    return bound;
  }

  std::vector<Item> items_;
  Rational gap_;
  Rational penalty_;
  std::vector<Rational> suffix_quantity_;
  Incumbent best_;
};

}  // namespace internal

// A maximiser D^S of G^S over subsets of the complementary members of `s`.
// Requires sum_{S^E} Q_i < mqc. Ties prefer the larger exported capacity, then
// the numerically smallest mask.
inline ComplementaryChoice optimal_complementary(
    const CESituation& sit, Coalition s,
    ComplementarySearch method = ComplementarySearch::kAuto) {
  const Coalition comp = complementary_members(sit, s);
  const Rational gap =
      sit.mqc() - total_capacity(sit, essential_members(sit, s));
  if (sgn(gap) <= 0) {
    throw DomainError("essential members of " + coalition_label(s) +
                      " already cover the MQC");
  }
  if (comp == 0) return {};
  if (method == ComplementarySearch::kAuto) {
    method = coalition_size(comp) <= kExhaustiveComplementaryLimit
                 ? ComplementarySearch::kExhaustive
                 : ComplementarySearch::kBranchAndBound;
  }
  if (method == ComplementarySearch::kExhaustive) {
    if (coalition_size(comp) > 30) {
      throw DomainError("too many complementary players for enumeration");
    }
    internal::Incumbent best;
    for_each_subset(comp, [&](Coalition d) {
      const Rational q = total_capacity(sit, d);
      const Rational g =
          total_full_margin(sit, d) + min_of(gap, q) * sit.under_penalty();
      best.offer(d, g, q);
    });
    return {best.players, best.value};
  }
  std::vector<internal::Item> items;
  for_each_member(comp, [&](int i) {
    items.push_back({i, sit.capacity(i), sit.full_margin(i),
                     sit.adjusted_margin(i)});
  });
  internal::ComplementarySearcher searcher(std::move(items), gap,
                                           sit.under_penalty());
  const internal::Incumbent best = searcher.run();
  return {best.players, best.value};
}

inline void require_smes(const CESituation& sit, Coalition s) {
  for_each_member(s, [&](int i) {
    if (!sit.is_sme(i)) {
      throw DomainError("player '" + sit.player(i).id +
                        "' has capacity >= mqc and is not an SME");
    }
  });
}

// Optimal exporter set, commitment and value v(S). A coalition whose best
// export plan earns exactly zero is reported as not exporting.
inline CoalitionSolution solve_coalition(
    const CESituation& sit, Coalition s,
    ComplementarySearch method = ComplementarySearch::kAuto) {
  if (!is_subset(s, sit.grand())) {
    throw DomainError("coalition refers to unknown players");
  }
  require_smes(sit, s);
  CoalitionSolution none;
  none.members = s;
  if (s == 0) return none;

  const Coalition essential = essential_members(sit, s);
  const Rational essential_quantity = total_capacity(sit, essential);
  if (essential_quantity >= sit.mqc()) {
    const Rational value = total_full_margin(sit, essential);
    return sgn(value) > 0 ? make_solution(sit, s, essential) : none;
  }
  const ComplementaryChoice choice = optimal_complementary(sit, s, method);
  // Profit of S^E alone, penalised on the full gap (also when S^E is empty).
  const Rational base = total_full_margin(sit, essential) -
                        (sit.mqc() - essential_quantity) * sit.under_penalty();
  const Rational value = base + choice.contribution;
  if (sgn(value) <= 0) return none;
  // The solution's own value is recomputed from R^S; it equals `value`.
  return make_solution(sit, s, essential | choice.players);
}

inline constexpr int kBruteForceLimit = 20;

// Independent check of solve_coalition: enumerates every R within the
// potential members and keeps the most profitable one (same tie order).
inline CoalitionSolution brute_force_coalition(const CESituation& sit,
                                               Coalition s) {
  if (!is_subset(s, sit.grand())) {
    throw DomainError("coalition refers to unknown players");
  }
  require_smes(sit, s);
  const Coalition potential = potential_members(sit, s);
  if (coalition_size(potential) > kBruteForceLimit) {
    throw DomainError("brute force limited to 20 potential players");
  }
  Coalition best = 0;
  Rational best_value = 0;
  Rational best_quantity = 0;
  for_each_subset(potential, [&](Coalition r) {
    if (r == 0) return;
    const Rational q = total_capacity(sit, r);
    const Rational value = total_full_margin(sit, r) -
                           positive_part(sit.mqc() - q) * sit.under_penalty();
    if (sgn(value) <= 0) return;
    if (value > best_value || (value == best_value && q > best_quantity) ||
        (value == best_value && q == best_quantity && r < best)) {
      best = r;
      best_value = value;
      best_quantity = q;
    }
  });
  return make_solution(sit, s, best);
}

}  // namespace cegame

#endif  // CEGAME_COALITION_HPP_
