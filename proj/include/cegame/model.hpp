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

// Cooperative export situation: players with capacities and fixed export
// costs facing a common export price, a minimum quantity commitment (MQC) and
// per-unit penalties for under- and over-supplying the commitment.

#ifndef CEGAME_MODEL_HPP_
#define CEGAME_MODEL_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cegame/coalition_mask.hpp"
#include "cegame/error.hpp"
#include "cegame/rational.hpp"

namespace cegame {

struct Player {
  std::string id;
  Rational capacity;
  Rational fixed_cost;
};

// Immutable after construction. The constructor validates signs and ids;
// the SME restriction (capacity < mqc) is only enforced by the cooperative
// solvers, so single-firm strategies can be evaluated for any firm.
class CESituation {
 public:
  CESituation(std::vector<Player> players, Rational price, Rational mqc,
              Rational under_penalty, Rational over_penalty = Rational(0))
      : players_(std::move(players)),
        price_(std::move(price)),
        mqc_(std::move(mqc)),
        under_penalty_(std::move(under_penalty)),
        over_penalty_(std::move(over_penalty)) {
    if (players_.empty()) throw DomainError("situation has no players");
    if (players_.size() > static_cast<std::size_t>(kMaxPlayers)) {
      throw DomainError("at most 64 players are supported");
    }
    std::set<std::string> seen;
    for (const Player& p : players_) {
      if (!seen.insert(p.id).second) {
        throw DomainError("duplicate player id '" + p.id + "'");
      }
      if (sgn(p.capacity) <= 0) {
        throw DomainError("capacity of player '" + p.id + "' must be > 0");
      }
      if (sgn(p.fixed_cost) < 0) {
        throw DomainError("fixed cost of player '" + p.id + "' must be >= 0");
      }
    }
    if (sgn(price_) < 0) throw DomainError("price must be >= 0");
    if (sgn(mqc_) < 0) throw DomainError("mqc must be >= 0");
    if (sgn(under_penalty_) < 0) throw DomainError("under_penalty must be >= 0");
    if (sgn(over_penalty_) < 0) throw DomainError("over_penalty must be >= 0");
    if (over_penalty_ < price_) {
      warnings_.push_back(
          "over_penalty < price: over-supply is not modelled by the solvers");
    }
  }

  int player_count() const { return static_cast<int>(players_.size()); }
  const std::vector<Player>& players() const { return players_; }
  const Player& player(int i) const { return players_[static_cast<std::size_t>(i)]; }
  const Rational& capacity(int i) const { return player(i).capacity; }
  const Rational& fixed_cost(int i) const { return player(i).fixed_cost; }
  const Rational& price() const { return price_; }
  const Rational& mqc() const { return mqc_; }
  const Rational& under_penalty() const { return under_penalty_; }
  const Rational& over_penalty() const { return over_penalty_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  Coalition grand() const { return grand_coalition(player_count()); }

  // Full capacity margin Q_i * p - c_i.
  Rational full_margin(int i) const {
    return capacity(i) * price_ - fixed_cost(i);
  }

  // Under-supply adjusted margin Q_i * (p + r^u) - c_i.
  Rational adjusted_margin(int i) const {
    return capacity(i) * (price_ + under_penalty_) - fixed_cost(i);
  }

  bool is_sme(int i) const { return capacity(i) < mqc_; }

  bool all_sme() const {
    for (int i = 0; i < player_count(); ++i) {
      if (!is_sme(i)) return false;
    }
    return true;
  }

  // Players in `t`, renumbered in increasing order of their original index.
  CESituation restrict_to(Coalition t) const {
    std::vector<Player> kept;
    for_each_member(t & grand(), [&](int i) { kept.push_back(player(i)); });
    return CESituation(std::move(kept), price_, mqc_, under_penalty_,
                       over_penalty_);
  }

 private:
  std::vector<Player> players_;
  Rational price_;
  Rational mqc_;
  Rational under_penalty_;
  Rational over_penalty_;
  std::vector<std::string> warnings_;
};

enum class PlayerClass {
  kEssential,      // SME with full margin >= 0.
  kComplementary,  // SME with full margin < 0 <= adjusted margin.
  kNonPotential,   // SME with adjusted margin < 0.
  kAlphaExporter,  // capacity >= mqc and full margin >= 0.
  kDomestic,       // capacity >= mqc and full margin < 0.
};

inline const char* to_string(PlayerClass c) {
  switch (c) {
    case PlayerClass::kEssential: return "essential";
    case PlayerClass::kComplementary: return "complementary";
    case PlayerClass::kNonPotential: return "non-potential";
    case PlayerClass::kAlphaExporter: return "alpha-exporter";
    case PlayerClass::kDomestic: return "domestic";
  }
  return "?";
}

struct PlayerProfile {
  Rational delta;    // full capacity margin
  Rational delta_u;  // under-supply adjusted margin
  PlayerClass player_class;

  bool is_potential() const {
    return player_class == PlayerClass::kEssential ||
           player_class == PlayerClass::kComplementary;
  }
};

inline PlayerProfile profile(const CESituation& sit, int i) {
  PlayerProfile p{sit.full_margin(i), sit.adjusted_margin(i),
                  PlayerClass::kNonPotential};
  if (sit.is_sme(i)) {
    if (sgn(p.delta) >= 0) {
      p.player_class = PlayerClass::kEssential;
    } else if (sgn(p.delta_u) >= 0) {
      p.player_class = PlayerClass::kComplementary;
    }
  } else {
    p.player_class = sgn(p.delta) >= 0 ? PlayerClass::kAlphaExporter
                                       : PlayerClass::kDomestic;
  }
  return p;
}

inline std::vector<PlayerProfile> profiles(const CESituation& sit) {
  std::vector<PlayerProfile> out;
  out.reserve(static_cast<std::size_t>(sit.player_count()));
  for (int i = 0; i < sit.player_count(); ++i) out.push_back(profile(sit, i));
  return out;
}

// Essential (S^E), potential (S^P) and complementary (S^C) members of `s`.
// Only SMEs are ever counted.
inline Coalition essential_members(const CESituation& sit, Coalition s) {
  Coalition out = 0;
  for_each_member(s, [&](int i) {
    if (sit.is_sme(i) && sgn(sit.full_margin(i)) >= 0) out |= singleton(i);
  });
  return out;
}

inline Coalition potential_members(const CESituation& sit, Coalition s) {
  Coalition out = 0;
  for_each_member(s, [&](int i) {
    if (sit.is_sme(i) && sgn(sit.adjusted_margin(i)) >= 0) out |= singleton(i);
  });
  return out;
}

inline Coalition complementary_members(const CESituation& sit, Coalition s) {
  return potential_members(sit, s) & ~essential_members(sit, s);
}

inline Rational total_capacity(const CESituation& sit, Coalition s) {
  Rational sum = 0;
  for_each_member(s, [&](int i) { sum += sit.capacity(i); });
  return sum;
}

inline Rational total_full_margin(const CESituation& sit, Coalition s) {
  Rational sum = 0;
  for_each_member(s, [&](int i) { sum += sit.full_margin(i); });
  return sum;
}

inline Rational total_adjusted_margin(const CESituation& sit, Coalition s) {
  Rational sum = 0;
  for_each_member(s, [&](int i) { sum += sit.adjusted_margin(i); });
  return sum;
}

// Optimal stand-alone decision of one firm: export quantity, committed
// quantity and resulting profit.
struct IndividualStrategy {
  Rational quantity;
  Rational commitment;
  Rational profit;

  bool operator==(const IndividualStrategy&) const = default;
};

// Without a commitment requirement a firm exports its full capacity iff its
// full margin is non-negative.
inline IndividualStrategy individual_strategy_no_mqc(const CESituation& sit,
                                                     int i) {
  const Rational delta = sit.full_margin(i);
  if (sgn(delta) >= 0) return {sit.capacity(i), sit.capacity(i), delta};
  return {0, 0, 0};
}

// With a commitment floor: a large firm (Q_i >= mqc) commits its capacity; a
// small one commits exactly the floor and pays the under-supply penalty on the
// shortfall. A zero-profit export is still reported as exporting.
inline IndividualStrategy individual_strategy_mqc(const CESituation& sit,
                                                  int i) {
  const Rational& q = sit.capacity(i);
  if (q >= sit.mqc()) {
    const Rational delta = sit.full_margin(i);
    if (sgn(delta) >= 0) return {q, q, delta};
    return {0, 0, 0};
  }
  Rational profit = sit.adjusted_margin(i) - sit.mqc() * sit.under_penalty();
  if (sgn(profit) >= 0) return {q, sit.mqc(), profit};
  return {0, 0, 0};
}

}  // namespace cegame

#endif  // CEGAME_MODEL_HPP_
