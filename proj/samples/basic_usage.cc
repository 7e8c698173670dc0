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

// Builds a four-firm export game in code and prints the main allocations.

#include <iostream>

#include "cegame/allocation.hpp"
#include "cegame/game.hpp"
#include "cegame/model.hpp"
#include "cegame/nucleolus.hpp"

int main() {
  using cegame::Rational;
  const cegame::CESituation sit(
      {{"1", 10, 1}, {"2", 15, 25}, {"3", 15, 25}, {"4", 30, 200}},
      /*price=*/6, /*mqc=*/50, /*under_penalty=*/5);

  const cegame::CEGame game = cegame::build_game(sit);
  std::cout << "v(N) = " << game.value(game.grand()) << "\n";

  const Rational rho_e = cegame::rho_egalitarian(game);
  const Rational rho_p = cegame::rho_proportional(game);
  const cegame::Allocation rules[] = {
      cegame::nea(game),
      cegame::delta_proportional(game),
      cegame::egalitarian_rate(game, rho_e),
      cegame::proportional_rate(game, rho_p),
      cegame::nucleolus(game),
  };
  for (const cegame::Allocation& a : rules) {
    std::cout << cegame::to_string(a.rule) << ":";
    for (const Rational& x : a.payoffs) {
      std::cout << " " << cegame::to_decimal_string(x, 4);
    }
    const cegame::CoreCheck core = cegame::in_core(game.tu(), a.payoffs);
    std::cout << (core.in_core ? "  (core)" : "  (not in core)") << "\n";
  }
  return 0;
}
