// Copyright 2026 The bipgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Auditing a hand-written payoff split against the core of the limit game.

#include <iostream>

#include "bipgame/bipgame.hpp"

int main() {
  using namespace bipgame;
  const auto net = BipartiteNetwork::from_sizes(2, 3);
  const Rational delta = parse_rational("1/4");
  const auto game = an_table(net, delta);
  const Rational grand = game(game.grand());
  std::cout << "v(N) = " << to_exact_string(grand) << "\n";

  // Everything to the K side: efficient, but the M side alone is shortchanged.
  const Rational share = grand / 2;
  const Allocation greedy(net, {share, share, 0, 0, 0}, Rule::custom, delta);
  const auto report = core_check(game, greedy);
  std::cout << "in core: " << std::boolalpha << report.in_core << "\n";
  for (const auto& v : report.violations)
    std::cout << "  coalition " << to_string(v.signature) << " short by " << to_exact_string(v.shortfall) << "\n";

  const auto fair = lrp(net, delta);
  std::cout << "lrp in core: " << core_check(game, fair).in_core << "\n";
  const auto axioms = axiom_check(net, delta, fair);
  std::cout << "lrp satisfies EF, EB and LBP: " << axioms.all() << "\n";
}
