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

// Values and allocations for a small hub-and-spoke team.

#include <iostream>

#include "bipgame/bipgame.hpp"

int main() {
  using namespace bipgame;
  const BipartiteNetwork team({"lead"}, {"ana", "ben", "cy"});
  const Rational delta = parse_rational("1/3");

  std::cout << "convergent: " << std::boolalpha << convergence_check(team, delta).converges << "\n";
  std::cout << "v(N) = " << to_exact_string(an_value(grand_coalition(team), delta)) << "\n";
  std::cout << "v({lead, ana}) = " << to_exact_string(an_value(induce(team, {"lead", "ana"}), delta)) << "\n\n";

  const Allocation rules[] = {productivity_allocation(team, delta), shapley_closed(team, delta), lrp(team, delta)};
  for (const auto& a : rules) {
    std::cout << to_string(a.rule()) << ":";
    for (NodeIndex i = 0; i < team.size(); ++i)
      std::cout << " " << team.label(i) << "=" << to_exact_string(a[i]);
    std::cout << "  (total " << to_exact_string(a.total()) << ")\n";
  }
}
