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

// Finite-horizon values approaching their limit, and the point where the
// limit stops existing.

#include <iostream>

#include "bipgame/bipgame.hpp"

int main() {
  using namespace bipgame;
  const auto net = BipartiteNetwork::from_sizes(1, 2);
  const auto grand = grand_coalition(net);

  for (const char* text : {"1/2", "3/4"}) {
    const Rational delta = parse_rational(text);
    const auto verdict = convergence_check(net, delta);
    std::cout << "delta = " << text << ", margin " << to_exact_string(verdict.margin) << "\n";
    for (unsigned t : {1u, 2u, 4u, 8u, 16u, 32u})
      std::cout << "  v^" << t << "(N) = " << to_decimal_string(fan_value(grand, {delta, t})) << "\n";
    try {
      const Rational limit = an_value(grand, delta);
      std::cout << "  limit = " << to_exact_string(limit) << "\n";
    } catch (const DomainError& e) {
      std::cout << "  no limit: " << e.what() << "\n";
    }
  }
}
