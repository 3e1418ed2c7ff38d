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

#ifndef BIPGAME_TESTS_SUPPORT_HPP
#define BIPGAME_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "bipgame/bipgame.hpp"

namespace bipgame::testing {

inline Rational R(const char* text) { return parse_rational(text); }

/// Network with nodes numbered 1..k on K and k+1..k+m on M.
inline BipartiteNetwork numbered(unsigned k, unsigned m) {
  std::vector<std::string> ks, ms;
  for (unsigned i = 1; i <= k; ++i) ks.push_back(std::to_string(i));
  for (unsigned j = k + 1; j <= k + m; ++j) ms.push_back(std::to_string(j));
  return BipartiteNetwork(ks, ms);
}

inline std::vector<Rational> sweep_deltas() { return {R("0"), R("1/10"), R("1/4"), R("1/3")}; }

/// Calls f(network, delta) for every |K|,|M| <= max_side and every sweep
/// delta that keeps the grand coalition convergent.
template <class F>
void for_each_convergent(unsigned max_side, F&& f) {
  for (unsigned k = 1; k <= max_side; ++k)
    for (unsigned m = 1; m <= max_side; ++m)
      for (const auto& d : sweep_deltas())
        if (convergence_check(Signature{k, m}, d).converges) f(BipartiteNetwork::from_sizes(k, m), d);
}

}  // namespace bipgame::testing

#endif  // BIPGAME_TESTS_SUPPORT_HPP
