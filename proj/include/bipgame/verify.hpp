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

// Exhaustive checks of game and allocation properties: core membership,
// convexity, superadditivity, monotonicity and the EF / EB / LBP axioms.
// All comparisons are exact.

#ifndef BIPGAME_VERIFY_HPP
#define BIPGAME_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipgame/allocations.hpp"
#include "bipgame/an.hpp"
#include "bipgame/errors.hpp"
#include "bipgame/game_table.hpp"
#include "bipgame/network.hpp"
#include "bipgame/rational.hpp"

namespace bipgame {

struct CoreViolation {
  Signature signature;
  Rational shortfall;  // v(S) - sum_{i in S} x_i, always positive
  Rational value;
  Rational payoff;
  std::optional<std::uint64_t> members;  // set only by the subset path
};

struct CoreReport {
  bool in_core = false;
  bool efficient = false;
  Rational allocated;
  Rational grand_value;
  std::vector<CoreViolation> violations;  // worst shortfall first
};

inline constexpr unsigned kSignatureCoreLimit = 24;
inline constexpr unsigned kSubsetCoreLimit = 16;

namespace detail {

inline void sort_violations(std::vector<CoreViolation>& v) {
  std::stable_sort(v.begin(), v.end(), [](const CoreViolation& a, const CoreViolation& b) {
    if (a.shortfall != b.shortfall) return a.shortfall > b.shortfall;
    if (a.signature != b.signature) return a.signature < b.signature;
    return a.members.value_or(0) < b.members.value_or(0);
  });
}

inline CoreReport core_frame(const GameTable& game, const Allocation& allocation) {
  if (!game.matches(allocation.network()))
    throw InputError("allocation network " + to_string(allocation.network().signature()) +
                     " does not match game " + to_string(game.grand()));
  CoreReport r;
  r.allocated = allocation.total();
  r.grand_value = game(game.grand());
  r.efficient = r.allocated == r.grand_value;
  return r;
}

}  // namespace detail

/// Core check over all 2^n - 2 proper nonempty coalitions. Required for
/// allocations that are not side-symmetric.
inline CoreReport core_check_subsets(const GameTable& game, const Allocation& allocation) {
  CoreReport r = detail::core_frame(game, allocation);
  const unsigned n = game.players();
  if (n > kSubsetCoreLimit)
    throw CapacityError("subset core check supports at most " + std::to_string(kSubsetCoreLimit) + " nodes, got " +
                        std::to_string(n));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Signature s;
    Rational payoff = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      (i < game.k_size() ? s.k : s.m)++;
      payoff += allocation[i];
    }
    const Rational& value = game(s);
    if (payoff < value) r.violations.push_back({s, value - payoff, value, payoff, mask});
  }
  detail::sort_violations(r.violations);
  r.in_core = r.efficient && r.violations.empty();
  return r;
}

/// Core check. Side-symmetric allocations are checked once per signature,
/// since every coalition with the same signature then receives the same
/// payoff; anything else falls back to the subset path.
inline CoreReport core_check(const GameTable& game, const Allocation& allocation) {
  if (!allocation.side_symmetric()) return core_check_subsets(game, allocation);
  CoreReport r = detail::core_frame(game, allocation);
  if (game.players() > kSignatureCoreLimit)
    throw CapacityError("core check supports at most " + std::to_string(kSignatureCoreLimit) + " nodes, got " +
                        std::to_string(game.players()));
  const Rational& xk = allocation.side_payoff(Side::K);
  const Rational& xm = allocation.side_payoff(Side::M);
  for (unsigned k = 0; k <= game.k_size(); ++k) {
    for (unsigned m = 0; m <= game.m_size(); ++m) {
      const Signature s{k, m};
      if (s.size() == 0 || s == game.grand()) continue;
      const Rational payoff = xk * k + xm * m;
      const Rational& value = game(s);
      if (payoff < value) r.violations.push_back({s, value - payoff, value, payoff, std::nullopt});
    }
  }
  detail::sort_violations(r.violations);
  r.in_core = r.efficient && r.violations.empty();
  return r;
}

/// A player on `side` gains less joining the larger coalition than the smaller.
struct ConvexityViolation {
  Side side;
  Signature smaller;
  Signature larger;
  Rational smaller_marginal;
  Rational larger_marginal;
};

struct ConvexityReport {
  bool convex = true;
  std::optional<ConvexityViolation> first_violation;
};

/// Checks v(S) - v(S\{i}) <= v(T) - v(T\{i}) for every pair of signatures
/// S <= T (componentwise) that both contain a player on the given side.
/// Scanning order is K then M, then lexicographic in S and T.
inline ConvexityReport convexity_check(const GameTable& game) {
  ConvexityReport report;
  for (Side side : {Side::K, Side::M}) {
    std::vector<std::pair<Signature, Rational>> marginals;
    for (unsigned k = 0; k <= game.k_size(); ++k)
      for (unsigned m = 0; m <= game.m_size(); ++m) {
        const Signature s{k, m};
        if (s.count(side) == 0) continue;
        marginals.emplace_back(s, game(s) - game(s.minus(side)));
      }
    for (const auto& [small, small_gain] : marginals)
      for (const auto& [large, large_gain] : marginals)
        if (small.within(large) && small != large && large_gain < small_gain) {
          report.convex = false;
          report.first_violation = ConvexityViolation{side, small, large, small_gain, large_gain};
          return report;
        }
  }
  return report;
}

struct PairReport {
  bool holds = true;
  std::optional<std::pair<Signature, Signature>> witness;
};

/// v(S u T) >= v(S) + v(T) for disjoint S, T. At signature level S and T are
/// disjoint realisable iff their side counts fit inside the network.
inline PairReport superadditivity_check(const GameTable& game) {
  for (unsigned k1 = 0; k1 <= game.k_size(); ++k1)
    for (unsigned m1 = 0; m1 <= game.m_size(); ++m1)
      for (unsigned k2 = 0; k1 + k2 <= game.k_size(); ++k2)
        for (unsigned m2 = 0; m1 + m2 <= game.m_size(); ++m2) {
          const Signature a{k1, m1}, b{k2, m2}, u{k1 + k2, m1 + m2};
          if (game(u) < game(a) + game(b)) return {false, std::pair{a, b}};
        }
  return {};
}

/// v(S) <= v(T) whenever S is a subset of T.
inline PairReport monotonicity_check(const GameTable& game) {
  for (unsigned k = 0; k <= game.k_size(); ++k)
    for (unsigned m = 0; m <= game.m_size(); ++m) {
      const Signature s{k, m};
      for (Side side : {Side::K, Side::M})
        if (s.count(side) > 0 && game(s) < game(s.minus(side))) return {false, std::pair{s.minus(side), s}};
    }
  return {};
}

struct AxiomWitness {
  std::string equation;
  Rational lhs;
  Rational rhs;
};

struct AxiomReport {
  bool ef = false;
  bool eb = false;
  bool lbp = false;
  std::optional<AxiomWitness> ef_witness;
  std::optional<AxiomWitness> eb_witness;
  std::optional<AxiomWitness> lbp_witness;
  // Both sides of the balance equation, kept even when it holds.
  Rational lbp_k_side;
  Rational lbp_m_side;

  bool all() const { return ef && eb && lbp; }
};

/// Evaluates EF (sum of payoffs equals v_delta(N)), EB (equal payoffs within
/// each side) and LBP (1/|M| sum_K (x_i - 1) = 1/|K| sum_M (x_j - 1)).
inline AxiomReport axiom_check(const BipartiteNetwork& network, const Rational& delta,
                               const Allocation& allocation) {
  if (!(allocation.network().signature() == network.signature()))
    throw InputError("allocation does not match network " + to_string(network.signature()));
  AxiomReport r;

  const Rational grand = an_value(network.signature(), delta);
  const Rational total = allocation.total();
  r.ef = total == grand;
  if (!r.ef) r.ef_witness = AxiomWitness{"sum x_i = v(N)", total, grand};

  r.eb = true;
  for (NodeIndex i = 0; i < network.size() && r.eb; ++i)
    for (NodeIndex j = i + 1; j < network.size(); ++j)
      if (network.side(i) == network.side(j) && allocation[i] != allocation[j]) {
        r.eb = false;
        r.eb_witness = AxiomWitness{"x_" + network.label(i) + " = x_" + network.label(j), allocation[i],
                                    allocation[j]};
        break;
      }

  const Rational nk = network.k_size(), nm = network.m_size();
  r.lbp_k_side = (allocation.side_total(Side::K) - nk) / nm;
  r.lbp_m_side = (allocation.side_total(Side::M) - nm) / nk;
  r.lbp = r.lbp_k_side == r.lbp_m_side;
  if (!r.lbp) r.lbp_witness = AxiomWitness{"1/|M| sum_K (x_i - 1) = 1/|K| sum_M (x_j - 1)", r.lbp_k_side,
                                           r.lbp_m_side};
  return r;
}

/// The allocation forced by EF, EB and LBP: solve
///   |K| a + |M| b = v(N)
///   (|K|/|M|)(|K| a - |K|) = |M| b - |M|
/// for the side payoffs (a, b) by Cramer's rule.
inline Allocation uniqueness_reconstruction(const BipartiteNetwork& network, const Rational& delta) {
  const Rational nk = network.k_size(), nm = network.m_size();
  const Rational v = an_value(network.signature(), delta);
  // a11 a + a12 b = c1, a21 a + a22 b = c2
  const Rational a11 = nk, a12 = nm, c1 = v;
  const Rational a21 = nk * nk / nm, a22 = -nm, c2 = nk * nk / nm - nm;
  const Rational det = a11 * a22 - a12 * a21;
  const Rational a = (c1 * a22 - a12 * c2) / det;
  const Rational b = (a11 * c2 - a21 * c1) / det;
  return Allocation::side_uniform(network, a, b, Rule::reconstruction, delta);
}

/// One of the three allocations showing EF, EB and LBP are independent.
struct IndependenceCase {
  std::string name;            // e.g. "LBP fails"
  std::string failing_axiom;   // "EF", "EB" or "LBP"
  BipartiteNetwork network;
  Rational delta;
  std::optional<Allocation> allocation;  // unset when the allocation is undefined
  std::optional<AxiomReport> report;
  std::string error;  // why the allocation could not be evaluated

  /// True iff exactly the named axiom fails.
  bool as_claimed() const {
    if (!report) return false;
    return report->ef == (failing_axiom != "EF") && report->eb == (failing_axiom != "EB") &&
           report->lbp == (failing_axiom != "LBP");
  }
};

namespace detail {

inline BipartiteNetwork numbered_network(unsigned k, unsigned m) {
  std::vector<std::string> ks, ms;
  for (unsigned i = 1; i <= k; ++i) ks.push_back(std::to_string(i));
  for (unsigned j = k + 1; j <= k + m; ++j) ms.push_back(std::to_string(j));
  return BipartiteNetwork(ks, ms);
}

template <class Build>
IndependenceCase evaluate_case(std::string name, std::string failing, BipartiteNetwork network, Rational delta,
                               Build&& build) {
  IndependenceCase c{std::move(name), std::move(failing), std::move(network), std::move(delta), {}, {}, {}};
  try {
    c.allocation = build(c.network, c.delta);
    c.report = axiom_check(c.network, c.delta, *c.allocation);
  } catch (const Error& e) {
    c.error = e.what();
  }
  return c;
}

}  // namespace detail

/// p^N on K={1}, M={2,3}: efficient and side-equal, but unbalanced per link.
inline IndependenceCase lbp_fails_case(const Rational& delta = Rational(1, 2)) {
  return detail::evaluate_case("LBP fails", "LBP", detail::numbered_network(1, 2), delta,
                               [](const BipartiteNetwork& n, const Rational& d) {
                                 return productivity_allocation(n, d);
                               });
}

/// (0, 2, 0, 2) on K={1,2}, M={3,4} with no attenuation.
inline IndependenceCase eb_fails_case() {
  return detail::evaluate_case("EB fails", "EB", detail::numbered_network(2, 2), Rational(0),
                               [](const BipartiteNetwork& n, const Rational& d) {
                                 return Allocation(n, {0, 2, 0, 2}, Rule::custom, d);
                               });
}

/// p^N - 1_N on K={1,2}, M={3,4}: balanced and side-equal, but short of v(N).
inline IndependenceCase ef_fails_case(const Rational& delta = Rational(1, 2)) {
  return detail::evaluate_case("EF fails", "EF", detail::numbered_network(2, 2), delta,
                               [](const BipartiteNetwork& n, const Rational& d) {
                                 const auto p = productivity_allocation(n, d);
                                 return Allocation::side_uniform(n, p.side_payoff(Side::K) - 1,
                                                                 p.side_payoff(Side::M) - 1, Rule::custom, d);
                               });
}

inline std::vector<IndependenceCase> independence_suite() {
  return {lbp_fails_case(), eb_fails_case(), ef_fails_case()};
}

}  // namespace bipgame

#endif  // BIPGAME_VERIFY_HPP
