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

// Allocation rules for AN games on complete bipartite networks:
// individual productivity p^N, the Shapley value (closed form plus two
// enumeration oracles), the per-horizon difference distribution x^t and the
// link ratio productivity (LRP) distribution omega.

#ifndef BIPGAME_ALLOCATIONS_HPP
#define BIPGAME_ALLOCATIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipgame/an.hpp"
#include "bipgame/errors.hpp"
#include "bipgame/fan.hpp"
#include "bipgame/game_table.hpp"
#include "bipgame/network.hpp"
#include "bipgame/rational.hpp"

namespace bipgame {

enum class Rule {
  productivity,
  shapley_closed,
  shapley_oracle,
  shapley_subsets,
  difference_x,
  lrp,
  lrp_series,
  reconstruction,
  custom,
};

inline const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::productivity: return "productivity";
    case Rule::shapley_closed: return "shapley_closed";
    case Rule::shapley_oracle: return "shapley_oracle";
    case Rule::shapley_subsets: return "shapley_subsets";
    case Rule::difference_x: return "difference_x";
    case Rule::lrp: return "lrp";
    case Rule::lrp_series: return "lrp_series";
    case Rule::reconstruction: return "reconstruction";
    case Rule::custom: return "custom";
  }
  return "custom";
}

/// A payoff per node of `network`, indexed by NodeIndex, with the rule and
/// parameters that produced it.
class Allocation {
 public:
  Allocation(BipartiteNetwork network, std::vector<Rational> payoffs, Rule rule,
             std::optional<Rational> delta = std::nullopt, std::optional<unsigned> horizon = std::nullopt)
      : network_(std::move(network)),
        payoffs_(std::move(payoffs)),
        rule_(rule),
        delta_(std::move(delta)),
        horizon_(horizon) {
    if (payoffs_.size() != network_.size())
      throw InputError("allocation has " + std::to_string(payoffs_.size()) + " payoffs for " +
                       std::to_string(network_.size()) + " nodes");
  }

  /// Every K node receives `k_payoff`, every M node `m_payoff`.
  static Allocation side_uniform(const BipartiteNetwork& network, const Rational& k_payoff,
                                 const Rational& m_payoff, Rule rule, std::optional<Rational> delta = std::nullopt,
                                 std::optional<unsigned> horizon = std::nullopt) {
    std::vector<Rational> payoffs(network.k_size(), k_payoff);
    payoffs.insert(payoffs.end(), network.m_size(), m_payoff);
    return Allocation(network, std::move(payoffs), rule, std::move(delta), horizon);
  }

  const BipartiteNetwork& network() const { return network_; }
  const std::vector<Rational>& payoffs() const { return payoffs_; }
  Rule rule() const { return rule_; }
  const std::optional<Rational>& delta() const { return delta_; }
  const std::optional<unsigned>& horizon() const { return horizon_; }

  const Rational& operator[](NodeIndex node) const { return payoffs_.at(node); }
  const Rational& at(std::string_view label) const { return payoffs_[network_.index_of(label)]; }

  /// Payoff of the first node on `side`; meaningful for side-symmetric allocations.
  const Rational& side_payoff(Side side) const {
    return payoffs_[side == Side::K ? 0 : network_.k_size()];
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& x : payoffs_) sum += x;
    return sum;
  }

  Rational side_total(Side side) const {
    Rational sum = 0;
    for (NodeIndex i = 0; i < network_.size(); ++i)
      if (network_.side(i) == side) sum += payoffs_[i];
    return sum;
  }

  bool side_symmetric() const {
    for (NodeIndex i = 0; i < network_.size(); ++i)
      if (payoffs_[i] != side_payoff(network_.side(i))) return false;
    return true;
  }

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.network_ == b.network_ && a.payoffs_ == b.payoffs_;
  }

 private:
  BipartiteNetwork network_;
  std::vector<Rational> payoffs_;
  Rule rule_;
  std::optional<Rational> delta_;
  std::optional<unsigned> horizon_;
};

/// p^N(delta): each node's limit productivity in the grand coalition.
inline Allocation productivity_allocation(const BipartiteNetwork& network, const Rational& delta) {
  const Signature n = network.signature();
  return Allocation::side_uniform(network, limit_productivity(n, Side::K, delta),
                                  limit_productivity(n, Side::M, delta), Rule::productivity, delta);
}

/// p^N(delta, t): finite-horizon productivities in the grand coalition.
inline Allocation productivity_allocation(const BipartiteNetwork& network, const AttenuationParams& params) {
  const Signature n = network.signature();
  return Allocation::side_uniform(network, individual_productivity(n, Side::K, params),
                                  individual_productivity(n, Side::M, params), Rule::productivity, params.delta,
                                  params.horizon);
}

/// Probability that, in a uniformly random arrival order over sides of sizes
/// |X| and |Y|, a fixed X player arrives to find i-1 X players and j Y players
/// already present:
///   C(|Y|, j) C(|X|-1, i-1) (i+j-1)! (|X|+|Y|-i-j)! / (|X|+|Y|)!
inline Rational shapley_pi(unsigned x_size, unsigned y_size, unsigned i, unsigned j) {
  if (i < 1 || i > x_size || j > y_size) return 0;
  const unsigned n = x_size + y_size;
  return Rational(binomial(y_size, j) * binomial(x_size - 1, i - 1) * factorial(i + j - 1) * factorial(n - i - j),
                  factorial(n));
}

/// Shapley value of the AN game, summing closed-form marginals against the
/// arrival-order weights. Sides are symmetric so one sum per side suffices.
inline Allocation shapley_closed(const BipartiteNetwork& network, const Rational& delta) {
  detail::require_convergent(network.signature(), delta);
  const unsigned nk = network.k_size(), nm = network.m_size();
  Rational phi_k = 0, phi_m = 0;
  for (unsigned k = 1; k <= nk; ++k)
    for (unsigned m = 0; m <= nm; ++m)
      phi_k += shapley_pi(nk, nm, k, m) * marginal_contribution(Signature{k, m}, Side::K, delta);
  // M side reads the weights with the roles of the sides exchanged.
  for (unsigned m = 1; m <= nm; ++m)
    for (unsigned k = 0; k <= nk; ++k)
      phi_m += shapley_pi(nm, nk, m, k) * marginal_contribution(Signature{k, m}, Side::M, delta);
  return Allocation::side_uniform(network, phi_k, phi_m, Rule::shapley_closed, delta);
}

namespace detail {

// gamma(s) = (s-1)! (n-s)! / n!, indexed by coalition size s = 1..n.
inline std::vector<Rational> shapley_weights(unsigned n) {
  std::vector<Rational> gamma(n + 1);
  const Integer n_fact = factorial(n);
  for (unsigned s = 1; s <= n; ++s) gamma[s] = Rational(factorial(s - 1) * factorial(n - s), n_fact);
  return gamma;
}

inline void require_matching(const BipartiteNetwork& network, const GameTable& game) {
  if (!game.matches(network))
    throw InputError("game table " + to_string(game.grand()) + " does not match network " +
                     to_string(network.signature()));
}

}  // namespace detail

inline constexpr unsigned kShapleyOracleLimit = 20;
inline constexpr unsigned kSubsetOracleLimit = 12;

/// Shapley value of an arbitrary signature-symmetric game by counting, for
/// each signature (k, m) containing the player, how many coalitions share it.
inline Allocation shapley_oracle(const BipartiteNetwork& network, const GameTable& game) {
  detail::require_matching(network, game);
  const unsigned n = network.size();
  if (n > kShapleyOracleLimit)
    throw CapacityError("shapley oracle supports at most " + std::to_string(kShapleyOracleLimit) + " nodes, got " +
                        std::to_string(n));
  const unsigned nk = network.k_size(), nm = network.m_size();
  const auto gamma = detail::shapley_weights(n);
  Rational phi_k = 0, phi_m = 0;
  for (unsigned k = 0; k <= nk; ++k) {
    for (unsigned m = 0; m <= nm; ++m) {
      const Signature s{k, m};
      if (k >= 1)
        phi_k += Rational(binomial(nk - 1, k - 1) * binomial(nm, m)) * gamma[k + m] *
                 (game(s) - game(s.minus(Side::K)));
      if (m >= 1)
        phi_m += Rational(binomial(nk, k) * binomial(nm - 1, m - 1)) * gamma[k + m] *
                 (game(s) - game(s.minus(Side::M)));
    }
  }
  return Allocation::side_uniform(network, phi_k, phi_m, Rule::shapley_oracle, game.descriptor().delta,
                                  game.descriptor().horizon);
}

/// Shapley value by direct summation over all 2^n coalitions. Makes no use of
/// side symmetry, so it checks the counting in `shapley_oracle`.
inline Allocation shapley_subset_oracle(const BipartiteNetwork& network, const GameTable& game) {
  detail::require_matching(network, game);
  const unsigned n = network.size();
  if (n > kSubsetOracleLimit)
    throw CapacityError("subset oracle supports at most " + std::to_string(kSubsetOracleLimit) + " nodes, got " +
                        std::to_string(n));
  const auto gamma = detail::shapley_weights(n);
  const unsigned nk = network.k_size();
  std::vector<Rational> phi(n, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Signature s;
    for (unsigned i = 0; i < n; ++i)
      if ((mask >> i) & 1u) (i < nk ? s.k : s.m)++;
    const Rational& value = game(s);
    for (unsigned i = 0; i < n; ++i)
      if ((mask >> i) & 1u) phi[i] += gamma[s.size()] * (value - game(s.minus(i < nk ? Side::K : Side::M)));
  }
  return Allocation(network, std::move(phi), Rule::shapley_subsets, game.descriptor().delta,
                    game.descriptor().horizon);
}

/// x^t(delta): d^t(N) split per node by the link ratio of its side,
/// d^t(N)/|N| * |M|/|K| on K and d^t(N)/|N| * |K|/|M| on M.
inline Allocation difference_distribution(const BipartiteNetwork& network, const Rational& delta, unsigned t) {
  const Rational share = difference_value(network.signature(), delta, t) / network.size();
  const Rational nk = network.k_size(), nm = network.m_size();
  return Allocation::side_uniform(network, share * nm / nk, share * nk / nm, Rule::difference_x, delta, t);
}

/// Parity-split form of x^t, used to cross-check the definition:
///   even t:  |K|^{t/2-1} |M|^{t/2+1} delta^t         on K (swap sides for M)
///   odd t:   2/|N| |K|^{(t-1)/2} |M|^{(t+3)/2} delta^t  on K (swap sides for M)
inline Allocation difference_distribution_explicit(const BipartiteNetwork& network, const Rational& delta,
                                                   unsigned t) {
  if (t == 0) throw InputError("difference game is defined for t >= 1");
  if (delta < 0) throw InputError("attenuation factor must be nonnegative");
  const Integer nk = network.k_size(), nm = network.m_size();
  const Rational dt = ipow(delta, t);
  Rational xk, xm;
  if (t % 2 == 0) {
    xk = Rational(ipow(nk, t / 2 - 1) * ipow(nm, t / 2 + 1)) * dt;
    xm = Rational(ipow(nk, t / 2 + 1) * ipow(nm, t / 2 - 1)) * dt;
  } else {
    const Rational two_over_n(Integer(2), nk + nm);
    xk = two_over_n * Rational(ipow(nk, (t - 1) / 2) * ipow(nm, (t + 3) / 2)) * dt;
    xm = two_over_n * Rational(ipow(nk, (t + 3) / 2) * ipow(nm, (t - 1) / 2)) * dt;
  }
  return Allocation::side_uniform(network, xk, xm, Rule::difference_x, delta, t);
}

/// omega(delta) = 1_N + sum_{u>=1} x^u(delta), in closed form. On K:
///   1 + (|M|/|K| delta + 2|M|/(|N||K|)) |K||M| delta / (1 - |K||M| delta^2)
/// and symmetrically on M. At delta = 0 this is 1_N without special casing.
inline Allocation lrp(const BipartiteNetwork& network, const Rational& delta) {
  detail::require_convergent(network.signature(), delta);
  const Rational nk = network.k_size(), nm = network.m_size(), n = network.size();
  const Rational geometric = nk * nm * delta / (1 - nk * nm * delta * delta);
  const Rational wk = 1 + (nm / nk * delta + 2 * nm / (n * nk)) * geometric;
  const Rational wm = 1 + (nk / nm * delta + 2 * nk / (n * nm)) * geometric;
  return Allocation::side_uniform(network, wk, wm, Rule::lrp, delta);
}

/// Partial sum 1_N + sum_{u=1..t_max} x^u(delta).
inline Allocation lrp_series_oracle(const BipartiteNetwork& network, const Rational& delta, unsigned t_max) {
  if (t_max == 0) throw InputError("series oracle needs t_max >= 1");
  Rational wk = 1, wm = 1;
  for (unsigned u = 1; u <= t_max; ++u) {
    const auto x = difference_distribution(network, delta, u);
    wk += x.side_payoff(Side::K);
    wm += x.side_payoff(Side::M);
  }
  return Allocation::side_uniform(network, wk, wm, Rule::lrp_series, delta, t_max);
}

/// Componentwise bound on omega - lrp_series_oracle(t_max) for a convergent
/// delta. With r = |K||M| delta^2 the omitted terms pair into geometric series
/// with ratio r, so the tail is at most C r^{floor(t_max/2)} with
///   C_K = (|M|/|K| r + 2 |M|^2 delta / |N|) / (1 - r)
/// and C_M obtained by exchanging |K| and |M|.
struct SeriesTailBound {
  Rational k_side;
  Rational m_side;
};

inline SeriesTailBound lrp_series_tail_bound(const BipartiteNetwork& network, const Rational& delta,
                                             unsigned t_max) {
  detail::require_convergent(network.signature(), delta);
  const Rational nk = network.k_size(), nm = network.m_size(), n = network.size();
  const Rational r = nk * nm * delta * delta;
  const Rational decay = ipow(r, t_max / 2);
  return {(nm / nk * r + 2 * nm * nm * delta / n) / (1 - r) * decay,
          (nk / nm * r + 2 * nk * nk * delta / n) / (1 - r) * decay};
}

}  // namespace bipgame

#endif  // BIPGAME_ALLOCATIONS_HPP
