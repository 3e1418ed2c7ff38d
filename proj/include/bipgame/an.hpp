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

// Attenuation network (AN) games: the t -> infinity limit of FAN games.
//
// The walk series for a coalition converges iff delta is below the inverse of
// the coalition's spectral radius sqrt(k_S m_S). All gating is done on the
// exact test k_S m_S delta^2 < 1, so no square roots are ever taken.

#ifndef BIPGAME_AN_HPP
#define BIPGAME_AN_HPP

#include <string>

#include "bipgame/errors.hpp"
#include "bipgame/game_table.hpp"
#include "bipgame/network.hpp"
#include "bipgame/rational.hpp"

namespace bipgame {

struct ConvergenceVerdict {
  bool converges = false;
  Integer threshold_radicand;  // threshold is 1 / sqrt(threshold_radicand)
  Rational margin;             // 1 - radicand * delta^2, positive iff convergent
};

inline ConvergenceVerdict convergence_check(const Signature& s, const Rational& delta) {
  if (delta < 0) throw InputError("attenuation factor must be nonnegative, got " + to_exact_string(delta));
  ConvergenceVerdict v;
  v.threshold_radicand = Integer(s.links());
  v.margin = 1 - Rational(v.threshold_radicand) * delta * delta;
  v.converges = v.margin > 0;
  return v;
}

/// Global gate: subgame limits exist whenever the grand coalition's does.
inline ConvergenceVerdict convergence_check(const BipartiteNetwork& network, const Rational& delta) {
  return convergence_check(network.signature(), delta);
}

namespace detail {

inline void require_convergent(const Signature& s, const Rational& delta) {
  const auto verdict = convergence_check(s, delta);
  if (!verdict.converges)
    throw DomainError("attenuation factor " + to_exact_string(delta) + " diverges for signature " + to_string(s) +
                      ": need delta < 1/sqrt(" + verdict.threshold_radicand.str() + ")");
}

}  // namespace detail

/// v_delta(S) = (k + m + 2 k m delta) / (1 - k m delta^2).
inline Rational an_value(const Signature& s, const Rational& delta) {
  detail::require_convergent(s, delta);
  const Rational km = Rational(Integer(s.links()));
  return (Rational(s.size()) + 2 * km * delta) / (1 - km * delta * delta);
}

inline Rational an_value(const Coalition& c, const Rational& delta) { return an_value(c.signature(), delta); }

/// Limit productivity of a member: (1 + m delta) / (1 - k m delta^2) on the K
/// side, (1 + k delta) / (1 - k m delta^2) on the M side.
inline Rational limit_productivity(const Signature& s, Side side, const Rational& delta) {
  detail::require_convergent(s, delta);
  const Rational km = Rational(Integer(s.links()));
  const Rational across = side == Side::K ? s.m : s.k;
  return (1 + across * delta) / (1 - km * delta * delta);
}

inline Rational limit_productivity(const Coalition& c, NodeIndex node, const Rational& delta) {
  detail::require_convergent(c.signature(), delta);
  const auto side = c.side_of(node);
  if (!side) return 0;
  return limit_productivity(c.signature(), *side, delta);
}

/// v_delta(S) - v_delta(S \ {i}) for a member on `side`. For i in K this is
/// (1 + m delta)^2 / ((1 - k m delta^2)(1 - k m delta^2 + m delta^2)); the M side
/// swaps k and m.
inline Rational marginal_contribution(const Signature& s, Side side, const Rational& delta) {
  if (s.count(side) == 0)
    throw InputError(std::string("coalition ") + to_string(s) + " has no member on side " + to_string(side));
  detail::require_convergent(s, delta);
  const Rational km = Rational(Integer(s.links()));
  const Rational across = side == Side::K ? s.m : s.k;
  const Rational d2 = delta * delta;
  const Rational gain = 1 + across * delta;
  return gain * gain / ((1 - km * d2) * (1 - km * d2 + across * d2));
}

inline Rational marginal_contribution(const Coalition& c, NodeIndex node, const Rational& delta) {
  const auto side = c.side_of(node);
  if (!side) throw InputError("node " + std::to_string(node) + " is not a member of the coalition");
  return marginal_contribution(c.signature(), *side, delta);
}

inline GameTable an_table(const BipartiteNetwork& network, const Rational& delta) {
  detail::require_convergent(network.signature(), delta);
  return GameTable::tabulate(network.k_size(), network.m_size(), {GameKind::an, delta, std::nullopt},
                             [&](const Signature& s) { return an_value(s, delta); });
}

}  // namespace bipgame

#endif  // BIPGAME_AN_HPP
