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

// Finite attenuation network (FAN) games.
//
// For a coalition S of a complete bipartite network, the productivity matrix
// is M^t = sum_{u=0..t} delta^u G(S)^u, i.e. walks of length at most t weighted
// by delta per step. A member's productivity is its row sum and the FAN game
// value v^t(S) is the sum over members. Everything below is a closed form in
// the signature (k_S, m_S) except `productivity_matrix_oracle`, which multiplies
// adjacency matrices literally and exists to check the closed forms.

#ifndef BIPGAME_FAN_HPP
#define BIPGAME_FAN_HPP

#include <cstdint>
#include <utility>

#include "bipgame/errors.hpp"
#include "bipgame/game_table.hpp"
#include "bipgame/matrix.hpp"
#include "bipgame/network.hpp"
#include "bipgame/rational.hpp"

namespace bipgame {

struct AttenuationParams {
  Rational delta;
  unsigned horizon = 0;

  AttenuationParams(Rational delta_, unsigned horizon_) : delta(std::move(delta_)), horizon(horizon_) {
    if (delta < 0) throw InputError("attenuation factor must be nonnegative, got " + to_exact_string(delta));
  }
};

struct ProductivityMatrix {
  Matrix<Rational> entries;
  AttenuationParams params;
};

/// sum_{u=0..t} delta^u G(S)^u by repeated exact multiplication. Walk counts
/// are integer matrix powers; a CapacityError is raised if they overflow.
inline ProductivityMatrix productivity_matrix_oracle(const Coalition& coalition, const AttenuationParams& params) {
  const auto g = adjacency(coalition);
  const std::size_t s = g.rows();
  auto walks = Matrix<std::int64_t>::identity(s);
  auto sum = Matrix<Rational>::identity(s);
  Rational weight = 1;
  for (unsigned u = 1; u <= params.horizon; ++u) {
    walks = walks * g;
    weight *= params.delta;
    if (weight == 0) break;
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < s; ++c)
        if (walks(r, c) != 0) sum(r, c) += weight * walks(r, c);
  }
  return {std::move(sum), params};
}

/// Closed-form entry m_ij^t of the productivity matrix for a coalition with
/// signature `s`, where i lies on `row_side` and j on `col_side`.
inline Rational productivity_entry(const Signature& s, Side row_side, Side col_side, bool diagonal,
                                   const AttenuationParams& p) {
  const Integer k = s.k, m = s.m;
  const Rational d2 = p.delta * p.delta;
  Rational sum = diagonal ? 1 : 0;
  if (row_side == col_side) {
    // G^{2d} restricted to K x K is k^{d-1} m^d, to M x M is k^d m^{d-1}.
    for (unsigned d = 1; 2 * d <= p.horizon; ++d) {
      const Integer walks = row_side == Side::K ? ipow(k, d - 1) * ipow(m, d) : ipow(k, d) * ipow(m, d - 1);
      sum += Rational(walks) * ipow(d2, d);
    }
  } else {
    // G^{2d+1} restricted to K x M is (k m)^d.
    for (unsigned d = 0; 2 * d + 1 <= p.horizon; ++d)
      sum += Rational(ipow(k * m, d)) * ipow(d2, d) * p.delta;
  }
  return sum;
}

/// p_i^S(delta, t) for a member on `side` of a coalition with signature `s`:
/// 1 + sum_{u=1..floor(t/2)} (k m)^u delta^{2u} + sum_{u=1..ceil(t/2)} w_u delta^{2u-1},
/// with w_u = k^{u-1} m^u on the K side and k^u m^{u-1} on the M side.
inline Rational individual_productivity(const Signature& s, Side side, const AttenuationParams& p) {
  const Integer k = s.k, m = s.m;
  Rational value = 1;
  Rational even_pow = 1;  // delta^{2u}
  for (unsigned u = 1; 2 * u <= p.horizon; ++u) {
    even_pow *= p.delta * p.delta;
    value += Rational(ipow(k * m, u)) * even_pow;
  }
  Rational odd_pow = p.delta;  // delta^{2u-1}
  for (unsigned u = 1; 2 * u - 1 <= p.horizon; ++u) {
    const Integer w = side == Side::K ? ipow(k, u - 1) * ipow(m, u) : ipow(k, u) * ipow(m, u - 1);
    value += Rational(w) * odd_pow;
    odd_pow *= p.delta * p.delta;
  }
  return value;
}

/// Zero for nodes outside the coalition.
inline Rational individual_productivity(const Coalition& coalition, NodeIndex node, const AttenuationParams& p) {
  const auto side = coalition.side_of(node);
  if (!side) return 0;
  return individual_productivity(coalition.signature(), *side, p);
}

/// v^t(S) in closed form:
///   |S|                                                              t = 0
///   |S| + (|S| delta + 2) sum_{u=1..t/2} (k m)^u delta^{2u-1}           t even
///   |S| + (|S| delta + 2) sum_{u=1..(t-1)/2} (k m)^u delta^{2u-1}
///       + 2 (k m)^{(t+1)/2} delta^t                                  t odd
inline Rational fan_value(const Signature& s, const AttenuationParams& p) {
  const Rational size = s.size();
  const Integer km = Integer(s.links());
  const unsigned t = p.horizon;
  if (t == 0) return size;
  Rational series = 0;
  for (unsigned u = 1; 2 * u <= t - (t % 2); ++u) series += Rational(ipow(km, u)) * ipow(p.delta, 2 * u - 1);
  Rational value = size + (size * p.delta + 2) * series;
  if (t % 2 == 1) value += 2 * Rational(ipow(km, (t + 1) / 2)) * ipow(p.delta, t);
  return value;
}

inline Rational fan_value(const Coalition& c, const AttenuationParams& p) { return fan_value(c.signature(), p); }

/// d^t(S) = v^t(S) - v^{t-1}(S): |S| (k m)^{t/2} delta^t for even t and
/// 2 (k m)^{(t+1)/2} delta^t for odd t. Defined for t >= 1 only.
inline Rational difference_value(const Signature& s, const Rational& delta, unsigned t) {
  if (t == 0) throw InputError("difference game is defined for t >= 1");
  if (delta < 0) throw InputError("attenuation factor must be nonnegative");
  const Integer km = Integer(s.links());
  if (t % 2 == 0) return Rational(s.size()) * Rational(ipow(km, t / 2)) * ipow(delta, t);
  return 2 * Rational(ipow(km, (t + 1) / 2)) * ipow(delta, t);
}

inline Rational difference_value(const Coalition& c, const Rational& delta, unsigned t) {
  return difference_value(c.signature(), delta, t);
}

inline GameTable fan_table(const BipartiteNetwork& network, const AttenuationParams& p) {
  return GameTable::tabulate(network.k_size(), network.m_size(),
                             {GameKind::fan, p.delta, p.horizon},
                             [&](const Signature& s) { return fan_value(s, p); });
}

inline GameTable difference_table(const BipartiteNetwork& network, const Rational& delta, unsigned t) {
  if (t == 0) throw InputError("difference game is defined for t >= 1");
  return GameTable::tabulate(network.k_size(), network.m_size(),
                             {GameKind::difference, delta, t},
                             [&](const Signature& s) { return difference_value(s, delta, t); });
}

}  // namespace bipgame

#endif  // BIPGAME_FAN_HPP
