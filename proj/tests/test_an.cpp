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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"

namespace bipgame {
namespace {

using testing::numbered;
using testing::R;

TEST(Convergence, StrictThreshold) {
  EXPECT_TRUE(convergence_check(numbered(1, 2), R("1/2")).converges);
  EXPECT_EQ(convergence_check(numbered(1, 2), R("1/2")).margin, R("1/2"));
  EXPECT_TRUE(convergence_check(numbered(1, 3), R("1/3")).converges);
  EXPECT_FALSE(convergence_check(numbered(2, 2), R("1/2")).converges);  // 4 * 1/4 == 1
  const auto v = convergence_check(numbered(1, 2), R("3/4"));
  EXPECT_FALSE(v.converges);
  EXPECT_EQ(v.threshold_radicand, 2);
  EXPECT_EQ(v.margin, R("-1/8"));
  EXPECT_THROW(convergence_check(numbered(1, 2), R("-1")), InputError);
}

TEST(Convergence, VerdictAgreesWithMargin) {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned m = 1; m <= 5; ++m)
      for (int num = 0; num <= 20; ++num) {
        const Rational d = make_rational(num, 20);
        const auto v = convergence_check(Signature{k, m}, d);
        EXPECT_EQ(v.converges, v.margin > 0);
        EXPECT_EQ(v.converges, spectral_radius(Signature{k, m}).below_inverse(d));
      }
}

TEST(An, ExampleValues) {
  const auto small = numbered(1, 2);
  EXPECT_EQ(an_value(grand_coalition(small), R("1/2")), 10);
  EXPECT_EQ(an_value(induce(small, {"1", "3"}), R("1/2")), 4);
  EXPECT_EQ(an_value(induce(small, {"2", "3"}), R("1/2")), 2);
  EXPECT_EQ(an_value(induce(small, {"2"}), R("1/2")), 1);

  const auto large = numbered(1, 3);
  EXPECT_EQ(an_value(grand_coalition(large), R("1/2")), 28);
  EXPECT_EQ(an_value(induce(large, {"1", "2", "3"}), R("1/2")), 10);
  EXPECT_EQ(an_value(induce(large, {"1", "2", "3"}), R("1/3")), R("39/7"));
  EXPECT_EQ(an_value(grand_coalition(large), R("1/3")), 9);
  EXPECT_EQ(an_value(induce(large, {"1", "4"}), R("1/3")), 3);
  EXPECT_EQ(an_value(induce(large, {"2", "3", "4"}), R("1/3")), 3);
}

// Closed forms in delta for K={1}, M={2,3,4}: pairs 2/(1-d), triples with the
// hub (3+4d)/(1-2d^2), grand coalition (4+6d)/(1-3d^2).
TEST(An, SymbolicRowsOfFourNodeExample) {
  for (int num = 0; num < 10; ++num) {
    const Rational d = make_rational(num, 20);
    EXPECT_EQ(an_value(Signature{1, 1}, d), 2 / (1 - d));
    EXPECT_EQ(an_value(Signature{1, 2}, d), (3 + 4 * d) / (1 - 2 * d * d));
    EXPECT_EQ(an_value(Signature{1, 3}, d), (4 + 6 * d) / (1 - 3 * d * d));
  }
}

TEST(An, ZeroAttenuationIsAdditive) {
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned m = 0; m <= 4; ++m) EXPECT_EQ(an_value(Signature{k, m}, 0), k + m);
}

TEST(An, DivergenceIsADomainErrorNamingSignature) {
  try {
    an_value(Signature{2, 2}, R("1/2"));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("(2,2)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("sqrt(4)"), std::string::npos) << msg;
    EXPECT_EQ(e.exit_code(), 3);
  }
  EXPECT_THROW(an_table(numbered(1, 2), R("3/4")), DomainError);
  EXPECT_THROW(limit_productivity(Signature{1, 2}, Side::K, R("3/4")), DomainError);
  // A sub-coalition of a divergent network may still converge on its own.
  EXPECT_EQ(an_value(Signature{1, 1}, R("3/4")), 8);
}

TEST(An, LimitProductivities) {
  const auto n12 = grand_coalition(numbered(1, 2));
  EXPECT_EQ(limit_productivity(n12, 0, R("1/2")), 4);
  EXPECT_EQ(limit_productivity(n12, 1, R("1/2")), 3);
  const auto n13 = grand_coalition(numbered(1, 3));
  EXPECT_EQ(limit_productivity(n13, 0, R("1/3")), 3);
  EXPECT_EQ(limit_productivity(n13, 3, R("1/3")), 2);
  EXPECT_EQ(limit_productivity(n13, 0, R("1/2")), 10);
  EXPECT_EQ(limit_productivity(n13, 2, R("1/2")), 6);
  const auto partial = induce(numbered(1, 3), {"1", "2"});
  EXPECT_EQ(limit_productivity(partial, 3, R("1/2")), 0);
}

TEST(An, ValueIsSumOfLimitProductivities) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto net = BipartiteNetwork::from_sizes(k, m);
      for (const auto& d : testing::sweep_deltas()) {
        if (!convergence_check(net, d).converges) continue;
        for (std::uint64_t mask = 1; mask < (1u << net.size()); ++mask) {
          const auto c = from_mask(net, mask);
          Rational sum = 0;
          for (auto node : c.members()) sum += limit_productivity(c, node, d);
          ASSERT_EQ(sum, an_value(c, d));
        }
      }
    }
}

TEST(An, MarginalContributionMatchesValueDifference) {
  for (unsigned k = 0; k <= 4; ++k)
    for (unsigned m = 0; m <= 4; ++m)
      for (const auto& d : {R("1/10"), R("1/4"), R("1/3")}) {
        const Signature s{k, m};
        if (!convergence_check(s, d).converges) continue;
        for (Side side : {Side::K, Side::M}) {
          if (s.count(side) == 0) continue;
          EXPECT_EQ(marginal_contribution(s, side, d), an_value(s, d) - an_value(s.minus(side), d))
              << to_string(s) << " " << to_string(side);
        }
      }
}

TEST(An, MarginalContributionExamples) {
  const auto net = numbered(1, 2);
  EXPECT_EQ(marginal_contribution(grand_coalition(net), 0, R("1/2")), 8);
  EXPECT_EQ(marginal_contribution(induce(net, {"2"}), 1, R("1/2")), 1);
  EXPECT_EQ(marginal_contribution(grand_coalition(numbered(1, 3)), 2, R("1/2")), 18);
  EXPECT_THROW(marginal_contribution(induce(net, {"2"}), 0, R("1/2")), InputError);
  EXPECT_THROW(marginal_contribution(Signature{0, 2}, Side::K, R("1/2")), InputError);
}

TEST(An, MarginalsGrowWithCoalition) {
  const Rational d = R("1/4");
  for (Side side : {Side::K, Side::M})
    for (unsigned k = 0; k <= 3; ++k)
      for (unsigned m = 0; m <= 3; ++m)
        for (unsigned k2 = k; k2 <= 3; ++k2)
          for (unsigned m2 = m; m2 <= 3; ++m2) {
            const Signature s{k, m}, t{k2, m2};
            if (s.count(side) == 0) continue;
            EXPECT_LE(marginal_contribution(s, side, d), marginal_contribution(t, side, d));
          }
}

// Tail of the walk series after horizon t: sum_{u>t} d^u(S), bounded by a
// geometric series in r = k m delta^2.
TEST(An, FiniteHorizonApproachesLimit) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned m = 1; m <= 4; ++m)
      for (const auto& d : {R("1/10"), R("1/4"), R("1/3")}) {
        const Signature s{k, m};
        if (!convergence_check(s, d).converges) continue;
        const Rational limit = an_value(s, d);
        const Rational r = Rational(Integer(s.links())) * d * d;
        // Smallest t with r^{floor(t/2)} < 1e-8.
        unsigned t = 0;
        while (ipow(r, t / 2) >= R("1/100000000")) ++t;
        Rational previous_gap[2] = {-1, -1};
        for (unsigned u = 2; u <= t; ++u) {
          const Rational gap = limit - fan_value(s, {d, u});
          ASSERT_GT(gap, 0);
          if (previous_gap[u % 2] >= 0) {
            ASSERT_LT(gap, previous_gap[u % 2]);
          }
          previous_gap[u % 2] = gap;
        }
        EXPECT_LT(to_double(limit - fan_value(s, {d, t})), 1e-6) << to_string(s) << " t=" << t;
      }
}

// At or beyond the threshold the increments d^t(N) never decay, so the FAN
// values grow at least linearly in t and have no finite limit.
TEST(An, DivergentAttenuationGrowsWithoutBound) {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned m = 1; m <= 3; ++m) {
      const Signature n{k, m};
      // 1/sqrt(k m) rounded up to four decimals.
      Rational d = make_rational(static_cast<std::int64_t>(std::ceil(1e4 / std::sqrt(double(k * m)))), 10000);
      ASSERT_FALSE(convergence_check(n, d).converges);
      for (unsigned t = 3; t <= 40; ++t) ASSERT_GE(difference_value(n, d, t), difference_value(n, d, t - 2));
      const Rational floor_step = std::min(difference_value(n, d, 1), difference_value(n, d, 2));
      EXPECT_GE(fan_value(n, {d, 40}), fan_value(n, {d, 4}) + 18 * floor_step);
    }
  // Beyond the threshold the growth is geometric: for K={1}, M={2,3} at
  // delta = 3/4 the ratio against horizon 4 first exceeds 10^6 at horizon 216.
  const Signature n{1, 2};
  const Rational d = R("3/4");
  const Rational base = fan_value(n, {d, 4});
  EXPECT_LT(fan_value(n, {d, 215}), 1000000 * base);
  EXPECT_GT(fan_value(n, {d, 216}), 1000000 * base);
}

TEST(An, TableMatchesPointwiseValues) {
  const auto net = numbered(2, 3);
  const auto table = an_table(net, R("1/4"));
  for (unsigned k = 0; k <= 2; ++k)
    for (unsigned m = 0; m <= 3; ++m) EXPECT_EQ(table(Signature{k, m}), an_value(Signature{k, m}, R("1/4")));
  EXPECT_EQ(table.descriptor().kind, GameKind::an);
}

}  // namespace
}  // namespace bipgame
