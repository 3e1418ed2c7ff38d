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

#include "support.hpp"

namespace bipgame {
namespace {

using testing::for_each_convergent;
using testing::numbered;
using testing::R;

TEST(Core, ProductivityInCoreOfSmallExample) {
  const auto net = numbered(1, 2);
  const auto report = core_check(an_table(net, R("1/2")), productivity_allocation(net, R("1/2")));
  EXPECT_TRUE(report.in_core);
  EXPECT_TRUE(report.efficient);
  EXPECT_TRUE(report.violations.empty());
}

TEST(Core, StarvedLeavesAreReported) {
  const auto net = numbered(1, 2);
  const auto game = an_table(net, R("1/2"));
  const Allocation starve(net, {10, 0, 0}, Rule::custom);
  const auto report = core_check(game, starve);
  EXPECT_FALSE(report.in_core);
  EXPECT_TRUE(report.efficient);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations.front().signature, (Signature{0, 2}));
  EXPECT_EQ(report.violations.front().shortfall, 2);
  EXPECT_EQ(report.violations.front().payoff, 0);
  for (const auto& v : report.violations) EXPECT_GT(v.shortfall, 0);
}

TEST(Core, LrpInCoreOfFourNodeExample) {
  const auto net = numbered(1, 3);
  const auto omega = lrp(net, R("1/2"));
  EXPECT_EQ(omega, Allocation::side_uniform(net, 19, 3, Rule::custom));
  EXPECT_TRUE(core_check(an_table(net, R("1/2")), omega).in_core);
}

TEST(Core, InefficiencyAloneBreaksMembership) {
  const auto net = numbered(1, 2);
  const auto report = core_check(an_table(net, R("1/2")), Allocation::side_uniform(net, 5, 3, Rule::custom));
  EXPECT_FALSE(report.efficient);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_FALSE(report.in_core);
}

TEST(Core, ViolationsOrderedWorstFirstThenBySignature) {
  const auto net = BipartiteNetwork::from_sizes(2, 2);
  const auto game = GameTable::tabulate(2, 2, {}, [](const Signature& s) { return Rational(s.size()); });
  const auto report = core_check(game, Allocation::side_uniform(net, 0, 2, Rule::custom));
  ASSERT_EQ(report.violations.size(), 3u);
  EXPECT_EQ(report.violations[0].signature, (Signature{2, 0}));
  EXPECT_EQ(report.violations[0].shortfall, 2);
  EXPECT_EQ(report.violations[1].signature, (Signature{1, 0}));
  EXPECT_EQ(report.violations[1].shortfall, 1);
  EXPECT_EQ(report.violations[2].signature, (Signature{2, 1}));
  EXPECT_EQ(report.violations[2].shortfall, 1);
}

TEST(Core, AsymmetricAllocationsUseSubsets) {
  const auto net = numbered(1, 2);
  const auto game = an_table(net, R("1/2"));
  EXPECT_TRUE(core_check(game, Allocation(net, {4, 4, 2}, Rule::custom)).in_core);
  const auto report = core_check(game, Allocation(net, {1, 1, 8}, Rule::custom));
  EXPECT_FALSE(report.in_core);
  EXPECT_TRUE(report.efficient);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations.front().signature, (Signature{1, 1}));
  EXPECT_EQ(report.violations.front().shortfall, 2);
  EXPECT_EQ(report.violations.front().members, std::uint64_t{0b011});
}

TEST(Core, MismatchAndCapacity) {
  const auto game = an_table(numbered(1, 2), R("1/2"));
  EXPECT_THROW(core_check(game, productivity_allocation(numbered(1, 3), R("1/2"))), InputError);
  const auto big = BipartiteNetwork::from_sizes(9, 8);
  const auto table = GameTable::tabulate(9, 8, {}, [](const Signature& s) { return Rational(s.size()); });
  EXPECT_THROW(core_check_subsets(table, Allocation::side_uniform(big, 1, 1, Rule::custom)), CapacityError);
  EXPECT_TRUE(core_check(table, Allocation::side_uniform(big, 1, 1, Rule::custom)).in_core);
}

TEST(Core, AllocationsStableAcrossGrid) {
  for_each_convergent(4, [](const BipartiteNetwork& net, const Rational& d) {
    const auto game = an_table(net, d);
    EXPECT_TRUE(core_check(game, productivity_allocation(net, d)).in_core);
    EXPECT_TRUE(core_check(game, lrp(net, d)).in_core);
    EXPECT_TRUE(core_check(game, shapley_closed(net, d)).in_core);
    for (unsigned t = 1; t <= 6; ++t)
      EXPECT_TRUE(core_check(difference_table(net, d, t), difference_distribution(net, d, t)).in_core)
          << to_string(net.signature()) << " t=" << t;
  });
}

TEST(Core, SignatureReductionAgreesWithSubsets) {
  for (unsigned k = 1; k <= 6; ++k)
    for (unsigned m = 1; k + m <= 12 && m <= 6; ++m) {
      const auto net = BipartiteNetwork::from_sizes(k, m);
      const Rational d = R("1/10");
      const auto game = an_table(net, d);
      for (const auto& alloc : {productivity_allocation(net, d), lrp(net, d),
                                Allocation::side_uniform(net, an_value(net.signature(), d) / net.size(), 0,
                                                         Rule::custom)}) {
        const auto fast = core_check(game, alloc);
        const auto slow = core_check_subsets(game, alloc);
        EXPECT_EQ(fast.in_core, slow.in_core);
        EXPECT_EQ(fast.efficient, slow.efficient);
        EXPECT_EQ(fast.violations.empty(), slow.violations.empty());
        if (!fast.violations.empty()) {
          EXPECT_EQ(fast.violations.front().shortfall, slow.violations.front().shortfall);
          EXPECT_EQ(fast.violations.front().signature, slow.violations.front().signature);
        }
      }
    }
}

TEST(Convexity, FanAndAnTablesAreConvex) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto net = BipartiteNetwork::from_sizes(k, m);
      for (const auto& d : testing::sweep_deltas()) {
        for (unsigned t = 0; t <= 8; ++t) {
          const auto fan = fan_table(net, {d, t});
          EXPECT_TRUE(convexity_check(fan).convex);
          EXPECT_TRUE(superadditivity_check(fan).holds);
          EXPECT_TRUE(monotonicity_check(fan).holds);
        }
        if (convergence_check(net, d).converges) {
          const auto an = an_table(net, d);
          EXPECT_TRUE(convexity_check(an).convex);
          EXPECT_TRUE(superadditivity_check(an).holds);
          EXPECT_TRUE(monotonicity_check(an).holds);
        }
      }
    }
  EXPECT_TRUE(convexity_check(fan_table(numbered(2, 2), {R("1/3"), 5})).convex);
  EXPECT_TRUE(convexity_check(an_table(numbered(2, 3), R("1/4"))).convex);
}

TEST(Convexity, ManufacturedCounterexample) {
  const auto game = an_table(numbered(2, 2), R("1/4"));
  const auto lowered = game.with_value(Signature{2, 2}, game(Signature{2, 1}));
  const auto report = convexity_check(lowered);
  ASSERT_FALSE(report.convex);
  const auto& v = *report.first_violation;
  EXPECT_EQ(v.larger, (Signature{2, 2}));
  EXPECT_LT(v.larger_marginal, v.smaller_marginal);
  EXPECT_FALSE(superadditivity_check(lowered).holds);
  EXPECT_TRUE(monotonicity_check(lowered).holds);
  EXPECT_FALSE(monotonicity_check(game.with_value(Signature{2, 2}, 1)).holds);
}

TEST(Axioms, LrpSatisfiesAll) {
  const auto net = numbered(1, 2);
  const auto report = axiom_check(net, R("1/2"), lrp(net, R("1/2")));
  EXPECT_TRUE(report.all());
  EXPECT_FALSE(report.ef_witness || report.eb_witness || report.lbp_witness);
}

TEST(Axioms, ProductivityFailsLinkBalance) {
  const auto net = numbered(1, 2);
  const auto report = axiom_check(net, R("1/2"), productivity_allocation(net, R("1/2")));
  EXPECT_TRUE(report.ef);
  EXPECT_TRUE(report.eb);
  EXPECT_FALSE(report.lbp);
  ASSERT_TRUE(report.lbp_witness.has_value());
  EXPECT_EQ(report.lbp_witness->lhs, R("3/2"));
  EXPECT_EQ(report.lbp_witness->rhs, 4);
}

TEST(Axioms, UnequalSplitFailsEqualityInBipartition) {
  const auto net = numbered(2, 2);
  const auto report = axiom_check(net, 0, Allocation(net, {0, 2, 0, 2}, Rule::custom));
  EXPECT_TRUE(report.ef);
  EXPECT_TRUE(report.lbp);
  EXPECT_FALSE(report.eb);
  ASSERT_TRUE(report.eb_witness.has_value());
  EXPECT_EQ(report.eb_witness->lhs, 0);
  EXPECT_EQ(report.eb_witness->rhs, 2);
}

TEST(Axioms, IndependenceSuite) {
  const auto suite = independence_suite();
  ASSERT_EQ(suite.size(), 3u);
  EXPECT_TRUE(suite[0].as_claimed());
  EXPECT_TRUE(suite[1].as_claimed());
  // K={1,2}, M={3,4} at delta = 1/2 sits exactly on the divergence boundary
  // (4 * 1/4 = 1), so p^N - 1_N is undefined there.
  EXPECT_FALSE(suite[2].report.has_value());
  EXPECT_NE(suite[2].error.find("diverges"), std::string::npos);
}

TEST(Axioms, ShiftedProductivityFailsEfficiencyBelowThreshold) {
  for (const auto& d : {R("1/10"), R("1/4"), R("1/3"), R("49/100")}) {
    const auto c = ef_fails_case(d);
    ASSERT_TRUE(c.report.has_value()) << c.error;
    EXPECT_TRUE(c.as_claimed()) << to_exact_string(d);
    ASSERT_TRUE(c.report->ef_witness.has_value());
    EXPECT_EQ(c.report->ef_witness->rhs - c.report->ef_witness->lhs, 4);
  }
}

TEST(Axioms, ProductivityFailsLinkBalanceWheneverSidesDiffer) {
  for (const auto& d : {R("1/10"), R("1/4"), R("1/3")}) EXPECT_TRUE(lbp_fails_case(d).as_claimed());
}

TEST(Axioms, ReconstructionEqualsLrp) {
  for_each_convergent(4, [](const BipartiteNetwork& net, const Rational& d) {
    const auto rebuilt = uniqueness_reconstruction(net, d);
    EXPECT_EQ(rebuilt, lrp(net, d));
    EXPECT_TRUE(axiom_check(net, d, rebuilt).all());
  });
  EXPECT_EQ(uniqueness_reconstruction(numbered(1, 2), R("1/2")),
            Allocation::side_uniform(numbered(1, 2), R("17/3"), R("13/6"), Rule::custom));
  EXPECT_EQ(uniqueness_reconstruction(numbered(1, 3), R("1/2")),
            Allocation::side_uniform(numbered(1, 3), 19, 3, Rule::custom));
  EXPECT_EQ(uniqueness_reconstruction(numbered(3, 2), 0), Allocation::side_uniform(numbered(3, 2), 1, 1, Rule::custom));
}

TEST(Axioms, DivergentDeltaIsDomainError) {
  const auto net = numbered(1, 2);
  EXPECT_THROW(axiom_check(net, R("3/4"), Allocation::side_uniform(net, 1, 1, Rule::custom)), DomainError);
}

}  // namespace
}  // namespace bipgame
