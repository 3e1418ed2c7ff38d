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

#include <map>

#include "support.hpp"

namespace bipgame {
namespace {

using testing::R;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("1/2"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("7"), make_rational(7));
  EXPECT_EQ(parse_rational("0.125"), make_rational(1, 8));
  EXPECT_EQ(parse_rational(".5"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-3/9"), make_rational(-1, 3));
  EXPECT_EQ(parse_rational(" 0.75 "), make_rational(3, 4));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "1/0", "abc", "1e-3", "1/2/3", "0.3.3", ".", "1/-2", "0.(3)"})
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(Rational, CanonicalExactString) {
  EXPECT_EQ(to_exact_string(make_rational(34, 6)), "17/3");
  EXPECT_EQ(to_exact_string(make_rational(-2, 4)), "-1/2");
  EXPECT_EQ(to_exact_string(make_rational(10)), "10");
  EXPECT_EQ(to_exact_string(make_rational(0)), "0");
}

TEST(Rational, FixedRenderingRoundsHalfEven) {
  EXPECT_EQ(to_fixed_string(R("3.998046875"), 3), "3.998");
  EXPECT_EQ(to_fixed_string(R("0.125"), 2), "0.12");
  EXPECT_EQ(to_fixed_string(R("0.375"), 2), "0.38");
  EXPECT_EQ(to_fixed_string(R("22/7"), 2), "3.14");
  EXPECT_EQ(to_fixed_string(R("-1/3"), 3), "-0.333");
  EXPECT_EQ(to_fixed_string(R("5"), 0), "5");
}

TEST(Rational, DecimalRenderingSignificantDigits) {
  EXPECT_EQ(to_decimal_string(R("17/3")), "5.66667");
  EXPECT_EQ(to_decimal_string(R("10")), "10");
  EXPECT_EQ(to_decimal_string(R("9.78125")), "9.78125");
  EXPECT_EQ(to_decimal_string(R("1/3"), 3), "0.333");
  EXPECT_EQ(to_decimal_string(R("1234567")), "1234570");
  EXPECT_EQ(to_decimal_string(R("-13/6")), "-2.16667");
  EXPECT_EQ(to_decimal_string(R("1/1000")), "0.001");
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(ipow(Integer(3), 4), 81);
  EXPECT_EQ(ipow(R("1/2"), 3), R("1/8"));
}

TEST(Network, LabelsAndSides) {
  const auto net = BipartiteNetwork::from_sizes(2, 3);
  EXPECT_EQ(net.size(), 5u);
  EXPECT_EQ(net.label(0), "K1");
  EXPECT_EQ(net.label(4), "M3");
  EXPECT_EQ(net.side(1), Side::K);
  EXPECT_EQ(net.side(2), Side::M);
  EXPECT_EQ(net.index_of("M2"), 3u);
  EXPECT_FALSE(net.find("X").has_value());
}

TEST(Network, RejectsBadConstruction) {
  EXPECT_THROW(BipartiteNetwork({}, {"a"}), InputError);
  EXPECT_THROW(BipartiteNetwork({"a"}, {}), InputError);
  EXPECT_THROW(BipartiteNetwork({"a"}, {"a"}), InputError);
  EXPECT_THROW(BipartiteNetwork({""}, {"b"}), InputError);
}

TEST(Network, UnknownLabelNamesTheId) {
  const auto net = testing::numbered(1, 2);
  try {
    induce(net, {"1", "9"});
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("'9'"), std::string::npos);
  }
}

TEST(Network, CoalitionSignatures) {
  const auto net = testing::numbered(1, 2);
  EXPECT_EQ(induce(net, {"2", "3"}).signature(), (Signature{0, 2}));
  EXPECT_EQ(induce(net, {"3", "1"}).signature(), (Signature{1, 1}));
  EXPECT_EQ(grand_coalition(net).signature(), (Signature{1, 2}));
  EXPECT_TRUE(Coalition{}.empty());
  const auto c = induce(net, {"1", "2"});
  EXPECT_EQ(c.side_of(0), Side::K);
  EXPECT_EQ(c.side_of(1), Side::M);
  EXPECT_FALSE(c.side_of(2).has_value());
  EXPECT_EQ(c.without(0).signature(), (Signature{0, 1}));
  EXPECT_EQ(c.without(2), c);
}

TEST(Network, MaskEnumerationCoversEverySignatureCount) {
  const auto net = BipartiteNetwork::from_sizes(3, 2);
  std::map<std::pair<unsigned, unsigned>, int> counts;
  for (std::uint64_t mask = 0; mask < (1u << net.size()); ++mask) {
    const auto s = from_mask(net, mask).signature();
    counts[{s.k, s.m}]++;
  }
  for (unsigned k = 0; k <= 3; ++k)
    for (unsigned m = 0; m <= 2; ++m)
      EXPECT_EQ(Integer(counts[{k, m}]), binomial(3, k) * binomial(2, m));
}

TEST(Network, AdjacencyIsCompleteBipartite) {
  const auto net = BipartiteNetwork::from_sizes(2, 3);
  const auto g = adjacency(grand_coalition(net));
  EXPECT_TRUE(g.symmetric());
  for (std::size_t r = 0; r < 5; ++r) EXPECT_EQ(g.row_sum(r), r < 2 ? 3 : 2);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(g(i, i), 0);
}

// Largest adjacency eigenvalue equals sqrt(k m): compare with power iteration.
TEST(Network, SpectralRadiusMatchesPowerIteration) {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto g = adjacency(grand_coalition(BipartiteNetwork::from_sizes(k, m)));
      const double lambda = power_iteration(matrix_cast<double>(g));
      EXPECT_NEAR(lambda, spectral_radius(Signature{k, m}).approx(), 1e-9) << k << "," << m;
    }
}

TEST(Network, SpectralThresholdIsStrict) {
  const SpectralRadius rho{2};
  EXPECT_TRUE(rho.below_inverse(R("1/2")));
  EXPECT_TRUE(rho.below_inverse(R("7071/10000")));
  EXPECT_FALSE(rho.below_inverse(R("7072/10000")));
  EXPECT_FALSE(SpectralRadius{4}.below_inverse(R("1/2")));  // 4 * 1/4 == 1
}

TEST(Matrix, IntegerProductDetectsOverflow) {
  Matrix<std::int64_t> a(1, 1);
  a(0, 0) = std::int64_t{1} << 40;
  EXPECT_THROW(a * a, CapacityError);
}

}  // namespace
}  // namespace bipgame
