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

// Reference tables for the worked examples: three distribution centres
// (K={1}, M={2,3}) and its four-node extension (K={1}, M={2,3,4}). Each table
// carries exact values, which are what the golden files store, next to the
// decimals as they were published, which are checked to within 0.01.

#ifndef BIPGAME_CLI_REFERENCE_TABLES_HPP
#define BIPGAME_CLI_REFERENCE_TABLES_HPP

#include <string>
#include <vector>

#include "bipgame/bipgame.hpp"
#include "bipgame/cli/render.hpp"

namespace bipgame::cli {

struct ReferenceTable {
  std::string id;  // golden file stem
  std::string title;
  Table table;  // first column is a row label, the rest are exact values
  std::vector<std::vector<std::string>> published;
};

/// Cells whose published decimal lies further than this from the exact value.
struct PublishedMismatch {
  std::size_t row;
  std::size_t column;
  std::string published;
  Rational exact;
};

inline const Rational& published_tolerance() {
  static const Rational tol(1, 100);
  return tol;
}

inline std::vector<PublishedMismatch> check_published(const ReferenceTable& t) {
  std::vector<PublishedMismatch> out;
  for (std::size_t r = 0; r < t.table.rows.size(); ++r)
    for (std::size_t c = 1; c < t.table.rows[r].size(); ++c) {
      const Rational& exact = std::get<Rational>(t.table.rows[r][c]);
      const std::string& printed = t.published.at(r).at(c - 1);
      Rational diff = exact - parse_rational(printed);
      if (diff < 0) diff = -diff;
      if (diff > published_tolerance()) out.push_back({r, c, printed, exact});
    }
  return out;
}

namespace detail {

inline BipartiteNetwork centres(unsigned leaves) {
  std::vector<std::string> ms;
  for (unsigned j = 2; j <= leaves + 1; ++j) ms.push_back(std::to_string(j));
  return BipartiteNetwork({"1"}, ms);
}

inline std::vector<Cell> row(std::string label, const std::vector<Rational>& values) {
  std::vector<Cell> cells{std::move(label)};
  for (const auto& v : values) cells.emplace_back(v);
  return cells;
}

inline std::vector<Cell> worker_row(const BipartiteNetwork& net, NodeIndex i,
                                    const std::vector<const Allocation*>& columns) {
  std::vector<Rational> values;
  for (const auto* a : columns) values.push_back((*a)[i]);
  return row(net.label(i), values);
}

}  // namespace detail

inline std::vector<ReferenceTable> reference_tables() {
  using detail::row;
  const Rational half(1, 2), third(1, 3);
  const auto net3 = detail::centres(2);
  const auto net4 = detail::centres(3);
  const Coalition single = induce(net3, {"2"});
  const Coalition leaves = induce(net3, {"2", "3"});
  const Coalition pair = induce(net3, {"1", "2"});
  const Coalition grand = grand_coalition(net3);
  const unsigned horizons[] = {0, 1, 2, 3, 10};

  std::vector<ReferenceTable> out;

  {
    ReferenceTable t{"fan_horizons", "FAN game values v^t(S), K={1}, M={2,3}, delta=1/2", {}, {}};
    t.table.header = {"S", "t=0", "t=1", "t=2", "t=3", "t=10"};
    const std::pair<const char*, const Coalition*> rows[] = {
        {"{i}", &single}, {"{2,3}", &leaves}, {"{1,i}", &pair}, {"N", &grand}};
    for (const auto& [label, c] : rows) {
      std::vector<Rational> values;
      for (unsigned h : horizons) values.push_back(fan_value(*c, {half, h}));
      t.table.rows.push_back(row(label, values));
    }
    t.published = {{"1", "1", "1", "1", "1"},
                   {"2", "2", "2", "2", "2"},
                   {"2", "3", "3.5", "3.75", "3.998"},
                   {"3", "5", "6.5", "7.5", "9.78125"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"fan_productivity", "Productivity in N, p^N(1/2, t), K={1}, M={2,3}", {}, {}};
    t.table.header = {"worker", "t=0", "t=1", "t=2", "t=3", "t=10"};
    for (NodeIndex i = 0; i < 3; ++i) {
      std::vector<Rational> values;
      for (unsigned h : horizons) values.push_back(individual_productivity(grand, i, {half, h}));
      t.table.rows.push_back(row(net3.label(i), values));
    }
    t.published = {{"1", "2", "2.5", "3", "3.90625"},
                   {"1", "1.5", "2", "2.25", "2.9375"},
                   {"1", "1.5", "2", "2.25", "2.9375"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"fan_convergence", "FAN games approaching the AN game, K={1}, M={2,3}, delta=1/2", {}, {}};
    t.table.header = {"horizon", "{i}", "{2,3}", "{1,i}", "N"};
    const Coalition* cols[] = {&single, &leaves, &pair, &grand};
    for (unsigned h : horizons) {
      std::vector<Rational> values;
      for (const auto* c : cols) values.push_back(fan_value(*c, {half, h}));
      t.table.rows.push_back(row("t=" + std::to_string(h), values));
    }
    std::vector<Rational> limits;
    for (const auto* c : cols) limits.push_back(an_value(*c, half));
    t.table.rows.push_back(row("limit", limits));
    t.published = {{"1", "2", "2", "3"},     {"1", "2", "3", "5"},         {"1", "2", "3.5", "6.5"},
                   {"1", "2", "3.75", "7.5"}, {"1", "2", "3.998", "9.78125"}, {"1", "2", "4", "10"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"shapley_three", "Productivity vs Shapley value, K={1}, M={2,3}, delta=1/2", {}, {}};
    t.table.header = {"worker", "p^N", "shapley"};
    const auto p = productivity_allocation(net3, half);
    const auto phi = shapley_closed(net3, half);
    for (NodeIndex i = 0; i < 3; ++i) t.table.rows.push_back(detail::worker_row(net3, i, {&p, &phi}));
    t.published = {{"4", "4"}, {"3", "3"}, {"3", "3"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"shapley_four", "Productivity vs Shapley value, K={1}, M={2,3,4}, delta=1/3", {}, {}};
    t.table.header = {"worker", "p^N", "shapley"};
    const auto p = productivity_allocation(net4, third);
    const auto phi = shapley_closed(net4, third);
    for (NodeIndex i = 0; i < 4; ++i) t.table.rows.push_back(detail::worker_row(net4, i, {&p, &phi}));
    t.published = {{"3", "3.14"}, {"2", "1.95"}, {"2", "1.95"}, {"2", "1.95"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"difference_games", "Difference games d^t(S), K={1}, M={2,3}, delta=1/2", {}, {}};
    t.table.header = {"horizon", "{i}", "{2,3}", "{1,i}", "N"};
    const Coalition* cols[] = {&single, &leaves, &pair, &grand};
    for (unsigned h = 1; h <= 5; ++h) {
      std::vector<Rational> values;
      for (const auto* c : cols) values.push_back(difference_value(*c, half, h));
      t.table.rows.push_back(row("t=" + std::to_string(h), values));
    }
    t.published = {{"0", "0", "1", "2"},
                   {"0", "0", "0.5", "1.5"},
                   {"0", "0", "0.25", "1"},
                   {"0", "0", "0.125", "0.75"},
                   {"0", "0", "0.0625", "0.5"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"difference_distribution", "Difference distributions x^t, K={1}, M={2,3}, delta=1/2", {}, {}};
    t.table.header = {"worker", "x^1", "x^2", "x^3", "x^4", "x^5"};
    std::vector<Allocation> xs;
    for (unsigned h = 1; h <= 5; ++h) xs.push_back(difference_distribution(net3, half, h));
    for (NodeIndex i = 0; i < 3; ++i) {
      std::vector<Rational> values;
      for (const auto& x : xs) values.push_back(x[i]);
      t.table.rows.push_back(row(net3.label(i), values));
    }
    t.published = {{"4/3", "1", "2/3", "1/2", "1/3"},
                   {"1/3", "1/4", "1/6", "1/8", "1/12"},
                   {"1/3", "1/4", "1/6", "1/8", "1/12"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"lrp_three", "Productivity, Shapley value and LRP, K={1}, M={2,3}, delta=1/2", {}, {}};
    t.table.header = {"worker", "p^N", "shapley", "lrp"};
    const auto p = productivity_allocation(net3, half);
    const auto phi = shapley_closed(net3, half);
    const auto omega = lrp(net3, half);
    for (NodeIndex i = 0; i < 3; ++i) t.table.rows.push_back(detail::worker_row(net3, i, {&p, &phi, &omega}));
    t.published = {{"4", "4", "17/3"}, {"3", "3", "13/6"}, {"3", "3", "13/6"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"an_four", "AN game values, K={1}, M={2,3,4}", {}, {}};
    t.table.header = {"S", "delta=1/2", "delta=1/3"};
    const std::pair<const char*, Coalition> rows[] = {
        {"{i}", induce(net4, {"2"})},           {"{2,3}", induce(net4, {"2", "3"})},
        {"{1,i}", induce(net4, {"1", "2"})},     {"{2,3,4}", induce(net4, {"2", "3", "4"})},
        {"{1,2,3}", induce(net4, {"1", "2", "3"})}, {"N", grand_coalition(net4)}};
    for (const auto& [label, c] : rows) t.table.rows.push_back(row(label, {an_value(c, half), an_value(c, third)}));
    t.published = {{"1", "1"}, {"2", "2"}, {"4", "3"}, {"3", "3"}, {"10", "39/7"}, {"28", "9"}};
    out.push_back(std::move(t));
  }
  {
    ReferenceTable t{"allocations_four", "Productivity, Shapley value and LRP, K={1}, M={2,3,4}", {}, {}};
    t.table.header = {"worker", "p^N(1/2)", "shapley(1/2)", "lrp(1/2)", "p^N(1/3)", "shapley(1/3)", "lrp(1/3)"};
    const auto p2 = productivity_allocation(net4, half), p3 = productivity_allocation(net4, third);
    const auto s2 = shapley_closed(net4, half), s3 = shapley_closed(net4, third);
    const auto w2 = lrp(net4, half), w3 = lrp(net4, third);
    for (NodeIndex i = 0; i < 4; ++i)
      t.table.rows.push_back(detail::worker_row(net4, i, {&p2, &s2, &w2, &p3, &s3, &w3}));
    t.published = {{"10", "9.25", "19", "3", "3.14", "4.75"},
                   {"6", "6.25", "3", "2", "1.95", "1.41"},
                   {"6", "6.25", "3", "2", "1.95", "1.41"},
                   {"6", "6.25", "3", "2", "1.95", "1.41"}};
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace bipgame::cli

#endif  // BIPGAME_CLI_REFERENCE_TABLES_HPP
