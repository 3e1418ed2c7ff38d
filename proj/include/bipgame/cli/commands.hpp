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

// Command dispatch for the bipgame tool. `run` takes a fully parsed
// configuration and returns the rendered output and exit status, so it can be
// driven both by the argument parser and directly from tests.

#ifndef BIPGAME_CLI_COMMANDS_HPP
#define BIPGAME_CLI_COMMANDS_HPP

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "bipgame/bipgame.hpp"
#include "bipgame/cli/reference_tables.hpp"
#include "bipgame/cli/render.hpp"

namespace bipgame::cli {

struct RunConfig {
  std::string command;
  std::optional<unsigned> k;
  std::optional<unsigned> m;
  std::optional<std::string> network_path;
  std::optional<std::string> delta;
  std::optional<unsigned> t;
  std::optional<std::string> coalition;
  std::string game = "an";
  std::string rule = "productivity";
  std::optional<std::string> allocation;
  std::string gate = "grand";
  bool oracle = false;
  bool exact = false;
  bool distribution = false;
  bool independence = false;
  bool update = false;
  Format format = Format::text;
  std::optional<std::string> out;
  std::string golden_dir;
};

struct Outcome {
  int exit_code = 0;
  std::string output;       // stdout, or written to --out
  std::string diagnostics;  // stderr
};

namespace detail {

struct Report {
  std::string title;
  Json result = Json::object();
  Table table;
  int exit_code = 0;
  std::string extra_text;  // appended in text mode only
};

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

inline BipartiteNetwork load_network_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open network document '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw InputError("network document '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    if (doc.contains("K") && doc.contains("M"))
      return BipartiteNetwork(doc.at("K").get<std::vector<std::string>>(), doc.at("M").get<std::vector<std::string>>());
    if (doc.contains("k") && doc.contains("m"))
      return BipartiteNetwork::from_sizes(doc.at("k").get<unsigned>(), doc.at("m").get<unsigned>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("network document '" + path + "': " + e.what());
  }
  throw InputError("network document '" + path + "' needs either \"K\"/\"M\" label lists or \"k\"/\"m\" sizes");
}

inline BipartiteNetwork network_of(const RunConfig& c) {
  if (c.network_path) {
    if (c.k || c.m) throw InputError("give either --network or --k/--m, not both");
    return load_network_document(*c.network_path);
  }
  if (!c.k || !c.m) throw InputError("network required: pass --k and --m, or --network <document>");
  return BipartiteNetwork::from_sizes(*c.k, *c.m);
}

inline Rational delta_of(const RunConfig& c) {
  if (!c.delta) throw InputError("--delta is required for '" + c.command + "'");
  const Rational d = parse_rational(*c.delta);
  if (d < 0) throw InputError("attenuation factor must be nonnegative, got " + *c.delta);
  return d;
}

inline unsigned horizon_of(const RunConfig& c) {
  if (!c.t) throw InputError("--t is required for '" + c.command + "'");
  return *c.t;
}

inline Coalition coalition_of(const BipartiteNetwork& net, const std::string& text) {
  if (text == "N") return grand_coalition(net);
  const auto labels = split_list(text);
  for (const auto& l : labels)
    if (l.empty()) throw InputError("empty node label in coalition '" + text + "'");
  return induce(net, std::span<const std::string>(labels));
}

inline Json labels_json(const BipartiteNetwork& net, const Coalition& c) {
  Json out = Json::array();
  for (auto i : c.members()) out.push_back(net.label(i));
  return out;
}

inline Json signature_json(const Signature& s) { return Json::array({s.k, s.m}); }

inline Json allocation_json(const Allocation& a, bool exact) {
  Json payoffs = Json::object();
  for (NodeIndex i = 0; i < a.network().size(); ++i) payoffs[a.network().label(i)] = scalar(a[i], exact);
  return Json{{"rule", to_string(a.rule())}, {"payoffs", std::move(payoffs)}, {"total", scalar(a.total(), exact)}};
}

inline Table allocation_table(const Allocation& a) {
  Table t{{"node", "side", "payoff"}, {}};
  for (NodeIndex i = 0; i < a.network().size(); ++i)
    t.rows.push_back({a.network().label(i), std::string(to_string(a.network().side(i))), a[i]});
  return t;
}

inline Report allocation_report(std::string title, const Allocation& a, bool exact) {
  return {std::move(title), allocation_json(a, exact), allocation_table(a), 0, {}};
}

/// Game table selected by --game, with its parameters validated.
inline GameTable game_of(const RunConfig& c, const BipartiteNetwork& net, const Rational& d) {
  if (c.game == "an") return an_table(net, d);
  if (c.game == "fan") return fan_table(net, {d, horizon_of(c)});
  if (c.game == "diff") return difference_table(net, d, horizon_of(c));
  throw InputError("unknown game '" + c.game + "' (expected an, fan or diff)");
}

inline Report value_report(const RunConfig& c, const BipartiteNetwork& net, const std::string& game,
                           const std::function<Rational(const Signature&)>& value,
                           const std::function<Rational(const Coalition&)>& coalition_value) {
  Report r;
  r.result["game"] = game;
  if (c.coalition) {
    const Coalition s = coalition_of(net, *c.coalition);
    const Rational v = coalition_value(s);
    r.title = game + " value of " + *c.coalition;
    r.result["coalition"] = Json{{"members", labels_json(net, s)}, {"signature", signature_json(s.signature())}};
    r.result["value"] = scalar(v, c.exact);
    std::string members;
    for (auto i : s.members()) members += (members.empty() ? "" : ",") + net.label(i);
    r.table = {{"coalition", "k", "m", "value"},
               {{"{" + members + "}", Rational(s.signature().k), Rational(s.signature().m), v}}};
    return r;
  }
  r.title = game + " values by signature";
  r.result["values"] = Json::array();
  r.table.header = {"k", "m", "value"};
  for (unsigned k = 0; k <= net.k_size(); ++k)
    for (unsigned m = 0; m <= net.m_size(); ++m) {
      const Signature s{k, m};
      const Rational v = value(s);
      r.result["values"].push_back(Json{{"k", k}, {"m", m}, {"value", scalar(v, c.exact)}});
      r.table.rows.push_back({Rational(k), Rational(m), v});
    }
  return r;
}

inline Rational oracle_fan_value(const Coalition& s, const AttenuationParams& p) {
  const auto pm = productivity_matrix_oracle(s, p);
  Rational total = 0;
  for (std::size_t r = 0; r < pm.entries.rows(); ++r) total += pm.entries.row_sum(r);
  return total;
}

inline Report cmd_fan(const RunConfig& c) {
  const auto net = network_of(c);
  const AttenuationParams p(delta_of(c), horizon_of(c));
  auto by_signature = [&](const Signature& s) {
    if (!c.oracle) return fan_value(s, p);
    std::vector<NodeIndex> nodes;
    for (unsigned i = 0; i < s.k; ++i) nodes.push_back(i);
    for (unsigned j = 0; j < s.m; ++j) nodes.push_back(net.k_size() + j);
    return oracle_fan_value(induce(net, std::span<const NodeIndex>(nodes)), p);
  };
  auto by_coalition = [&](const Coalition& s) { return c.oracle ? oracle_fan_value(s, p) : fan_value(s, p); };
  return value_report(c, net, "fan", by_signature, by_coalition);
}

inline Report cmd_an(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  if (c.gate == "grand") {
    bipgame::detail::require_convergent(net.signature(), d);
  } else if (c.gate != "coalition") {
    throw InputError("unknown gate '" + c.gate + "' (expected grand or coalition)");
  } else if (!c.coalition) {
    throw InputError("--gate coalition needs --coalition");
  }
  return value_report(
      c, net, "an", [&](const Signature& s) { return an_value(s, d); },
      [&](const Coalition& s) { return an_value(s, d); });
}

inline Report cmd_diff(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  const unsigned t = horizon_of(c);
  if (c.distribution) {
    const auto x = c.oracle ? difference_distribution_explicit(net, d, t) : difference_distribution(net, d, t);
    return allocation_report("difference distribution x^" + std::to_string(t), x, c.exact);
  }
  return value_report(
      c, net, "diff", [&](const Signature& s) { return difference_value(s, d, t); },
      [&](const Coalition& s) { return difference_value(s, d, t); });
}

inline Report cmd_shapley(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  if (c.t) return allocation_report("shapley value of the FAN game", shapley_oracle(net, fan_table(net, {d, *c.t})),
                                    c.exact);
  if (c.oracle) return allocation_report("shapley value (oracle)", shapley_oracle(net, an_table(net, d)), c.exact);
  return allocation_report("shapley value", shapley_closed(net, d), c.exact);
}

inline Report cmd_lrp(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  if (c.oracle) {
    bipgame::detail::require_convergent(net.signature(), d);
    const unsigned t_max = c.t.value_or(64);
    auto r = allocation_report("lrp partial sum through t=" + std::to_string(t_max),
                               lrp_series_oracle(net, d, t_max), c.exact);
    const auto bound = lrp_series_tail_bound(net, d, t_max);
    r.result["tail_bound"] = Json{{"K", scalar(bound.k_side, c.exact)}, {"M", scalar(bound.m_side, c.exact)}};
    return r;
  }
  return allocation_report("lrp distribution", lrp(net, d), c.exact);
}

inline Report cmd_productivity(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  if (c.t)
    return allocation_report("productivity at horizon " + std::to_string(*c.t),
                             productivity_allocation(net, AttenuationParams(d, *c.t)), c.exact);
  return allocation_report("limit productivity", productivity_allocation(net, d), c.exact);
}

inline Allocation parse_allocation(const BipartiteNetwork& net, const std::string& text) {
  const auto items = split_list(text);
  std::vector<Rational> payoffs(net.size());
  if (!items.empty() && items.front().find('=') != std::string::npos) {
    std::vector<bool> seen(net.size(), false);
    for (const auto& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("mixed allocation syntax in '" + text + "'");
      const NodeIndex i = net.index_of(item.substr(0, eq));
      if (seen[i]) throw InputError("node '" + net.label(i) + "' assigned twice");
      seen[i] = true;
      payoffs[i] = parse_rational(item.substr(eq + 1));
    }
    for (NodeIndex i = 0; i < net.size(); ++i)
      if (!seen[i]) throw InputError("allocation misses node '" + net.label(i) + "'");
  } else {
    if (items.size() != net.size())
      throw InputError("allocation lists " + std::to_string(items.size()) + " payoffs for " +
                       std::to_string(net.size()) + " nodes");
    for (std::size_t i = 0; i < items.size(); ++i) payoffs[i] = parse_rational(items[i]);
  }
  return Allocation(net, std::move(payoffs), Rule::custom);
}

inline Allocation allocation_of(const RunConfig& c, const BipartiteNetwork& net, const Rational& d) {
  if (c.allocation) return parse_allocation(net, *c.allocation);
  if (c.rule == "productivity") return productivity_allocation(net, d);
  if (c.rule == "shapley") return shapley_closed(net, d);
  if (c.rule == "lrp") return lrp(net, d);
  if (c.rule == "difference") return difference_distribution(net, d, horizon_of(c));
  throw InputError("unknown rule '" + c.rule + "' (expected productivity, shapley, lrp or difference)");
}

inline Report cmd_core_check(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  const auto game = game_of(c, net, d);
  const auto alloc = allocation_of(c, net, d);
  const auto report = core_check(game, alloc);
  Report r;
  r.title = "core check";
  r.result = Json{{"game", c.game},
                  {"rule", to_string(alloc.rule())},
                  {"in_core", report.in_core},
                  {"efficient", report.efficient},
                  {"allocated", scalar(report.allocated, c.exact)},
                  {"grand_value", scalar(report.grand_value, c.exact)},
                  {"violations", Json::array()}};
  r.table.header = {"k", "m", "members", "value", "payoff", "shortfall"};
  for (const auto& v : report.violations) {
    Json entry{{"signature", signature_json(v.signature)},
               {"shortfall", scalar(v.shortfall, c.exact)},
               {"value", scalar(v.value, c.exact)},
               {"payoff", scalar(v.payoff, c.exact)}};
    std::string members = "*";
    if (v.members) {
      const auto s = from_mask(net, *v.members);
      entry["members"] = labels_json(net, s);
      members.clear();
      for (auto i : s.members()) members += (members.empty() ? "" : " ") + net.label(i);
    }
    r.result["violations"].push_back(std::move(entry));
    r.table.rows.push_back({Rational(v.signature.k), Rational(v.signature.m), members, v.value, v.payoff, v.shortfall});
  }
  r.extra_text = std::string("in_core: ") + (report.in_core ? "yes" : "no") +
                 "\nefficient: " + (report.efficient ? "yes" : "no") + " (allocated " +
                 scalar(report.allocated, c.exact) + ", v(N) = " + scalar(report.grand_value, c.exact) + ")\n";
  return r;
}

inline Report cmd_convexity(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  const auto game = game_of(c, net, d);
  const auto convex = convexity_check(game);
  const auto super = superadditivity_check(game);
  const auto mono = monotonicity_check(game);
  Report r;
  r.title = "convexity check";
  Json first = nullptr;
  r.table.header = {"property", "holds"};
  if (convex.first_violation) {
    const auto& v = *convex.first_violation;
    first = Json{{"side", to_string(v.side)},
                 {"smaller", signature_json(v.smaller)},
                 {"larger", signature_json(v.larger)},
                 {"smaller_marginal", scalar(v.smaller_marginal, c.exact)},
                 {"larger_marginal", scalar(v.larger_marginal, c.exact)}};
    r.extra_text = "first violation: side " + std::string(to_string(v.side)) + ", " + to_string(v.smaller) +
                   " gains " + scalar(v.smaller_marginal, c.exact) + " but " + to_string(v.larger) + " gains " +
                   scalar(v.larger_marginal, c.exact) + "\n";
  }
  r.result = Json{{"game", c.game},
                  {"convex", convex.convex},
                  {"first_violation", std::move(first)},
                  {"superadditive", super.holds},
                  {"monotone", mono.holds}};
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  r.table.rows = {{std::string("convex"), yes(convex.convex)},
                  {std::string("superadditive"), yes(super.holds)},
                  {std::string("monotone"), yes(mono.holds)}};
  return r;
}

inline Json witness_json(const std::optional<AxiomWitness>& w, bool exact) {
  if (!w) return nullptr;
  return Json{{"equation", w->equation}, {"lhs", scalar(w->lhs, exact)}, {"rhs", scalar(w->rhs, exact)}};
}

inline Json axioms_json(const AxiomReport& a, bool exact) {
  return Json{{"ef", a.ef},
              {"eb", a.eb},
              {"lbp", a.lbp},
              {"witnesses",
               {{"ef", witness_json(a.ef_witness, exact)},
                {"eb", witness_json(a.eb_witness, exact)},
                {"lbp", witness_json(a.lbp_witness, exact)}}},
              {"lbp_sides", Json::array({scalar(a.lbp_k_side, exact), scalar(a.lbp_m_side, exact)})}};
}

inline std::string witness_text(const std::optional<AxiomWitness>& w, bool exact) {
  if (!w) return "";
  return scalar(w->lhs, exact) + " != " + scalar(w->rhs, exact);
}

inline Report cmd_axioms(const RunConfig& c) {
  Report r;
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  if (c.independence) {
    r.title = "axiom independence examples";
    r.result["cases"] = Json::array();
    r.table.header = {"case", "network", "delta", "EF", "EB", "LBP", "as claimed", "note"};
    for (const auto& ic : independence_suite()) {
      Json entry{{"name", ic.name},
                 {"failing_axiom", ic.failing_axiom},
                 {"network", {{"k", ic.network.k_size()}, {"m", ic.network.m_size()}}},
                 {"delta", to_exact_string(ic.delta)},
                 {"evaluable", ic.report.has_value()},
                 {"as_claimed", ic.as_claimed()}};
      if (ic.report) {
        entry["axioms"] = axioms_json(*ic.report, c.exact);
        const auto& w = ic.failing_axiom == "EF"   ? ic.report->ef_witness
                        : ic.failing_axiom == "EB" ? ic.report->eb_witness
                                                   : ic.report->lbp_witness;
        r.table.rows.push_back({ic.name, to_string(ic.network.signature()), to_exact_string(ic.delta),
                                yes(ic.report->ef), yes(ic.report->eb), yes(ic.report->lbp), yes(ic.as_claimed()),
                                witness_text(w, c.exact)});
      } else {
        entry["error"] = ic.error;
        r.table.rows.push_back({ic.name, to_string(ic.network.signature()), to_exact_string(ic.delta),
                                std::string("-"), std::string("-"), std::string("-"), yes(false), ic.error});
      }
      r.result["cases"].push_back(std::move(entry));
    }
    return r;
  }
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  const auto alloc = allocation_of(c, net, d);
  const auto a = axiom_check(net, d, alloc);
  r.title = "axioms";
  r.result = axioms_json(a, c.exact);
  r.result["rule"] = to_string(alloc.rule());
  r.table.header = {"axiom", "holds", "witness"};
  r.table.rows = {{std::string("EF"), yes(a.ef), witness_text(a.ef_witness, c.exact)},
                  {std::string("EB"), yes(a.eb), witness_text(a.eb_witness, c.exact)},
                  {std::string("LBP"), yes(a.lbp), witness_text(a.lbp_witness, c.exact)}};
  return r;
}

inline Report cmd_converge(const RunConfig& c) {
  const auto net = network_of(c);
  const Rational d = delta_of(c);
  const auto v = convergence_check(net, d);
  const double threshold = 1.0 / spectral_radius(net.signature()).approx();
  Report r;
  r.title = "convergence";
  r.result = Json{{"converges", v.converges},
                  {"threshold_radicand", v.threshold_radicand.str()},
                  {"margin", scalar(v.margin, c.exact)},
                  {"threshold", to_decimal_string(Rational(threshold))}};
  r.table = {{"converges", "threshold_radicand", "threshold", "margin"},
             {{std::string(v.converges ? "yes" : "no"), Rational(v.threshold_radicand),
               to_decimal_string(Rational(threshold)), v.margin}}};
  r.extra_text = v.converges ? "" : "diverges: need delta < 1/sqrt(" + v.threshold_radicand.str() + ")\n";
  return r;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string line_diff(const std::string& expected, const std::string& actual) {
  std::istringstream e(expected), a(actual);
  std::string le, la, out;
  for (int line = 1;; ++line) {
    const bool he = static_cast<bool>(std::getline(e, le));
    const bool ha = static_cast<bool>(std::getline(a, la));
    if (!he && !ha) break;
    if (he && ha && le == la) continue;
    out += "  line " + std::to_string(line) + ":\n";
    if (he) out += "    - " + le + "\n";
    if (ha) out += "    + " + la + "\n";
  }
  return out;
}

inline Report cmd_tables(const RunConfig& c) {
  namespace fs = std::filesystem;
  const fs::path dir = c.golden_dir;
  Report r;
  r.title = "reference tables";
  r.result["golden_dir"] = dir.string();
  r.result["tables"] = Json::array();
  bool all_ok = true;
  std::string text;
  for (const auto& ref : reference_tables()) {
    const std::string actual = render_csv(ref.table, true);
    const fs::path file = dir / (ref.id + ".csv");
    std::string status;
    std::string diff;
    if (c.update) {
      fs::create_directories(dir);
      std::ofstream(file, std::ios::binary) << actual;
      status = "updated";
    } else if (!fs::exists(file)) {
      status = "missing";
    } else {
      const std::string expected = read_file(file);
      status = expected == actual ? "match" : "mismatch";
      if (status == "mismatch") diff = line_diff(expected, actual);
    }
    const auto published = check_published(ref);
    const bool ok = (status == "match" || status == "updated") && published.empty();
    all_ok = all_ok && ok;

    Json off = Json::array();
    for (const auto& p : published)
      off.push_back(Json{{"row", p.row}, {"column", ref.table.header[p.column]}, {"published", p.published},
                         {"exact", to_exact_string(p.exact)}});
    Json entry{{"id", ref.id}, {"title", ref.title}, {"golden", status}, {"published_within_tolerance", published.empty()}};
    entry["published_mismatches"] = std::move(off);
    entry["table"] = table_json(ref.table, c.exact);
    r.result["tables"].push_back(std::move(entry));

    text += "== " + ref.id + ": " + ref.title + "\n" + render_text(ref.table, c.exact);
    text += "golden: " + status + "; published decimals " +
            (published.empty() ? "within 0.01" : "OUTSIDE 0.01 (" + std::to_string(published.size()) + " cells)") + "\n";
    if (!diff.empty()) text += "diff (- golden, + computed):\n" + diff;
    text += "\n";
    if (c.format == Format::csv) r.table.rows.push_back({ref.id, status, std::string(published.empty() ? "yes" : "no")});
  }
  r.result["all_match"] = all_ok;
  r.table.header = {"table", "golden", "published_within_tolerance"};
  r.extra_text = text + (all_ok ? "all tables match\n" : "MISMATCH\n");
  r.exit_code = all_ok ? 0 : 1;
  return r;
}

inline Report dispatch(const RunConfig& c) {
  if (c.command == "fan") return cmd_fan(c);
  if (c.command == "an") return cmd_an(c);
  if (c.command == "diff") return cmd_diff(c);
  if (c.command == "shapley") return cmd_shapley(c);
  if (c.command == "lrp") return cmd_lrp(c);
  if (c.command == "productivity") return cmd_productivity(c);
  if (c.command == "core-check") return cmd_core_check(c);
  if (c.command == "convexity") return cmd_convexity(c);
  if (c.command == "axioms") return cmd_axioms(c);
  if (c.command == "converge") return cmd_converge(c);
  if (c.command == "paper-tables") return cmd_tables(c);
  throw InputError("unknown command '" + c.command + "'");
}

inline Json envelope(const RunConfig& c) {
  Json env{{"command", c.command}};
  Json network = nullptr;
  try {
    if (c.command != "paper-tables" && !(c.command == "axioms" && c.independence)) {
      const auto net = network_of(c);
      network = Json{{"k", net.k_size()}, {"m", net.m_size()}, {"labels", {{"K", net.k_labels()}, {"M", net.m_labels()}}}};
    }
  } catch (const Error&) {
  }
  env["network"] = std::move(network);
  Json delta = nullptr;
  if (c.delta) {
    try {
      delta = to_exact_string(parse_rational(*c.delta));
    } catch (const Error&) {
      delta = *c.delta;
    }
  }
  env["params"] = Json{{"delta", std::move(delta)}, {"t", c.t ? Json(*c.t) : Json(nullptr)}};
  return env;
}

}  // namespace detail

inline Outcome run(const RunConfig& c) {
  Outcome o;
  try {
    auto report = detail::dispatch(c);
    o.exit_code = report.exit_code;
    switch (c.format) {
      case Format::json: {
        Json env = detail::envelope(c);
        env["result"] = std::move(report.result);
        env["exact"] = c.exact;
        o.output = env.dump(2) + "\n";
        break;
      }
      case Format::csv:
        o.output = render_csv(report.table, c.exact);
        break;
      case Format::text:
        o.output = report.title + "\n";
        if (c.command == "paper-tables") {
          o.output += report.extra_text;
        } else {
          o.output += render_text(report.table, c.exact) + report.extra_text;
        }
        break;
    }
  } catch (const Error& e) {
    o.exit_code = e.exit_code();
    o.diagnostics = std::string("error (") + e.kind() + "): " + e.what() + "\n";
    if (c.format == Format::json) {
      Json env = detail::envelope(c);
      env["error"] = Json{{"kind", e.kind()}, {"message", e.what()}, {"exit_code", e.exit_code()}};
      env["exact"] = c.exact;
      o.output = env.dump(2) + "\n";
    }
  }
  if (c.out && !o.output.empty()) {
    std::ofstream file(*c.out, std::ios::binary);
    if (!file) {
      o.diagnostics += "error (input): cannot write '" + *c.out + "'\n";
      o.exit_code = 2;
      return o;
    }
    file << o.output;
    o.output.clear();
  }
  return o;
}

}  // namespace bipgame::cli

#endif  // BIPGAME_CLI_COMMANDS_HPP
