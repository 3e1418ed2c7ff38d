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

// Argument parsing for the bipgame tool.

#ifndef BIPGAME_CLI_APP_HPP
#define BIPGAME_CLI_APP_HPP

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "bipgame/cli/commands.hpp"

#ifndef BIPGAME_DEFAULT_GOLDEN_DIR
#define BIPGAME_DEFAULT_GOLDEN_DIR "data/golden"
#endif

namespace bipgame::cli {

namespace detail {

struct Flags {
  RunConfig config;
  std::string format = "text";
};

inline void add_output_options(CLI::App& sub, Flags& f) {
  sub.add_flag("--exact", f.config.exact, "Print exact rationals (p/q) instead of decimals");
  sub.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub.add_option("--out", f.config.out, "Write output to this file instead of stdout");
}

inline void add_network_options(CLI::App& sub, Flags& f) {
  sub.add_option("--k", f.config.k, "Number of nodes on side K")->check(CLI::Range(1u, 64u));
  sub.add_option("--m", f.config.m, "Number of nodes on side M")->check(CLI::Range(1u, 64u));
  sub.add_option("--network", f.config.network_path,
                 "JSON document {\"K\":[labels],\"M\":[labels]} or {\"k\":n,\"m\":n}");
  sub.add_option("--delta", f.config.delta, "Attenuation factor: p/q, integer or finite decimal");
}

}  // namespace detail

/// Parses arguments, runs the command and writes to the given streams.
/// Returns the process exit status.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Cooperative productivity games on complete bipartite networks"};
  app.require_subcommand(1);
  detail::Flags f;
  f.config.golden_dir = BIPGAME_DEFAULT_GOLDEN_DIR;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"fan", "Finite-horizon game values (needs --t)"},
      {"an", "Limit game values"},
      {"diff", "Difference game values or, with --distribution, the x^t allocation (needs --t)"},
      {"shapley", "Shapley value of the limit game (or of the FAN game with --t)"},
      {"lrp", "Link ratio productivity distribution"},
      {"productivity", "Individual productivity in the grand coalition (finite horizon with --t)"},
      {"core-check", "Core membership of an allocation"},
      {"convexity", "Convexity, superadditivity and monotonicity of a game"},
      {"axioms", "EF / EB / LBP axioms for an allocation"},
      {"converge", "Convergence verdict for an attenuation factor"},
      {"paper-tables", "Regenerate the reference tables and diff them against the goldens"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&f, name = std::string(s.name)] { f.config.command = name; });
    detail::add_output_options(*sub, f);
    const std::string name = s.name;
    if (name == "paper-tables") {
      sub->alias("tables");
      sub->add_option("--golden-dir", f.config.golden_dir, "Directory holding the golden CSV files");
      sub->add_flag("--update", f.config.update, "Rewrite the golden files from the computed tables");
      continue;
    }
    detail::add_network_options(*sub, f);
    if (name != "converge") sub->add_option("--t", f.config.t, "Walk horizon t");
    if (name == "fan" || name == "an" || name == "diff")
      sub->add_option("--coalition", f.config.coalition, "Comma-separated node labels, or N for all nodes");
    if (name == "fan" || name == "shapley" || name == "lrp" || name == "diff")
      sub->add_flag("--oracle", f.config.oracle, "Use the brute-force oracle instead of the closed form");
    if (name == "an")
      sub->add_option("--gate", f.config.gate, "Convergence gate")->check(CLI::IsMember({"grand", "coalition"}));
    if (name == "diff") sub->add_flag("--distribution", f.config.distribution, "Print the x^t allocation");
    if (name == "core-check" || name == "convexity")
      sub->add_option("--game", f.config.game, "Game: an, fan or diff")->check(CLI::IsMember({"an", "fan", "diff"}));
    if (name == "core-check" || name == "axioms") {
      sub->add_option("--rule", f.config.rule, "Allocation rule")
          ->check(CLI::IsMember({"productivity", "shapley", "lrp", "difference"}));
      sub->add_option("--allocation", f.config.allocation,
                      "Explicit allocation: payoffs in node order, or label=value pairs");
    }
    if (name == "axioms")
      sub->add_flag("--independence", f.config.independence, "Evaluate the three axiom independence examples");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  f.config.format = parse_format(f.format);
  const Outcome o = run(f.config);
  out << o.output;
  err << o.diagnostics;
  return o.exit_code;
}

}  // namespace bipgame::cli

#endif  // BIPGAME_CLI_APP_HPP
