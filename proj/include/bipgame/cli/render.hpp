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

// Rendering of results as aligned text, CSV and JSON.

#ifndef BIPGAME_CLI_RENDER_HPP
#define BIPGAME_CLI_RENDER_HPP

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "bipgame/errors.hpp"
#include "bipgame/rational.hpp"

namespace bipgame::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InputError("unknown output format '" + name + "' (expected text, json or csv)");
}

/// Exact "p/q" or a 6-significant-digit decimal view.
inline std::string scalar(const Rational& x, bool exact) { return exact ? to_exact_string(x) : to_decimal_string(x); }

using Cell = std::variant<std::string, Rational>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

inline std::string cell_text(const Cell& cell, bool exact) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return scalar(std::get<Rational>(cell), exact);
}

inline std::string render_text(const Table& table, bool exact) {
  std::vector<std::vector<std::string>> grid{table.header};
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (const auto& cell : row) line.push_back(cell_text(cell, exact));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(table.header.size(), 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size() && c < width.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += line[c];
      if (c + 1 < line.size()) text.append(width[c] - line[c].size(), ' ');
    }
    out << text << '\n';
  }
  return out.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

inline std::string render_csv(const Table& table, bool exact) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.header.size(); ++c) out << (c ? "," : "") << csv_field(table.header[c]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(cell_text(row[c], exact));
    out << '\n';
  }
  return out.str();
}

inline Json table_json(const Table& table, bool exact) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json line = Json::array();
    for (const auto& cell : row) line.push_back(cell_text(cell, exact));
    rows.push_back(std::move(line));
  }
  return Json{{"header", table.header}, {"rows", std::move(rows)}};
}

}  // namespace bipgame::cli

#endif  // BIPGAME_CLI_RENDER_HPP
