// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polylat/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "polylat/error.hpp"

namespace polylat {
namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string text;
  std::vector<Token> tokens;
};

// Non-blank, non-comment lines split on whitespace.
std::vector<Line> content_lines(std::string_view text, std::size_t* total_lines) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(start, end - start));
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    ++number;
    Line line{number, raw, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().text[0] != '#') out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (total_lines) *total_lines = number;
  return out;
}

// The names after a "keyword:" header token.
std::vector<std::string> header_names(const Line& line, const std::string& keyword) {
  if (line.tokens.front().text != keyword + ":") {
    throw ParseError(line.number, line.tokens.front().column,
                     "expected '" + keyword + ":' but found '" + line.tokens.front().text + "'");
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) names.push_back(line.tokens[i].text);
  return names;
}

std::size_t index_of(const std::map<std::string, std::size_t>& names, const Line& line,
                     const Token& token) {
  auto it = names.find(token.text);
  if (it == names.end()) {
    throw ParseError(line.number, token.column, "unknown element '" + token.text + "'");
  }
  return it->second;
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names, const Line& line) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!out.emplace(names[i], i).second) {
      throw ParseError(line.number, 0, "duplicate element '" + names[i] + "'");
    }
  }
  return out;
}

// "cover a < b" -> (a, b)
std::pair<std::size_t, std::size_t> parse_cover(const Line& line,
                                                const std::map<std::string, std::size_t>& names) {
  if (line.tokens.size() != 4 || line.tokens[2].text != "<") {
    throw ParseError(line.number, 0, "expected 'cover <lower> < <upper>'");
  }
  return {index_of(names, line, line.tokens[1]), index_of(names, line, line.tokens[3])};
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Polymatroid parse_polymatroid(std::string_view text) {
  std::size_t total = 0;
  const auto lines = content_lines(text, &total);
  if (lines.empty()) throw ParseError(total, 0, "missing 'elements:' line");
  const Line& head = lines.front();
  std::optional<GroundSet> ground;
  try {
    ground.emplace(header_names(head, "elements"));
  } catch (const InvariantError& e) {
    throw ParseError(head.number, 0, e.what());
  }
  std::vector<std::optional<Rational>> ranks(ground->subset_count());
  std::vector<std::size_t> defined_at(ground->subset_count(), 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const Token& word = line.tokens.front();
    if (word.text != "rank") {
      throw ParseError(line.number, word.column, "expected 'rank' but found '" + word.text + "'");
    }
    const std::size_t open = line.text.find('{', word.column - 1 + word.text.size());
    const std::size_t close = line.text.find('}', open == std::string::npos ? 0 : open);
    if (open == std::string::npos || close == std::string::npos) {
      throw ParseError(line.number, 0, "expected a set in braces");
    }
    std::string set_text;
    for (std::size_t i = open; i <= close; ++i)
      if (!std::isspace(static_cast<unsigned char>(line.text[i]))) set_text += line.text[i];
    SubsetMask set = 0;
    try {
      set = ground->parse(set_text);
    } catch (const InvariantError& e) {
      throw ParseError(line.number, open + 1, e.what());
    }
    const std::size_t eq = line.text.find_first_not_of(" \t", close + 1);
    if (eq == std::string::npos || line.text[eq] != '=') {
      throw ParseError(line.number, close + 2, "expected '=' after the set");
    }
    const std::size_t value_at = line.text.find_first_not_of(" \t", eq + 1);
    if (value_at == std::string::npos) throw ParseError(line.number, eq + 2, "missing rank value");
    std::string value = line.text.substr(value_at);
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
    if (defined_at[set]) {
      throw ParseError(line.number, open + 1,
                       "duplicate rank for " + ground->format(set) + " (first given on line " +
                           std::to_string(defined_at[set]) + ")");
    }
    try {
      ranks[set] = Rational::parse(value);
    } catch (const Error& e) {
      throw ParseError(line.number, value_at + 1, "bad rank value '" + value + "': " + e.what());
    }
    defined_at[set] = line.number;
  }
  std::vector<Rational> table;
  for (SubsetMask x : subset_iter(*ground)) {
    if (!ranks[x]) throw ParseError(total, 0, "missing rank for " + ground->format(x));
    table.push_back(*ranks[x]);
  }
  return Polymatroid(std::move(*ground), std::move(table));
}

std::string print_polymatroid(const Polymatroid& p) {
  std::string out = "elements:" + join_names(p.ground().labels()) + "\n";
  for (SubsetMask x : subset_iter(p.ground())) {
    out += "rank " + p.ground().format(x) + " = " + p.rank(x).to_string() + "\n";
  }
  return out;
}

LabeledGraph parse_graph(std::string_view text) {
  std::size_t total = 0;
  const auto lines = content_lines(text, &total);
  if (lines.empty()) throw ParseError(total, 0, "missing 'vertices:' line");
  const auto names = header_names(lines.front(), "vertices");
  const auto index = name_index(names, lines.front());
  std::vector<int> block_of(names.size(), -1);
  std::vector<SubsetMask> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> edge_names;
  std::vector<std::size_t> edge_lines;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& word = line.tokens.front().text;
    if (word == "block") {
      if (line.tokens.size() < 2) throw ParseError(line.number, 0, "empty block");
      SubsetMask mask = 0;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const std::size_t v = index_of(index, line, line.tokens[t]);
        if (block_of[v] >= 0) {
          throw ParseError(line.number, line.tokens[t].column,
                           "vertex '" + names[v] + "' is already in a block");
        }
        block_of[v] = static_cast<int>(blocks.size());
        mask |= singleton(v);
      }
      blocks.push_back(mask);
    } else if (word == "edge") {
      if (line.tokens.size() != 3) throw ParseError(line.number, 0, "expected 'edge <u> <v>'");
      edge_names.emplace_back(index_of(index, line, line.tokens[1]), index_of(index, line, line.tokens[2]));
      edge_lines.push_back(line.number);
    } else {
      throw ParseError(line.number, line.tokens.front().column, "unknown directive '" + word + "'");
    }
  }
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (block_of[v] < 0) {
      block_of[v] = static_cast<int>(blocks.size());
      blocks.push_back(singleton(v));
    }
  }
  std::vector<LabeledGraph::Edge> edges;
  for (auto [u, v] : edge_names) {
    edges.emplace_back(static_cast<std::size_t>(block_of[u]), static_cast<std::size_t>(block_of[v]));
  }
  try {
    return LabeledGraph(names, std::move(blocks), std::move(edges));
  } catch (const InvariantError& e) {
    throw ParseError(lines.front().number, 0, e.what());
  }
}

std::string print_graph(const LabeledGraph& g) {
  std::string out = "vertices:" + join_names(g.universe()) + "\n";
  auto first_name = [&](std::size_t v) { return g.universe()[std::countr_zero(g.blocks()[v])]; };
  for (SubsetMask b : g.blocks()) {
    if (cardinality(b) < 2) continue;
    out += "block";
    for (std::size_t i = 0; i < g.universe().size(); ++i)
      if (contains(b, i)) out += " " + g.universe()[i];
    out += "\n";
  }
  for (auto [u, v] : g.edges()) out += "edge " + first_name(u) + " " + first_name(v) + "\n";
  return out;
}

Poset parse_poset(std::string_view text) {
  std::size_t total = 0;
  const auto lines = content_lines(text, &total);
  if (lines.empty()) throw ParseError(total, 0, "missing 'elements:' line");
  auto names = header_names(lines.front(), "elements");
  const auto index = name_index(names, lines.front());
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  std::size_t last = lines.front().number;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.front().text != "cover") {
      throw ParseError(line.number, line.tokens.front().column,
                       "unknown directive '" + line.tokens.front().text + "'");
    }
    relations.push_back(parse_cover(line, index));
    last = line.number;
  }
  try {
    return Poset(std::move(names), relations);
  } catch (const InvariantError& e) {
    throw ParseError(last, 0, e.what());
  }
}

std::string print_poset(const Poset& p) {
  std::string out = "elements:" + join_names(p.ground().labels()) + "\n";
  for (auto [a, b] : p.covers()) out += "cover " + p.label(a) + " < " + p.label(b) + "\n";
  return out;
}

GenLattice parse_genlattice(std::string_view text) {
  std::size_t total = 0;
  const auto lines = content_lines(text, &total);
  if (lines.empty()) throw ParseError(total, 0, "missing 'elements:' line");
  auto names = header_names(lines.front(), "elements");
  if (names.empty()) throw ParseError(lines.front().number, 0, "a lattice needs at least one element");
  const auto index = name_index(names, lines.front());
  std::vector<std::pair<ElementId, ElementId>> covers;
  std::optional<std::vector<std::string>> gens;
  std::size_t gens_line = 0;
  std::size_t last = lines.front().number;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& word = line.tokens.front().text;
    if (word == "cover") {
      auto [a, b] = parse_cover(line, index);
      covers.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
      last = line.number;
    } else if (word == "generators:") {
      if (gens) throw ParseError(line.number, 1, "second 'generators:' line");
      gens = header_names(line, "generators");
      for (std::size_t t = 1; t < line.tokens.size(); ++t) index_of(index, line, line.tokens[t]);
      gens_line = line.number;
    } else {
      throw ParseError(line.number, line.tokens.front().column, "unknown directive '" + word + "'");
    }
  }
  if (!gens) throw ParseError(total, 0, "missing 'generators:' line");
  std::optional<FinLattice> lattice;
  try {
    lattice.emplace(FinLattice::from_covers(std::move(names), covers));
  } catch (const InvariantError& e) {
    throw ParseError(last, 0, e.what());
  }
  try {
    return GenLattice::from_labels(std::move(*lattice), *gens);
  } catch (const InvariantError& e) {
    throw ParseError(gens_line, 0, e.what());
  }
}

std::string print_genlattice(const GenLattice& gl) {
  const FinLattice& l = gl.lattice();
  std::string out = "elements:" + join_names(l.labels()) + "\n";
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId lower : l.lower_covers(x)) out += "cover " + l.label(lower) + " < " + l.label(x) + "\n";
  }
  out += "generators:";
  for (ElementId g : gl.gens()) out += " " + l.label(g);
  return out + "\n";
}

std::string hasse_dot(const FinLattice& l) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (ElementId x = 0; x < l.size(); ++x) out << "  n" << x << " [label=" << quoted(l.label(x)) << "];\n";
  for (ElementId x = 0; x < l.size(); ++x) {
    for (ElementId y : l.upper_covers(x)) out << "  n" << x << " -> n" << y << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string diagram_dot(const GenLattice& gl) {
  const FinLattice& l = gl.lattice();
  std::ostringstream out;
  out << "digraph genlattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (ElementId x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=" << quoted(l.label(x));
    if (gl.is_gen(x)) out << ", shape=box";
    out << "];\n";
  }
  for (ElementId x = 0; x < l.size(); ++x) {
    std::map<ElementId, std::string> targets;
    for (ElementId g : gl.gens()) {
      const ElementId y = l.join(x, g);
      if (y == x) continue;
      std::string& names = targets[y];
      names += (names.empty() ? "" : " ") + l.label(g);
    }
    for (const auto& [y, names] : targets) {
      out << "  n" << x << " -> n" << y << " [label=" << quoted(names) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=" << quoted(g.vertex_label(v)) << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace polylat
