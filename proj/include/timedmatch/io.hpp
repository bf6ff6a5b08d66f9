#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "timedmatch/core.hpp"
#include "timedmatch/matching.hpp"
#include "timedmatch/reductions.hpp"

// Line-oriented text formats. '#' starts a comment, blank lines are ignored,
// the first significant line of each format names it with a version number.
// Emitters are deterministic, so parse(emit(x)) == x for every value type.

namespace timedmatch {

namespace detail {

struct SourceLine {
  int number = 0;  // 1-based
  std::vector<std::string> tokens;
};

inline std::vector<SourceLine> tokenize_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    SourceLine out;
    out.number = number;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) out.tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (!out.tokens.empty()) lines.push_back(std::move(out));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

inline std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

inline std::optional<double> parse_double(std::string_view token) {
  try {
    std::size_t used = 0;
    const std::string s(token);
    const double value = std::stod(s, &used);
    if (used != s.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

[[noreturn]] inline void syntax_error(int line, const std::string& what) {
  throw Error(ErrorKind::syntax, "line " + std::to_string(line) + ": " + what);
}

inline void expect_header(const std::vector<SourceLine>& lines, std::string_view name) {
  if (lines.empty()) {
    throw Error(ErrorKind::syntax, std::string("missing '") + std::string(name) + " 1' header");
  }
  const SourceLine& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != name || first.tokens[1] != "1") {
    syntax_error(first.number, "expected '" + std::string(name) + " 1' header");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// temporal graphs

struct ParsedGraph {
  std::optional<TemporalGraph> graph;
  std::optional<std::string> root;  // root directive, when present
  std::vector<Violation> issues;    // syntax and validation problems, in order

  bool ok() const { return graph.has_value(); }
};

inline ParsedGraph parse_tg(std::string_view text) {
  ParsedGraph out;
  auto lines = detail::tokenize_lines(text);
  auto bad = [&out](int line, std::string detail) {
    out.issues.push_back(Violation{ViolationKind::syntax, std::move(detail), line});
  };

  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "tg" ||
      lines[0].tokens[1] != "1") {
    bad(lines.empty() ? 1 : lines[0].number, "expected 'tg 1' header");
    return out;
  }

  RawTemporalGraph raw;
  IntervalMode mode = IntervalMode::strict;
  bool have_lifetime = false;
  bool have_mode = false;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tokens] = lines[li];
    const std::string& directive = tokens[0];
    if (directive == "lifetime") {
      auto value = tokens.size() == 2 ? detail::parse_int(tokens[1]) : std::nullopt;
      if (!value) {
        bad(number, "expected 'lifetime <integer>'");
      } else if (have_lifetime) {
        bad(number, "duplicate lifetime directive");
      } else {
        raw.lifetime = *value;
        have_lifetime = true;
      }
    } else if (directive == "node") {
      if (tokens.size() != 2) {
        bad(number, "expected 'node <name>'");
      } else {
        raw.nodes.push_back({tokens[1], number});
      }
    } else if (directive == "edge") {
      if (tokens.size() < 5 || tokens.size() % 2 == 0) {
        bad(number, "expected 'edge <u> <v> <start> <finish> ...'");
        continue;
      }
      RawEdge e;
      e.u = tokens[1];
      e.v = tokens[2];
      e.line = number;
      bool ints_ok = true;
      for (std::size_t k = 3; k + 1 < tokens.size(); k += 2) {
        auto s = detail::parse_int(tokens[k]);
        auto f = detail::parse_int(tokens[k + 1]);
        if (!s || !f) {
          bad(number, "interval bounds must be integers");
          ints_ok = false;
          break;
        }
        e.intervals.push_back({*s, *f});
      }
      if (ints_ok) raw.edges.push_back(std::move(e));
    } else if (directive == "root") {
      if (tokens.size() != 2) {
        bad(number, "expected 'root <name>'");
      } else if (out.root) {
        bad(number, "duplicate root directive");
      } else {
        out.root = tokens[1];
      }
    } else if (directive == "mode") {
      if (tokens.size() != 2 || (tokens[1] != "strict" && tokens[1] != "lenient")) {
        bad(number, "expected 'mode strict' or 'mode lenient'");
      } else if (have_mode) {
        bad(number, "duplicate mode directive");
      } else {
        mode = tokens[1] == "strict" ? IntervalMode::strict : IntervalMode::lenient;
        have_mode = true;
      }
    } else {
      bad(number, "unknown directive '" + directive + "'");
    }
  }
  if (!have_lifetime) bad(lines[0].number, "missing lifetime directive");
  if (!out.issues.empty()) return out;

  ValidationResult validated = validate_graph(raw, mode);
  out.issues = std::move(validated.violations);
  if (!validated.graph) return out;

  if (out.root && !validated.graph->node_index(*out.root)) {
    out.issues.push_back(
        Violation{ViolationKind::unknown_node, "root '" + *out.root + "' is not a node", -1});
    return out;
  }
  out.graph = std::move(validated.graph);
  return out;
}

inline std::string emit_tg(const TemporalGraph& g,
                           const std::optional<std::string>& root = std::nullopt) {
  std::ostringstream os;
  os << "tg 1\n";
  os << "lifetime " << g.lifetime << "\n";
  if (g.mode == IntervalMode::lenient) os << "mode lenient\n";
  for (const std::string& label : g.node_labels) os << "node " << label << "\n";
  for (const TemporalEdge& e : g.edges) {
    os << "edge " << g.node_labels[static_cast<std::size_t>(e.u)] << " "
       << g.node_labels[static_cast<std::size_t>(e.v)];
    for (const TimeInterval& iv : e.intervals) os << " " << iv.start << " " << iv.finish;
    os << "\n";
  }
  if (root) os << "root " << *root << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// matchings (as endpoint pairs, resolvable against a graph)

inline std::vector<std::pair<std::string, std::string>> parse_match_pairs(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [number, tokens] : detail::tokenize_lines(text)) {
    if (tokens[0] != "match" || tokens.size() != 3) {
      detail::syntax_error(number, "expected 'match <u> <v>'");
    }
    pairs.emplace_back(tokens[1], tokens[2]);
  }
  return pairs;
}

inline TimedMatching parse_matching(std::string_view text, const TemporalGraph& g) {
  std::vector<int> ids;
  for (const auto& [number, tokens] : detail::tokenize_lines(text)) {
    if (tokens[0] != "match" || tokens.size() != 3) {
      detail::syntax_error(number, "expected 'match <u> <v>'");
    }
    auto u = g.node_index(tokens[1]);
    auto v = g.node_index(tokens[2]);
    std::optional<int> id = u && v ? g.edge_between(*u, *v) : std::nullopt;
    if (!id) {
      throw Error(ErrorKind::unknown_edge, "line " + std::to_string(number) + ": no edge " +
                                               tokens[1] + " " + tokens[2]);
    }
    ids.push_back(*id);
  }
  return make_matching(std::move(ids));
}

inline std::string emit_matching(const TemporalGraph& g, const TimedMatching& m) {
  check_edge_ids(g, m.edge_ids);
  std::ostringstream os;
  for (int id : m.edge_ids) {
    const TemporalEdge& e = g.edges[static_cast<std::size_t>(id)];
    os << "match " << g.node_labels[static_cast<std::size_t>(e.u)] << " "
       << g.node_labels[static_cast<std::size_t>(e.v)] << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// reduction mappings

inline ReductionMapping parse_mapping(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  detail::expect_header(lines, "tgmap");

  ReductionMapping map;
  bool have_kind = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tokens] = lines[li];
    if (tokens[0] == "kind") {
      auto kind = tokens.size() == 2 ? reduction_kind_from(tokens[1]) : std::nullopt;
      if (!kind) detail::syntax_error(number, "expected 'kind rainbow|sat2p2n|maxis'");
      if (have_kind) detail::syntax_error(number, "duplicate kind directive");
      map.kind = *kind;
      have_kind = true;
    } else if (tokens[0] == "param") {
      if (tokens.size() != 3) detail::syntax_error(number, "expected 'param <name> <value>'");
      map.params.emplace_back(tokens[1], tokens[2]);
    } else if (tokens[0] == "map") {
      if (tokens.size() != 4) detail::syntax_error(number, "expected 'map <source> <u> <v>'");
      map.entries.push_back(
          {tokens[1], static_cast<int>(map.entries.size()), tokens[2], tokens[3]});
    } else {
      detail::syntax_error(number, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!have_kind) throw Error(ErrorKind::syntax, "mapping lacks a kind directive");
  return map;
}

inline std::string emit_mapping(const ReductionMapping& map) {
  std::ostringstream os;
  os << "tgmap 1\n";
  os << "kind " << to_string(map.kind) << "\n";
  for (const auto& [name, value] : map.params) os << "param " << name << " " << value << "\n";
  for (const MapEntry& e : map.entries) {
    os << "map " << e.source << " " << e.u << " " << e.v << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// coloured paths

inline ColouredPath parse_path(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  detail::expect_header(lines, "path");

  ColouredPath p;
  bool have_nodes = false, have_colour_count = false, have_colours = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tokens] = lines[li];
    if (tokens[0] == "nodes" && tokens.size() == 2) {
      auto n = detail::parse_int(tokens[1]);
      if (!n || have_nodes) detail::syntax_error(number, "bad or duplicate nodes directive");
      p.node_count = *n;
      have_nodes = true;
    } else if (tokens[0] == "colours" && tokens.size() == 2) {
      auto c = detail::parse_int(tokens[1]);
      if (!c || have_colour_count) {
        detail::syntax_error(number, "bad or duplicate colours directive");
      }
      p.colour_count = *c;
      have_colour_count = true;
    } else if (tokens[0] == "colour") {
      if (have_colours) detail::syntax_error(number, "duplicate colour directive");
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto c = detail::parse_int(tokens[k]);
        if (!c) detail::syntax_error(number, "colours must be integers");
        p.edge_colours.push_back(*c);
      }
      have_colours = true;
    } else {
      detail::syntax_error(number, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!have_nodes || !have_colour_count) {
    throw Error(ErrorKind::syntax, "path needs nodes and colours directives");
  }
  if (static_cast<int>(p.edge_colours.size()) != std::max(p.node_count - 1, 0)) {
    throw Error(ErrorKind::syntax, "expected " + std::to_string(p.node_count - 1) +
                                       " edge colours, got " +
                                       std::to_string(p.edge_colours.size()));
  }
  return p;
}

inline std::string emit_path(const ColouredPath& p) {
  std::ostringstream os;
  os << "path 1\n";
  os << "nodes " << p.node_count << "\n";
  os << "colours " << p.colour_count << "\n";
  if (!p.edge_colours.empty()) {
    os << "colour";
    for (int c : p.edge_colours) os << " " << c;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// 2P2N formulas (literals are signed 1-based variable indexes)

inline CnfFormula2P2N parse_cnf(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  detail::expect_header(lines, "cnf2p2n");

  CnfFormula2P2N f;
  bool have_vars = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tokens] = lines[li];
    if (tokens[0] == "vars" && tokens.size() == 2) {
      auto m = detail::parse_int(tokens[1]);
      if (!m || have_vars) detail::syntax_error(number, "bad or duplicate vars directive");
      f.var_count = *m;
      have_vars = true;
    } else if (tokens[0] == "clause") {
      if (tokens.size() != 4) detail::syntax_error(number, "expected 'clause <l1> <l2> <l3>'");
      Clause cl;
      for (int k = 0; k < 3; ++k) {
        auto lit = detail::parse_int(tokens[static_cast<std::size_t>(k) + 1]);
        if (!lit || *lit == 0) detail::syntax_error(number, "literals are nonzero integers");
        cl.literals[static_cast<std::size_t>(k)] = Literal{std::abs(*lit) - 1, *lit > 0};
      }
      f.clauses.push_back(cl);
    } else {
      detail::syntax_error(number, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!have_vars) throw Error(ErrorKind::syntax, "formula needs a vars directive");
  return f;
}

inline std::string emit_cnf(const CnfFormula2P2N& f) {
  std::ostringstream os;
  os << "cnf2p2n 1\n";
  os << "vars " << f.var_count << "\n";
  for (const Clause& cl : f.clauses) {
    os << "clause";
    for (const Literal& lit : cl.literals) {
      os << " " << (lit.positive ? lit.var + 1 : -(lit.var + 1));
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// labelled static graphs

inline LabelledStaticGraph parse_lg(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  detail::expect_header(lines, "lg");

  LabelledStaticGraph lsg;
  bool have_nodes = false;
  std::vector<std::pair<int, int>> node_label_lines;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, tokens] = lines[li];
    if (tokens[0] == "nodes" && tokens.size() == 2) {
      auto n = detail::parse_int(tokens[1]);
      if (!n || have_nodes || *n < 0) {
        detail::syntax_error(number, "bad or duplicate nodes directive");
      }
      lsg.graph.node_count = *n;
      have_nodes = true;
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) detail::syntax_error(number, "expected 'edge <u> <v> <label>'");
      auto u = detail::parse_int(tokens[1]);
      auto v = detail::parse_int(tokens[2]);
      auto label = detail::parse_int(tokens[3]);
      if (!u || !v || !label) detail::syntax_error(number, "edge fields must be integers");
      lsg.graph.edges.push_back(std::minmax(*u, *v));
      lsg.edge_labels.push_back(*label);
    } else if (tokens[0] == "nodelabel") {
      if (tokens.size() != 3) detail::syntax_error(number, "expected 'nodelabel <v> <label>'");
      auto v = detail::parse_int(tokens[1]);
      auto label = detail::parse_int(tokens[2]);
      if (!v || !label) detail::syntax_error(number, "nodelabel fields must be integers");
      node_label_lines.push_back({*v, *label});
    } else {
      detail::syntax_error(number, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (!have_nodes) throw Error(ErrorKind::syntax, "labelled graph needs a nodes directive");
  for (const auto& [u, v] : lsg.graph.edges) {
    if (u < 0 || v >= lsg.graph.node_count) {
      throw Error(ErrorKind::syntax, "edge endpoint " + std::to_string(u < 0 ? u : v) +
                                         " out of range");
    }
  }
  lsg.node_labels.assign(static_cast<std::size_t>(lsg.graph.node_count), -1);
  for (const auto& [v, label] : node_label_lines) {
    if (v < 0 || v >= lsg.graph.node_count) {
      throw Error(ErrorKind::syntax, "nodelabel node " + std::to_string(v) + " out of range");
    }
    lsg.node_labels[static_cast<std::size_t>(v)] = label;
  }
  return lsg;
}

inline std::string emit_lg(const LabelledStaticGraph& lsg) {
  std::ostringstream os;
  os << "lg 1\n";
  os << "nodes " << lsg.graph.node_count << "\n";
  for (std::size_t i = 0; i < lsg.graph.edges.size(); ++i) {
    os << "edge " << lsg.graph.edges[i].first << " " << lsg.graph.edges[i].second << " "
       << lsg.edge_labels[i] << "\n";
  }
  for (std::size_t v = 0; v < lsg.node_labels.size(); ++v) {
    if (lsg.node_labels[v] != -1) os << "nodelabel " << v << " " << lsg.node_labels[v] << "\n";
  }
  return os.str();
}

}  // namespace timedmatch
