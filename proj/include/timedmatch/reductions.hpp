#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "timedmatch/core.hpp"
#include "timedmatch/matching.hpp"

// Gadget constructions that express three hard problems as timed matching
// instances, with mappings that let a solution on the gadget be pulled back
// to the source problem:
//   rainbow  - maximum rainbow matching on a properly edge-coloured path
//   sat2p2n  - 3SAT restricted to two positive and two negative occurrences
//              per variable (satisfiable iff gadget optimum hits a target)
//   maxis    - maximum independent set on a labelled static graph

namespace timedmatch {

// ---------------------------------------------------------------------------
// source problem types

struct ColouredPath {
  int node_count = 0;
  int colour_count = 0;            // palette size, colours are 0..colour_count-1
  std::vector<int> edge_colours;   // edge i joins path nodes i and i+1

  friend bool operator==(const ColouredPath&, const ColouredPath&) = default;
};

struct Literal {
  int var = 0;           // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  std::array<Literal, 3> literals;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfFormula2P2N {
  int var_count = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula2P2N&, const CnfFormula2P2N&) = default;
};

// Static graph whose edges carry distinct labels 0..m-1 and whose zero-degree
// nodes carry distinct labels m..m+n0-1 (node_labels holds -1 elsewhere).
struct LabelledStaticGraph {
  StaticGraph graph;
  std::vector<int> edge_labels;
  std::vector<int> node_labels;

  friend bool operator==(const LabelledStaticGraph&, const LabelledStaticGraph&) = default;
};

// ---------------------------------------------------------------------------
// mappings

enum class ReductionKind { rainbow, sat2p2n, maxis };

inline const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::rainbow: return "rainbow";
    case ReductionKind::sat2p2n: return "sat2p2n";
    case ReductionKind::maxis: return "maxis";
  }
  return "unknown";
}

inline std::optional<ReductionKind> reduction_kind_from(std::string_view name) {
  if (name == "rainbow") return ReductionKind::rainbow;
  if (name == "sat2p2n") return ReductionKind::sat2p2n;
  if (name == "maxis") return ReductionKind::maxis;
  return std::nullopt;
}

struct MapEntry {
  std::string source;  // token naming the source object this edge stands for
  int edge_id = -1;
  std::string u;
  std::string v;

  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct ReductionMapping {
  ReductionKind kind = ReductionKind::rainbow;
  std::vector<std::pair<std::string, std::string>> params;  // ordered (name, value)
  std::vector<MapEntry> entries;                            // ordered by edge id

  std::optional<std::string> param(std::string_view name) const {
    for (const auto& [k, v] : params) {
      if (k == name) return v;
    }
    return std::nullopt;
  }

  int param_int(std::string_view name) const {
    auto v = param(name);
    if (!v) {
      throw Error(ErrorKind::syntax, "mapping lacks param '" + std::string(name) + "'");
    }
    return std::stoi(*v);
  }

  const MapEntry& entry_for_edge(int id) const {
    if (id < 0 || id >= static_cast<int>(entries.size())) {
      throw Error(ErrorKind::unknown_edge_id, "mapping has no edge " + std::to_string(id));
    }
    return entries[static_cast<std::size_t>(id)];
  }

  // Lookup by unordered endpoint pair; used when a matching arrives as
  // node-name pairs rather than edge ids.
  const MapEntry* entry_for_pair(std::string_view a, std::string_view b) const {
    for (const MapEntry& e : entries) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return &e;
    }
    return nullptr;
  }

  friend bool operator==(const ReductionMapping&, const ReductionMapping&) = default;
};

struct ReductionOutput {
  TemporalGraph graph;
  ReductionMapping mapping;
  std::optional<std::string> root;  // set when the gadget is a rooted tree
  int target = -1;                  // sat2p2n: optimum equals this iff satisfiable
};

namespace detail {

inline TemporalGraph build_checked(RawTemporalGraph raw, IntervalMode mode) {
  ValidationResult res = validate_graph(raw, mode);
  if (!res.ok()) {
    std::ostringstream os;
    os << "gadget construction produced an invalid graph:";
    for (const Violation& v : res.violations) os << " " << to_string(v);
    throw std::logic_error(os.str());
  }
  return std::move(*res.graph);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// rainbow matching on a properly coloured path

// Star gadget: one edge r-x<i> per path edge i, alive on (i, i+2) so that
// consecutive path edges collide, and again on a per-colour unit slot after
// the path block so that equal colours collide. Timed matchings of the
// gadget are exactly rainbow matchings of the path.
inline ReductionOutput from_rainbow_path(const ColouredPath& p) {
  std::vector<std::string> problems;
  if (p.node_count < 2) problems.push_back("path needs at least two nodes");
  if (static_cast<int>(p.edge_colours.size()) != p.node_count - 1) {
    problems.push_back("expected " + std::to_string(p.node_count - 1) + " edge colours, got " +
                       std::to_string(p.edge_colours.size()));
  }
  if (p.colour_count < 1) problems.push_back("palette must be nonempty");
  for (std::size_t i = 0; i < p.edge_colours.size(); ++i) {
    if (p.edge_colours[i] < 0 || p.edge_colours[i] >= p.colour_count) {
      problems.push_back("colour of edge " + std::to_string(i) + " outside palette");
    } else if (i > 0 && p.edge_colours[i] == p.edge_colours[i - 1]) {
      problems.push_back("edges " + std::to_string(i - 1) + " and " + std::to_string(i) +
                         " share a colour");
    }
  }
  if (!problems.empty()) {
    std::string joined;
    for (const auto& s : problems) joined += (joined.empty() ? "" : "; ") + s;
    throw Error(ErrorKind::improper_colouring, joined);
  }

  const int n = p.node_count;
  const int c = p.colour_count;
  RawTemporalGraph raw;
  raw.lifetime = n + c;
  raw.nodes.push_back({"r", -1});
  for (int i = 0; i < n - 1; ++i) raw.nodes.push_back({"x" + std::to_string(i), -1});

  ReductionMapping mapping;
  mapping.kind = ReductionKind::rainbow;
  mapping.params = {{"nodes", std::to_string(n)}, {"colours", std::to_string(c)}};
  for (int i = 0; i < n - 1; ++i) {
    const int colour = p.edge_colours[static_cast<std::size_t>(i)];
    RawEdge e;
    e.u = "r";
    e.v = "x" + std::to_string(i);
    e.intervals = {{i, i + 2}, {n + colour, n + colour + 1}};
    raw.edges.push_back(std::move(e));
    mapping.entries.push_back({"p" + std::to_string(i), i, "r", "x" + std::to_string(i)});
  }

  ReductionOutput out;
  out.graph = detail::build_checked(std::move(raw), IntervalMode::lenient);
  out.mapping = std::move(mapping);
  out.root = "r";
  return out;
}

// Pull a gadget matching back to path edge indexes.
inline std::vector<int> extract_rainbow(const TimedMatching& m, const ReductionMapping& map) {
  if (map.kind != ReductionKind::rainbow) {
    throw Error(ErrorKind::syntax, "mapping kind is not rainbow");
  }
  std::vector<int> picked;
  for (int id : m.edge_ids) {
    const MapEntry& entry = map.entry_for_edge(id);
    picked.push_back(std::stoi(entry.source.substr(1)));
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

// ---------------------------------------------------------------------------
// 2P2N 3SAT

// Empty result means well-formed: clauses of three literals over variables
// 0..var_count-1, no literal repeated inside a clause, and every variable
// occurring exactly twice positively and twice negatively.
inline std::vector<std::string> validate_2p2n(const CnfFormula2P2N& f) {
  std::vector<std::string> problems;
  if (f.var_count <= 0) problems.push_back("formula has no variables");
  if (f.clauses.empty()) problems.push_back("formula has no clauses");

  std::vector<int> plus(std::max(f.var_count, 0), 0);
  std::vector<int> minus(std::max(f.var_count, 0), 0);
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const Clause& cl = f.clauses[ci];
    for (int a = 0; a < 3; ++a) {
      const Literal& lit = cl.literals[static_cast<std::size_t>(a)];
      if (lit.var < 0 || lit.var >= f.var_count) {
        problems.push_back("clause " + std::to_string(ci + 1) + " uses unknown variable");
        continue;
      }
      (lit.positive ? plus : minus)[static_cast<std::size_t>(lit.var)]++;
      for (int b = a + 1; b < 3; ++b) {
        if (cl.literals[static_cast<std::size_t>(b)] == lit) {
          problems.push_back("clause " + std::to_string(ci + 1) + " repeats a literal");
        }
      }
    }
  }
  for (int v = 0; v < f.var_count; ++v) {
    if (plus[static_cast<std::size_t>(v)] != 2 || minus[static_cast<std::size_t>(v)] != 2) {
      problems.push_back("variable " + std::to_string(v + 1) + " occurs " +
                         std::to_string(plus[static_cast<std::size_t>(v)]) + " times positive and " +
                         std::to_string(minus[static_cast<std::size_t>(v)]) + " negative");
    }
  }
  return problems;
}

// Bipartite gadget: clause nodes c1..cd and variable anchors a1..am on one
// side, literal nodes b1..bm (positive) and nb1..nbm (negative) on the
// other. Clause i's three edges live on (i-1, i); both anchor edges of a
// variable live on (0, d) and so exclude each other and every clause edge at
// their literal node. The optimum reaches d + m iff the formula is
// satisfiable; max degree stays at 3.
inline ReductionOutput from_2p2n3sat(const CnfFormula2P2N& f) {
  auto problems = validate_2p2n(f);
  if (!problems.empty()) {
    std::string joined;
    for (const auto& s : problems) joined += (joined.empty() ? "" : "; ") + s;
    throw Error(ErrorKind::not_2p2n, joined);
  }

  const int m = f.var_count;
  const int d = static_cast<int>(f.clauses.size());
  RawTemporalGraph raw;
  raw.lifetime = d;
  for (int i = 1; i <= d; ++i) raw.nodes.push_back({"c" + std::to_string(i), -1});
  for (int i = 1; i <= m; ++i) raw.nodes.push_back({"a" + std::to_string(i), -1});
  for (int i = 1; i <= m; ++i) raw.nodes.push_back({"b" + std::to_string(i), -1});
  for (int i = 1; i <= m; ++i) raw.nodes.push_back({"nb" + std::to_string(i), -1});

  ReductionMapping mapping;
  mapping.kind = ReductionKind::sat2p2n;
  mapping.params = {{"vars", std::to_string(m)}, {"clauses", std::to_string(d)}};

  int next_id = 0;
  for (int i = 1; i <= d; ++i) {
    for (const Literal& lit : f.clauses[static_cast<std::size_t>(i - 1)].literals) {
      const std::string var_name = std::to_string(lit.var + 1);
      RawEdge e;
      e.u = "c" + std::to_string(i);
      e.v = (lit.positive ? "b" : "nb") + var_name;
      e.intervals = {{i - 1, i}};
      raw.edges.push_back(std::move(e));
      mapping.entries.push_back({"c" + std::to_string(i) + ":" + (lit.positive ? "v" : "-v") +
                                     var_name,
                                 next_id, "c" + std::to_string(i),
                                 (lit.positive ? "b" : "nb") + var_name});
      ++next_id;
    }
  }
  for (int i = 1; i <= m; ++i) {
    const std::string var_name = std::to_string(i);
    for (bool to_negative : {false, true}) {
      RawEdge e;
      e.u = "a" + var_name;
      e.v = (to_negative ? "nb" : "b") + var_name;
      e.intervals = {{0, d}};
      raw.edges.push_back(std::move(e));
      mapping.entries.push_back({"v" + var_name + (to_negative ? "=1" : "=0"), next_id,
                                 "a" + var_name, (to_negative ? "nb" : "b") + var_name});
      ++next_id;
    }
  }

  ReductionOutput out;
  out.graph = detail::build_checked(std::move(raw), IntervalMode::strict);
  out.mapping = std::move(mapping);
  out.target = d + m;
  return out;
}

// A matching of the target size pins down every variable: the anchor edge
// towards nb<i> means true, towards b<i> means false. Anything smaller (or a
// mapping without full anchor coverage) yields no assignment.
inline std::optional<std::vector<bool>> extract_assignment(const TimedMatching& m,
                                                           const ReductionMapping& map) {
  if (map.kind != ReductionKind::sat2p2n) {
    throw Error(ErrorKind::syntax, "mapping kind is not sat2p2n");
  }
  const int vars = map.param_int("vars");
  const int clauses = map.param_int("clauses");
  if (m.size() != vars + clauses) return std::nullopt;

  std::vector<int> value(static_cast<std::size_t>(vars), -1);
  for (int id : m.edge_ids) {
    const MapEntry& entry = map.entry_for_edge(id);
    const auto eq = entry.source.find('=');
    if (entry.source.empty() || entry.source[0] != 'v' || eq == std::string::npos) continue;
    const int var = std::stoi(entry.source.substr(1, eq - 1)) - 1;
    if (var < 0 || var >= vars || value[static_cast<std::size_t>(var)] != -1) {
      return std::nullopt;
    }
    value[static_cast<std::size_t>(var)] = entry.source[eq + 1] == '1' ? 1 : 0;
  }

  std::vector<bool> assignment(static_cast<std::size_t>(vars));
  for (int v = 0; v < vars; ++v) {
    if (value[static_cast<std::size_t>(v)] == -1) return std::nullopt;
    assignment[static_cast<std::size_t>(v)] = value[static_cast<std::size_t>(v)] == 1;
  }
  return assignment;
}

// ---------------------------------------------------------------------------
// maximum independent set

// Empty result means well-formed labels on a simple graph.
inline std::vector<std::string> validate_labels(const LabelledStaticGraph& lsg) {
  std::vector<std::string> problems;
  const int n = lsg.graph.node_count;
  const int m = static_cast<int>(lsg.graph.edges.size());
  if (n < 1) problems.push_back("graph has no nodes");

  std::vector<int> degree(std::max(n, 0), 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : lsg.graph.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      problems.push_back("edge endpoint out of range");
      continue;
    }
    if (u == v) {
      problems.push_back("self loop at node " + std::to_string(u));
      continue;
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      problems.push_back("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      continue;
    }
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }

  if (static_cast<int>(lsg.edge_labels.size()) != m) {
    problems.push_back("expected " + std::to_string(m) + " edge labels");
  } else {
    std::set<int> used(lsg.edge_labels.begin(), lsg.edge_labels.end());
    if (static_cast<int>(used.size()) != m || (m > 0 && (*used.begin() < 0 || *used.rbegin() >= m))) {
      problems.push_back("edge labels are not a permutation of 0.." + std::to_string(m - 1));
    }
  }

  if (static_cast<int>(lsg.node_labels.size()) != n) {
    problems.push_back("expected " + std::to_string(n) + " node label slots");
  } else if (problems.empty()) {
    int n0 = 0;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 0) ++n0;
    }
    std::set<int> used;
    for (int v = 0; v < n; ++v) {
      const int label = lsg.node_labels[static_cast<std::size_t>(v)];
      if (degree[static_cast<std::size_t>(v)] == 0) {
        if (label < m || label >= m + n0 || !used.insert(label).second) {
          problems.push_back("zero-degree node " + std::to_string(v) + " needs a distinct label in " +
                             std::to_string(m) + ".." + std::to_string(m + n0 - 1));
        }
      } else if (label != -1) {
        problems.push_back("node " + std::to_string(v) + " has positive degree but carries a label");
      }
    }
  }
  return problems;
}

// Star gadget: one edge r-x<v> per source node v, alive on one unit slot per
// incident edge label (zero-degree nodes use their own private slot), so two
// gadget edges overlap iff the source nodes are adjacent. Timed matchings of
// the gadget are exactly independent sets of the source graph.
inline ReductionOutput from_max_is(const LabelledStaticGraph& lsg) {
  auto problems = validate_labels(lsg);
  if (!problems.empty()) {
    std::string joined;
    for (const auto& s : problems) joined += (joined.empty() ? "" : "; ") + s;
    throw Error(ErrorKind::bad_labels, joined);
  }

  const int n = lsg.graph.node_count;
  const int m = static_cast<int>(lsg.graph.edges.size());
  std::vector<std::vector<int>> slots(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < lsg.graph.edges.size(); ++i) {
    const auto& [u, v] = lsg.graph.edges[i];
    slots[static_cast<std::size_t>(u)].push_back(lsg.edge_labels[i]);
    slots[static_cast<std::size_t>(v)].push_back(lsg.edge_labels[i]);
  }
  int n0 = 0;
  for (int v = 0; v < n; ++v) {
    if (slots[static_cast<std::size_t>(v)].empty()) {
      slots[static_cast<std::size_t>(v)].push_back(lsg.node_labels[static_cast<std::size_t>(v)]);
      ++n0;
    }
    std::sort(slots[static_cast<std::size_t>(v)].begin(), slots[static_cast<std::size_t>(v)].end());
  }

  RawTemporalGraph raw;
  raw.lifetime = m + n0;
  raw.nodes.push_back({"r", -1});
  for (int v = 0; v < n; ++v) raw.nodes.push_back({"x" + std::to_string(v), -1});

  ReductionMapping mapping;
  mapping.kind = ReductionKind::maxis;
  mapping.params = {{"nodes", std::to_string(n)}};
  for (int v = 0; v < n; ++v) {
    RawEdge e;
    e.u = "r";
    e.v = "x" + std::to_string(v);
    for (int slot : slots[static_cast<std::size_t>(v)]) e.intervals.push_back({slot, slot + 1});
    raw.edges.push_back(std::move(e));
    mapping.entries.push_back({"n" + std::to_string(v), v, "r", "x" + std::to_string(v)});
  }

  ReductionOutput out;
  out.graph = detail::build_checked(std::move(raw), IntervalMode::lenient);
  out.mapping = std::move(mapping);
  out.root = "r";
  return out;
}

// Pull a gadget matching back to source node ids.
inline std::vector<int> extract_independent_set(const TimedMatching& m,
                                                const ReductionMapping& map) {
  if (map.kind != ReductionKind::maxis) {
    throw Error(ErrorKind::syntax, "mapping kind is not maxis");
  }
  std::vector<int> nodes;
  for (int id : m.edge_ids) {
    const MapEntry& entry = map.entry_for_edge(id);
    nodes.push_back(std::stoi(entry.source.substr(1)));
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace timedmatch
