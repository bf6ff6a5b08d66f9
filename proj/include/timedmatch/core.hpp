#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// Core model for temporal graphs whose edges exist on sorted, disjoint,
// half-open integer intervals [start, finish) inside a lifetime [0, T].

namespace timedmatch {

// ---------------------------------------------------------------------------
// errors

enum class ErrorKind {
  not_a_tree,
  multi_interval_unsupported,
  unknown_root,
  not_a_matching,
  unknown_edge_id,
  budget_exceeded,
  improper_colouring,
  not_2p2n,
  bad_labels,
  infeasible_params,
  unknown_edge,
  syntax,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::not_a_tree: return "NotATree";
    case ErrorKind::multi_interval_unsupported: return "MultiIntervalUnsupported";
    case ErrorKind::unknown_root: return "UnknownRoot";
    case ErrorKind::not_a_matching: return "NotAMatching";
    case ErrorKind::unknown_edge_id: return "UnknownEdgeId";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::improper_colouring: return "ImproperColouring";
    case ErrorKind::not_2p2n: return "Not2P2N";
    case ErrorKind::bad_labels: return "BadLabels";
    case ErrorKind::infeasible_params: return "InfeasibleParams";
    case ErrorKind::unknown_edge: return "UnknownEdge";
    case ErrorKind::syntax: return "Syntax";
  }
  return "Unknown";
}

// Precondition and input failures that are not per-line validation issues.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// intervals and edges

// Half-open: timestep t is covered iff start <= t < finish.
struct TimeInterval {
  int start = 0;
  int finish = 0;

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

inline bool intersects(TimeInterval a, TimeInterval b) {
  return std::max(a.start, b.start) < std::min(a.finish, b.finish);
}

// Both lists sorted by start; linear merge.
inline bool intervals_intersect(const std::vector<TimeInterval>& a,
                                const std::vector<TimeInterval>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (intersects(a[i], b[j])) return true;
    if (a[i].finish <= b[j].finish) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

// strict: consecutive intervals need finish_i < start_{i+1} (a dead step
// between them); lenient: touching intervals finish_i == start_{i+1} allowed.
enum class IntervalMode { strict, lenient };

struct TemporalEdge {
  int id = -1;
  int u = -1;
  int v = -1;
  std::vector<TimeInterval> intervals;  // nonempty, sorted by start

  bool incident_on(int node) const { return u == node || v == node; }

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

inline bool share_endpoint(const TemporalEdge& a, const TemporalEdge& b) {
  return a.incident_on(b.u) || a.incident_on(b.v);
}

// Two distinct edges overlap iff they share an endpoint and are alive at a
// common timestep. Irreflexive: an edge never overlaps itself.
inline bool overlaps(const TemporalEdge& a, const TemporalEdge& b) {
  if (a.id == b.id) return false;
  if (!share_endpoint(a, b)) return false;
  return intervals_intersect(a.intervals, b.intervals);
}

// ---------------------------------------------------------------------------
// graph

struct TemporalGraph {
  std::vector<std::string> node_labels;
  std::vector<TemporalEdge> edges;  // ids equal positions 0..m-1
  int lifetime = 0;
  IntervalMode mode = IntervalMode::strict;

  int node_count() const { return static_cast<int>(node_labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  std::optional<int> node_index(std::string_view name) const {
    for (int i = 0; i < node_count(); ++i) {
      if (node_labels[i] == name) return i;
    }
    return std::nullopt;
  }

  std::optional<int> edge_between(int a, int b) const {
    for (const TemporalEdge& e : edges) {
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.id;
    }
    return std::nullopt;
  }

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;
};

// ---------------------------------------------------------------------------
// validation

enum class ViolationKind {
  self_loop,
  duplicate_edge,
  bad_interval,
  unsorted_or_overlapping_intervals,
  interval_beyond_lifetime,
  unknown_node,
  duplicate_node,
  bad_node_name,
  syntax,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::self_loop: return "SelfLoop";
    case ViolationKind::duplicate_edge: return "DuplicateEdge";
    case ViolationKind::bad_interval: return "BadInterval";
    case ViolationKind::unsorted_or_overlapping_intervals:
      return "UnsortedOrOverlappingIntervals";
    case ViolationKind::interval_beyond_lifetime: return "IntervalBeyondLifetime";
    case ViolationKind::unknown_node: return "UnknownNode";
    case ViolationKind::duplicate_node: return "DuplicateNode";
    case ViolationKind::bad_node_name: return "BadNodeName";
    case ViolationKind::syntax: return "Syntax";
  }
  return "Unknown";
}

struct Violation {
  ViolationKind kind = ViolationKind::syntax;
  std::string detail;
  int line = -1;  // 1-based source line when known, -1 otherwise

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::string to_string(const Violation& v) {
  std::ostringstream os;
  os << to_string(v.kind);
  if (v.line >= 1) os << " (line " << v.line << ")";
  if (!v.detail.empty()) os << ": " << v.detail;
  return os.str();
}

struct RawNode {
  std::string name;
  int line = -1;
};

struct RawEdge {
  std::string u;
  std::string v;
  std::vector<TimeInterval> intervals;
  int line = -1;
};

struct RawTemporalGraph {
  int lifetime = 0;
  std::vector<RawNode> nodes;
  std::vector<RawEdge> edges;
};

struct ValidationResult {
  std::optional<TemporalGraph> graph;
  std::vector<Violation> violations;

  bool ok() const { return graph.has_value(); }
};

inline bool valid_node_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

// Checks every model constraint and reports all violations found, not just
// the first. A graph is produced only when the list comes back empty.
inline ValidationResult validate_graph(const RawTemporalGraph& raw,
                                       IntervalMode mode = IntervalMode::strict) {
  ValidationResult result;
  auto report = [&result](ViolationKind kind, std::string detail, int line) {
    result.violations.push_back(Violation{kind, std::move(detail), line});
  };

  if (raw.lifetime < 0) {
    report(ViolationKind::bad_interval, "lifetime is negative", -1);
  }

  std::unordered_map<std::string, int> index;
  std::vector<std::string> labels;
  for (const RawNode& node : raw.nodes) {
    if (!valid_node_name(node.name)) {
      report(ViolationKind::bad_node_name, "node name '" + node.name + "'", node.line);
      continue;
    }
    if (index.count(node.name)) {
      report(ViolationKind::duplicate_node, "node '" + node.name + "' declared twice",
             node.line);
      continue;
    }
    index.emplace(node.name, static_cast<int>(labels.size()));
    labels.push_back(node.name);
  }

  std::set<std::pair<int, int>> seen_pairs;
  std::vector<TemporalEdge> edges;
  for (const RawEdge& re : raw.edges) {
    const std::string pair_name = re.u + "-" + re.v;
    auto iu = index.find(re.u);
    auto iv = index.find(re.v);
    if (iu == index.end()) {
      report(ViolationKind::unknown_node, "edge " + pair_name + " references '" + re.u + "'",
             re.line);
    }
    if (iv == index.end()) {
      report(ViolationKind::unknown_node, "edge " + pair_name + " references '" + re.v + "'",
             re.line);
    }
    if (iu != index.end() && iv != index.end()) {
      if (iu->second == iv->second) {
        report(ViolationKind::self_loop, "edge " + pair_name, re.line);
      } else {
        auto key = std::minmax(iu->second, iv->second);
        if (!seen_pairs.insert(key).second) {
          report(ViolationKind::duplicate_edge, "second edge between " + pair_name, re.line);
        }
      }
    }

    if (re.intervals.empty()) {
      report(ViolationKind::bad_interval, "edge " + pair_name + " has no intervals", re.line);
    }
    for (std::size_t k = 0; k < re.intervals.size(); ++k) {
      const TimeInterval iv2 = re.intervals[k];
      std::ostringstream where;
      where << "edge " << pair_name << " interval [" << iv2.start << "," << iv2.finish << ")";
      if (iv2.start < 0 || iv2.start >= iv2.finish) {
        report(ViolationKind::bad_interval, where.str(), re.line);
      }
      if (iv2.finish > raw.lifetime) {
        report(ViolationKind::interval_beyond_lifetime, where.str(), re.line);
      }
      if (k > 0) {
        const TimeInterval prev = re.intervals[k - 1];
        const bool gap_ok = mode == IntervalMode::strict ? prev.finish < iv2.start
                                                         : prev.finish <= iv2.start;
        if (!gap_ok) {
          report(ViolationKind::unsorted_or_overlapping_intervals, where.str(), re.line);
        }
      }
    }

    if (result.violations.empty()) {
      TemporalEdge e;
      e.id = static_cast<int>(edges.size());
      e.u = iu->second;
      e.v = iv->second;
      e.intervals = re.intervals;
      edges.push_back(std::move(e));
    }
  }

  if (result.violations.empty()) {
    result.graph = TemporalGraph{std::move(labels), std::move(edges), raw.lifetime, mode};
  }
  return result;
}

// ---------------------------------------------------------------------------
// overlap structure

struct OverlapSets {
  std::vector<std::vector<int>> sets;  // sets[e] = ids overlapping edge e, ascending
  std::vector<int> counts;             // counts[e] = sets[e].size()
};

inline OverlapSets overlap_sets(const TemporalGraph& g) {
  const int m = g.edge_count();
  OverlapSets os;
  os.sets.resize(m);
  os.counts.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (overlaps(g.edges[i], g.edges[j])) {
        os.sets[i].push_back(j);
        os.sets[j].push_back(i);
      }
    }
  }
  for (int i = 0; i < m; ++i) os.counts[i] = static_cast<int>(os.sets[i].size());
  return os;
}

// ---------------------------------------------------------------------------
// underlying static graph and classification

struct StaticGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, in temporal edge order

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;
};

inline StaticGraph underlying_graph(const TemporalGraph& g) {
  StaticGraph sg;
  sg.node_count = g.node_count();
  sg.edges.reserve(g.edges.size());
  for (const TemporalEdge& e : g.edges) {
    sg.edges.push_back(std::minmax(e.u, e.v));
  }
  return sg;
}

// adjacency()[v] = (neighbour, edge id) pairs sorted by neighbour id.
inline std::vector<std::vector<std::pair<int, int>>> adjacency(const TemporalGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.node_count());
  for (const TemporalEdge& e : g.edges) {
    adj[e.u].push_back({e.v, e.id});
    adj[e.v].push_back({e.u, e.id});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

struct Classification {
  bool is_tree = false;
  bool is_bipartite = false;
  int max_degree = 0;
  int max_intervals_per_edge = 0;
  bool single_interval = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify(const TemporalGraph& g) {
  Classification c;
  const int n = g.node_count();
  auto adj = adjacency(g);

  for (const auto& list : adj) {
    c.max_degree = std::max(c.max_degree, static_cast<int>(list.size()));
  }
  for (const TemporalEdge& e : g.edges) {
    c.max_intervals_per_edge =
        std::max(c.max_intervals_per_edge, static_cast<int>(e.intervals.size()));
  }
  c.single_interval = c.max_intervals_per_edge == 1;

  // bipartite: 2-colour every component
  std::vector<int> colour(n, -1);
  c.is_bipartite = true;
  int reached_from_0 = 0;
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    int component = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++component;
      for (auto [w, eid] : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = colour[v] ^ 1;
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          c.is_bipartite = false;
        }
      }
    }
    if (s == 0) reached_from_0 = component;
  }

  const bool connected = n > 0 && reached_from_0 == n;
  c.is_tree = connected && g.edge_count() == n - 1;
  return c;
}

// ---------------------------------------------------------------------------
// rooted view of a temporal tree

struct RootedTreeView {
  int root = -1;
  std::vector<int> parent;                 // -1 for root
  std::vector<int> parent_edge;            // edge id to parent, -1 for root
  std::vector<std::vector<int>> children;  // ascending node ids
  std::vector<int> depth;
  int height = 0;
  std::vector<std::vector<int>> levels;  // levels[d] = nodes at depth d, ascending
};

inline RootedTreeView rooted_view(const TemporalGraph& g, int root) {
  if (root < 0 || root >= g.node_count()) {
    throw Error(ErrorKind::unknown_root, "node index " + std::to_string(root));
  }
  if (!classify(g).is_tree) {
    throw Error(ErrorKind::not_a_tree, "underlying graph is not a tree");
  }

  const int n = g.node_count();
  RootedTreeView view;
  view.root = root;
  view.parent.assign(n, -1);
  view.parent_edge.assign(n, -1);
  view.children.resize(n);
  view.depth.assign(n, -1);

  auto adj = adjacency(g);
  std::vector<int> queue{root};
  view.depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (auto [w, eid] : adj[v]) {
      if (view.depth[w] != -1) continue;
      view.depth[w] = view.depth[v] + 1;
      view.parent[w] = v;
      view.parent_edge[w] = eid;
      view.children[v].push_back(w);  // adj sorted, so children come out ascending
      queue.push_back(w);
    }
  }

  view.height = *std::max_element(view.depth.begin(), view.depth.end());
  view.levels.resize(view.height + 1);
  for (int v = 0; v < n; ++v) view.levels[view.depth[v]].push_back(v);
  return view;
}

inline RootedTreeView rooted_view(const TemporalGraph& g, std::string_view root_name) {
  auto idx = g.node_index(root_name);
  if (!idx) {
    throw Error(ErrorKind::unknown_root, "no node named '" + std::string(root_name) + "'");
  }
  return rooted_view(g, *idx);
}

}  // namespace timedmatch
