#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "timedmatch/timedmatch.hpp"

// Hand-built instances reused across test files. Every fixture goes through
// validate_graph, so a bad edit fails loudly instead of corrupting tests.

namespace tmtest {

using namespace timedmatch;

using EdgeSpec = std::tuple<std::string, std::string, std::vector<TimeInterval>>;

inline TemporalGraph build_graph(
    int lifetime, const std::vector<std::string>& nodes,
    const std::vector<EdgeSpec>& edges,
    IntervalMode mode = IntervalMode::strict) {
  RawTemporalGraph raw;
  raw.lifetime = lifetime;
  for (const auto& n : nodes) raw.nodes.push_back({n, -1});
  for (const auto& [u, v, intervals] : edges) raw.edges.push_back({u, v, intervals, -1});
  ValidationResult res = validate_graph(raw, mode);
  if (!res.ok()) throw std::logic_error("bad fixture: " + to_string(res.violations.front()));
  return *res.graph;
}

inline int eid(const TemporalGraph& g, const std::string& u, const std::string& v) {
  auto a = g.node_index(u);
  auto b = g.node_index(v);
  if (!a || !b) throw std::logic_error("fixture lookup: unknown node " + u + " or " + v);
  auto id = g.edge_between(*a, *b);
  if (!id) throw std::logic_error("fixture lookup: no edge " + u + "-" + v);
  return *id;
}

// Six nodes, five edges, lifetime 3. Carries a maximum matching of size 4
// ({ab, ad, cd, fg}) and a maximal one of size 3 ({ab, ad, dg}).
inline TemporalGraph matching_demo() {
  return build_graph(3, {"a", "b", "c", "d", "f", "g"},
                     {
                         {"a", "b", {{0, 1}}},
                         {"a", "d", {{2, 3}}},
                         {"c", "d", {{0, 1}}},
                         {"d", "g", {{0, 2}}},
                         {"f", "g", {{1, 2}}},
                     });
}

// Five nodes, seven edges, lifetime 6. Overlap counts by edge id:
// ab=1 af=2 cf=4 df=1 bc=1 cd=2 bd=1.
inline TemporalGraph overlap_demo() {
  return build_graph(6, {"a", "b", "c", "d", "f"},
                     {
                         {"a", "b", {{0, 2}}},
                         {"a", "f", {{1, 3}}},
                         {"c", "f", {{2, 6}}},
                         {"d", "f", {{4, 6}}},
                         {"b", "c", {{5, 6}}},
                         {"c", "d", {{2, 4}}},
                         {"b", "d", {{3, 4}}},
                     });
}

// Rooted tree of 12 nodes and height 3 whose solve exercises both feasible
// set branches: at b the parent-aware schedule is strictly larger (so rb is
// reserved for the root), at c and d the two schedules tie.
inline TemporalGraph twelve_node_tree() {
  return build_graph(8,
                     {"r", "a", "b", "c", "d", "g", "h", "i", "j", "k", "l", "q"},
                     {
                         {"r", "a", {{0, 2}}},
                         {"r", "b", {{2, 4}}},
                         {"a", "c", {{1, 3}}},
                         {"a", "d", {{5, 7}}},
                         {"b", "g", {{0, 2}}},
                         {"b", "h", {{1, 3}}},
                         {"c", "i", {{0, 2}}},
                         {"c", "j", {{2, 4}}},
                         {"c", "k", {{1, 3}}},
                         {"d", "l", {{4, 6}}},
                         {"d", "q", {{6, 8}}},
                     });
}

// Four nodes: ra collides with both rb and ac. The optimum {rb, ac} requires
// keeping ac at node a (sacrificing ra) and adding rb at the root.
inline TemporalGraph tiny_tree() {
  return build_graph(3, {"r", "a", "b", "c"},
                     {
                         {"r", "a", {{0, 2}}},
                         {"r", "b", {{1, 3}}},
                         {"a", "c", {{1, 2}}},
                     });
}

}  // namespace tmtest
