#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "timedmatch/core.hpp"
#include "timedmatch/matching.hpp"

// Exact solver for temporal trees whose edges carry one interval each.
// Nodes are processed level by level from the deepest up; each node combines
// its children's solutions with a best set of its own incident edges that the
// children's solutions leave free.

namespace timedmatch {

// Larger of the two by cardinality; ties go to x.
inline TimedMatching card_max(const TimedMatching& x, const TimedMatching& y) {
  return y.size() > x.size() ? y : x;
}

struct SubtreeSolution {
  int node = -1;
  TimedMatching tm1;          // union of child matchings, no edge at this node
  TimedMatching tm2;          // feasible set joined with that union (empty if infeasible)
  std::vector<int> feasible;  // chosen non-overlapping incident edges, ascending
  TimedMatching best;         // larger of tm1/tm2, ties to tm1
};

struct TreeDpResult {
  RootedTreeView view;
  std::vector<SubtreeSolution> per_node;  // indexed by node id
  TimedMatching matching;                 // best at the root
};

// Edges at v that the children's matchings leave free, thinned to a maximum
// non-overlapping set. When v has a parent, the variant that may also use the
// parent edge is tried; only a strictly larger result proves the parent edge
// is unavoidable, in which case it is reserved (dropped here) so the parent
// level may use it.
inline std::vector<int> compute_feasible_set(const TemporalGraph& g,
                                             const RootedTreeView& view, int v,
                                             const std::vector<SubtreeSolution>& solutions) {
  std::vector<int> free_edges;
  for (int child : view.children[v]) {
    const int eid = view.parent_edge[child];
    if (intersect_set(g, g.edges[eid], solutions[child].best.edge_ids).empty()) {
      free_edges.push_back(eid);
    }
  }
  if (free_edges.empty()) return {};

  std::vector<int> base = max_nonoverlapping_subset(g, free_edges);
  const int parent_eid = view.parent_edge[v];
  if (parent_eid != -1) {
    std::vector<int> with_parent = free_edges;
    with_parent.push_back(parent_eid);
    std::vector<int> extended = max_nonoverlapping_subset(g, with_parent);
    if (extended.size() > base.size()) {
      extended.erase(std::remove(extended.begin(), extended.end(), parent_eid),
                     extended.end());
      return extended;
    }
  }
  return base;
}

inline TreeDpResult solve_tree_detailed(const TemporalGraph& g, int root) {
  RootedTreeView view = rooted_view(g, root);
  for (const TemporalEdge& e : g.edges) {
    if (e.intervals.size() != 1) {
      throw Error(ErrorKind::multi_interval_unsupported,
                  "edge id " + std::to_string(e.id) + " has " +
                      std::to_string(e.intervals.size()) + " intervals");
    }
  }

  const int n = g.node_count();
  std::vector<SubtreeSolution> sol(n);
  for (int v = 0; v < n; ++v) sol[v].node = v;

  for (int level = view.height; level >= 0; --level) {
    for (int v : view.levels[level]) {
      if (view.children[v].empty()) continue;  // leaves keep all-empty fields
      SubtreeSolution& s = sol[v];

      std::vector<int> uni;
      for (int child : view.children[v]) {
        const auto& ids = sol[child].best.edge_ids;
        uni.insert(uni.end(), ids.begin(), ids.end());
      }
      std::sort(uni.begin(), uni.end());
      s.tm1 = TimedMatching{std::move(uni)};

      s.feasible = compute_feasible_set(g, view, v, sol);
      if (!s.feasible.empty()) {
        std::vector<int> joined = s.tm1.edge_ids;
        joined.insert(joined.end(), s.feasible.begin(), s.feasible.end());
        std::sort(joined.begin(), joined.end());
        s.tm2 = TimedMatching{std::move(joined)};
      }

      s.best = card_max(s.tm1, s.tm2);
    }
  }

  TimedMatching best = sol[root].best;
  return TreeDpResult{std::move(view), std::move(sol), std::move(best)};
}

inline TimedMatching solve_tree(const TemporalGraph& g, int root) {
  return solve_tree_detailed(g, root).matching;
}

inline TreeDpResult solve_tree_detailed(const TemporalGraph& g, std::string_view root_name) {
  auto idx = g.node_index(root_name);
  if (!idx) {
    throw Error(ErrorKind::unknown_root, "no node named '" + std::string(root_name) + "'");
  }
  return solve_tree_detailed(g, *idx);
}

inline TimedMatching solve_tree(const TemporalGraph& g, std::string_view root_name) {
  return solve_tree_detailed(g, root_name).matching;
}

}  // namespace timedmatch
