#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "timedmatch/core.hpp"

// Timed matchings: edge sets in which no two members overlap, plus the
// single-node scheduling primitive the tree solver is built on.

namespace timedmatch {

struct TimedMatching {
  std::vector<int> edge_ids;  // ascending, unique

  int size() const { return static_cast<int>(edge_ids.size()); }

  bool contains(int id) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), id);
  }

  friend bool operator==(const TimedMatching&, const TimedMatching&) = default;
};

inline TimedMatching make_matching(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return TimedMatching{std::move(ids)};
}

inline void check_edge_ids(const TemporalGraph& g, const std::vector<int>& ids) {
  for (int id : ids) {
    if (id < 0 || id >= g.edge_count()) {
      throw Error(ErrorKind::unknown_edge_id, "edge id " + std::to_string(id));
    }
  }
}

struct MatchingCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // first overlapping pair, id order
};

inline MatchingCheck is_timed_matching(const TemporalGraph& g, const TimedMatching& m) {
  check_edge_ids(g, m.edge_ids);
  for (std::size_t i = 0; i < m.edge_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < m.edge_ids.size(); ++j) {
      if (overlaps(g.edges[m.edge_ids[i]], g.edges[m.edge_ids[j]])) {
        return {false, std::make_pair(m.edge_ids[i], m.edge_ids[j])};
      }
    }
  }
  return {true, std::nullopt};
}

struct MaximalCheck {
  bool ok = false;
  std::optional<int> addable;  // lowest-id edge that could join the matching
};

// Maximal means no further edge fits. Requires m to be a timed matching.
inline MaximalCheck is_maximal(const TemporalGraph& g, const TimedMatching& m) {
  auto check = is_timed_matching(g, m);
  if (!check.ok) {
    throw Error(ErrorKind::not_a_matching,
                "edges " + std::to_string(check.witness->first) + " and " +
                    std::to_string(check.witness->second) + " overlap");
  }
  for (const TemporalEdge& e : g.edges) {
    if (m.contains(e.id)) continue;
    bool fits = true;
    for (int id : m.edge_ids) {
      if (overlaps(e, g.edges[id])) {
        fits = false;
        break;
      }
    }
    if (fits) return {false, e.id};
  }
  return {true, std::nullopt};
}

// Members of s whose edges overlap e, ascending. e itself is skipped if listed.
inline std::vector<int> intersect_set(const TemporalGraph& g, const TemporalEdge& e,
                                      const std::vector<int>& s) {
  check_edge_ids(g, s);
  std::vector<int> out;
  for (int id : s) {
    if (overlaps(e, g.edges[id])) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Earliest-finish greedy over single-interval edges; ties broken by lower id.
// Exact when every pair of conflicting inputs has intersecting intervals,
// which holds for edge sets sharing a node.
inline std::vector<int> earliest_finish_schedule(
    const std::vector<std::pair<TimeInterval, int>>& items) {
  auto sorted = items;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.finish != b.first.finish) return a.first.finish < b.first.finish;
    return a.second < b.second;
  });
  std::vector<int> chosen;
  int free_from = 0;
  bool first = true;
  for (const auto& [iv, id] : sorted) {
    if (first || iv.start >= free_from) {
      chosen.push_back(id);
      free_from = iv.finish;
      first = false;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace detail

// Maximum pairwise non-overlapping subset of the given edges. Exact for the
// common-endpoint sets the tree solver feeds it; every input edge must carry
// exactly one interval.
inline std::vector<int> max_nonoverlapping_subset(const TemporalGraph& g,
                                                  std::vector<int> edge_ids) {
  check_edge_ids(g, edge_ids);
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  std::vector<std::pair<TimeInterval, int>> items;
  items.reserve(edge_ids.size());
  for (int id : edge_ids) {
    const TemporalEdge& e = g.edges[id];
    if (e.intervals.size() != 1) {
      throw Error(ErrorKind::multi_interval_unsupported,
                  "edge id " + std::to_string(id) + " has " +
                      std::to_string(e.intervals.size()) + " intervals");
    }
    items.push_back({e.intervals[0], id});
  }
  return detail::earliest_finish_schedule(items);
}

inline std::vector<int> max_nonoverlapping_subset(const std::vector<TemporalEdge>& edges) {
  std::vector<std::pair<TimeInterval, int>> items;
  items.reserve(edges.size());
  for (const TemporalEdge& e : edges) {
    if (e.intervals.size() != 1) {
      throw Error(ErrorKind::multi_interval_unsupported,
                  "edge id " + std::to_string(e.id) + " has " +
                      std::to_string(e.intervals.size()) + " intervals");
    }
    items.push_back({e.intervals[0], e.id});
  }
  return detail::earliest_finish_schedule(items);
}

}  // namespace timedmatch
