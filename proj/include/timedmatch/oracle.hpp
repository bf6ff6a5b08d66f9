#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "timedmatch/core.hpp"
#include "timedmatch/matching.hpp"

// Exact reference solver. Maximum timed matchings are maximum independent
// sets of the conflict graph (one vertex per temporal edge, adjacency =
// overlap), solved here by branch and bound over 64-bit vertex masks.

namespace timedmatch {

struct ConflictGraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;  // ascending neighbour lists

  int edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adjacency) twice += list.size();
    return static_cast<int>(twice / 2);
  }
};

inline ConflictGraph build_conflict_graph(const TemporalGraph& g) {
  OverlapSets os = overlap_sets(g);
  return ConflictGraph{g.edge_count(), std::move(os.sets)};
}

struct ExactOptions {
  int edge_budget = 25;   // refuse instances with more temporal edges
  bool enumerate = false; // check all 2^m subsets instead of branch and bound
};

namespace detail {

// Deterministic: degree<=1 vertices are taken lowest-id first, the branch
// vertex is the lowest id of maximum remaining degree, and the include
// branch runs before the exclude branch. Only strict improvements replace
// the incumbent, so the reported set is reproducible.
inline void mis_branch(const std::vector<std::uint64_t>& nbr, std::uint64_t remaining,
                       std::uint64_t chosen, int chosen_count, std::uint64_t& best,
                       int& best_count) {
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (std::uint64_t r = remaining; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint64_t adj = nbr[v] & remaining;
      if (std::popcount(adj) <= 1) {
        chosen |= std::uint64_t{1} << v;
        ++chosen_count;
        remaining &= ~((std::uint64_t{1} << v) | adj);
        reduced = true;
        break;
      }
    }
  }

  if (remaining == 0) {
    if (chosen_count > best_count) {
      best_count = chosen_count;
      best = chosen;
    }
    return;
  }
  if (chosen_count + std::popcount(remaining) <= best_count) return;

  int pick = -1;
  int pick_degree = -1;
  for (std::uint64_t r = remaining; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    const int degree = std::popcount(nbr[v] & remaining);
    if (degree > pick_degree) {
      pick_degree = degree;
      pick = v;
    }
  }

  const std::uint64_t pick_bit = std::uint64_t{1} << pick;
  mis_branch(nbr, remaining & ~(pick_bit | nbr[pick]), chosen | pick_bit, chosen_count + 1,
             best, best_count);
  mis_branch(nbr, remaining & ~pick_bit, chosen, chosen_count, best, best_count);
}

// Subset sweep in ascending mask order; keeps the first mask of each new
// best cardinality. Feasibility of mask = feasibility of mask minus its
// lowest vertex, plus no conflict between that vertex and the rest.
inline std::uint64_t mis_enumerate(const std::vector<std::uint64_t>& nbr, int m) {
  std::vector<char> independent(std::size_t{1} << m, 1);
  std::uint64_t best = 0;
  int best_count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    independent[mask] = independent[rest] && (nbr[low] & rest) == 0;
    if (independent[mask] && std::popcount(mask) > best_count) {
      best_count = std::popcount(mask);
      best = mask;
    }
  }
  return best;
}

}  // namespace detail

inline TimedMatching solve_exact(const TemporalGraph& g, ExactOptions opts = {}) {
  if (opts.edge_budget > 63) {
    throw Error(ErrorKind::infeasible_params, "edge budget above 63 is unsupported");
  }
  const int m = g.edge_count();
  if (m > opts.edge_budget) {
    throw Error(ErrorKind::budget_exceeded,
                std::to_string(m) + " edges exceed budget " +
                    std::to_string(opts.edge_budget));
  }

  ConflictGraph cg = build_conflict_graph(g);
  std::vector<std::uint64_t> nbr(m, 0);
  for (int v = 0; v < m; ++v) {
    for (int w : cg.adjacency[v]) nbr[v] |= std::uint64_t{1} << w;
  }

  std::uint64_t best = 0;
  if (opts.enumerate) {
    if (m > 20) {
      throw Error(ErrorKind::infeasible_params,
                  "subset enumeration limited to 20 edges, got " + std::to_string(m));
    }
    if (m > 0) best = detail::mis_enumerate(nbr, m);
  } else {
    const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    int best_count = -1;
    detail::mis_branch(nbr, all, 0, 0, best, best_count);
  }

  std::vector<int> ids;
  for (std::uint64_t r = best; r; r &= r - 1) ids.push_back(std::countr_zero(r));
  return TimedMatching{std::move(ids)};
}

}  // namespace timedmatch
