#pragma once

#include <algorithm>
#include <vector>

#include <boost/rational.hpp>

#include "timedmatch/core.hpp"
#include "timedmatch/matching.hpp"

// Approximation by repeated least-conflicted choice: pick a surviving edge
// with the fewest surviving overlaps, keep it, delete it together with its
// overlap set, repeat. The result is maximal, and its size t obeys
// t * (N* + 1) >= m where N* is the mean overlap count of the instance.

namespace timedmatch {

using Rational = boost::rational<long long>;

struct GreedyRound {
  int chosen = -1;
  int overlap_count = 0;     // surviving overlaps of the choice at pick time
  std::vector<int> removed;  // chosen plus its surviving overlaps, ascending

  friend bool operator==(const GreedyRound&, const GreedyRound&) = default;
};

struct GreedyTrace {
  std::vector<GreedyRound> rounds;
  TimedMatching matching;
};

inline GreedyTrace solve_greedy(const TemporalGraph& g) {
  const int m = g.edge_count();
  OverlapSets os = overlap_sets(g);
  std::vector<char> alive(m, 1);
  std::vector<int> count = os.counts;

  GreedyTrace trace;
  int remaining = m;
  while (remaining > 0) {
    int chosen = -1;
    for (int e = 0; e < m; ++e) {
      if (alive[e] && (chosen == -1 || count[e] < count[chosen])) chosen = e;
    }

    GreedyRound round;
    round.chosen = chosen;
    round.overlap_count = count[chosen];
    round.removed.push_back(chosen);
    for (int w : os.sets[chosen]) {
      if (alive[w]) round.removed.push_back(w);
    }
    std::sort(round.removed.begin(), round.removed.end());

    for (int w : round.removed) alive[w] = 0;
    remaining -= static_cast<int>(round.removed.size());
    for (int w : round.removed) {
      for (int x : os.sets[w]) {
        if (alive[x]) --count[x];
      }
    }

    trace.matching.edge_ids.push_back(chosen);
    trace.rounds.push_back(std::move(round));
  }

  std::sort(trace.matching.edge_ids.begin(), trace.matching.edge_ids.end());
  return trace;
}

inline TimedMatching greedy_matching(const TemporalGraph& g) {
  return solve_greedy(g).matching;
}

struct InstanceStats {
  std::vector<int> overlap_counts;     // per edge, id order
  Rational average_overlap{0};         // N*
  int max_degree = 0;                  // of the underlying static graph
  Rational matching_lower_bound{0};    // m / (N* + 1), guaranteed greedy size
  Rational degree_ratio{0};            // 1 / (2 * max_degree - 1)
};

inline InstanceStats stats(const TemporalGraph& g) {
  InstanceStats st;
  OverlapSets os = overlap_sets(g);
  st.overlap_counts = std::move(os.counts);
  st.max_degree = classify(g).max_degree;

  const long long m = g.edge_count();
  if (m > 0) {
    long long total = 0;
    for (int c : st.overlap_counts) total += c;
    st.average_overlap = Rational(total, m);
    st.matching_lower_bound = Rational(m * m, total + m);
  }
  if (st.max_degree > 0) {
    st.degree_ratio = Rational(1, 2 * st.max_degree - 1);
  }
  return st;
}

}  // namespace timedmatch
