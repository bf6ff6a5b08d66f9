#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "timedmatch/timedmatch.hpp"

using namespace timedmatch;
using tmtest::build_graph;
using tmtest::eid;

TEST_CASE("greedy trace on the seven-edge demo") {
  TemporalGraph g = tmtest::overlap_demo();
  GreedyTrace trace = solve_greedy(g);

  // Edge ids in file order: 0 a-b, 1 a-f, 2 c-f, 3 d-f, 4 b-c, 5 c-d, 6 b-d.
  std::vector<GreedyRound> expected{
      {0, 1, {0, 1}},  // a-b ties d-f, b-c, b-d at one overlap; lowest id wins
      {3, 1, {2, 3}},  // d-f drags the hub c-f out with it
      {4, 0, {4}},     // b-c is free once c-f is gone
      {5, 1, {5, 6}},  // c-d ties b-d; lower id wins and removes it
  };
  CHECK(trace.rounds == expected);
  CHECK(trace.matching.edge_ids == std::vector<int>{0, 3, 4, 5});
  CHECK(is_maximal(g, trace.matching).ok);
}

TEST_CASE("greedy on degenerate graphs") {
  TemporalGraph empty = build_graph(1, {"a"}, {});
  GreedyTrace t0 = solve_greedy(empty);
  CHECK(t0.rounds.empty());
  CHECK(t0.matching.size() == 0);

  TemporalGraph two = build_graph(4, {"a", "b", "c", "d"},
                                  {{"a", "b", {{0, 2}}}, {"c", "d", {{1, 3}}}});
  GreedyTrace t2 = solve_greedy(two);
  REQUIRE(t2.rounds.size() == 2);
  CHECK(t2.rounds[0].overlap_count == 0);
  CHECK(t2.rounds[1].overlap_count == 0);
  CHECK(t2.matching.edge_ids == std::vector<int>{0, 1});
}

TEST_CASE("greedy replay: each round removes a minimum-overlap survivor") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    int max_edges = n * (n - 1) / 2;
    int m = std::min(max_edges, 3 + static_cast<int>(seed % 14));
    TemporalGraph g = gen_random_graph(n, m, 4 + static_cast<int>(seed % 6),
                                       1 + static_cast<int>(seed % 3), seed);
    CAPTURE(seed, n, m);

    OverlapSets os = overlap_sets(g);
    GreedyTrace trace = solve_greedy(g);
    std::set<int> alive;
    for (int i = 0; i < g.edge_count(); ++i) alive.insert(i);

    for (const GreedyRound& round : trace.rounds) {
      REQUIRE(alive.count(round.chosen) == 1);

      // Recompute surviving overlap counts from scratch.
      int best_id = -1, best_count = 0;
      auto surviving = [&](int e) {
        int c = 0;
        for (int other : os.sets[e]) c += alive.count(other) ? 1 : 0;
        return c;
      };
      for (int e : alive) {
        int c = surviving(e);
        if (best_id < 0 || c < best_count) {
          best_id = e;
          best_count = c;
        }
      }
      CHECK(round.chosen == best_id);
      CHECK(round.overlap_count == best_count);

      std::vector<int> removed{round.chosen};
      for (int other : os.sets[round.chosen]) {
        if (alive.count(other)) removed.push_back(other);
      }
      std::sort(removed.begin(), removed.end());
      CHECK(round.removed == removed);
      for (int e : removed) alive.erase(e);
    }
    CHECK(alive.empty());  // the rounds partition the edge set

    CHECK(is_timed_matching(g, trace.matching).ok);
    CHECK(is_maximal(g, trace.matching).ok);
  }
}

TEST_CASE("greedy respects its approximation guarantee") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    int n = 4 + static_cast<int>(seed % 6);
    int max_edges = n * (n - 1) / 2;
    int m = std::min(max_edges, 2 + static_cast<int>(seed % 16));
    TemporalGraph g = gen_random_graph(n, m, 3 + static_cast<int>(seed % 8),
                                       1 + static_cast<int>(seed % 2), seed);
    CAPTURE(seed);

    InstanceStats st = stats(g);
    long long t = static_cast<long long>(greedy_matching(g).size());
    long long sum = 0;
    for (int c : st.overlap_counts) sum += c;

    // t * (S + m) >= m^2, the integer form of t >= m / (nstar + 1).
    CHECK(t * (sum + m) >= static_cast<long long>(m) * m);
    CHECK(Rational(t) >= st.matching_lower_bound);

    // The average overlap never exceeds 2*maxdeg - 2.
    if (m > 0) {
      CHECK(st.average_overlap <= Rational(2 * st.max_degree - 2));
    }
  }
}

TEST_CASE("instance stats on the seven-edge demo") {
  InstanceStats st = stats(tmtest::overlap_demo());
  CHECK(st.overlap_counts == std::vector<int>{1, 2, 4, 1, 1, 2, 1});
  CHECK(st.average_overlap == Rational(12, 7));
  CHECK(st.matching_lower_bound == Rational(49, 19));
  CHECK(st.max_degree == 3);
  CHECK(st.degree_ratio == Rational(1, 5));
}

TEST_CASE("instance stats edge cases") {
  InstanceStats empty = stats(build_graph(1, {"a"}, {}));
  CHECK(empty.overlap_counts.empty());
  CHECK(empty.average_overlap == Rational(0));
  CHECK(empty.matching_lower_bound == Rational(0));
  CHECK(empty.degree_ratio == Rational(0));

  InstanceStats lone = stats(build_graph(2, {"a", "b"}, {{"a", "b", {{0, 2}}}}));
  CHECK(lone.overlap_counts == std::vector<int>{0});
  CHECK(lone.average_overlap == Rational(0));
  CHECK(lone.matching_lower_bound == Rational(1));
  CHECK(lone.max_degree == 1);
  CHECK(lone.degree_ratio == Rational(1));
}
