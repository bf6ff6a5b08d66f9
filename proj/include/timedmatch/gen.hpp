#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "timedmatch/core.hpp"
#include "timedmatch/reductions.hpp"

// Seeded instance generators. Every function is a pure function of its
// parameters: the same seed always yields the same value on this platform.

namespace timedmatch {

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {  // inclusive bounds
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// k disjoint intervals need 2k distinct cut points in 0..lifetime; sampling
// them sorted keeps strict-mode gaps automatically.
inline std::vector<TimeInterval> random_intervals(std::mt19937_64& rng, int lifetime,
                                                  int max_intervals) {
  const int cap = std::max(1, std::min(max_intervals, (lifetime + 1) / 2));
  const int k = uniform(rng, 1, cap);
  std::vector<int> points(static_cast<std::size_t>(lifetime) + 1);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(static_cast<std::size_t>(2 * k));
  std::sort(points.begin(), points.end());
  std::vector<TimeInterval> intervals;
  for (int i = 0; i < k; ++i) {
    intervals.push_back({points[static_cast<std::size_t>(2 * i)],
                         points[static_cast<std::size_t>(2 * i + 1)]});
  }
  return intervals;
}

inline TemporalGraph finish_graph(RawTemporalGraph raw, IntervalMode mode) {
  ValidationResult res = validate_graph(std::move(raw), mode);
  if (!res.ok()) {
    throw std::logic_error("generator produced an invalid graph: " +
                           to_string(res.violations.front()));
  }
  return std::move(*res.graph);
}

}  // namespace detail

inline TemporalGraph gen_random_graph(int n, int m, int lifetime, int max_intervals,
                                      std::uint64_t seed) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || n > 2000) throw Error(ErrorKind::infeasible_params, "need 1 <= n <= 2000");
  if (m < 0 || m > pairs) {
    throw Error(ErrorKind::infeasible_params,
                std::to_string(m) + " edges do not fit on " + std::to_string(n) + " nodes");
  }
  if (lifetime < 1) throw Error(ErrorKind::infeasible_params, "lifetime must be positive");
  if (max_intervals < 1) throw Error(ErrorKind::infeasible_params, "max intervals must be positive");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> all_pairs;
  all_pairs.reserve(static_cast<std::size_t>(pairs));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
  }
  std::shuffle(all_pairs.begin(), all_pairs.end(), rng);

  RawTemporalGraph raw;
  raw.lifetime = lifetime;
  for (int i = 0; i < n; ++i) raw.nodes.push_back({"n" + std::to_string(i), -1});
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = all_pairs[static_cast<std::size_t>(e)];
    RawEdge edge;
    edge.u = "n" + std::to_string(u);
    edge.v = "n" + std::to_string(v);
    edge.intervals = detail::random_intervals(rng, lifetime, max_intervals);
    raw.edges.push_back(std::move(edge));
  }
  return detail::finish_graph(std::move(raw), IntervalMode::strict);
}

struct GeneratedTree {
  TemporalGraph graph;
  std::string root;
};

inline GeneratedTree gen_random_tree(int n, int lifetime, int max_intervals,
                                     std::uint64_t seed) {
  if (n < 1 || n > 100000) throw Error(ErrorKind::infeasible_params, "need 1 <= n <= 100000");
  if (lifetime < 1) throw Error(ErrorKind::infeasible_params, "lifetime must be positive");
  if (max_intervals < 1) throw Error(ErrorKind::infeasible_params, "max intervals must be positive");

  std::mt19937_64 rng(seed);
  RawTemporalGraph raw;
  raw.lifetime = lifetime;
  for (int i = 0; i < n; ++i) raw.nodes.push_back({"n" + std::to_string(i), -1});
  for (int i = 1; i < n; ++i) {
    RawEdge edge;
    edge.u = "n" + std::to_string(detail::uniform(rng, 0, i - 1));
    edge.v = "n" + std::to_string(i);
    edge.intervals = detail::random_intervals(rng, lifetime, max_intervals);
    raw.edges.push_back(std::move(edge));
  }
  return GeneratedTree{detail::finish_graph(std::move(raw), IntervalMode::strict), "n0"};
}

inline ColouredPath gen_coloured_path(int n, int colours, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::infeasible_params, "path needs at least two nodes");
  if (colours < 1 || (n >= 3 && colours < 2)) {
    throw Error(ErrorKind::infeasible_params,
                "proper colouring of " + std::to_string(n - 1) + " path edges needs 2 colours");
  }

  std::mt19937_64 rng(seed);
  ColouredPath p;
  p.node_count = n;
  p.colour_count = colours;
  int previous = -1;
  for (int i = 0; i < n - 1; ++i) {
    int colour;
    if (previous == -1) {
      colour = detail::uniform(rng, 0, colours - 1);
    } else {
      colour = detail::uniform(rng, 0, colours - 2);
      if (colour >= previous) ++colour;  // skip the previous colour
    }
    p.edge_colours.push_back(colour);
    previous = colour;
  }
  return p;
}

// Two positive and two negative occurrences per variable: shuffle the full
// occurrence multiset into clauses of three and retry whenever a clause
// would repeat a literal.
inline CnfFormula2P2N gen_formula_2p2n(int vars, std::uint64_t seed) {
  if (vars < 3 || vars % 3 != 0) {
    throw Error(ErrorKind::infeasible_params,
                "variable count must be a positive multiple of 3 for 3-literal clauses");
  }

  std::mt19937_64 rng(seed);
  std::vector<Literal> pool;
  for (int v = 0; v < vars; ++v) {
    pool.push_back({v, true});
    pool.push_back({v, true});
    pool.push_back({v, false});
    pool.push_back({v, false});
  }
  const int d = 4 * vars / 3;

  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(pool.begin(), pool.end(), rng);
    CnfFormula2P2N f;
    f.var_count = vars;
    bool ok = true;
    for (int c = 0; ok && c < d; ++c) {
      Clause cl;
      for (int k = 0; k < 3; ++k) {
        cl.literals[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(3 * c + k)];
      }
      ok = !(cl.literals[0] == cl.literals[1] || cl.literals[0] == cl.literals[2] ||
             cl.literals[1] == cl.literals[2]);
      f.clauses.push_back(cl);
    }
    if (ok) return f;
  }
  throw Error(ErrorKind::infeasible_params, "could not partition literals into clauses");
}

inline LabelledStaticGraph gen_labelled_graph(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > 2000) throw Error(ErrorKind::infeasible_params, "need 1 <= n <= 2000");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::infeasible_params, "edge probability must lie in [0, 1]");
  }

  std::mt19937_64 rng(seed);
  LabelledStaticGraph lsg;
  lsg.graph.node_count = n;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) lsg.graph.edges.push_back({u, v});
    }
  }

  const int m = static_cast<int>(lsg.graph.edges.size());
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);
  lsg.edge_labels = labels;

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : lsg.graph.edges) {
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  lsg.node_labels.assign(static_cast<std::size_t>(n), -1);
  int next = m;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 0) lsg.node_labels[static_cast<std::size_t>(v)] = next++;
  }
  return lsg;
}

}  // namespace timedmatch
