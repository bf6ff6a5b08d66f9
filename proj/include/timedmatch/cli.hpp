#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "timedmatch/core.hpp"
#include "timedmatch/gen.hpp"
#include "timedmatch/greedy.hpp"
#include "timedmatch/io.hpp"
#include "timedmatch/matching.hpp"
#include "timedmatch/oracle.hpp"
#include "timedmatch/reductions.hpp"
#include "timedmatch/tree_dp.hpp"

// Command line front end. Exit codes: 0 success, 1 usage problem, 2 invalid
// input data, 3 violated algorithm precondition. Diagnostics go to the error
// stream, one prefixed line each.

namespace timedmatch {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

inline std::string edge_name(const TemporalGraph& g, int id) {
  const TemporalEdge& e = g.edges[static_cast<std::size_t>(id)];
  return g.node_labels[static_cast<std::size_t>(e.u)] + "-" +
         g.node_labels[static_cast<std::size_t>(e.v)];
}

inline int report_violations(const std::vector<Violation>& violations, std::ostream& err) {
  for (const Violation& v : violations) {
    err << "error: validation: " << to_string(v) << "\n";
  }
  return 2;
}

inline ParsedGraph load_graph(const std::string& path) {
  return parse_tg(read_file(path));
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"0-1 timed matchings on temporal graphs"};
  app.name("timedmatch");
  app.require_subcommand(1);

  std::string solve_algo, solve_in, solve_root, solve_out;
  bool solve_trace = false;
  int solve_budget = 25;
  CLI::App* solve = app.add_subcommand("solve", "compute a timed matching");
  solve->add_option("--algo", solve_algo, "solver: tree-dp, greedy, or exact")
      ->required()
      ->check(CLI::IsMember({"tree-dp", "greedy", "exact"}));
  solve->add_option("--in", solve_in, "instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--root", solve_root, "root node for tree-dp (overrides the file)");
  solve->add_flag("--trace", solve_trace, "print greedy rounds");
  solve->add_option("--out", solve_out, "also write the matching to this file");
  solve->add_option("--budget", solve_budget, "edge budget for exact (default 25)");

  std::string verify_in, verify_matching;
  bool verify_maximal = false;
  CLI::App* verify = app.add_subcommand("verify", "check a matching against an instance");
  verify->add_option("--in", verify_in, "instance file")->required()->check(CLI::ExistingFile);
  verify->add_option("--matching", verify_matching, "matching file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_flag("--maximal", verify_maximal, "also check maximality");

  std::string stats_in;
  CLI::App* stats_cmd = app.add_subcommand("stats", "print instance statistics");
  stats_cmd->add_option("--in", stats_in, "instance file")->required()->check(CLI::ExistingFile);

  std::string reduce_kind, reduce_in, reduce_out, reduce_map;
  CLI::App* reduce = app.add_subcommand("reduce", "build a gadget instance from a source problem");
  reduce->add_option("kind", reduce_kind, "rainbow, sat2p2n, or maxis")
      ->required()
      ->check(CLI::IsMember({"rainbow", "sat2p2n", "maxis"}));
  reduce->add_option("--in", reduce_in, "source problem file")
      ->required()
      ->check(CLI::ExistingFile);
  reduce->add_option("--out", reduce_out, "gadget instance file to write")->required();
  reduce->add_option("--map", reduce_map, "mapping file to write")->required();

  std::string extract_kind, extract_matching, extract_map;
  CLI::App* extract = app.add_subcommand("extract", "pull a gadget matching back to the source problem");
  extract->add_option("kind", extract_kind, "rainbow, sat2p2n, or maxis")
      ->required()
      ->check(CLI::IsMember({"rainbow", "sat2p2n", "maxis"}));
  extract->add_option("--matching", extract_matching, "matching file on the gadget")
      ->required()
      ->check(CLI::ExistingFile);
  extract->add_option("--map", extract_map, "mapping file from reduce")
      ->required()
      ->check(CLI::ExistingFile);

  std::string gen_kind, gen_out;
  int gen_n = 8, gen_m = 10, gen_lifetime = 8, gen_max_intervals = 1, gen_colours = 3,
      gen_vars = 3;
  double gen_p = 0.3;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("kind", gen_kind,
                  "random-graph, random-tree, coloured-path, formula-2p2n, or labelled-graph")
      ->required()
      ->check(CLI::IsMember({"random-graph", "random-tree", "coloured-path", "formula-2p2n",
                             "labelled-graph"}));
  gen->add_option("--n", gen_n, "node count (default 8)");
  gen->add_option("--m", gen_m, "edge count for random-graph (default 10)");
  gen->add_option("--lifetime", gen_lifetime, "lifetime (default 8)");
  gen->add_option("--max-intervals", gen_max_intervals, "intervals per edge cap (default 1)");
  gen->add_option("--colours", gen_colours, "palette size for coloured-path (default 3)");
  gen->add_option("--vars", gen_vars, "variable count for formula-2p2n (default 3)");
  gen->add_option("--p", gen_p, "edge probability for labelled-graph (default 0.3)");
  CLI::Option* gen_seed_opt = gen->add_option("--seed", gen_seed, "rng seed (default 0)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(solve)) {
      ParsedGraph parsed = detail::load_graph(solve_in);
      if (!parsed.ok()) return detail::report_violations(parsed.issues, err);
      const TemporalGraph& g = *parsed.graph;

      TimedMatching matching;
      std::optional<GreedyTrace> trace;
      if (solve_algo == "tree-dp") {
        std::optional<std::string> root =
            !solve_root.empty() ? std::optional<std::string>(solve_root) : parsed.root;
        if (!root) {
          err << "error: usage: tree-dp needs --root or a root directive in the instance\n";
          return 1;
        }
        matching = solve_tree(g, *root);
      } else if (solve_algo == "greedy") {
        trace = solve_greedy(g);
        matching = trace->matching;
      } else {
        ExactOptions opts;
        opts.edge_budget = solve_budget;
        matching = solve_exact(g, opts);
      }

      if (solve_trace && trace) {
        int round = 0;
        for (const GreedyRound& r : trace->rounds) {
          out << "round " << ++round << ": choose " << detail::edge_name(g, r.chosen)
              << " (overlap " << r.overlap_count << "), remove";
          for (int id : r.removed) out << " " << detail::edge_name(g, id);
          out << "\n";
        }
      }
      out << emit_matching(g, matching);
      out << "size " << matching.size() << "\n";
      if (!solve_out.empty()) detail::write_file(solve_out, emit_matching(g, matching));
      return 0;
    }

    if (app.got_subcommand(verify)) {
      ParsedGraph parsed = detail::load_graph(verify_in);
      if (!parsed.ok()) return detail::report_violations(parsed.issues, err);
      const TemporalGraph& g = *parsed.graph;

      TimedMatching matching = parse_matching(detail::read_file(verify_matching), g);
      MatchingCheck chk = is_timed_matching(g, matching);
      bool all_ok = chk.ok;
      std::ostringstream line;
      line << "matching: " << (chk.ok ? "yes" : "no");
      if (!chk.ok) {
        line << " (" << detail::edge_name(g, chk.witness->first) << " overlaps "
             << detail::edge_name(g, chk.witness->second) << ")";
      }
      if (verify_maximal && chk.ok) {
        MaximalCheck mx = is_maximal(g, matching);
        all_ok = all_ok && mx.ok;
        line << ", maximal: " << (mx.ok ? "yes" : "no");
        if (!mx.ok) line << " (could add " << detail::edge_name(g, *mx.addable) << ")";
      }
      out << line.str() << "\n";
      return all_ok ? 0 : 2;
    }

    if (app.got_subcommand(stats_cmd)) {
      ParsedGraph parsed = detail::load_graph(stats_in);
      if (!parsed.ok()) return detail::report_violations(parsed.issues, err);
      const TemporalGraph& g = *parsed.graph;

      InstanceStats st = stats(g);
      out << "nodes " << g.node_count() << "\n";
      out << "edges " << g.edge_count() << "\n";
      out << "lifetime " << g.lifetime << "\n";
      out << "max_degree " << st.max_degree << "\n";
      for (const TemporalEdge& e : g.edges) {
        out << "overlap " << g.node_labels[static_cast<std::size_t>(e.u)] << " "
            << g.node_labels[static_cast<std::size_t>(e.v)] << " "
            << st.overlap_counts[static_cast<std::size_t>(e.id)] << "\n";
      }
      out << "nstar " << st.average_overlap << "\n";
      out << "bound " << st.matching_lower_bound << "\n";
      return 0;
    }

    if (app.got_subcommand(reduce)) {
      const std::string text = detail::read_file(reduce_in);
      ReductionOutput r;
      if (reduce_kind == "rainbow") {
        r = from_rainbow_path(parse_path(text));
      } else if (reduce_kind == "sat2p2n") {
        r = from_2p2n3sat(parse_cnf(text));
      } else {
        r = from_max_is(parse_lg(text));
      }
      detail::write_file(reduce_out, emit_tg(r.graph, r.root));
      detail::write_file(reduce_map, emit_mapping(r.mapping));
      out << "edges " << r.graph.edge_count() << "\n";
      if (r.target >= 0) out << "target " << r.target << "\n";
      return 0;
    }

    if (app.got_subcommand(extract)) {
      ReductionMapping map = parse_mapping(detail::read_file(extract_map));
      if (std::string(to_string(map.kind)) != extract_kind) {
        err << "error: input: mapping kind is " << to_string(map.kind) << ", expected "
            << extract_kind << "\n";
        return 2;
      }
      std::vector<int> ids;
      for (const auto& [u, v] : parse_match_pairs(detail::read_file(extract_matching))) {
        const MapEntry* entry = map.entry_for_pair(u, v);
        if (!entry) {
          throw Error(ErrorKind::unknown_edge, "no mapping entry for " + u + " " + v);
        }
        ids.push_back(entry->edge_id);
      }
      TimedMatching matching = make_matching(std::move(ids));

      if (extract_kind == "rainbow") {
        for (int i : extract_rainbow(matching, map)) out << "pathedge " << i << "\n";
      } else if (extract_kind == "maxis") {
        for (int v : extract_independent_set(matching, map)) out << "node " << v << "\n";
      } else {
        auto assignment = extract_assignment(matching, map);
        if (!assignment) {
          out << "incomplete\n";
        } else {
          for (std::size_t i = 0; i < assignment->size(); ++i) {
            out << "assign " << i + 1 << " " << ((*assignment)[i] ? 1 : 0) << "\n";
          }
        }
      }
      return 0;
    }

    // gen
    std::uint64_t seed = gen_seed;
    if (gen_seed_opt->count() == 0) {
      if (const char* env = std::getenv("TIMEDMATCH_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
      }
    }
    std::string content;
    if (gen_kind == "random-graph") {
      content = emit_tg(gen_random_graph(gen_n, gen_m, gen_lifetime, gen_max_intervals, seed));
    } else if (gen_kind == "random-tree") {
      GeneratedTree t = gen_random_tree(gen_n, gen_lifetime, gen_max_intervals, seed);
      content = emit_tg(t.graph, t.root);
    } else if (gen_kind == "coloured-path") {
      content = emit_path(gen_coloured_path(gen_n, gen_colours, seed));
    } else if (gen_kind == "formula-2p2n") {
      content = emit_cnf(gen_formula_2p2n(gen_vars, seed));
    } else {
      content = emit_lg(gen_labelled_graph(gen_n, gen_p, seed));
    }
    if (gen_out.empty()) {
      out << content;
    } else {
      detail::write_file(gen_out, content);
    }
    return 0;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::not_a_tree:
      case ErrorKind::multi_interval_unsupported:
      case ErrorKind::unknown_root:
      case ErrorKind::not_a_matching:
      case ErrorKind::budget_exceeded:
        err << "error: precondition: " << e.what() << "\n";
        return 3;
      case ErrorKind::infeasible_params:
        err << "error: usage: " << e.what() << "\n";
        return 1;
      default:
        err << "error: input: " << e.what() << "\n";
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace timedmatch
