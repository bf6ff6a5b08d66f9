#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "support/fixtures.hpp"
#include "timedmatch/timedmatch.hpp"

using namespace timedmatch;
using tmtest::build_graph;
using tmtest::eid;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_violation(const std::vector<Violation>& violations, ViolationKind kind) {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("parse_tg reads a complete instance") {
  const char* text =
      "# demo instance\n"
      "tg 1\n"
      "lifetime 6\n"
      "node a\n"
      "node b\n"
      "\n"
      "edge a b 0 2 3 5\n"
      "root a\n";
  ParsedGraph parsed = parse_tg(text);
  REQUIRE(parsed.ok());
  CHECK(parsed.graph->lifetime == 6);
  CHECK(parsed.graph->node_count() == 2);
  REQUIRE(parsed.graph->edge_count() == 1);
  CHECK(parsed.graph->edges[0].intervals ==
        std::vector<TimeInterval>{{0, 2}, {3, 5}});
  CHECK(parsed.graph->mode == IntervalMode::strict);
  CHECK(parsed.root == "a");
}

TEST_CASE("parse_tg accepts carriage returns and a mode line") {
  ParsedGraph parsed = parse_tg("tg 1\r\nmode lenient\r\nlifetime 2\r\nnode a\r\nnode b\r\nedge a b 0 1 1 2\r\n");
  REQUIRE(parsed.ok());
  CHECK(parsed.graph->mode == IntervalMode::lenient);
  CHECK_FALSE(parsed.root.has_value());
}

TEST_CASE("parse_tg reports syntax problems with line numbers") {
  ParsedGraph missing_header = parse_tg("lifetime 3\nnode a\n");
  REQUIRE_FALSE(missing_header.ok());
  CHECK(missing_header.issues.front().kind == ViolationKind::syntax);
  CHECK(missing_header.issues.front().line == 1);

  ParsedGraph odd = parse_tg("tg 1\nlifetime 3\nnode a\nnode b\nedge a b 0\n");
  REQUIRE_FALSE(odd.ok());
  CHECK(has_violation(odd.issues, ViolationKind::syntax));
  CHECK(odd.issues.front().line == 5);

  ParsedGraph junk = parse_tg("tg 1\nlifetime 3\nwidget a\n");
  REQUIRE_FALSE(junk.ok());
  CHECK(has_violation(junk.issues, ViolationKind::syntax));

  ParsedGraph twice = parse_tg("tg 1\nlifetime 3\nlifetime 4\nnode a\n");
  REQUIRE_FALSE(twice.ok());
  CHECK(has_violation(twice.issues, ViolationKind::syntax));

  ParsedGraph no_lifetime = parse_tg("tg 1\nnode a\n");
  REQUIRE_FALSE(no_lifetime.ok());

  ParsedGraph bad_int = parse_tg("tg 1\nlifetime 3\nnode a\nnode b\nedge a b 0 x\n");
  REQUIRE_FALSE(bad_int.ok());
}

TEST_CASE("parse_tg carries validation line numbers") {
  ParsedGraph parsed = parse_tg(
      "tg 1\n"
      "lifetime 3\n"
      "node a\n"
      "node b\n"
      "edge a b 2 2\n");
  REQUIRE_FALSE(parsed.ok());
  REQUIRE(parsed.issues.size() == 1);
  CHECK(parsed.issues[0].kind == ViolationKind::bad_interval);
  CHECK(parsed.issues[0].line == 5);
}

TEST_CASE("parse_tg validates the root name") {
  ParsedGraph parsed = parse_tg("tg 1\nlifetime 1\nnode a\nroot z\n");
  REQUIRE_FALSE(parsed.ok());
  CHECK(has_violation(parsed.issues, ViolationKind::unknown_node));

  ParsedGraph dup = parse_tg("tg 1\nlifetime 1\nnode a\nroot a\nroot a\n");
  REQUIRE_FALSE(dup.ok());
  CHECK(has_violation(dup.issues, ViolationKind::syntax));
}

TEST_CASE("emit_tg then parse_tg returns the same graph") {
  TemporalGraph fixtures[] = {
      tmtest::matching_demo(),
      tmtest::overlap_demo(),
      tmtest::twelve_node_tree(),
      build_graph(9, {"m0", "m1"}, {{"m0", "m1", {{0, 2}, {2, 5}, {7, 9}}}},
                  IntervalMode::lenient),
  };
  for (const TemporalGraph& g : fixtures) {
    std::string text = emit_tg(g);
    ParsedGraph parsed = parse_tg(text);
    REQUIRE(parsed.ok());
    CHECK(*parsed.graph == g);
    CHECK(emit_tg(*parsed.graph) == text);
  }

  std::string rooted = emit_tg(tmtest::twelve_node_tree(), std::string("r"));
  ParsedGraph parsed = parse_tg(rooted);
  REQUIRE(parsed.ok());
  CHECK(parsed.root == "r");
}

TEST_CASE("matching io resolves endpoint names to edge ids") {
  TemporalGraph g = tmtest::matching_demo();
  TimedMatching m = parse_matching("# picks\nmatch a b\nmatch d g\n", g);
  CHECK(m.edge_ids == std::vector<int>{eid(g, "a", "b"), eid(g, "d", "g")});

  // Reversed endpoint order resolves to the same edge.
  CHECK(parse_matching("match g d\n", g).edge_ids ==
        std::vector<int>{eid(g, "d", "g")});

  std::string text = emit_matching(g, m);
  CHECK(parse_matching(text, g).edge_ids == m.edge_ids);

  CHECK_THROWS_MATCHES(parse_matching("match a g\n", g), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::unknown_edge;
                       }));
  CHECK_THROWS_MATCHES(parse_matching("match a\n", g), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::syntax;
                       }));
}

TEST_CASE("mapping io round trip") {
  ReductionOutput out = from_2p2n3sat([] {
    CnfFormula2P2N f;
    f.var_count = 3;
    f.clauses = {
        Clause{{Literal{0, true}, Literal{1, true}, Literal{2, true}}},
        Clause{{Literal{0, false}, Literal{1, false}, Literal{2, true}}},
        Clause{{Literal{0, true}, Literal{1, false}, Literal{2, false}}},
        Clause{{Literal{0, false}, Literal{1, true}, Literal{2, false}}},
    };
    return f;
  }());

  std::string text = emit_mapping(out.mapping);
  ReductionMapping back = parse_mapping(text);
  CHECK(back.kind == out.mapping.kind);
  CHECK(back.params == out.mapping.params);
  REQUIRE(back.entries.size() == out.mapping.entries.size());
  for (std::size_t i = 0; i < back.entries.size(); ++i) {
    CHECK(back.entries[i].source == out.mapping.entries[i].source);
    CHECK(back.entries[i].u == out.mapping.entries[i].u);
    CHECK(back.entries[i].v == out.mapping.entries[i].v);
    CHECK(back.entries[i].edge_id == static_cast<int>(i));
  }

  CHECK_THROWS_AS(parse_mapping("map r x0 p0\n"), Error);         // no header
  CHECK_THROWS_AS(parse_mapping("tgmap 1\nmap r x0 p0\n"), Error);  // no kind
  CHECK_THROWS_AS(parse_mapping("tgmap 1\nkind rainbow\nmap r\n"), Error);
  CHECK_THROWS_AS(parse_mapping("tgmap 1\nkind banana\n"), Error);
}

TEST_CASE("coloured path io round trip") {
  ColouredPath path{4, 3, {0, 2, 1}};
  std::string text = emit_path(path);
  ColouredPath back = parse_path(text);
  CHECK(back.node_count == 4);
  CHECK(back.colour_count == 3);
  CHECK(back.edge_colours == path.edge_colours);

  CHECK_THROWS_AS(parse_path("path 1\nnodes 4\ncolours 2\ncolour 0 1\n"), Error);
  CHECK_THROWS_AS(parse_path("nodes 4\n"), Error);
}

TEST_CASE("formula io round trip") {
  CnfFormula2P2N f;
  f.var_count = 3;
  f.clauses = {
      Clause{{Literal{0, true}, Literal{1, true}, Literal{2, true}}},
      Clause{{Literal{0, false}, Literal{1, false}, Literal{2, true}}},
      Clause{{Literal{0, true}, Literal{1, false}, Literal{2, false}}},
      Clause{{Literal{0, false}, Literal{1, true}, Literal{2, false}}},
  };
  std::string text = emit_cnf(f);
  CnfFormula2P2N back = parse_cnf(text);
  CHECK(back.var_count == f.var_count);
  REQUIRE(back.clauses.size() == f.clauses.size());
  for (std::size_t i = 0; i < back.clauses.size(); ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(back.clauses[i].literals[j].var == f.clauses[i].literals[j].var);
      CHECK(back.clauses[i].literals[j].positive == f.clauses[i].literals[j].positive);
    }
  }

  CHECK_THROWS_AS(parse_cnf("cnf2p2n 1\nvars 2\nclause 1 0 2\n"), Error);
  CHECK_THROWS_AS(parse_cnf("cnf2p2n 1\nvars 2\nclause 1 2\n"), Error);
}

TEST_CASE("labelled graph io round trip") {
  LabelledStaticGraph lg;
  lg.graph = StaticGraph{4, {{0, 1}, {1, 2}}};
  lg.edge_labels = {1, 0};
  lg.node_labels = {-1, -1, -1, 2};

  std::string text = emit_lg(lg);
  LabelledStaticGraph back = parse_lg(text);
  CHECK(back.graph.node_count == 4);
  CHECK(back.graph.edges == lg.graph.edges);
  CHECK(back.edge_labels == lg.edge_labels);
  CHECK(back.node_labels == lg.node_labels);

  CHECK_THROWS_AS(parse_lg("lg 1\nnodes 2\nedge 0 5 0\n"), Error);
  CHECK_THROWS_AS(parse_lg("lg 1\nnodes 2\nnodelabel 9 0\n"), Error);
}

TEST_CASE("shipped data files parse to the programmatic fixtures") {
  std::string dir = TM_TEST_DATA_DIR;

  ParsedGraph demo = parse_tg(slurp(dir + "/matching_demo.tg"));
  REQUIRE(demo.ok());
  CHECK(*demo.graph == tmtest::matching_demo());

  ParsedGraph web = parse_tg(slurp(dir + "/overlap_demo.tg"));
  REQUIRE(web.ok());
  CHECK(*web.graph == tmtest::overlap_demo());

  ParsedGraph tree = parse_tg(slurp(dir + "/twelve_node_tree.tg"));
  REQUIRE(tree.ok());
  CHECK(*tree.graph == tmtest::twelve_node_tree());
  CHECK(tree.root == "r");
}
