#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/formats.hpp"
#include "recolor/generate.hpp"

using namespace recolor;

TEST_CASE("a minimal single-vertex instance parses") {
  Instance inst = parse_instance("graph 1\nlist 0: 1 2\nalpha 0 1\nbeta 0 2\n");
  CHECK(inst.graph.vertex_count() == 1);
  CHECK(inst.alpha.at(0) == 1);
  CHECK(inst.beta.at(0) == 2);
}

TEST_CASE("self-loops are rejected with the offending line") {
  std::string text = "graph 2\nedge 0 0\nlist 0: 1\nlist 1: 1\nalpha 0 1\nalpha 1 1\nbeta 0 1\nbeta 1 1\n";
  try {
    parse_instance(text);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("improper alpha is rejected with the violated edge") {
  std::string text =
      "graph 2\nedge 0 1\nlist 0: 1 2\nlist 1: 1 2\nalpha 0 1\nalpha 1 1\nbeta 0 1\nbeta 1 2\n";
  try {
    parse_instance(text);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("improper") != std::string::npos);
  }
}

TEST_CASE("rotation lines are all-or-none") {
  std::string text =
      "graph 2\nedge 0 1\nrot 0: 1\nlist 0: 1 2\nlist 1: 2 3\nalpha 0 1\nalpha 1 2\n"
      "beta 0 2\nbeta 1 3\n";
  CHECK_THROWS_AS(parse_instance(text), Error);
}

TEST_CASE("comments and blank lines are ignored") {
  Instance inst = parse_instance(
      "# a comment\n\ngraph 2\nedge 0 1  # trailing\nlist 0: 1 2\nlist 1: 2 3\n"
      "alpha 0 1\nalpha 1 2\nbeta 0 2\nbeta 1 3\n");
  CHECK(inst.graph.edge_count() == 1);
}

TEST_CASE("emit/parse round-trips to identical canonical text") {
  GenSpec spec = parse_gen_spec("model=grid rows=3 cols=4 k=7 lists=random colors=disjoint");
  spec.seed = 99;
  Instance inst = generate_instance(spec);
  std::string once = emit_instance(inst);
  std::string twice = emit_instance(parse_instance(once));
  CHECK(once == twice);
}

TEST_CASE("sequence text round-trips and validates headers") {
  RecoloringSequence seq;
  seq.start = Coloring(std::map<Vertex, Color>{{0, 1}});
  CHECK(emit_sequence(seq) == "steps 0\n");
  seq.steps.push_back({0, 2, 0});
  std::string text = emit_sequence(seq);
  CHECK(text == "steps 1\nrecolor 0 2\n");
  RecoloringSequence parsed = parse_sequence(text, seq.start);
  REQUIRE(parsed.steps.size() == 1);
  CHECK(parsed.steps[0].vertex == 0);
  CHECK(parsed.steps[0].new_color == 2);
  CHECK_THROWS_AS(parse_sequence("steps 2\nrecolor 0 2\n", seq.start), Error);
  CHECK_THROWS_AS(parse_sequence("recolor 0 2\n", seq.start), Error);
}

TEST_CASE("generation is deterministic per spec and seed") {
  GenSpec spec = parse_gen_spec("model=subdivided base=cubic:10 t=2 k=4 lists=random colors=disjoint");
  spec.seed = 1234;
  std::string a = emit_instance(generate_instance(spec));
  std::string b = emit_instance(generate_instance(spec));
  CHECK(a == b);
  spec.seed = 1235;
  CHECK(a != emit_instance(generate_instance(spec)));
}

TEST_CASE("generated instances parse and carry proper colorings") {
  for (const char* text : {"model=grid rows=3 cols=3 k=7 colors=disjoint",
                           "model=dodecahedron k=6 colors=disjoint",
                           "model=subdivided base=k4 t=4 k=4 colors=disjoint",
                           "model=hex-patch rows=4 cols=5 k=7 lists=random"}) {
    GenSpec spec = parse_gen_spec(text);
    spec.seed = 5;
    Instance inst = generate_instance(spec);
    Instance reparsed = parse_instance(emit_instance(inst));
    CHECK(is_proper(reparsed.graph, reparsed.lists, reparsed.alpha));
    CHECK(is_proper(reparsed.graph, reparsed.lists, reparsed.beta));
  }
}

TEST_CASE("disjoint targets differ from alpha everywhere") {
  GenSpec spec = parse_gen_spec("model=subdivided base=cubic:12 t=1 k=4 colors=disjoint");
  spec.seed = 31;
  Instance inst = generate_instance(spec);
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
    CHECK(inst.alpha.at(v) != inst.beta.at(v));
}

TEST_CASE("unknown generator models are refused") {
  GenSpec spec = parse_gen_spec("model=moebius n=8 k=4");
  CHECK_THROWS_AS(generate_instance(spec), Error);
}
