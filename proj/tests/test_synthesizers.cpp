#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "recolor/generate.hpp"
#include "recolor/metrics.hpp"
#include "recolor/oracle.hpp"
#include "recolor/solve.hpp"

using namespace recolor;

namespace {

Instance gen(const std::string& spec_text, uint64_t seed) {
  GenSpec spec = parse_gen_spec(spec_text);
  spec.seed = seed;
  return generate_instance(spec);
}

ValidationReport solve_and_validate(int theorem, const Instance& inst) {
  RecoloringSequence seq =
      solve_theorem(theorem, inst.graph, inst.lists, inst.alpha, inst.beta);
  return validate_sequence(inst.graph, inst.lists, seq, inst.beta,
                           theorem_bound(theorem));
}

}  // namespace

TEST_CASE("theorem 1: empty and single-vertex graphs") {
  Graph none(0, {});
  RecoloringSequence seq =
      solve_thm1(none, ListAssignment{}, Coloring{}, Coloring{});
  CHECK(seq.steps.empty());

  Instance one = parse_instance(
      "graph 1\nlist 0: 0 1 2 3 4 5 6\nalpha 0 0\nbeta 0 3\nrot 0:\n");
  ValidationReport rep = solve_and_validate(1, one);
  CHECK(rep.valid);
  CHECK(rep.max_count <= 1);
}

TEST_CASE("theorem 1: C6 with adversarial disjoint 7-lists") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = gen("model=cycle n=6 k=7 lists=random colors=disjoint", seed);
    CHECK(solve_and_validate(1, inst).valid);
  }
}

TEST_CASE("theorem 1: the cube with random colorings") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Instance inst = gen("model=cube k=7 lists=random colors=random", seed);
    CHECK(solve_and_validate(1, inst).valid);
  }
}

TEST_CASE("theorem 1: grids and hex patches") {
  for (uint64_t seed = 1; seed <= 4; ++seed) {
    CHECK(solve_and_validate(1, gen("model=grid rows=4 cols=5 k=7 colors=disjoint", seed)).valid);
    CHECK(solve_and_validate(1, gen("model=hex-patch rows=4 cols=6 k=7 colors=disjoint", seed)).valid);
  }
}

TEST_CASE("theorem 1 rejects non-embedded or triangle-bearing inputs") {
  Instance pet = gen("model=petersen k=7", 1);
  CHECK_THROWS_AS(solve_thm1(pet.graph, pet.lists, pet.alpha, pet.beta), Error);
  Instance k4 = gen("model=k4 k=7", 1);
  CHECK_THROWS_AS(solve_thm1(k4.graph, k4.lists, k4.alpha, k4.beta), Error);
}

TEST_CASE("theorem 2: forests reduce by the key lemma alone") {
  Instance inst = gen("model=path n=9 k=6 colors=disjoint", 5);
  ValidationReport rep = solve_and_validate(2, inst);
  CHECK(rep.valid);
  CHECK(rep.max_count <= 9);
}

TEST_CASE("theorem 2: dodecahedron and Petersen with disjoint 6-lists") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    CHECK(solve_and_validate(2, gen("model=dodecahedron k=6 lists=random colors=disjoint", seed)).valid);
    CHECK(solve_and_validate(2, gen("model=petersen k=6 lists=random colors=disjoint", seed)).valid);
  }
}

TEST_CASE("theorem 2: subdivided cubic graphs") {
  for (uint64_t seed = 1; seed <= 4; ++seed) {
    Instance inst = gen("model=subdivided base=cubic:14 t=1 k=6 colors=disjoint", seed);
    CHECK(solve_and_validate(2, inst).valid);
  }
}

TEST_CASE("theorem 2 rejects dense inputs with a witness") {
  // K5 has mad 4 >= 17/5.
  Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  std::map<Vertex, std::set<Color>> lists;
  for (Vertex v = 0; v < 5; ++v) lists[v] = {0, 1, 2, 3, 4, 5};
  std::map<Vertex, Color> a{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}};
  try {
    solve_thm2(k5, ListAssignment(lists), Coloring(a), Coloring(a));
    FAIL("expected a hypothesis error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Hypothesis);
    CHECK(std::string(e.what()).find("witness") != std::string::npos);
  }
}

TEST_CASE("theorem 3: cycles of every small length") {
  for (int n : {3, 4, 5, 6, 7, 11}) {
    for (uint64_t seed = 1; seed <= 4; ++seed) {
      Instance inst = gen("model=cycle n=" + std::to_string(n) +
                              " k=4 lists=random colors=disjoint",
                          seed);
      ValidationReport rep = solve_and_validate(3, inst);
      CHECK(rep.valid);
    }
  }
}

TEST_CASE("theorem 3: C5 answers agree with the oracle's reachability") {
  Instance inst = gen("model=cycle n=5 k=4 colors=disjoint", 3);
  RecoloringSequence seq = solve_thm3(inst.graph, inst.lists, inst.alpha, inst.beta);
  StateSpace space(inst.graph, inst.lists);
  auto d = space.distance(inst.alpha, inst.beta);
  REQUIRE(d.has_value());
  CHECK(static_cast<int>(seq.steps.size()) >= *d);
}

TEST_CASE("theorem 3: K4 subdivided four times (mad verified by enumeration)") {
  // Enumeration cross-check on the 16-vertex double subdivision, flow on the
  // larger instance itself.
  Graph small = subdivide(make_k4(), 2);
  CHECK(mad_by_enumeration(small, 16).mad == mad_exact(small).mad);
  Instance inst = gen("model=subdivided base=k4 t=4 k=4 lists=random colors=disjoint", 11);
  CHECK(mad_exact(inst.graph).mad == Rat(60, 28));
  CHECK(mad_exact(inst.graph).mad < Rat(22, 9));
  CHECK(solve_and_validate(3, inst).valid);
}

TEST_CASE("theorem 3: thread-rich subdivided cubics") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = gen("model=subdivided base=cubic:12 t=3 k=4 lists=random colors=disjoint", seed);
    CHECK(solve_and_validate(3, inst).valid);
  }
}

TEST_CASE("theorem 3: once-subdivided cubics exercise the weak-pair reduction") {
  // Every branch vertex is a 3_{1,1,1} whose weak neighbors are 3_{1,1,1}.
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = gen("model=subdivided base=cubic:10 t=1 k=4 lists=random colors=disjoint", seed);
    CHECK(mad_exact(inst.graph).mad == Rat(12, 5));
    CHECK(solve_and_validate(3, inst).valid);
  }
}

TEST_CASE("theorem 3: the lem6 gadget keeps the shared 2-neighbor at 9") {
  // v=0 and w=2 are weakly adjacent 3_{1,1,1}-vertices with common
  // 2-neighbor x=1; the anchors 7..10 sit on a ring of 2-threads, keeping
  // the host under mad 22/9.
  std::vector<std::pair<Vertex, Vertex>> edges{
      {0, 1}, {1, 2}, {0, 3}, {3, 7}, {0, 4}, {4, 8}, {2, 5}, {5, 9}, {2, 6}, {6, 10}};
  int next = 11;
  int ring[5] = {7, 8, 9, 10, 7};
  for (int i = 0; i < 4; ++i) {
    edges.push_back({ring[i], next});
    edges.push_back({next, next + 1});
    edges.push_back({next + 1, ring[i + 1]});
    next += 2;
  }
  Graph g(next, edges);
  REQUIRE(mad_exact(g).mad < Rat(22, 9));

  std::map<Vertex, std::set<Color>> lists;
  for (Vertex v = 0; v < g.vertex_count(); ++v) lists[v] = {0, 1, 2, 3};
  ListAssignment L(std::move(lists));
  std::mt19937_64 rng(5);
  auto greedy = [&](uint64_t salt) {
    std::map<Vertex, Color> cur;
    std::mt19937_64 local(salt);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::vector<Color> options;
      for (Color c : L.at(v)) {
        bool ok = true;
        for (Vertex u : g.neighbors(v)) {
          auto it = cur.find(u);
          if (it != cur.end() && it->second == c) ok = false;
        }
        if (ok) options.push_back(c);
      }
      REQUIRE(!options.empty());
      cur[v] = options[local() % options.size()];
    }
    return Coloring(std::move(cur));
  };
  Coloring alpha = greedy(17);
  Coloring beta = greedy(99);

  RecoloringSequence seq = solve_thm3(g, L, alpha, beta);
  ValidationReport rep = validate_sequence(g, L, seq, beta, 14);
  CHECK(rep.valid);
  CHECK(seq.count_of(1) <= 9);  // 4 + 4 + 1
}

TEST_CASE("theorem 3: random sparse graphs under 22/9") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    Instance inst = gen("model=random-sparse n=40 mad=22/9 k=4 colors=disjoint", seed);
    REQUIRE(mad_exact(inst.graph).mad < Rat(22, 9));
    CHECK(solve_and_validate(3, inst).valid);
  }
}

TEST_CASE("baseline: K3 with 5-lists recolors each vertex at most twice") {
  Instance inst = parse_instance(
      "graph 3\nedge 0 1\nedge 1 2\nedge 0 2\n"
      "list 0: 0 1 2 3 4\nlist 1: 0 1 2 3 4\nlist 2: 0 1 2 3 4\n"
      "alpha 0 0\nalpha 1 1\nalpha 2 2\nbeta 0 2\nbeta 1 0\nbeta 2 1\n");
  ValidationReport rep = solve_and_validate(0, inst);
  CHECK(rep.valid);
  CHECK(rep.max_count <= 2);
}

TEST_CASE("baseline: identical endpoints need zero steps") {
  Instance inst = gen("model=cycle n=6 k=13", 2);
  RecoloringSequence seq =
      solve_high_degree(inst.graph, inst.lists, inst.alpha, inst.alpha);
  CHECK(seq.steps.empty());
}

TEST_CASE("baseline: random graphs with lists of size 2*maxdeg+1") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = gen("model=random n=20 edges=40 maxdeg=4 k=9 colors=disjoint", seed);
    RecoloringSequence seq =
        solve_high_degree(inst.graph, inst.lists, inst.alpha, inst.beta);
    ValidationReport rep = validate_sequence(inst.graph, inst.lists, seq, inst.beta, 2);
    CHECK(rep.valid);
    CHECK(seq.steps.size() <= 2 * static_cast<size_t>(inst.graph.vertex_count()));
  }
}

TEST_CASE("baseline rejects short lists") {
  Instance inst = gen("model=cycle n=5 k=4", 1);
  CHECK_THROWS_AS(solve_high_degree(inst.graph, inst.lists, inst.alpha, inst.beta),
                  Error);
}

TEST_CASE("solver walks are at least the oracle distances") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst = gen("model=path n=6 k=4 lists=random colors=disjoint", seed);
    RecoloringSequence seq = solve_thm3(inst.graph, inst.lists, inst.alpha, inst.beta);
    StateSpace space(inst.graph, inst.lists);
    auto d = space.distance(inst.alpha, inst.beta);
    REQUIRE(d.has_value());  // solver success implies reachability
    CHECK(static_cast<int>(seq.steps.size()) >= *d);
  }
}

TEST_CASE("disconnected inputs are solved per component") {
  // Two disjoint 4-cycles.
  Instance inst = parse_instance(R"(graph 8
edge 0 1
edge 1 2
edge 2 3
edge 3 0
edge 4 5
edge 5 6
edge 6 7
edge 7 4
list 0: 0 1 2 3
list 1: 0 1 2 3
list 2: 0 1 2 3
list 3: 0 1 2 3
list 4: 0 1 2 3
list 5: 0 1 2 3
list 6: 0 1 2 3
list 7: 0 1 2 3
alpha 0 0
alpha 1 1
alpha 2 0
alpha 3 1
alpha 4 2
alpha 5 3
alpha 6 2
alpha 7 3
beta 0 1
beta 1 0
beta 2 1
beta 3 0
beta 4 3
beta 5 2
beta 6 3
beta 7 2
)");
  ValidationReport rep = solve_and_validate(3, inst);
  CHECK(rep.valid);
}

TEST_CASE("stage tags expose the recursion depth of every step") {
  Instance inst = gen("model=subdivided base=k4 t=2 k=4 colors=disjoint", 21);
  RecoloringSequence seq = solve_thm3(inst.graph, inst.lists, inst.alpha, inst.beta);
  int max_stage = 0;
  for (const auto& st : seq.steps) max_stage = std::max(max_stage, st.stage);
  CHECK(max_stage > 0);
}
