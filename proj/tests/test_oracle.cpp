#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/generate.hpp"
#include "recolor/oracle.hpp"

using namespace recolor;

namespace {

ListAssignment shared_lists(int n, std::initializer_list<Color> colors) {
  std::map<Vertex, std::set<Color>> lists;
  for (Vertex v = 0; v < n; ++v) lists[v] = std::set<Color>(colors);
  return ListAssignment(std::move(lists));
}

Coloring make_coloring(std::initializer_list<Color> colors) {
  std::map<Vertex, Color> m;
  Vertex v = 0;
  for (Color c : colors) m[v++] = c;
  return Coloring(std::move(m));
}

}  // namespace

TEST_CASE("a single vertex with three colors forms a triangle of states") {
  Graph g(1, {});
  StateSpace space(g, shared_lists(1, {1, 2, 3}));
  CHECK(space.state_count() == 3);
  for (size_t s = 0; s < 3; ++s) CHECK(space.adjacency_degree(s) == 2);
}

TEST_CASE("a rigid edge has two frozen states") {
  Graph g(2, {{0, 1}});
  StateSpace space(g, shared_lists(2, {1, 2}));
  CHECK(space.state_count() == 2);
  for (size_t s = 0; s < 2; ++s) CHECK(space.adjacency_degree(s) == 0);
  auto d = space.distance(make_coloring({1, 2}), make_coloring({2, 1}));
  CHECK(!d.has_value());
}

TEST_CASE("P3 with 3-lists has 12 proper colorings") {
  Graph g(3, {{0, 1}, {1, 2}});
  StateSpace space(g, shared_lists(3, {1, 2, 3}));
  CHECK(space.state_count() == 12);
}

TEST_CASE("state adjacency degree equals the available-recoloring recount") {
  Graph g(3, {{0, 1}, {1, 2}});
  ListAssignment L = shared_lists(3, {1, 2, 3});
  StateSpace space(g, L);
  for (size_t s = 0; s < space.state_count(); ++s) {
    Coloring c = space.coloring_of(s);
    int expected = 0;
    for (Vertex v = 0; v < 3; ++v) {
      for (Color col : L.at(v)) {
        if (col == c.at(v)) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v))
          if (c.at(u) == col) ok = false;
        if (ok) ++expected;
      }
    }
    CHECK(space.adjacency_degree(s) == expected);
  }
}

TEST_CASE("distance is 0 from a state to itself") {
  Graph g(2, {{0, 1}});
  StateSpace space(g, shared_lists(2, {1, 2, 3}));
  auto d = space.distance(make_coloring({1, 2}), make_coloring({1, 2}));
  REQUIRE(d.has_value());
  CHECK(*d == 0);
}

TEST_CASE("swapping an edge's colors over 3-lists takes 3 steps") {
  Graph g(2, {{0, 1}});
  StateSpace space(g, shared_lists(2, {1, 2, 3}));
  auto d = space.distance(make_coloring({1, 2}), make_coloring({2, 1}));
  REQUIRE(d.has_value());
  CHECK(*d == 3);
}

TEST_CASE("path diameters grow with length over identical 3-lists") {
  std::vector<int> diams;
  for (int n : {2, 3, 4}) {
    Graph g = make_path(n);
    StateSpace space(g, shared_lists(n, {1, 2, 3}));
    auto d = space.diameter();
    REQUIRE(d.has_value());
    diams.push_back(*d);
  }
  CHECK(diams[0] == 3);
  CHECK(diams[1] > diams[0]);
  CHECK(diams[2] > diams[1]);
}

TEST_CASE("the state cap refuses oversized spaces") {
  Graph g = make_path(10);
  CHECK_THROWS_AS(StateSpace(g, shared_lists(10, {1, 2, 3, 4}), 1000), Error);
}

TEST_CASE("budget search separates k=1 from k=2 on the 3-list edge") {
  Graph g(2, {{0, 1}});
  ListAssignment L = shared_lists(2, {1, 2, 3});
  Coloring a = make_coloring({1, 2});
  Coloring b = make_coloring({2, 1});
  CHECK(!budget_reachable(g, L, a, b, 1));
  CHECK(budget_reachable(g, L, a, b, 2));
}

TEST_CASE("exhaustive key-lemma check on the K_{1,1} gadget") {
  ExtensionCheckReport rep = exhaustive_key_lemma_check(1, 3, 3);
  INFO(rep.counterexample);
  CHECK(rep.ok);
  CHECK(rep.worst_count <= rep.claimed_cap);
}

TEST_CASE("exhaustive two-thread check with short sequences") {
  ExtensionCheckReport rep = exhaustive_two_thread_check(4, 3, 2);
  INFO(rep.counterexample);
  CHECK(rep.ok);
}
