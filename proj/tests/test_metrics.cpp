#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "recolor/generate.hpp"
#include "recolor/metrics.hpp"

using namespace recolor;

namespace {

// Test-local girth oracle: shortest cycle through each start vertex by BFS,
// candidate dist[x] + dist[y] + 1 on every non-tree edge.
int girth_bfs_oracle(const Graph& g) {
  int best = -1;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v] && v != parent[u]) {
          int cand = dist[u] + dist[v] + 1;
          if (best == -1 || cand < best) best = cand;
        }
      }
    }
  }
  return best;
}

// Exhaustive shortest cycle by DFS from every start vertex (tiny graphs).
int girth_dfs_oracle(const Graph& g) {
  int best = -1;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<void(Vertex, Vertex, Vertex, int)> dfs = [&](Vertex start, Vertex v,
                                                             Vertex prev, int len) {
    on_path[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (u == prev) continue;
      if (u == start && len + 1 >= 3) {
        if (best == -1 || len + 1 < best) best = len + 1;
      } else if (!on_path[u]) {
        dfs(start, u, v, len + 1);
      }
    }
    on_path[v] = 0;
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) dfs(s, s, -1, 0);
  return best;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((rng() % 1000) < p * 1000) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("mad of C5 is 2 with the whole cycle as witness") {
  DensityReport rep = mad_exact(make_cycle(5));
  CHECK(rep.mad == Rat(2));
  CHECK(rep.witness.size() == 5);
}

TEST_CASE("mad of K4 is 3") { CHECK(mad_exact(make_k4()).mad == Rat(3)); }

TEST_CASE("mad of P3 is 4/3") {
  Graph p3(3, {{0, 1}, {1, 2}});
  DensityReport rep = mad_exact(p3);
  CHECK(rep.mad == Rat(4, 3));
  CHECK(rep.witness.size() == 3);
}

TEST_CASE("mad witness density recomputes exactly and is locally maximal") {
  Graph g = subdivide(make_petersen(), 1);
  DensityReport rep = mad_exact(g);
  GraphView view(g);
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : rep.witness) in[v] = 1;
  long e = 0;
  for (auto [u, v] : g.edges())
    if (in[u] && in[v]) ++e;
  CHECK(Rat(2 * e, (long)rep.witness.size()) == rep.mad);
  // No single-vertex augmentation improves the density.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) continue;
    long extra = 0;
    for (Vertex u : g.neighbors(v))
      if (in[u]) ++extra;
    CHECK(Rat(2 * (e + extra), (long)rep.witness.size() + 1) <= rep.mad);
  }
}

TEST_CASE("flow-based mad equals exhaustive enumeration on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.4, rng);
    CHECK(mad_exact(g).mad == mad_by_enumeration(g).mad);
  }
}

TEST_CASE("mad is monotone under edge insertion") {
  std::mt19937_64 rng(7);
  std::vector<std::pair<Vertex, Vertex>> edges;
  Rat prev = 0;
  int n = 9;
  for (int step = 0; step < 14; ++step) {
    Vertex u = rng() % n, v = rng() % n;
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(),
                  std::make_pair(key.first, key.second)) != edges.end())
      continue;
    edges.push_back({key.first, key.second});
    Rat cur = mad_exact(Graph(n, edges)).mad;
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("girth: Petersen graph has girth 5 (against both oracles)") {
  Graph g = make_petersen();
  CHECK(girth(g) == 5);
  CHECK(girth_bfs_oracle(g) == 5);
  CHECK(girth_dfs_oracle(g) == 5);
}

TEST_CASE("girth: trees have no cycle") {
  Graph g = make_path(6);
  CHECK(girth(g) == kGirthInfinite);
}

TEST_CASE("girth: K4 has girth 3") { CHECK(girth(make_k4()) == 3); }

TEST_CASE("girth matches exhaustive cycle enumeration on small graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.45, rng);
    CHECK(girth(g) == girth_dfs_oracle(g));
  }
}

TEST_CASE("mad lemma on the dodecahedron: 3 < 10/3") {
  MadLemmaReport rep = check_mad_lemma(make_dodecahedron());
  CHECK(rep.holds);
  CHECK(rep.girth_value == 5);
  CHECK(rep.mad == Rat(3));
  CHECK(rep.bound == Rat(10, 3));
}

TEST_CASE("mad lemma on C6: 2 < 3") {
  MadLemmaReport rep = check_mad_lemma(make_cycle(6));
  CHECK(rep.holds);
  CHECK(rep.mad == Rat(2));
  CHECK(rep.bound == Rat(3));
}

TEST_CASE("mad lemma on the 3x3 grid: 8/3 < 4, matching enumeration") {
  Graph g = make_grid(3, 3);
  MadLemmaReport rep = check_mad_lemma(g);
  CHECK(rep.holds);
  CHECK(rep.girth_value == 4);
  CHECK(rep.mad == Rat(24, 9));
  CHECK(rep.bound == Rat(4));
  CHECK(mad_by_enumeration(g).mad == Rat(24, 9));
}

TEST_CASE("mad of the empty graph is undefined") {
  Graph g(0, {});
  CHECK_THROWS_AS(mad_exact(g), Error);
}

TEST_CASE("enumeration oracle refuses large graphs") {
  Graph g = make_grid(5, 5);
  CHECK_THROWS_AS(mad_by_enumeration(g), Error);
}
