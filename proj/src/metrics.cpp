#include "recolor/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>

namespace recolor {

namespace {

// Dinic max-flow on int64 capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, int64_t cap) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  int64_t run(int s, int t) {
    int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (int64_t pushed = dfs(s, t, std::numeric_limits<int64_t>::max()))
        flow += pushed;
    }
    return flow;
  }

  // Source side of the min cut after run().
  std::vector<char> min_cut_side(int s) {
    std::vector<char> side(head_.size(), 0);
    std::deque<int> q{s};
    side[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int e = head_[u]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && !side[arcs_[e].to]) {
          side[arcs_[e].to] = 1;
          q.push_back(arcs_[e].to);
        }
      }
    }
    return side;
  }

 private:
  struct Arc {
    int to;
    int next;
    int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int e = head_[u]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] == -1) {
          level_[arcs_[e].to] = level_[u] + 1;
          q.push_back(arcs_[e].to);
        }
      }
    }
    return level_[t] != -1;
  }

  int64_t dfs(int u, int t, int64_t limit) {
    if (u == t || limit == 0) return limit;
    for (int& e = it_[u]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
        int64_t pushed = dfs(a.to, t, std::min(limit, a.cap));
        if (pushed > 0) {
          a.cap -= pushed;
          arcs_[e ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

// Tests whether some nonempty H has |E(H)|/|V(H)| > e/w (strictly); if so
// returns the min-cut witness.  Standard max-density network: s->v with
// capacity m, arcs of capacity 1 both ways per edge, v->t with capacity
// m + 2*lambda - d(v); everything scaled by w to stay integral.
std::optional<std::vector<Vertex>> denser_subgraph(
    const GraphView& g, const std::vector<Vertex>& verts, int64_t e, int64_t w) {
  int64_t m = g.edge_count();
  if (m == 0) return std::nullopt;
  int n = static_cast<int>(verts.size());
  std::vector<int> index(g.host().vertex_count(), -1);
  for (int i = 0; i < n; ++i) index[verts[i]] = i;

  int s = n, t = n + 1;
  MaxFlow flow(n + 2);
  for (int i = 0; i < n; ++i) {
    Vertex v = verts[i];
    flow.add_edge(s, i, m * w);
    flow.add_edge(i, t, m * w + 2 * e - w * g.degree(v));
  }
  for (auto [u, v] : g.host().edges()) {
    if (index[u] < 0 || index[v] < 0 || !g.active(u) || !g.active(v)) continue;
    flow.add_edge(index[u], index[v], w);
    flow.add_edge(index[v], index[u], w);
  }
  int64_t cut = flow.run(s, t);
  if (cut >= m * w * n) return std::nullopt;  // nothing strictly denser
  std::vector<char> side = flow.min_cut_side(s);
  std::vector<Vertex> witness;
  for (int i = 0; i < n; ++i)
    if (side[i]) witness.push_back(verts[i]);
  if (witness.empty())
    fail(ErrorKind::InternalInvariant, "min cut below threshold with empty source side");
  return witness;
}

int64_t edges_within(const GraphView& g, const std::vector<Vertex>& set) {
  std::vector<char> in(g.host().vertex_count(), 0);
  for (Vertex v : set) in[v] = 1;
  int64_t e = 0;
  for (auto [u, v] : g.host().edges())
    if (in[u] && in[v] && g.active(u) && g.active(v)) ++e;
  return e;
}

}  // namespace

DensityReport mad_exact(const GraphView& g) {
  std::vector<Vertex> verts = g.vertices();
  if (verts.empty())
    fail(ErrorKind::UndefinedMeasure, "mad of the empty graph is undefined");

  std::vector<Vertex> witness = verts;
  int64_t e = g.edge_count();
  int64_t w = static_cast<int64_t>(verts.size());
  // Each round either finds a strictly denser subgraph or certifies the
  // current one is maximum; densities strictly increase, so this terminates.
  while (true) {
    auto better = denser_subgraph(g, verts, e, w);
    if (!better) break;
    witness = *better;
    e = edges_within(g, witness);
    w = static_cast<int64_t>(witness.size());
  }
  DensityReport rep;
  rep.mad = Rat(BigInt(2 * e), BigInt(w));
  rep.witness = std::move(witness);
  return rep;
}

DensityReport mad_exact(const Graph& g) { return mad_exact(GraphView(g)); }

DensityReport mad_by_enumeration(const GraphView& g, int max_vertices) {
  std::vector<Vertex> verts = g.vertices();
  if (verts.empty())
    fail(ErrorKind::UndefinedMeasure, "mad of the empty graph is undefined");
  int n = static_cast<int>(verts.size());
  if (n > max_vertices)
    fail(ErrorKind::CapExceeded,
         "enumeration oracle limited to " + std::to_string(max_vertices) + " vertices");

  std::vector<int> index(g.host().vertex_count(), -1);
  for (int i = 0; i < n; ++i) index[verts[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.host().edges())
    if (g.active(u) && g.active(v)) edges.push_back({index[u], index[v]});

  Rat best = -1;
  uint32_t best_mask = 1;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int64_t e = 0;
    for (auto [a, b] : edges)
      if ((mask >> a & 1) && (mask >> b & 1)) ++e;
    int64_t w = __builtin_popcount(mask);
    Rat d(BigInt(2 * e), BigInt(w));
    if (d > best) {
      best = d;
      best_mask = mask;
    }
  }
  DensityReport rep;
  rep.mad = best;
  for (int i = 0; i < n; ++i)
    if (best_mask >> i & 1) rep.witness.push_back(verts[i]);
  return rep;
}

DensityReport mad_by_enumeration(const Graph& g, int max_vertices) {
  return mad_by_enumeration(GraphView(g), max_vertices);
}

namespace {

// BFS distance within the view, with one edge suppressed.
int bfs_distance_avoiding(const GraphView& g, Vertex src, Vertex dst,
                          Vertex skip_u, Vertex skip_v) {
  std::vector<int> dist(g.host().vertex_count(), -1);
  std::deque<Vertex> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (v == dst) return dist[v];
    for (Vertex u : g.neighbors(v)) {
      if ((v == skip_u && u == skip_v) || (v == skip_v && u == skip_u)) continue;
      if (dist[u] == -1) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
    }
  }
  return -1;
}

}  // namespace

int girth(const GraphView& g) {
  int best = std::numeric_limits<int>::max();
  for (auto [u, v] : g.host().edges()) {
    if (!g.active(u) || !g.active(v)) continue;
    int d = bfs_distance_avoiding(g, u, v, u, v);
    if (d >= 0) best = std::min(best, d + 1);
  }
  return best == std::numeric_limits<int>::max() ? kGirthInfinite : best;
}

int girth(const Graph& g) { return girth(GraphView(g)); }

MadLemmaReport check_mad_lemma(const GraphView& g) {
  trace_faces(g);  // rotation present and Euler-valid, i.e. planarity evidence
  MadLemmaReport rep;
  rep.girth_value = girth(g);
  rep.mad = mad_exact(g).mad;
  if (rep.girth_value == kGirthInfinite) {
    rep.bound = 2;  // limit of 2g/(g-2); forests have mad < 2
  } else {
    rep.bound = Rat(BigInt(2 * rep.girth_value), BigInt(rep.girth_value - 2));
  }
  rep.holds = rep.mad < rep.bound;
  if (!rep.holds)
    fail(ErrorKind::EmbeddingInvalid,
         "mad " + rat_to_string(rep.mad) + " >= " + rat_to_string(rep.bound) +
             "; the input embedding cannot be planar");
  return rep;
}

MadLemmaReport check_mad_lemma(const Graph& g) { return check_mad_lemma(GraphView(g)); }

}  // namespace recolor
