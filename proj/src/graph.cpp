#include "recolor/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace recolor {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::EmbeddingInvalid: return "embedding-invalid";
    case ErrorKind::NoAnchor: return "no-anchor";
    case ErrorKind::UndefinedMeasure: return "undefined-measure";
    case ErrorKind::Hypothesis: return "hypothesis";
    case ErrorKind::StructuralClaimViolation: return "structural-claim-violation";
    case ErrorKind::BudgetInapplicable: return "budget-inapplicable";
    case ErrorKind::ContractBreach: return "contract-breach";
    case ErrorKind::InternalInvariant: return "internal-invariant";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::Validation: return "validation";
  }
  return "unknown";
}

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n) {
  if (n < 0) fail(ErrorKind::Parse, "negative vertex count");
  adj_.assign(n_, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      fail(ErrorKind::Parse, "edge endpoint out of range");
    if (u == v) fail(ErrorKind::Parse, "self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      fail(ErrorKind::Parse, "duplicate edge");
  }
  for (auto [u, v] : seen) {
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::set_rotation(std::vector<std::vector<Vertex>> rotation) {
  if (static_cast<int>(rotation.size()) != n_)
    fail(ErrorKind::EmbeddingInvalid, "rotation must cover every vertex");
  for (Vertex v = 0; v < n_; ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != adj_[v])
      fail(ErrorKind::EmbeddingInvalid,
           "rotation of vertex " + std::to_string(v) +
               " is not a permutation of its neighbors");
  }
  rotation_ = std::move(rotation);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<std::vector<Vertex>>& Graph::rotation() const {
  if (!rotation_) fail(ErrorKind::EmbeddingInvalid, "rotation missing");
  return *rotation_;
}

bool Graph::is_connected() const { return GraphView(*this).is_connected(); }

bool Graph::is_triangle_free() const {
  for (auto [u, v] : edges_) {
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) ++i; else ++j;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  return GraphView(*this).components();
}

GraphView::GraphView(const Graph& g)
    : g_(&g), active_(g.vertex_count(), 1), count_(g.vertex_count()) {}

GraphView::GraphView(const Graph& g, std::vector<char> active)
    : g_(&g), active_(std::move(active)) {
  count_ = 0;
  for (char c : active_) count_ += c ? 1 : 0;
}

std::vector<Vertex> GraphView::vertices() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < g_->vertex_count(); ++v)
    if (active_[v]) out.push_back(v);
  return out;
}

int GraphView::degree(Vertex v) const {
  int d = 0;
  for (Vertex u : g_->neighbors(v)) d += active_[u] ? 1 : 0;
  return d;
}

std::vector<Vertex> GraphView::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : g_->neighbors(v))
    if (active_[u]) out.push_back(u);
  return out;
}

bool GraphView::has_edge(Vertex u, Vertex v) const {
  return active_[u] && active_[v] && g_->has_edge(u, v);
}

int GraphView::edge_count() const {
  int m = 0;
  for (auto [u, v] : g_->edges())
    if (active_[u] && active_[v]) ++m;
  return m;
}

GraphView GraphView::without(const std::vector<Vertex>& removed) const {
  std::vector<char> mask = active_;
  for (Vertex v : removed) {
    if (!mask[v])
      fail(ErrorKind::InternalInvariant,
           "removing vertex " + std::to_string(v) + " twice");
    mask[v] = 0;
  }
  return GraphView(*g_, std::move(mask));
}

std::vector<std::vector<Vertex>> GraphView::components() const {
  std::vector<char> seen(g_->vertex_count(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < g_->vertex_count(); ++s) {
    if (!active_[s] || seen[s]) continue;
    std::vector<Vertex> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g_->neighbors(v)) {
        if (active_[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool GraphView::is_connected() const {
  auto comps = components();
  return comps.size() <= 1;
}

std::vector<Vertex> GraphView::rotation_of(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u : g_->rotation()[v])
    if (active_[u]) out.push_back(u);
  return out;
}

std::pair<Graph, std::vector<Vertex>> GraphView::materialize() const {
  std::vector<Vertex> relabel(g_->vertex_count(), -1);
  std::vector<Vertex> order = vertices();
  for (size_t i = 0; i < order.size(); ++i) relabel[order[i]] = static_cast<int>(i);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g_->edges())
    if (active_[u] && active_[v]) edges.push_back({relabel[u], relabel[v]});
  Graph out(static_cast<int>(order.size()), std::move(edges));
  if (g_->has_rotation()) {
    std::vector<std::vector<Vertex>> rot(order.size());
    for (size_t i = 0; i < order.size(); ++i)
      for (Vertex u : rotation_of(order[i])) rot[i].push_back(relabel[u]);
    out.set_rotation(std::move(rot));
  }
  return {std::move(out), std::move(relabel)};
}

std::vector<Vertex> Face::vertex_incidences() const {
  std::vector<Vertex> out;
  out.reserve(boundary.size());
  for (auto [u, v] : boundary) out.push_back(u);
  return out;
}

std::vector<Face> trace_faces(const GraphView& g) {
  if (!g.has_rotation()) fail(ErrorKind::EmbeddingInvalid, "rotation missing");
  if (!g.is_connected())
    fail(ErrorKind::EmbeddingInvalid, "face tracing requires a connected graph");
  if (g.vertex_count() <= 1) return {};  // a lone vertex bounds only the plane

  // succ[(u,v)] = (v, w) with w the successor of u in the rotation at v.
  std::map<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>> succ;
  int m = 0;
  for (Vertex v : g.vertices()) {
    std::vector<Vertex> rot = g.rotation_of(v);
    if (rot.empty()) continue;
    for (size_t i = 0; i < rot.size(); ++i) {
      Vertex u = rot[i];
      Vertex w = rot[(i + 1) % rot.size()];
      succ[{u, v}] = {v, w};
    }
    m += static_cast<int>(rot.size());
  }
  m /= 2;

  std::vector<Face> faces;
  std::set<std::pair<Vertex, Vertex>> used;
  for (const auto& [start, ignored] : succ) {
    if (used.count(start)) continue;
    Face f;
    std::pair<Vertex, Vertex> e = start;
    do {
      f.boundary.push_back(e);
      used.insert(e);
      e = succ.at(e);
    } while (e != start);
    faces.push_back(std::move(f));
  }

  int n = g.vertex_count();
  int euler = n - m + static_cast<int>(faces.size());
  if (n > 0 && euler != 2)
    fail(ErrorKind::EmbeddingInvalid,
         "Euler check failed: " + std::to_string(n) + " - " + std::to_string(m) +
             " + " + std::to_string(faces.size()) + " = " + std::to_string(euler));
  return faces;
}

std::vector<Face> trace_faces(const Graph& g) { return trace_faces(GraphView(g)); }

SlotWalk walk_thread_slot(const GraphView& g, Vertex from, Vertex via) {
  SlotWalk walk;
  if (g.degree(via) >= 3) {
    walk.anchor = via;
    return walk;
  }
  Vertex prev = from, cur = via;
  while (true) {
    int d = g.degree(cur);
    if (d >= 3) {
      walk.anchor = cur;
      return walk;
    }
    if (d <= 1) {
      walk.anchor = -1;  // dead end at a 1-vertex
      return walk;
    }
    walk.interior.push_back(cur);
    Vertex next = -1;
    for (Vertex u : g.neighbors(cur))
      if (u != prev) next = u;
    if (next == -1) {  // degree-2 vertex whose both edges lead back
      walk.anchor = -1;
      return walk;
    }
    if (next == from) {
      walk.anchor = from;  // cycle thread, both endpoints at `from`
      return walk;
    }
    prev = cur;
    cur = next;
  }
}

ThreadDecomposition decompose_threads(const GraphView& g) {
  ThreadDecomposition out;
  std::vector<char> consumed(g.host().vertex_count(), 0);
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 1) out.degree_one.push_back(v);
  }
  for (Vertex a : g.vertices()) {
    if (g.degree(a) < 3) continue;
    for (Vertex b : g.neighbors(a)) {
      if (g.degree(b) != 2 || consumed[b]) continue;
      SlotWalk walk = walk_thread_slot(g, a, b);
      if (walk.anchor == -1) {
        // Ends at a 1-vertex; these interiors belong to no thread.
        for (Vertex x : walk.interior) consumed[x] = 1;
        continue;
      }
      Thread t;
      t.end_a = a;
      t.end_b = walk.anchor;
      t.interior = walk.interior;
      for (Vertex x : t.interior) consumed[x] = 1;
      out.threads.push_back(std::move(t));
    }
  }
  // Unconsumed 2-vertices unreachable from any 3+-anchor: either a bare
  // 2-regular cycle or a chain ending in 1-vertices (which joins no thread).
  for (Vertex s : g.vertices()) {
    if (g.degree(s) != 2 || consumed[s]) continue;
    std::vector<Vertex> cycle;
    Vertex prev = -1, cur = s;
    bool closed = false;
    while (true) {
      consumed[cur] = 1;
      cycle.push_back(cur);
      Vertex next = -1;
      for (Vertex u : g.neighbors(cur))
        if (u != prev) { next = u; break; }
      if (next == -1 || g.degree(next) != 2) break;
      if (next == s) { closed = true; break; }
      prev = cur;
      cur = next;
    }
    if (closed) out.bare_cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Thread> find_threads(const GraphView& g) {
  ThreadDecomposition d = decompose_threads(g);
  if (d.threads.empty() && !d.bare_cycles.empty() && d.degree_one.empty() &&
      g.is_connected())
    fail(ErrorKind::NoAnchor, "graph is a bare cycle; no 3+-vertex anchors a thread");
  return d.threads;
}

std::vector<Thread> find_threads(const Graph& g) { return find_threads(GraphView(g)); }

std::vector<ThreeVertexProfile> classify_three_vertices(const GraphView& g) {
  std::vector<ThreeVertexProfile> out;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 3) continue;
    ThreeVertexProfile p;
    p.vertex = v;
    int slot = 0;
    for (Vertex u : g.neighbors(v)) {
      SlotWalk walk = walk_thread_slot(g, v, u);
      p.lengths[slot++] = static_cast<int>(walk.interior.size());
    }
    std::sort(p.lengths.begin(), p.lengths.end(), std::greater<int>());
    out.push_back(p);
  }
  return out;
}

std::vector<ThreeVertexProfile> classify_three_vertices(const Graph& g) {
  return classify_three_vertices(GraphView(g));
}

}  // namespace recolor
