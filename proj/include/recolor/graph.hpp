#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "recolor/error.hpp"

namespace recolor {

using Vertex = int;

// Undirected simple graph on vertices 0..n-1, optionally carrying a rotation
// system (for each vertex, its neighbors in clockwise order around it).
// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  // Rotation must list, for every vertex, exactly its neighbor set.
  void set_rotation(std::vector<std::vector<Vertex>> rotation);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_rotation() const { return rotation_.has_value(); }
  const std::vector<std::vector<Vertex>>& rotation() const;

  bool is_connected() const;
  bool is_triangle_free() const;
  std::vector<std::vector<Vertex>> components() const;

 private:
  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adj_;  // sorted per vertex
  std::optional<std::vector<std::vector<Vertex>>> rotation_;
};

// A subgraph of a fixed host graph, identified by an active-vertex mask.
// Vertices keep their original ids, so recoloring steps compose across
// recursion levels without relabeling.  Deleting a vertex from a rotation
// system is mask filtering: the cyclic order of the survivors is inherited.
class GraphView {
 public:
  explicit GraphView(const Graph& g);
  GraphView(const Graph& g, std::vector<char> active);

  const Graph& host() const { return *g_; }
  bool active(Vertex v) const { return active_[v]; }
  const std::vector<char>& mask() const { return active_; }
  int vertex_count() const { return count_; }
  std::vector<Vertex> vertices() const;

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  int edge_count() const;

  GraphView without(const std::vector<Vertex>& removed) const;
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected() const;

  // Rotation of v restricted to active neighbors (host rotation required).
  std::vector<Vertex> rotation_of(Vertex v) const;
  bool has_rotation() const { return g_->has_rotation(); }

  // Materializes the subgraph as a standalone Graph plus the vertex
  // relabeling old-id -> new-id (used by the oracle and the C API).
  std::pair<Graph, std::vector<Vertex>> materialize() const;

 private:
  const Graph* g_;
  std::vector<char> active_;
  int count_ = 0;
};

struct Face {
  // Boundary as a cyclic sequence of directed edges.
  std::vector<std::pair<Vertex, Vertex>> boundary;
  int length() const { return static_cast<int>(boundary.size()); }
  // Vertex incidences along the walk, with multiplicity (cut vertices may
  // appear more than once and discharging pays per incidence).
  std::vector<Vertex> vertex_incidences() const;
};

// Traces the faces of a connected embedded graph: the successor of directed
// edge (u,v) is (v,w) where w follows u in the rotation at v.  Verifies
// Euler's formula n - m + f = 2 and fails with EmbeddingInvalid otherwise.
std::vector<Face> trace_faces(const GraphView& g);
std::vector<Face> trace_faces(const Graph& g);

struct Thread {
  Vertex end_a = -1;          // 3+-anchor
  Vertex end_b = -1;          // 3+-anchor; equals end_a for the cycle case
  std::vector<Vertex> interior;  // ordered from end_a to end_b, all 2-vertices
  int k() const { return static_cast<int>(interior.size()); }
  bool is_cycle() const { return end_a == end_b; }
};

struct ThreadDecomposition {
  std::vector<Thread> threads;           // maximal threads with k >= 1
  std::vector<Vertex> degree_one;        // 1-vertices terminate no thread
  std::vector<std::vector<Vertex>> bare_cycles;  // 2-regular components
};

ThreadDecomposition decompose_threads(const GraphView& g);

// Maximal threads with at least one interior vertex.  Fails with NoAnchor if
// the graph is a bare cycle (the caller handles cycles directly).
std::vector<Thread> find_threads(const GraphView& g);
std::vector<Thread> find_threads(const Graph& g);

struct ThreeVertexProfile {
  Vertex vertex = -1;
  // Sorted descending; one entry per edge slot of the 3-vertex, giving the
  // interior length of the maximal thread entered through that slot (0 when
  // the neighbor is itself a 3+-vertex).  A cycle thread occupies two slots.
  std::array<int, 3> lengths{0, 0, 0};
};

std::vector<ThreeVertexProfile> classify_three_vertices(const GraphView& g);
std::vector<ThreeVertexProfile> classify_three_vertices(const Graph& g);

// Walks away from `from` through its neighbor `via`; returns the first
// 3+-vertex reached (or `from` itself for a cycle thread) and the interior
// 2-vertices passed.  `via` must have degree <= 2; degree-1 dead ends yield
// anchor -1.
struct SlotWalk {
  Vertex anchor = -1;
  std::vector<Vertex> interior;
};
SlotWalk walk_thread_slot(const GraphView& g, Vertex from, Vertex via);

}  // namespace recolor
