#pragma once

#include <optional>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/rational.hpp"

namespace recolor {

struct DensityReport {
  Rat mad;                       // max over nonempty H of 2|E(H)|/|V(H)|
  std::vector<Vertex> witness;   // vertex set achieving it
};

// Exact maximum average degree via iterated min-cut feasibility tests on the
// classical max-density flow network.  Capacities stay integral by scaling
// with the candidate density's denominator.
DensityReport mad_exact(const GraphView& g);
DensityReport mad_exact(const Graph& g);

// Brute-force oracle: maximizes over all nonempty vertex subsets.  Refuses
// graphs with more than max_vertices vertices.
DensityReport mad_by_enumeration(const GraphView& g, int max_vertices = 20);
DensityReport mad_by_enumeration(const Graph& g, int max_vertices = 20);

inline constexpr int kGirthInfinite = -1;

// Length of a shortest cycle, or kGirthInfinite for forests.  Exact: for each
// edge uv, a shortest cycle through uv is 1 + dist(u,v) in G - uv.
int girth(const GraphView& g);
int girth(const Graph& g);

struct MadLemmaReport {
  bool holds = false;
  int girth_value = kGirthInfinite;
  Rat mad;
  Rat bound;  // 2g/(g-2); the value 2 when the graph is a forest
};

// Checks mad(G) < 2g/(g-2) strictly (exact rationals) on an embedded graph.
// The inequality is a theorem for planar graphs, so a violation signals an
// invalid embedding input.
MadLemmaReport check_mad_lemma(const GraphView& g);
MadLemmaReport check_mad_lemma(const Graph& g);

}  // namespace recolor
