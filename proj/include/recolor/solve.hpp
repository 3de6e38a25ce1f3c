#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Recursive synthesizers for the three theorems plus the high-degree
// baseline.  Each checks its hypotheses, recurses on reducible
// configurations, extends with the matching extension procedure, validates
// the result against its bound before returning, and asserts the per-stage
// caps from the corresponding proof.

// Triangle-free planar (embedded) graphs with 7-assignments: 30-good.
RecoloringSequence solve_thm1(const Graph& g, const ListAssignment& L,
                              const Coloring& alpha, const Coloring& beta);

// mad(G) < 17/5 with 6-assignments: 12-good.
RecoloringSequence solve_thm2(const Graph& g, const ListAssignment& L,
                              const Coloring& alpha, const Coloring& beta);

// mad(G) < 22/9 with 4-assignments: 14-good.
RecoloringSequence solve_thm3(const Graph& g, const ListAssignment& L,
                              const Coloring& alpha, const Coloring& beta);

// Lists of size >= 2*maxdeg+1: each vertex recolored at most twice, at most
// 2n steps.
RecoloringSequence solve_high_degree(const Graph& g, const ListAssignment& L,
                                     const Coloring& alpha, const Coloring& beta);

// theorem: 1, 2, 3, or 0 for the baseline.
RecoloringSequence solve_theorem(int theorem, const Graph& g, const ListAssignment& L,
                                 const Coloring& alpha, const Coloring& beta);
int theorem_bound(int theorem);

}  // namespace recolor
