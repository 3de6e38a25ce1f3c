#pragma once

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// Cap arithmetic for a single Key-Lemma application.
struct ExtensionBudget {
  int t = 0;      // recolorings of N(v) by the inner sequence
  int s = 0;      // |L(v)| - d(v) - 1
  int bound = 0;  // ceil(t/s) + 1
};

inline int key_lemma_bound(int t, int s) { return (t + s - 1) / s + 1; }

// Extends `inner` (a sequence on host - v transforming alpha to beta there)
// to the whole host.  v is recolored at most ceil(t/s)+1 times where t is the
// number of inner steps on N(v) and s = |L(v)| - d(v) - 1 >= 1.  Before each
// block of s upcoming neighborhood colors, v dodges the whole block if its
// current color appears in it.
RecoloringSequence extend_key_lemma(const GraphView& host, const ListAssignment& L,
                                    Vertex v, const RecoloringSequence& inner,
                                    const Coloring& alpha, const Coloring& beta,
                                    ExtensionBudget* budget_out = nullptr);

// Extends over the interior {v2, v3} of a 2-thread v1-v2-v3-v4 (end_a = v1,
// end_b = v4; equal endpoints allowed for the cycle case).  Lists on the
// interior must have size >= 4 and the inner sequence may recolor v4 at most
// 11 times (s); then v3 is recolored at most s+3 times.
RecoloringSequence extend_two_thread(const GraphView& host, const ListAssignment& L,
                                     const Thread& thread, const RecoloringSequence& inner,
                                     const Coloring& alpha, const Coloring& beta);

// Extends over the interior {v2, v3, v4} of a 3-thread v1..v5 (equal
// endpoints allowed).  The center v3 is recolored at most 4 times.
RecoloringSequence extend_three_thread(const GraphView& host, const ListAssignment& L,
                                       const Thread& thread, const RecoloringSequence& inner,
                                       const Coloring& alpha, const Coloring& beta);

// 3-vertex v with 2-neighbors w1, w2, w3; x1 is the other neighbor of w1.
// inner lives on host - {v,w1,w2,w3} and must recolor x1 at most 9 times.
// Composition: three-thread extension over {w2, v, w3}, then the Key Lemma
// for w1.
RecoloringSequence extend_pendant_triple(const GraphView& host, const ListAssignment& L,
                                         Vertex v, Vertex w1, Vertex w2, Vertex w3,
                                         Vertex x1, const RecoloringSequence& inner,
                                         const Coloring& alpha, const Coloring& beta);

// 6-list extensions for a center v and a set W of degree-3 neighbors of v
// that are deleted together with v.  Implements the interleaved schedule:
// each w dodges blocks of upcoming colors on its outside neighborhood (block
// length 3 for its first six stream colors, which may push v aside, then
// length 2 while also avoiding v), and v dodges upcoming colors on
// N(v) \ W.  Caps: every w <= 12; v <= 12 when |W| == 2, v <= 10 when
// |W| == 4 (no outside neighbor).
RecoloringSequence extend_deg3_two_deg3_neighbors(const GraphView& host,
                                                  const ListAssignment& L, Vertex v,
                                                  Vertex w1, Vertex w2,
                                                  const RecoloringSequence& inner,
                                                  const Coloring& alpha,
                                                  const Coloring& beta);

RecoloringSequence extend_deg4_four_deg3_neighbors(const GraphView& host,
                                                   const ListAssignment& L, Vertex v,
                                                   const std::array<Vertex, 4>& w,
                                                   const RecoloringSequence& inner,
                                                   const Coloring& alpha,
                                                   const Coloring& beta);

// Verifies the extension contract: deleting all steps on `added` vertices
// from `outer` must leave exactly the inner step list.  Fails with
// InternalInvariant otherwise.
void assert_restriction(const GraphView& host, const RecoloringSequence& outer,
                        const RecoloringSequence& inner, const std::vector<Vertex>& added);

}  // namespace recolor
