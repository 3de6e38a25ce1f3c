#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

inline constexpr uint64_t kDefaultStateCap = 2'000'000;

// The L-recoloring graph R_L(G) materialized over tiny instances: states are
// all proper L-colorings, adjacent when they differ on one vertex.  States
// are encoded as mixed-radix integers over per-vertex list indices.
class StateSpace {
 public:
  // Fails with CapExceeded when the list-size product exceeds the cap.
  StateSpace(const Graph& g, const ListAssignment& L, uint64_t state_cap = kDefaultStateCap);

  size_t state_count() const { return states_.size(); }
  const Graph& graph() const { return *g_; }

  std::optional<size_t> index_of(const Coloring& c) const;
  Coloring coloring_of(size_t index) const;

  // Proper colorings reachable from state `index` by one recoloring step.
  std::vector<size_t> neighbors(size_t index) const;

  // Number of single-vertex recolorings available from the state; equals the
  // state's degree in R_L(G).
  int adjacency_degree(size_t index) const;

  // Exact shortest path length, or nullopt when unreachable.
  std::optional<int> distance(const Coloring& from, const Coloring& to) const;

  // max over all state pairs of their distance; nullopt when R_L(G) is
  // disconnected (or has no states).
  std::optional<int> diameter() const;

 private:
  uint64_t encode(const std::vector<int>& idx) const;
  bool proper_encoded(const std::vector<int>& idx) const;

  const Graph* g_;
  std::vector<std::vector<Color>> lists_;   // per-vertex sorted colors
  std::vector<uint64_t> radix_;
  std::vector<uint64_t> states_;            // sorted codes of proper colorings
};

// Bounded search: is there a sequence from alpha to beta recoloring every
// vertex at most k times?  State = (coloring, per-vertex remaining budget).
// Only for very small instances (n <= 5, lists <= 4 recommended, k <= 3).
bool budget_reachable(const Graph& g, const ListAssignment& L, const Coloring& alpha,
                      const Coloring& beta, int k, uint64_t state_cap = kDefaultStateCap);

struct ExtensionCheckReport {
  long sequences_checked = 0;
  int worst_count = 0;         // max recolorings of the extended vertex seen
  int claimed_cap = 0;         // max allowed by the Key Lemma over the run
  bool ok = false;
  std::string counterexample;  // instance + inner sequence when !ok
};

// Exhaustively enumerates inner recoloring sequences on the leaves of the
// star K_{1,d} (center `v` deleted) up to `max_len` steps, extends each with
// the Key Lemma, validates the result, and checks v's count against
// ceil(t/s)+1.  Every proper final coloring choice for v is tried as beta(v).
ExtensionCheckReport exhaustive_key_lemma_check(int d, int list_size, int max_len);

// Same exhaustive scheme for the 2-thread extension (Lemma-style): host is
// the path v1-v2-v3-v4, inner sequences recolor the endpoints v1, v4 freely
// (they are nonadjacent in the host minus the interior), subject to v4 being
// recolored at most s_cap times.  Checks v3's count against s+3.
ExtensionCheckReport exhaustive_two_thread_check(int list_size, int max_len, int s_cap);

}  // namespace recolor
