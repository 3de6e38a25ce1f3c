#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

using Color = int;

// Per-vertex color lists.  A k-assignment gives every vertex exactly k colors.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::map<Vertex, std::set<Color>> lists)
      : lists_(std::move(lists)) {}

  void set(Vertex v, std::set<Color> colors) { lists_[v] = std::move(colors); }
  bool has(Vertex v) const { return lists_.count(v) != 0; }
  const std::set<Color>& at(Vertex v) const;
  bool contains(Vertex v, Color c) const;
  const std::map<Vertex, std::set<Color>>& lists() const { return lists_; }

  // Smallest list size over the given vertices; nullopt when empty.
  std::optional<int> min_size(const std::vector<Vertex>& vs) const;
  bool is_k_assignment(int k, const std::vector<Vertex>& vs) const;

 private:
  std::map<Vertex, std::set<Color>> lists_;
};

// A (possibly partial) vertex coloring: a map with an explicit domain.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::map<Vertex, Color> colors) : colors_(std::move(colors)) {}

  void set(Vertex v, Color c) { colors_[v] = c; }
  bool has(Vertex v) const { return colors_.count(v) != 0; }
  Color at(Vertex v) const;
  size_t size() const { return colors_.size(); }
  const std::map<Vertex, Color>& colors() const { return colors_; }
  bool operator==(const Coloring& o) const { return colors_ == o.colors_; }

  // Domain restricted to S, values unchanged.  S must be a subset of the
  // current domain.
  Coloring restrict(const std::vector<Vertex>& s) const;
  Coloring restrict(const GraphView& view) const;

 private:
  std::map<Vertex, Color> colors_;
};

// True iff c is total on the view, list-respecting, and edge-proper.
bool is_proper(const GraphView& g, const ListAssignment& L, const Coloring& c);
bool is_proper(const Graph& g, const ListAssignment& L, const Coloring& c);

struct RecoloringStep {
  Vertex vertex = -1;
  Color new_color = -1;
  // Recursion depth of the solver stage that emitted the step (0 for steps
  // written directly); used by the restriction-property checker.
  int stage = 0;
  bool operator==(const RecoloringStep& o) const {
    return vertex == o.vertex && new_color == o.new_color;
  }
};

struct RecoloringSequence {
  Coloring start;
  std::vector<RecoloringStep> steps;

  std::map<Vertex, int> counts() const;
  int count_of(Vertex v) const;
  // Steps restricted to vertices of `keep` (order preserved).
  std::vector<RecoloringStep> steps_on(const std::vector<char>& keep) const;
};

struct ValidationReport {
  bool valid = false;
  std::string reason;
  // Index of the first violated step, or SIZE_MAX when the failure is not
  // tied to a step (wrong final coloring, count breach).
  size_t violation_index = static_cast<size_t>(-1);
  int max_count = 0;
  Vertex argmax_vertex = -1;
  std::map<Vertex, int> counts;
};

// Replays seq from its start coloring: every intermediate coloring must be a
// proper L-coloring, steps must change the color (no-ops are malformed), the
// final coloring must equal target, and no vertex may be recolored more than
// `bound` times.
ValidationReport validate_sequence(const GraphView& g, const ListAssignment& L,
                                   const RecoloringSequence& seq,
                                   const Coloring& target, int bound);
ValidationReport validate_sequence(const Graph& g, const ListAssignment& L,
                                   const RecoloringSequence& seq,
                                   const Coloring& target, int bound);

}  // namespace recolor
