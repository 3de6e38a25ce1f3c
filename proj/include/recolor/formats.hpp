#pragma once

#include <string>

#include "recolor/coloring.hpp"
#include "recolor/graph.hpp"

namespace recolor {

// One solve/verify problem: a graph (optionally embedded), per-vertex color
// lists, and two proper L-colorings.
struct Instance {
  Graph graph;
  ListAssignment lists;
  Coloring alpha;
  Coloring beta;
};

// Line-oriented instance grammar:
//   graph <n>
//   edge <u> <v>
//   rot <v>: <n1> <n2> ...      (all vertices or none)
//   list <v>: <c1> <c2> ...
//   alpha <v> <c>
//   beta <v> <c>
//   # comment
// Colorings are validated as proper on load; diagnostics carry line numbers.
Instance parse_instance(const std::string& text);

// Canonical form; emit(parse(x)) reparses to an identical instance.
std::string emit_instance(const Instance& inst);

// Sequence format: header "steps <m>" then lines "recolor <v> <c>".
std::string emit_sequence(const RecoloringSequence& seq);

// Parses the step format back; the start coloring is taken from the instance.
RecoloringSequence parse_sequence(const std::string& text, const Coloring& start);

}  // namespace recolor
