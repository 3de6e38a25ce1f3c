#pragma once

#include <cstdint>
#include <string>

#include "recolor/formats.hpp"

namespace recolor {

// Deterministic instance generation: identical specs and seeds produce
// byte-identical instances on every platform (sampling uses the raw engine,
// never std distributions).
struct GenSpec {
  std::string model;  // path, cycle, grid, hex-patch, k4, cube, petersen,
                      // dodecahedron, subdivided, random-sparse, random
  int n = 0;
  int rows = 0, cols = 0;
  int t = 1;             // subdivision count per edge
  std::string base;      // subdivided base: k4, cube, petersen, dodecahedron, cubic:<n>
  int edges = 0;         // random model target edge count
  int maxdeg = 0;        // random model degree cap (0 = none)
  std::string mad_bound = "22/9";  // random-sparse density ceiling "p/q"
  int k = 4;             // list size
  std::string lists = "shared";    // shared | random
  std::string colors = "greedy";   // greedy | disjoint | random
  uint64_t seed = 1;
};

GenSpec parse_gen_spec(const std::string& text);

Instance generate_instance(const GenSpec& spec);

// Bare graphs used by generators and tests.
Graph make_path(int n);
Graph make_cycle(int n);           // with rotation
Graph make_grid(int rows, int cols);  // with rotation
// Surface of an m x m x m box, every face an m x m cell grid: a
// quadrangulation of the sphere whose only 3-vertices are the eight box
// corners.  With rotation.
Graph make_gridded_cube(int m);
Graph make_hex_patch(int rows, int cols);  // with rotation
Graph make_k4();                   // with rotation
Graph make_cube();                 // with rotation
Graph make_petersen();
Graph make_dodecahedron();         // with rotation
Graph make_random_cubic(int n, uint64_t seed);
Graph subdivide(const Graph& g, int t);  // inherits rotation when present

}  // namespace recolor
