#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

enum class ConfigKind {
  Deg2OrLess,
  T1a_5vertex_three_3nbrs,
  T1b_path,
  T1c_4face_3444,
  T1d_4face_5with3,
  T2i_2minus,
  T2ii_3v_two_3nbrs,
  T2iii_4v_four_3nbrs,
  T3_isolated_or_1vertex,
  T3_3thread,
  T3_pendant_triple,
  T3_high_thread_vertex,
  T3_321_adjacency,
  T3_111_weak,
  HighDegreeBaseline,
};

const char* config_kind_name(ConfigKind kind);

// A detected reducible configuration: role-labeled vertices plus the ordered
// vertex sets the matching reduction deletes per recursion stage (the last
// stage is deleted first when recursing inward; re-added first on the way
// out... stages are listed outermost-first, i.e. stage 0 is removed first).
struct ConfigMatch {
  ConfigKind kind = ConfigKind::Deg2OrLess;
  std::map<std::string, std::vector<Vertex>> roles;
  std::vector<std::vector<Vertex>> deletion_stages;

  std::vector<Vertex> role(const std::string& name) const;
  Vertex role1(const std::string& name) const;
  std::string to_string() const;
};

// Theorem 1 (triangle-free planar, 7-lists): a 2^- vertex, else one of
// (a) 5-vertex with three 3-neighbors, (b) path of length <= 4 with
// 3-endpoints and 4-internals, (c) 4-face with degrees (3,4,4,4),
// (d) 4-face with degrees {3,4,4,5} whose 5-vertex has a 3-neighbor off the
// face.  Scan order is fixed, so output is deterministic.
std::optional<ConfigMatch> try_find_config_thm1(const GraphView& g);
ConfigMatch find_config_thm1(const GraphView& g);

// Theorem 2 (mad < 17/5, 6-lists): (i) 2^- vertex, (ii) 3-vertex with two
// 3-neighbors, (iii) 4-vertex with four 3-neighbors.
std::optional<ConfigMatch> try_find_config_thm2(const GraphView& g);
ConfigMatch find_config_thm2(const GraphView& g);

// Theorem 3 (mad < 22/9, 4-lists): 1-vertex, 3-thread, 3-vertex with three
// 2-neighbors, the high-nearby-2-vertex patterns, the 3_{2,1,0} adjacency
// patterns, and the 3_{1,1,1} weak-neighbor patterns.  `skip` suppresses
// kinds (used when a conditional reduction's budget fails).
std::optional<ConfigMatch> try_find_config_thm3(const GraphView& g,
                                                const std::vector<ConfigKind>& skip = {});
ConfigMatch find_config_thm3(const GraphView& g);

// Weak-pair match anchored at a specific 3_{1,1,1}-vertex, if one exists.
// The solver prefers this over the conditional pendant-triple reduction when
// both apply at the same vertex (it caps the shared 2-neighbor tighter).
std::optional<ConfigMatch> match_lem6_at(const GraphView& g, Vertex v);

// Independent predicate re-checker (separate code path from the search):
// verifies that the roles satisfy the named configuration's degree, thread,
// and face predicates in g.  Fails with InternalInvariant when they do not.
void recheck_config(const GraphView& g, const ConfigMatch& match);

}  // namespace recolor
