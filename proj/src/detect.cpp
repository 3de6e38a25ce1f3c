#include "recolor/detect.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace recolor {

const char* config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::Deg2OrLess: return "Deg2OrLess";
    case ConfigKind::T1a_5vertex_three_3nbrs: return "T1a_5vertex_three_3nbrs";
    case ConfigKind::T1b_path: return "T1b_path";
    case ConfigKind::T1c_4face_3444: return "T1c_4face_3444";
    case ConfigKind::T1d_4face_5with3: return "T1d_4face_5with3";
    case ConfigKind::T2i_2minus: return "T2i_2minus";
    case ConfigKind::T2ii_3v_two_3nbrs: return "T2ii_3v_two_3nbrs";
    case ConfigKind::T2iii_4v_four_3nbrs: return "T2iii_4v_four_3nbrs";
    case ConfigKind::T3_isolated_or_1vertex: return "T3_isolated_or_1vertex";
    case ConfigKind::T3_3thread: return "T3_3thread";
    case ConfigKind::T3_pendant_triple: return "T3_pendant_triple";
    case ConfigKind::T3_high_thread_vertex: return "T3_high_thread_vertex";
    case ConfigKind::T3_321_adjacency: return "T3_321_adjacency";
    case ConfigKind::T3_111_weak: return "T3_111_weak";
    case ConfigKind::HighDegreeBaseline: return "HighDegreeBaseline";
  }
  return "unknown";
}

std::vector<Vertex> ConfigMatch::role(const std::string& name) const {
  auto it = roles.find(name);
  if (it == roles.end())
    fail(ErrorKind::InternalInvariant, "config match lacks role '" + name + "'");
  return it->second;
}

Vertex ConfigMatch::role1(const std::string& name) const {
  auto vs = role(name);
  if (vs.size() != 1)
    fail(ErrorKind::InternalInvariant, "role '" + name + "' is not a single vertex");
  return vs[0];
}

std::string ConfigMatch::to_string() const {
  std::ostringstream out;
  out << config_kind_name(kind);
  for (const auto& [name, vs] : roles) {
    out << " " << name << "=";
    for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  }
  return out.str();
}

namespace {

std::vector<Vertex> sorted_neighbors_with_degree(const GraphView& g, Vertex v, int d) {
  std::vector<Vertex> out;
  for (Vertex u : g.neighbors(v))
    if (g.degree(u) == d) out.push_back(u);
  return out;
}

// Sorted descending profile of a degree-3 vertex, via slot walks.
std::array<int, 3> profile_of(const GraphView& g, Vertex v) {
  std::array<int, 3> p{0, 0, 0};
  int i = 0;
  for (Vertex u : g.neighbors(v))
    p[i++] = static_cast<int>(walk_thread_slot(g, v, u).interior.size());
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

// DFS for a path of exactly `len` edges from a 3-vertex through 4-vertex
// internals to another 3-vertex, lexicographically first.
bool dfs_t1b(const GraphView& g, std::vector<Vertex>& path, int len) {
  Vertex cur = path.back();
  for (Vertex u : g.neighbors(cur)) {
    if (std::find(path.begin(), path.end(), u) != path.end()) continue;
    if (static_cast<int>(path.size()) == len) {
      if (g.degree(u) == 3) {
        path.push_back(u);
        return true;
      }
      continue;
    }
    if (g.degree(u) != 4) continue;
    path.push_back(u);
    if (dfs_t1b(g, path, len)) return true;
    path.pop_back();
  }
  return false;
}

struct FourFace {
  std::vector<Vertex> walk;  // 4 distinct vertices in face order
};

std::vector<FourFace> four_faces(const GraphView& g) {
  std::vector<FourFace> out;
  for (const Face& f : trace_faces(g)) {
    if (f.length() != 4) continue;
    FourFace ff;
    ff.walk = f.vertex_incidences();
    std::set<Vertex> distinct(ff.walk.begin(), ff.walk.end());
    if (distinct.size() != 4) continue;  // cut-vertex walks are not 4-cycles
    out.push_back(std::move(ff));
  }
  return out;
}

}  // namespace

std::optional<ConfigMatch> try_find_config_thm1(const GraphView& g) {
  for (Vertex v : g.vertices()) {
    if (g.degree(v) <= 2) {
      ConfigMatch m;
      m.kind = ConfigKind::Deg2OrLess;
      m.roles["v"] = {v};
      m.deletion_stages = {{v}};
      return m;
    }
  }

  // (a) 5-vertex with at least three 3-neighbors.
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 5) continue;
    std::vector<Vertex> threes = sorted_neighbors_with_degree(g, v, 3);
    if (threes.size() >= 3) {
      ConfigMatch m;
      m.kind = ConfigKind::T1a_5vertex_three_3nbrs;
      m.roles["v"] = {v};
      m.roles["w"] = {threes[0], threes[1], threes[2]};
      m.deletion_stages = {{threes[0], threes[1], threes[2]}, {v}};
      return m;
    }
  }

  // (b) path of length 1..4, 3-vertex endpoints, 4-vertex internals;
  // shortest first, then lexicographic.
  for (int len = 1; len <= 4; ++len) {
    for (Vertex v : g.vertices()) {
      if (g.degree(v) != 3) continue;
      std::vector<Vertex> path{v};
      if (dfs_t1b(g, path, len)) {
        ConfigMatch m;
        m.kind = ConfigKind::T1b_path;
        m.roles["path"] = path;
        // Singleton stages, innermost vertex deleted last; the re-add order
        // is middle-out so every Key-Lemma stage sees small degrees.
        std::vector<Vertex> readd;
        switch (len) {
          case 1: readd = {path[1], path[0]}; break;
          case 2: readd = {path[1], path[0], path[2]}; break;
          case 3: readd = {path[1], path[2], path[0], path[3]}; break;
          case 4: readd = {path[2], path[1], path[3], path[0], path[4]}; break;
        }
        m.roles["readd"] = readd;
        for (auto it = readd.rbegin(); it != readd.rend(); ++it)
          m.deletion_stages.push_back({*it});
        return m;
      }
    }
  }

  auto faces = four_faces(g);

  // (c) 4-face with degrees (3,4,4,4).
  for (const FourFace& f : faces) {
    int three_at = -1;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      int d = g.degree(f.walk[i]);
      if (d == 3) {
        if (three_at != -1) ok = false;
        three_at = i;
      } else if (d != 4) {
        ok = false;
      }
    }
    if (!ok || three_at == -1) continue;
    Vertex u1 = f.walk[three_at];
    Vertex nb1 = f.walk[(three_at + 1) % 4];
    Vertex opp = f.walk[(three_at + 2) % 4];
    Vertex nb2 = f.walk[(three_at + 3) % 4];
    ConfigMatch m;
    m.kind = ConfigKind::T1c_4face_3444;
    m.roles["face"] = {u1, nb1, opp, nb2};
    m.roles["three_vertex"] = {u1};
    m.roles["readd"] = {opp, nb1, nb2, u1};
    for (auto it = m.roles["readd"].rbegin(); it != m.roles["readd"].rend(); ++it)
      m.deletion_stages.push_back({*it});
    return m;
  }

  // (d) 4-face with degrees {3,4,4,5}, the 5-vertex adjacent to a 3-vertex
  // off the face.
  for (const FourFace& f : faces) {
    int three_at = -1, five_at = -1;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      int d = g.degree(f.walk[i]);
      if (d == 3) {
        if (three_at != -1) ok = false;
        three_at = i;
      } else if (d == 5) {
        if (five_at != -1) ok = false;
        five_at = i;
      } else if (d != 4) {
        ok = false;
      }
    }
    if (!ok || three_at == -1 || five_at == -1) continue;
    Vertex five = f.walk[five_at];
    Vertex w = -1;
    for (Vertex u : g.neighbors(five)) {
      if (g.degree(u) != 3) continue;
      if (std::find(f.walk.begin(), f.walk.end(), u) != f.walk.end()) continue;
      w = u;
      break;
    }
    if (w == -1) continue;
    Vertex u1 = f.walk[three_at];
    Vertex nb1 = f.walk[(three_at + 1) % 4];
    Vertex opp = f.walk[(three_at + 2) % 4];
    Vertex nb2 = f.walk[(three_at + 3) % 4];
    ConfigMatch m;
    m.kind = ConfigKind::T1d_4face_5with3;
    m.roles["face"] = {u1, nb1, opp, nb2};
    m.roles["three_vertex"] = {u1};
    m.roles["five_vertex"] = {five};
    m.roles["w"] = {w};
    m.roles["readd"] = {opp, nb1, nb2, u1, w};
    for (auto it = m.roles["readd"].rbegin(); it != m.roles["readd"].rend(); ++it)
      m.deletion_stages.push_back({*it});
    return m;
  }

  return std::nullopt;
}

ConfigMatch find_config_thm1(const GraphView& g) {
  auto m = try_find_config_thm1(g);
  if (!m)
    fail(ErrorKind::StructuralClaimViolation,
         "no Theorem-1 configuration found; the input is not triangle-free planar "
         "(or the structural lemma is violated)");
  recheck_config(g, *m);
  return *m;
}

std::optional<ConfigMatch> try_find_config_thm2(const GraphView& g) {
  for (Vertex v : g.vertices()) {
    if (g.degree(v) <= 2) {
      ConfigMatch m;
      m.kind = ConfigKind::T2i_2minus;
      m.roles["v"] = {v};
      m.deletion_stages = {{v}};
      return m;
    }
  }
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 3) continue;
    std::vector<Vertex> threes = sorted_neighbors_with_degree(g, v, 3);
    if (threes.size() >= 2) {
      ConfigMatch m;
      m.kind = ConfigKind::T2ii_3v_two_3nbrs;
      m.roles["v"] = {v};
      m.roles["w"] = {threes[0], threes[1]};
      m.deletion_stages = {{v, threes[0], threes[1]}};
      return m;
    }
  }
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 4) continue;
    std::vector<Vertex> threes = sorted_neighbors_with_degree(g, v, 3);
    if (threes.size() == 4) {
      ConfigMatch m;
      m.kind = ConfigKind::T2iii_4v_four_3nbrs;
      m.roles["v"] = {v};
      m.roles["w"] = threes;
      m.deletion_stages = {{v, threes[0], threes[1], threes[2], threes[3]}};
      return m;
    }
  }
  return std::nullopt;
}

ConfigMatch find_config_thm2(const GraphView& g) {
  auto m = try_find_config_thm2(g);
  if (!m)
    fail(ErrorKind::StructuralClaimViolation,
         "no Theorem-2 configuration found; the input violates mad < 17/5 "
         "(or the structural claim is violated)");
  recheck_config(g, *m);
  return *m;
}

namespace {

bool skipped(const std::vector<ConfigKind>& skip, ConfigKind k) {
  return std::find(skip.begin(), skip.end(), k) != skip.end();
}

// Maximal-thread slots at v: one entry per edge slot with the walked
// interior; a cycle thread appears through both of its slots.
struct Slot {
  Vertex first = -1;  // neighbor the slot enters through
  SlotWalk walk;
};

std::vector<Slot> slots_of(const GraphView& g, Vertex v) {
  std::vector<Slot> out;
  for (Vertex u : g.neighbors(v)) {
    Slot s;
    s.first = u;
    s.walk = walk_thread_slot(g, v, u);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<ConfigMatch> match_lem4(const GraphView& g, Vertex v) {
  int d = g.degree(v);
  if (d != 3 && d != 4) return std::nullopt;
  std::vector<Slot> slots = slots_of(g, v);
  int nearby = 0;
  for (const Slot& s : slots) nearby += static_cast<int>(s.walk.interior.size());
  if ((d == 3 && nearby < 4) || (d == 4 && nearby < 6)) return std::nullopt;

  // Pattern A: all slots but at most one are 2-threads.
  std::vector<const Slot*> twos, ones;
  int others = 0;
  for (const Slot& s : slots) {
    size_t len = s.walk.interior.size();
    if (len == 2) twos.push_back(&s);
    else if (len == 1) ones.push_back(&s);
    else ++others;
  }
  auto dedup = [](std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };

  if (static_cast<int>(twos.size()) >= d - 1) {
    // Keep at most one 2-thread slot so v ends with degree <= 1.  A cycle
    // thread occupies two slots and must be deleted whole, so keep a slot
    // only when it belongs to a path thread (anchor != v).
    const Slot* keep = nullptr;
    if (others == 0 && static_cast<int>(twos.size()) == d) {
      for (const Slot* s : twos)
        if (s->walk.anchor != v) { keep = s; break; }
    }
    std::vector<Vertex> delete_ints;
    std::vector<Vertex> kept_interior;
    for (const Slot* s : twos) {
      if (s == keep) { kept_interior = s->walk.interior; continue; }
      for (Vertex x : s->walk.interior) delete_ints.push_back(x);
    }
    delete_ints = dedup(delete_ints);
    if (keep) {
      for (Vertex x : kept_interior)
        delete_ints.erase(std::remove(delete_ints.begin(), delete_ints.end(), x),
                          delete_ints.end());
    }
    ConfigMatch m;
    m.kind = ConfigKind::T3_high_thread_vertex;
    m.roles["v"] = {v};
    m.roles["pattern"] = {0};
    m.roles["delete_2threads"] = delete_ints;
    m.deletion_stages = {delete_ints, {v}};
    return m;
  }

  if (static_cast<int>(ones.size()) >= 2 && static_cast<int>(twos.size()) >= d - 2) {
    std::vector<Vertex> delete_ints;
    for (const Slot* s : twos)
      for (Vertex x : s->walk.interior) delete_ints.push_back(x);
    delete_ints = dedup(delete_ints);
    Vertex p = ones[0]->walk.interior[0];
    Vertex q = ones[1]->walk.interior[0];
    if (p == q) return std::nullopt;  // cannot happen for distinct slots
    ConfigMatch m;
    m.kind = ConfigKind::T3_high_thread_vertex;
    m.roles["v"] = {v};
    m.roles["pattern"] = {1};
    m.roles["delete_2threads"] = delete_ints;
    m.roles["one_thread_interiors"] = {p, q};
    m.deletion_stages = {delete_ints, {p, v, q}};
    return m;
  }
  return std::nullopt;
}

bool profile_is(const std::array<int, 3>& p, int a, int b, int c) {
  return p[0] == a && p[1] == b && p[2] == c;
}

}  // namespace

std::optional<ConfigMatch> try_find_config_thm3(const GraphView& g,
                                                const std::vector<ConfigKind>& skip) {
  if (!skipped(skip, ConfigKind::T3_isolated_or_1vertex)) {
    for (Vertex v : g.vertices()) {
      if (g.degree(v) <= 1) {
        ConfigMatch m;
        m.kind = ConfigKind::T3_isolated_or_1vertex;
        m.roles["v"] = {v};
        m.deletion_stages = {{v}};
        return m;
      }
    }
  }

  if (!skipped(skip, ConfigKind::T3_3thread)) {
    ThreadDecomposition dec = decompose_threads(g);
    for (const Thread& t : dec.threads) {
      if (t.k() < 3) continue;
      ConfigMatch m;
      m.kind = ConfigKind::T3_3thread;
      Vertex v5 = (t.k() >= 4) ? t.interior[3] : t.end_b;
      m.roles["path"] = {t.end_a, t.interior[0], t.interior[1], t.interior[2], v5};
      m.deletion_stages = {{t.interior[0], t.interior[1], t.interior[2]}};
      return m;
    }
  }

  if (!skipped(skip, ConfigKind::T3_pendant_triple)) {
    for (Vertex v : g.vertices()) {
      if (g.degree(v) != 3) continue;
      std::vector<Vertex> ws = g.neighbors(v);
      bool all_two = true;
      for (Vertex w : ws)
        if (g.degree(w) != 2) all_two = false;
      if (!all_two) continue;
      if (g.has_edge(ws[0], ws[1]) || g.has_edge(ws[0], ws[2]) || g.has_edge(ws[1], ws[2]))
        continue;  // adjacent 2-neighbors form a cycle thread; lem4 covers it
      Vertex x1 = -1;
      for (Vertex u : g.neighbors(ws[0]))
        if (u != v) x1 = u;
      ConfigMatch m;
      m.kind = ConfigKind::T3_pendant_triple;
      m.roles["v"] = {v};
      m.roles["w"] = ws;
      m.roles["x1"] = {x1};
      m.deletion_stages = {{v, ws[0], ws[1], ws[2]}};
      return m;
    }
  }

  if (!skipped(skip, ConfigKind::T3_high_thread_vertex)) {
    for (Vertex v : g.vertices()) {
      auto m = match_lem4(g, v);
      if (m) return m;
    }
  }

  if (!skipped(skip, ConfigKind::T3_321_adjacency)) {
    for (Vertex v : g.vertices()) {
      if (g.degree(v) != 3) continue;
      if (!profile_is(profile_of(g, v), 2, 1, 0)) continue;
      // The 0-slot neighbor.
      Vertex w = -1;
      for (Vertex u : g.neighbors(v))
        if (g.degree(u) >= 3) w = u;
      if (w == -1 || g.degree(w) != 3) continue;
      auto wp = profile_of(g, w);
      if (!(profile_is(wp, 1, 1, 0) || profile_is(wp, 2, 0, 0) || profile_is(wp, 2, 1, 0)))
        continue;
      ConfigMatch m;
      m.kind = ConfigKind::T3_321_adjacency;
      m.roles["v"] = {v};
      m.roles["w"] = {w};
      std::vector<Slot> vslots = slots_of(g, v);
      for (const Slot& s : vslots) {
        if (s.walk.interior.size() == 2) m.roles["v2t"] = s.walk.interior;
        if (s.walk.interior.size() == 1) m.roles["v1t"] = s.walk.interior;
      }
      // Stage 1: v's 2-thread interior; stage 2: v and its 1-thread interior;
      // stage 3: w plus the interiors of w's threads that survive in the
      // reduced graph (the solver re-adds them by local shape).
      m.deletion_stages.push_back(m.roles["v2t"]);
      m.deletion_stages.push_back({m.roles["v1t"][0], v});
      GraphView mid = g.without(m.deletion_stages[0]).without(m.deletion_stages[1]);
      std::vector<Vertex> stage3{w};
      for (Vertex u : mid.neighbors(w)) {
        SlotWalk walk = walk_thread_slot(mid, w, u);
        for (Vertex x : walk.interior) stage3.push_back(x);
      }
      std::sort(stage3.begin() + 1, stage3.end());
      stage3.erase(std::unique(stage3.begin(), stage3.end()), stage3.end());
      m.deletion_stages.push_back(stage3);
      return m;
    }
  }

  if (!skipped(skip, ConfigKind::T3_111_weak)) {
    for (Vertex v : g.vertices()) {
      auto m = match_lem6_at(g, v);
      if (m) return m;
    }
  }

  return std::nullopt;
}

std::optional<ConfigMatch> match_lem6_at(const GraphView& g, Vertex v) {
  if (!g.active(v) || g.degree(v) != 3) return std::nullopt;
  if (!profile_is(profile_of(g, v), 1, 1, 1)) return std::nullopt;
  for (Vertex x : g.neighbors(v)) {
    SlotWalk walk = walk_thread_slot(g, v, x);
    if (walk.interior.size() != 1 || walk.anchor == -1 || walk.anchor == v) continue;
    Vertex w = walk.anchor;
    if (g.degree(w) != 3) continue;
    auto wp = profile_of(g, w);
    bool caseA = profile_is(wp, 1, 1, 1);
    bool caseB = profile_is(wp, 2, 1, 0);
    if (!caseA && !caseB) continue;
    if (caseB) {
      // The common thread must be w's 1-slot.
      bool common_is_w1 = false;
      for (Vertex u : g.neighbors(w)) {
        SlotWalk ww = walk_thread_slot(g, w, u);
        if (ww.interior.size() == 1 && ww.interior[0] == x) common_is_w1 = true;
      }
      if (!common_is_w1) continue;
    }
    ConfigMatch m;
    m.kind = ConfigKind::T3_111_weak;
    m.roles["v"] = {v};
    m.roles["w"] = {w};
    m.roles["x"] = {x};
    m.roles["case"] = {caseA ? 0 : 1};
    // v's other 1-thread interiors.
    std::vector<Vertex> vps;
    for (Vertex u : g.neighbors(v))
      if (u != x) vps.push_back(u);
    m.roles["vp"] = vps;
    if (caseA) {
      // w's other 1-thread interiors (excluding x).
      std::vector<Vertex> wqs;
      int shared = 0;
      for (Vertex u : g.neighbors(w)) {
        SlotWalk ww = walk_thread_slot(g, w, u);
        if (ww.interior.size() == 1 && ww.interior[0] == x) continue;
        wqs.push_back(u);
        if (ww.anchor == v) ++shared;
      }
      m.roles["wq"] = wqs;
      m.roles["shared"] = {1 + shared};  // common 1-threads including x's
    } else {
      // w's 2-thread interiors, ordered from w.
      for (Vertex u : g.neighbors(w)) {
        SlotWalk ww = walk_thread_slot(g, w, u);
        if (ww.interior.size() == 2) m.roles["wq"] = ww.interior;
      }
    }
    std::vector<Vertex> all{v, w, x};
    for (Vertex u : m.roles["vp"]) all.push_back(u);
    for (Vertex u : m.roles["wq"]) all.push_back(u);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    m.deletion_stages = {all};
    return m;
  }
  return std::nullopt;
}

ConfigMatch find_config_thm3(const GraphView& g) {
  auto m = try_find_config_thm3(g);
  if (!m)
    fail(ErrorKind::StructuralClaimViolation,
         "no Theorem-3 configuration found; the input violates mad < 22/9 "
         "(or the structural claim is violated)");
  recheck_config(g, *m);
  return *m;
}

namespace {

void require(bool cond, const std::string& what) {
  if (!cond)
    fail(ErrorKind::InternalInvariant, "config re-check failed: " + what);
}

// Verifies that consecutive face-walk vertices are joined by edges and that
// the rotation system really closes this walk into a face: the successor of
// directed edge (a,b) must be (b,c) for every cyclic triple a,b,c.
void recheck_face(const GraphView& g, const std::vector<Vertex>& walk) {
  int k = static_cast<int>(walk.size());
  for (int i = 0; i < k; ++i) {
    Vertex a = walk[i], b = walk[(i + 1) % k], c = walk[(i + 2) % k];
    require(g.has_edge(a, b), "face walk edge missing");
    std::vector<Vertex> rot = g.rotation_of(b);
    auto it = std::find(rot.begin(), rot.end(), a);
    require(it != rot.end(), "face walk vertex missing from rotation");
    Vertex succ = rot[(it - rot.begin() + 1) % rot.size()];
    require(succ == c, "face walk does not follow the rotation successor");
  }
}

}  // namespace

void recheck_config(const GraphView& g, const ConfigMatch& match) {
  switch (match.kind) {
    case ConfigKind::Deg2OrLess:
    case ConfigKind::T2i_2minus:
      require(g.degree(match.role1("v")) <= 2, "expected a 2^- vertex");
      break;
    case ConfigKind::T3_isolated_or_1vertex:
      require(g.degree(match.role1("v")) <= 1, "expected an isolated or 1-vertex");
      break;
    case ConfigKind::T1a_5vertex_three_3nbrs: {
      Vertex v = match.role1("v");
      require(g.degree(v) == 5, "expected a 5-vertex");
      auto ws = match.role("w");
      require(ws.size() == 3, "expected three 3-neighbors");
      for (Vertex w : ws) {
        require(g.has_edge(v, w), "w not adjacent to v");
        require(g.degree(w) == 3, "w not a 3-vertex");
      }
      break;
    }
    case ConfigKind::T1b_path: {
      auto path = match.role("path");
      require(path.size() >= 2 && path.size() <= 5, "path length out of range");
      require(g.degree(path.front()) == 3 && g.degree(path.back()) == 3,
              "path endpoints must be 3-vertices");
      for (size_t i = 1; i + 1 < path.size(); ++i)
        require(g.degree(path[i]) == 4, "path internals must be 4-vertices");
      for (size_t i = 0; i + 1 < path.size(); ++i)
        require(g.has_edge(path[i], path[i + 1]), "path edge missing");
      std::set<Vertex> distinct(path.begin(), path.end());
      require(distinct.size() == path.size(), "path vertices must be distinct");
      break;
    }
    case ConfigKind::T1c_4face_3444:
    case ConfigKind::T1d_4face_5with3: {
      auto face = match.role("face");
      require(face.size() == 4, "expected a 4-face");
      recheck_face(g, face);
      std::vector<int> degs;
      for (Vertex u : face) degs.push_back(g.degree(u));
      std::vector<int> sorted = degs;
      std::sort(sorted.begin(), sorted.end());
      if (match.kind == ConfigKind::T1c_4face_3444) {
        require(sorted == std::vector<int>({3, 4, 4, 4}), "degrees must be {3,4,4,4}");
      } else {
        require(sorted == std::vector<int>({3, 4, 4, 5}), "degrees must be {3,4,4,5}");
        Vertex five = match.role1("five_vertex");
        Vertex w = match.role1("w");
        require(g.degree(five) == 5, "five_vertex must have degree 5");
        require(g.has_edge(five, w) && g.degree(w) == 3, "w must be a 3-neighbor of the 5-vertex");
        require(std::find(face.begin(), face.end(), w) == face.end(), "w must be off the face");
      }
      require(g.degree(match.role1("three_vertex")) == 3, "three_vertex must have degree 3");
      break;
    }
    case ConfigKind::T2ii_3v_two_3nbrs: {
      Vertex v = match.role1("v");
      require(g.degree(v) == 3, "expected a 3-vertex");
      auto ws = match.role("w");
      require(ws.size() == 2, "expected two 3-neighbors");
      for (Vertex w : ws)
        require(g.has_edge(v, w) && g.degree(w) == 3, "w must be a 3-neighbor");
      break;
    }
    case ConfigKind::T2iii_4v_four_3nbrs: {
      Vertex v = match.role1("v");
      require(g.degree(v) == 4, "expected a 4-vertex");
      auto ws = match.role("w");
      require(ws.size() == 4, "expected four 3-neighbors");
      for (Vertex w : ws)
        require(g.has_edge(v, w) && g.degree(w) == 3, "w must be a 3-neighbor");
      break;
    }
    case ConfigKind::T3_3thread: {
      auto path = match.role("path");
      require(path.size() == 5, "3-thread path must have 5 entries");
      for (size_t i = 0; i + 1 < path.size(); ++i)
        require(g.has_edge(path[i], path[i + 1]), "thread edge missing");
      for (size_t i = 1; i <= 3; ++i)
        require(g.degree(path[i]) == 2, "thread interior must have degree 2");
      break;
    }
    case ConfigKind::T3_pendant_triple: {
      Vertex v = match.role1("v");
      require(g.degree(v) == 3, "expected a 3-vertex");
      auto ws = match.role("w");
      require(ws.size() == 3, "expected three 2-neighbors");
      for (Vertex w : ws)
        require(g.has_edge(v, w) && g.degree(w) == 2, "w must be a 2-neighbor");
      Vertex x1 = match.role1("x1");
      require(g.has_edge(ws[0], x1) && x1 != v, "x1 must be w1's outer neighbor");
      break;
    }
    case ConfigKind::T3_high_thread_vertex: {
      Vertex v = match.role1("v");
      int d = g.degree(v);
      require(d == 3 || d == 4, "expected a 3- or 4-vertex");
      int nearby = 0;
      for (Vertex u : g.neighbors(v))
        nearby += static_cast<int>(walk_thread_slot(g, v, u).interior.size());
      require(nearby >= (d == 3 ? 4 : 6), "not enough nearby 2-vertices");
      for (Vertex x : match.role("delete_2threads"))
        require(g.degree(x) == 2, "2-thread interior must have degree 2");
      break;
    }
    case ConfigKind::T3_321_adjacency: {
      Vertex v = match.role1("v");
      Vertex w = match.role1("w");
      require(g.has_edge(v, w), "v and w must be adjacent");
      require(g.degree(v) == 3 && g.degree(w) == 3, "v, w must be 3-vertices");
      require(profile_is(profile_of(g, v), 2, 1, 0), "v must be a 3_{2,1,0}-vertex");
      auto wp = profile_of(g, w);
      require(profile_is(wp, 1, 1, 0) || profile_is(wp, 2, 0, 0) || profile_is(wp, 2, 1, 0),
              "w must be 3_{1,1,0} / 3_{2,0,0} / 3_{2,1,0}");
      break;
    }
    case ConfigKind::T3_111_weak: {
      Vertex v = match.role1("v");
      Vertex w = match.role1("w");
      Vertex x = match.role1("x");
      require(g.degree(v) == 3 && g.degree(w) == 3 && g.degree(x) == 2,
              "weak pair degrees wrong");
      require(g.has_edge(v, x) && g.has_edge(x, w), "x must join v and w");
      require(profile_is(profile_of(g, v), 1, 1, 1), "v must be a 3_{1,1,1}-vertex");
      auto wp = profile_of(g, w);
      bool caseA = match.role("case")[0] == 0;
      if (caseA)
        require(profile_is(wp, 1, 1, 1), "w must be a 3_{1,1,1}-vertex");
      else
        require(profile_is(wp, 2, 1, 0), "w must be a 3_{2,1,0}-vertex");
      break;
    }
    case ConfigKind::HighDegreeBaseline:
      break;
  }
}

}  // namespace recolor
