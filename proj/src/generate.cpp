#include "recolor/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "recolor/metrics.hpp"

namespace recolor {

namespace {

// Unbiased integer in [0, n) from the raw engine; std::uniform_int_distribution
// is implementation-defined and would break byte-identical outputs.
uint64_t rand_below(std::mt19937_64& rng, uint64_t n) {
  if (n == 0) fail(ErrorKind::InternalInvariant, "rand_below(0)");
  uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rand_below(rng, i)]);
}

// Rotation from straight-line coordinates: neighbors sorted clockwise.
void set_geometric_rotation(Graph& g, const std::vector<std::pair<double, double>>& xy) {
  std::vector<std::vector<Vertex>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> nbrs = g.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
      double aa = std::atan2(xy[a].second - xy[v].second, xy[a].first - xy[v].first);
      double ab = std::atan2(xy[b].second - xy[v].second, xy[b].first - xy[v].first);
      return aa > ab;
    });
    rot[v] = std::move(nbrs);
  }
  g.set_rotation(std::move(rot));
}

}  // namespace

Graph make_path(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  Graph g(n, edges);
  std::vector<std::pair<double, double>> xy(n);
  for (int i = 0; i < n; ++i) xy[i] = {double(i), 0.0};
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  Graph g(n, edges);
  std::vector<std::pair<double, double>> xy(n);
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * M_PI * i / n;
    xy[i] = {std::cos(a), std::sin(a)};
  }
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_grid(int rows, int cols) {
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows) edges.push_back({id(i, j), id(i + 1, j)});
    }
  Graph g(rows * cols, edges);
  std::vector<std::pair<double, double>> xy(rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) xy[id(i, j)] = {double(j), double(-i)};
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_hex_patch(int rows, int cols) {
  // Brick-wall drawing of a honeycomb patch: all horizontal edges, vertical
  // edges where row+col is even.  Triangle-free, girth 6 in the interior.
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows && (i + j) % 2 == 0) edges.push_back({id(i, j), id(i + 1, j)});
    }
  Graph g(rows * cols, edges);
  std::vector<std::pair<double, double>> xy(rows * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) xy[id(i, j)] = {double(j), double(-i)};
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_gridded_cube(int m) {
  if (m < 1) fail(ErrorKind::Parse, "gridded cube needs m >= 1");
  // Vertices: lattice points of {0..m}^3 with some coordinate on the hull.
  std::map<std::array<int, 3>, Vertex> index;
  std::vector<std::array<int, 3>> points;
  auto on_surface = [m](int x, int y, int z) {
    return x == 0 || x == m || y == 0 || y == m || z == 0 || z == m;
  };
  for (int x = 0; x <= m; ++x)
    for (int y = 0; y <= m; ++y)
      for (int z = 0; z <= m; ++z)
        if (on_surface(x, y, z)) {
          index[{x, y, z}] = static_cast<Vertex>(points.size());
          points.push_back({x, y, z});
        }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& p : points) {
    for (int axis = 0; axis < 3; ++axis) {
      std::array<int, 3> q = p;
      q[axis]++;
      auto it = index.find(q);
      if (it != index.end()) edges.push_back({index[p], it->second});
    }
  }
  Graph g(static_cast<int>(points.size()), edges);

  // Rotation: neighbors ordered by angle around the outward normal, using a
  // consistent right-handed tangent frame, so face tracing closes up on the
  // sphere.
  std::vector<std::vector<Vertex>> rot(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& p = points[v];
    double n[3] = {(p[0] == 0 ? -1.0 : p[0] == m ? 1.0 : 0.0),
                   (p[1] == 0 ? -1.0 : p[1] == m ? 1.0 : 0.0),
                   (p[2] == 0 ? -1.0 : p[2] == m ? 1.0 : 0.0)};
    double pick[3] = {1.0, 0.0, 0.0};
    if (std::abs(n[0]) > 0.8 && std::abs(n[1]) < 0.2 && std::abs(n[2]) < 0.2)
      pick[0] = 0.0, pick[1] = 1.0;
    double t1[3] = {n[1] * pick[2] - n[2] * pick[1], n[2] * pick[0] - n[0] * pick[2],
                    n[0] * pick[1] - n[1] * pick[0]};
    double t2[3] = {n[1] * t1[2] - n[2] * t1[1], n[2] * t1[0] - n[0] * t1[2],
                    n[0] * t1[1] - n[1] * t1[0]};
    std::vector<Vertex> nbrs = g.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
      const auto& pa = points[a];
      const auto& pb = points[b];
      double da[3] = {double(pa[0] - p[0]), double(pa[1] - p[1]), double(pa[2] - p[2])};
      double db[3] = {double(pb[0] - p[0]), double(pb[1] - p[1]), double(pb[2] - p[2])};
      double aa = std::atan2(da[0] * t2[0] + da[1] * t2[1] + da[2] * t2[2],
                             da[0] * t1[0] + da[1] * t1[1] + da[2] * t1[2]);
      double ab = std::atan2(db[0] * t2[0] + db[1] * t2[1] + db[2] * t2[2],
                             db[0] * t1[0] + db[1] * t1[1] + db[2] * t1[2]);
      return aa > ab;
    });
    rot[v] = std::move(nbrs);
  }
  g.set_rotation(std::move(rot));
  return g;
}

Graph make_k4() {
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::vector<std::pair<double, double>> xy{{0, 2}, {-2, -1}, {2, -1}, {0, 0}};
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_cube() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 4; ++i) {
    edges.push_back({i, (i + 1) % 4});
    edges.push_back({4 + i, 4 + (i + 1) % 4});
    edges.push_back({i, 4 + i});
  }
  Graph g(8, edges);
  std::vector<std::pair<double, double>> xy(8);
  double outer[4][2] = {{-2, 2}, {2, 2}, {2, -2}, {-2, -2}};
  for (int i = 0; i < 4; ++i) {
    xy[i] = {outer[i][0], outer[i][1]};
    xy[4 + i] = {outer[i][0] / 2, outer[i][1] / 2};
  }
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_petersen() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, 5 + i});
  }
  return Graph(10, edges);
}

Graph make_dodecahedron() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  // Outer pentagon 0..4, middle 10-cycle 5..14, inner pentagon 15..19.
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 10; ++i) edges.push_back({5 + i, 5 + (i + 1) % 10});
  for (int i = 0; i < 5; ++i) edges.push_back({15 + i, 15 + (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + 2 * i});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + 2 * i + 1, 15 + i});
  Graph g(20, edges);
  std::vector<std::pair<double, double>> xy(20);
  for (int i = 0; i < 5; ++i) {
    double a = M_PI / 2 + 2 * M_PI * i / 5;
    xy[i] = {4 * std::cos(a), 4 * std::sin(a)};
  }
  for (int i = 0; i < 10; ++i) {
    double a = M_PI / 2 + M_PI * i / 5;
    xy[5 + i] = {2.4 * std::cos(a), 2.4 * std::sin(a)};
  }
  for (int i = 0; i < 5; ++i) {
    double a = M_PI / 2 + M_PI / 5 + 2 * M_PI * i / 5;
    xy[15 + i] = {1.2 * std::cos(a), 1.2 * std::sin(a)};
  }
  set_geometric_rotation(g, xy);
  return g;
}

Graph make_random_cubic(int n, uint64_t seed) {
  if (n < 4 || n % 2 != 0)
    fail(ErrorKind::Parse, "a cubic graph needs an even vertex count >= 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Pairing model: three half-edges per vertex, random perfect matching.
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) stubs.push_back(v);
    shuffle_vec(stubs, rng);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (size_t i = 0; i < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) { ok = false; break; }
      auto key = std::minmax(u, v);
      if (!edges.insert({key.first, key.second}).second) { ok = false; break; }
    }
    if (!ok) continue;
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    return Graph(n, list);
  }
  fail(ErrorKind::InternalInvariant, "pairing model failed to produce a simple cubic graph");
}

Graph subdivide(const Graph& g, int t) {
  if (t < 0) fail(ErrorKind::Parse, "subdivision count must be nonnegative");
  if (t == 0) return g;
  int n = g.vertex_count();
  int next = n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  // first_of[e] / last_of[e]: the subdivision endpoints of original edge e.
  std::vector<std::array<Vertex, 2>> ends(g.edges().size());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edges()[e];
    Vertex prev = u;
    Vertex first = next;
    for (int i = 0; i < t; ++i) {
      edges.push_back({prev, next});
      prev = next;
      ++next;
    }
    edges.push_back({prev, v});
    ends[e] = {first, prev};
  }
  Graph out(next, edges);
  if (g.has_rotation()) {
    std::vector<std::vector<Vertex>> rot(next);
    auto sub_end_for = [&](Vertex at, Vertex toward) -> Vertex {
      for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (u == at && v == toward) return ends[e][0];
        if (v == at && u == toward) return ends[e][1];
      }
      fail(ErrorKind::InternalInvariant, "edge not found during subdivision");
    };
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.rotation()[v]) rot[v].push_back(sub_end_for(v, u));
    for (size_t e = 0; e < g.edges().size(); ++e) {
      auto [u, v] = g.edges()[e];
      Vertex prev = u;
      for (Vertex x = ends[e][0]; x <= ends[e][1]; ++x) {
        Vertex nxt = (x == ends[e][1]) ? v : x + 1;
        rot[x] = {prev, nxt};
        prev = x;
      }
    }
    out.set_rotation(std::move(rot));
  }
  return out;
}

namespace {

Graph make_random_sparse(int n, const Rat& bound, uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Random spanning tree, then extra edges while the density ceiling holds.
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  shuffle_vec(order, rng);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i < n; ++i) {
    Vertex u = order[i];
    Vertex v = order[rand_below(rng, i)];
    auto key = std::minmax(u, v);
    edges.insert({key.first, key.second});
  }
  int attempts = 2 * n;
  for (int a = 0; a < attempts; ++a) {
    Vertex u = static_cast<Vertex>(rand_below(rng, n));
    Vertex v = static_cast<Vertex>(rand_below(rng, n));
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (edges.count({key.first, key.second})) continue;
    edges.insert({key.first, key.second});
    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    Graph candidate(n, list);
    if (!(mad_exact(candidate).mad < bound)) edges.erase({key.first, key.second});
  }
  std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
  return Graph(n, list);
}

Graph make_random_graph(int n, int m, int maxdeg, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  std::vector<int> deg(n, 0);
  int guard = 50 * (m + 1) + 100;
  while (static_cast<int>(edges.size()) < m && guard-- > 0) {
    Vertex u = static_cast<Vertex>(rand_below(rng, n));
    Vertex v = static_cast<Vertex>(rand_below(rng, n));
    if (u == v) continue;
    if (maxdeg > 0 && (deg[u] >= maxdeg || deg[v] >= maxdeg)) continue;
    auto key = std::minmax(u, v);
    if (!edges.insert({key.first, key.second}).second) continue;
    deg[u]++;
    deg[v]++;
  }
  std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
  return Graph(n, list);
}

// Proper list-coloring by backtracking in smallest-last order with random
// tie-breaking; `avoid` bans one extra color per vertex (disjoint targets).
struct ColoringSearch {
  const Graph& g;
  const ListAssignment& L;
  const std::map<Vertex, Color>* avoid;
  std::mt19937_64& rng;
  std::vector<Color> result;
  long nodes = 0;

  bool run() {
    int n = g.vertex_count();
    result.assign(n, -1);
    // Smallest-last (degeneracy) order.
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < n; ++v)
        if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
      removed[best] = 1;
      order.push_back(best);
      for (Vertex u : g.neighbors(best))
        if (!removed[u]) deg[u]--;
    }
    std::reverse(order.begin(), order.end());
    return assign(order, 0);
  }

  bool assign(const std::vector<Vertex>& order, size_t idx) {
    if (++nodes > 2'000'000) return false;
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    std::vector<Color> choices(L.at(v).begin(), L.at(v).end());
    shuffle_vec(choices, rng);
    for (Color c : choices) {
      if (avoid && avoid->count(v) && avoid->at(v) == c) continue;
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (result[u] == c) { ok = false; break; }
      if (!ok) continue;
      result[v] = c;
      if (assign(order, idx + 1)) return true;
      result[v] = -1;
    }
    return false;
  }
};

Coloring find_coloring(const Graph& g, const ListAssignment& L,
                       const std::map<Vertex, Color>* avoid, std::mt19937_64& rng) {
  ColoringSearch search{g, L, avoid, rng};
  if (!search.run())
    fail(ErrorKind::Hypothesis, "could not construct a proper list-coloring (infeasible "
                                "generation parameters)");
  std::map<Vertex, Color> colors;
  for (Vertex v = 0; v < g.vertex_count(); ++v) colors[v] = search.result[v];
  return Coloring(std::move(colors));
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    return Rat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad rational '" + text + "'");
  }
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::Parse, "generator spec tokens are key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    try {
      if (key == "model") spec.model = value;
      else if (key == "n") spec.n = std::stoi(value);
      else if (key == "rows") spec.rows = std::stoi(value);
      else if (key == "cols") spec.cols = std::stoi(value);
      else if (key == "t") spec.t = std::stoi(value);
      else if (key == "base") spec.base = value;
      else if (key == "edges") spec.edges = std::stoi(value);
      else if (key == "maxdeg") spec.maxdeg = std::stoi(value);
      else if (key == "mad") spec.mad_bound = value;
      else if (key == "k") spec.k = std::stoi(value);
      else if (key == "lists") spec.lists = value;
      else if (key == "colors") spec.colors = value;
      else if (key == "seed") spec.seed = std::stoull(value);
      else fail(ErrorKind::Parse, "unknown generator key '" + key + "'");
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad value for generator key '" + key + "'");
    }
  }
  if (spec.model.empty()) fail(ErrorKind::Parse, "generator spec needs model=<name>");
  return spec;
}

Instance generate_instance(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);

  Graph g;
  if (spec.model == "path") g = make_path(spec.n);
  else if (spec.model == "cycle") g = make_cycle(spec.n);
  else if (spec.model == "grid") g = make_grid(spec.rows, spec.cols);
  else if (spec.model == "hex-patch") g = make_hex_patch(spec.rows, spec.cols);
  else if (spec.model == "gridded-cube") g = make_gridded_cube(spec.n);
  else if (spec.model == "k4") g = make_k4();
  else if (spec.model == "cube") g = make_cube();
  else if (spec.model == "petersen") g = make_petersen();
  else if (spec.model == "dodecahedron") g = make_dodecahedron();
  else if (spec.model == "subdivided") {
    Graph base;
    if (spec.base == "k4") base = make_k4();
    else if (spec.base == "cube") base = make_cube();
    else if (spec.base == "petersen") base = make_petersen();
    else if (spec.base == "dodecahedron") base = make_dodecahedron();
    else if (spec.base.rfind("cubic:", 0) == 0)
      base = make_random_cubic(std::stoi(spec.base.substr(6)), spec.seed + 17);
    else fail(ErrorKind::Parse, "unknown subdivision base '" + spec.base + "'");
    g = subdivide(base, spec.t);
  } else if (spec.model == "random-sparse") {
    g = make_random_sparse(spec.n, parse_rat(spec.mad_bound), spec.seed + 29);
  } else if (spec.model == "random") {
    g = make_random_graph(spec.n, spec.edges, spec.maxdeg, spec.seed + 41);
  } else {
    fail(ErrorKind::Parse, "unknown generator model '" + spec.model + "'");
  }

  Instance inst;
  inst.graph = std::move(g);
  int n = inst.graph.vertex_count();
  if (n == 0) fail(ErrorKind::Parse, "generated graph is empty");

  std::map<Vertex, std::set<Color>> lists;
  if (spec.lists == "shared") {
    std::set<Color> all;
    for (Color c = 0; c < spec.k; ++c) all.insert(c);
    for (Vertex v = 0; v < n; ++v) lists[v] = all;
  } else if (spec.lists == "random") {
    std::vector<Color> pool;
    for (Color c = 0; c < 2 * spec.k; ++c) pool.push_back(c);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Color> p = pool;
      shuffle_vec(p, rng);
      lists[v] = std::set<Color>(p.begin(), p.begin() + spec.k);
    }
  } else {
    fail(ErrorKind::Parse, "unknown lists mode '" + spec.lists + "'");
  }
  inst.lists = ListAssignment(std::move(lists));

  inst.alpha = find_coloring(inst.graph, inst.lists, nullptr, rng);
  if (spec.colors == "disjoint") {
    inst.beta = find_coloring(inst.graph, inst.lists, &inst.alpha.colors(), rng);
  } else if (spec.colors == "random" || spec.colors == "greedy") {
    inst.beta = find_coloring(inst.graph, inst.lists, nullptr, rng);
  } else {
    fail(ErrorKind::Parse, "unknown colors mode '" + spec.colors + "'");
  }
  return inst;
}

}  // namespace recolor
