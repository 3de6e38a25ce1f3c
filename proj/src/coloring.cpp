#include "recolor/coloring.hpp"

#include <algorithm>

namespace recolor {

const std::set<Color>& ListAssignment::at(Vertex v) const {
  auto it = lists_.find(v);
  if (it == lists_.end())
    fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " has no list");
  return it->second;
}

bool ListAssignment::contains(Vertex v, Color c) const {
  auto it = lists_.find(v);
  return it != lists_.end() && it->second.count(c) != 0;
}

std::optional<int> ListAssignment::min_size(const std::vector<Vertex>& vs) const {
  std::optional<int> best;
  for (Vertex v : vs) {
    int sz = static_cast<int>(at(v).size());
    if (!best || sz < *best) best = sz;
  }
  return best;
}

bool ListAssignment::is_k_assignment(int k, const std::vector<Vertex>& vs) const {
  for (Vertex v : vs)
    if (!has(v) || static_cast<int>(at(v).size()) != k) return false;
  return true;
}

Color Coloring::at(Vertex v) const {
  auto it = colors_.find(v);
  if (it == colors_.end())
    fail(ErrorKind::Validation, "vertex " + std::to_string(v) + " is uncolored");
  return it->second;
}

Coloring Coloring::restrict(const std::vector<Vertex>& s) const {
  std::map<Vertex, Color> out;
  for (Vertex v : s) out[v] = at(v);
  return Coloring(std::move(out));
}

Coloring Coloring::restrict(const GraphView& view) const {
  return restrict(view.vertices());
}

bool is_proper(const GraphView& g, const ListAssignment& L, const Coloring& c) {
  for (Vertex v : g.vertices()) {
    if (!c.has(v))
      fail(ErrorKind::Validation,
           "coloring is partial: vertex " + std::to_string(v) + " missing");
    if (!L.contains(v, c.at(v))) return false;
  }
  for (auto [u, v] : g.host().edges()) {
    if (!g.active(u) || !g.active(v)) continue;
    if (c.at(u) == c.at(v)) return false;
  }
  return true;
}

bool is_proper(const Graph& g, const ListAssignment& L, const Coloring& c) {
  return is_proper(GraphView(g), L, c);
}

std::map<Vertex, int> RecoloringSequence::counts() const {
  std::map<Vertex, int> out;
  for (const auto& s : steps) out[s.vertex]++;
  return out;
}

int RecoloringSequence::count_of(Vertex v) const {
  int c = 0;
  for (const auto& s : steps) c += (s.vertex == v) ? 1 : 0;
  return c;
}

std::vector<RecoloringStep> RecoloringSequence::steps_on(
    const std::vector<char>& keep) const {
  std::vector<RecoloringStep> out;
  for (const auto& s : steps)
    if (keep[s.vertex]) out.push_back(s);
  return out;
}

ValidationReport validate_sequence(const GraphView& g, const ListAssignment& L,
                                   const RecoloringSequence& seq,
                                   const Coloring& target, int bound) {
  ValidationReport rep;
  auto reject = [&](size_t idx, const std::string& why) {
    rep.valid = false;
    rep.violation_index = idx;
    rep.reason = why;
    return rep;
  };

  std::map<Vertex, Color> cur = seq.start.colors();
  for (Vertex v : g.vertices())
    if (!cur.count(v)) return reject(-1, "start coloring misses vertex " + std::to_string(v));
  {
    Coloring start_check(cur);
    if (!is_proper(g, L, start_check)) return reject(-1, "start coloring is not a proper L-coloring");
  }

  for (size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& st = seq.steps[i];
    Vertex v = st.vertex;
    if (v < 0 || v >= g.host().vertex_count() || !g.active(v))
      return reject(i, "step recolors a vertex outside the graph");
    if (!L.contains(v, st.new_color))
      return reject(i, "step assigns a color outside the vertex list");
    if (cur[v] == st.new_color)
      return reject(i, "no-op step: vertex already has that color");
    for (Vertex u : g.neighbors(v))
      if (cur[u] == st.new_color)
        return reject(i, "step creates an edge conflict with vertex " + std::to_string(u));
    cur[v] = st.new_color;
    rep.counts[v]++;
  }

  for (Vertex v : g.vertices()) {
    if (!target.has(v)) return reject(-1, "target misses vertex " + std::to_string(v));
    if (cur[v] != target.at(v))
      return reject(-1, "final coloring differs from target at vertex " + std::to_string(v));
  }

  for (auto [v, c] : rep.counts) {
    if (c > rep.max_count) {
      rep.max_count = c;
      rep.argmax_vertex = v;
    }
  }
  if (rep.max_count > bound)
    return reject(-1, "vertex " + std::to_string(rep.argmax_vertex) + " recolored " +
                          std::to_string(rep.max_count) + " > " + std::to_string(bound) +
                          " times");
  rep.valid = true;
  rep.reason = "ok";
  return rep;
}

ValidationReport validate_sequence(const Graph& g, const ListAssignment& L,
                                   const RecoloringSequence& seq,
                                   const Coloring& target, int bound) {
  return validate_sequence(GraphView(g), L, seq, target, bound);
}

}  // namespace recolor
