#include "recolor/formats.hpp"

#include <sstream>
#include <vector>

namespace recolor {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& why) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + why);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  int n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::pair<int, std::pair<Vertex, Vertex>>> edge_lines;
  std::map<Vertex, std::vector<Vertex>> rot;
  std::map<Vertex, std::set<Color>> lists;
  std::map<Vertex, Color> alpha, beta;

  auto check_vertex = [&](int v, int ln) {
    if (n < 0) parse_fail(ln, "a 'graph <n>' line must come first");
    if (v < 0 || v >= n) parse_fail(ln, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "graph") {
      if (toks.size() != 2) parse_fail(lineno, "usage: graph <n>");
      if (n >= 0) parse_fail(lineno, "duplicate graph line");
      n = parse_int(toks[1], lineno);
      if (n < 0) parse_fail(lineno, "vertex count must be nonnegative");
    } else if (kw == "edge") {
      if (toks.size() != 3) parse_fail(lineno, "usage: edge <u> <v>");
      int u = parse_int(toks[1], lineno), v = parse_int(toks[2], lineno);
      check_vertex(u, lineno);
      check_vertex(v, lineno);
      if (u == v) parse_fail(lineno, "self-loop at vertex " + std::to_string(u));
      edge_lines.push_back({lineno, {u, v}});
      edges.push_back({u, v});
    } else if (kw == "rot") {
      if (toks.size() < 2) parse_fail(lineno, "usage: rot <v>: <n1> ...");
      std::string vt = toks[1];
      if (!vt.empty() && vt.back() == ':') vt.pop_back();
      int v = parse_int(vt, lineno);
      check_vertex(v, lineno);
      if (rot.count(v)) parse_fail(lineno, "duplicate rot line for vertex " + std::to_string(v));
      std::vector<Vertex> order;
      for (size_t i = 2; i < toks.size(); ++i) {
        int u = parse_int(toks[i], lineno);
        check_vertex(u, lineno);
        order.push_back(u);
      }
      rot[v] = std::move(order);
    } else if (kw == "list") {
      if (toks.size() < 3) parse_fail(lineno, "usage: list <v>: <c1> ...");
      std::string vt = toks[1];
      if (!vt.empty() && vt.back() == ':') vt.pop_back();
      int v = parse_int(vt, lineno);
      check_vertex(v, lineno);
      if (lists.count(v)) parse_fail(lineno, "duplicate list for vertex " + std::to_string(v));
      std::set<Color> cs;
      for (size_t i = 2; i < toks.size(); ++i) {
        int c = parse_int(toks[i], lineno);
        if (c < 0) parse_fail(lineno, "colors are nonnegative integers");
        cs.insert(c);
      }
      lists[v] = std::move(cs);
    } else if (kw == "alpha" || kw == "beta") {
      if (toks.size() != 3) parse_fail(lineno, "usage: " + kw + " <v> <c>");
      int v = parse_int(toks[1], lineno), c = parse_int(toks[2], lineno);
      check_vertex(v, lineno);
      auto& target = (kw == "alpha") ? alpha : beta;
      if (target.count(v)) parse_fail(lineno, "duplicate " + kw + " entry for vertex " + std::to_string(v));
      target[v] = c;
    } else {
      parse_fail(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (n < 0) fail(ErrorKind::Parse, "missing 'graph <n>' line");

  Instance inst;
  try {
    inst.graph = Graph(n, edges);
  } catch (const Error& e) {
    // Re-attach a line number for the duplicate-edge case.
    for (size_t i = 0; i < edge_lines.size(); ++i)
      for (size_t j = i + 1; j < edge_lines.size(); ++j) {
        auto a = std::minmax(edge_lines[i].second.first, edge_lines[i].second.second);
        auto b = std::minmax(edge_lines[j].second.first, edge_lines[j].second.second);
        if (a == b) parse_fail(edge_lines[j].first, "duplicate edge");
      }
    throw;
  }

  if (!rot.empty()) {
    if (static_cast<int>(rot.size()) != n)
      fail(ErrorKind::Parse, "rotation lines must cover all vertices or none (" +
                                 std::to_string(rot.size()) + " of " + std::to_string(n) + ")");
    std::vector<std::vector<Vertex>> rotation(n);
    for (auto& [v, order] : rot) rotation[v] = std::move(order);
    inst.graph.set_rotation(std::move(rotation));
  }

  for (Vertex v = 0; v < n; ++v)
    if (!lists.count(v))
      fail(ErrorKind::Parse, "vertex " + std::to_string(v) + " has no list");
  inst.lists = ListAssignment(std::move(lists));

  auto check_coloring = [&](const std::string& name, const std::map<Vertex, Color>& cmap) {
    for (Vertex v = 0; v < n; ++v)
      if (!cmap.count(v))
        fail(ErrorKind::Parse, name + " misses vertex " + std::to_string(v));
    Coloring c{cmap};
    for (Vertex v = 0; v < n; ++v)
      if (!inst.lists.contains(v, c.at(v)))
        fail(ErrorKind::Parse, name + "(" + std::to_string(v) + ") = " +
                                   std::to_string(c.at(v)) + " is not in the vertex list");
    for (auto [u, v] : inst.graph.edges())
      if (c.at(u) == c.at(v))
        fail(ErrorKind::Parse, name + " is improper on edge " + std::to_string(u) +
                                   " " + std::to_string(v));
  };
  check_coloring("alpha", alpha);
  check_coloring("beta", beta);
  inst.alpha = Coloring(alpha);
  inst.beta = Coloring(beta);
  return inst;
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  int n = inst.graph.vertex_count();
  out << "graph " << n << "\n";
  for (auto [u, v] : inst.graph.edges()) out << "edge " << u << " " << v << "\n";
  if (inst.graph.has_rotation()) {
    for (Vertex v = 0; v < n; ++v) {
      out << "rot " << v << ":";
      for (Vertex u : inst.graph.rotation()[v]) out << " " << u;
      out << "\n";
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    out << "list " << v << ":";
    for (Color c : inst.lists.at(v)) out << " " << c;
    out << "\n";
  }
  for (Vertex v = 0; v < n; ++v) out << "alpha " << v << " " << inst.alpha.at(v) << "\n";
  for (Vertex v = 0; v < n; ++v) out << "beta " << v << " " << inst.beta.at(v) << "\n";
  return out.str();
}

std::string emit_sequence(const RecoloringSequence& seq) {
  std::ostringstream out;
  out << "steps " << seq.steps.size() << "\n";
  for (const auto& s : seq.steps) out << "recolor " << s.vertex << " " << s.new_color << "\n";
  return out.str();
}

RecoloringSequence parse_sequence(const std::string& text, const Coloring& start) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  RecoloringSequence seq;
  seq.start = start;
  long declared = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "steps") {
      if (toks.size() != 2) parse_fail(lineno, "usage: steps <m>");
      if (declared >= 0) parse_fail(lineno, "duplicate steps header");
      declared = parse_int(toks[1], lineno);
    } else if (toks[0] == "recolor") {
      if (toks.size() != 3) parse_fail(lineno, "usage: recolor <v> <c>");
      RecoloringStep st;
      st.vertex = parse_int(toks[1], lineno);
      st.new_color = parse_int(toks[2], lineno);
      seq.steps.push_back(st);
    } else {
      parse_fail(lineno, "unknown keyword '" + toks[0] + "'");
    }
  }
  if (declared < 0) fail(ErrorKind::Parse, "missing 'steps <m>' header");
  if (declared != static_cast<long>(seq.steps.size()))
    fail(ErrorKind::Parse, "steps header declares " + std::to_string(declared) +
                               " but " + std::to_string(seq.steps.size()) + " given");
  return seq;
}

}  // namespace recolor
