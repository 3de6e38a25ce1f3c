#include "recolor/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "recolor/extend.hpp"
#include "recolor/formats.hpp"

namespace recolor {

StateSpace::StateSpace(const Graph& g, const ListAssignment& L, uint64_t state_cap)
    : g_(&g) {
  int n = g.vertex_count();
  lists_.resize(n);
  radix_.assign(n + 1, 1);
  uint64_t product = 1;
  for (Vertex v = 0; v < n; ++v) {
    const auto& set = L.at(v);
    lists_[v].assign(set.begin(), set.end());
    if (lists_[v].empty()) fail(ErrorKind::Validation, "empty list");
    if (product > state_cap / lists_[v].size() + 1)
      fail(ErrorKind::CapExceeded,
           "state space exceeds cap " + std::to_string(state_cap));
    product *= lists_[v].size();
    radix_[v + 1] = product;
  }
  if (product > state_cap)
    fail(ErrorKind::CapExceeded, "state space of " + std::to_string(product) +
                                     " assignments exceeds cap " + std::to_string(state_cap));

  std::vector<int> idx(n, 0);
  // Odometer over all assignments; codes come out in increasing order.
  while (true) {
    if (proper_encoded(idx)) states_.push_back(encode(idx));
    int pos = 0;
    while (pos < n && ++idx[pos] == static_cast<int>(lists_[pos].size())) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
}

uint64_t StateSpace::encode(const std::vector<int>& idx) const {
  uint64_t code = 0;
  for (size_t v = 0; v < idx.size(); ++v) code += radix_[v] * idx[v];
  return code;
}

bool StateSpace::proper_encoded(const std::vector<int>& idx) const {
  for (auto [u, v] : g_->edges())
    if (lists_[u][idx[u]] == lists_[v][idx[v]]) return false;
  return true;
}

std::optional<size_t> StateSpace::index_of(const Coloring& c) const {
  int n = g_->vertex_count();
  std::vector<int> idx(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!c.has(v)) return std::nullopt;
    auto it = std::lower_bound(lists_[v].begin(), lists_[v].end(), c.at(v));
    if (it == lists_[v].end() || *it != c.at(v)) return std::nullopt;
    idx[v] = static_cast<int>(it - lists_[v].begin());
  }
  uint64_t code = encode(idx);
  auto it = std::lower_bound(states_.begin(), states_.end(), code);
  if (it == states_.end() || *it != code) return std::nullopt;
  return static_cast<size_t>(it - states_.begin());
}

Coloring StateSpace::coloring_of(size_t index) const {
  uint64_t code = states_.at(index);
  std::map<Vertex, Color> colors;
  for (Vertex v = 0; v < g_->vertex_count(); ++v) {
    uint64_t digit = (code / radix_[v]) % lists_[v].size();
    colors[v] = lists_[v][digit];
  }
  return Coloring(std::move(colors));
}

std::vector<size_t> StateSpace::neighbors(size_t index) const {
  uint64_t code = states_.at(index);
  int n = g_->vertex_count();
  std::vector<int> idx(n);
  for (Vertex v = 0; v < n; ++v)
    idx[v] = static_cast<int>((code / radix_[v]) % lists_[v].size());

  std::vector<size_t> out;
  for (Vertex v = 0; v < n; ++v) {
    for (int j = 0; j < static_cast<int>(lists_[v].size()); ++j) {
      if (j == idx[v]) continue;
      Color c = lists_[v][j];
      bool ok = true;
      for (Vertex u : g_->neighbors(v))
        if (lists_[u][idx[u]] == c) { ok = false; break; }
      if (!ok) continue;
      uint64_t ncode = code + radix_[v] * (j - idx[v]);
      auto it = std::lower_bound(states_.begin(), states_.end(), ncode);
      if (it == states_.end() || *it != ncode)
        fail(ErrorKind::InternalInvariant, "proper neighbor state missing from space");
      out.push_back(static_cast<size_t>(it - states_.begin()));
    }
  }
  return out;
}

int StateSpace::adjacency_degree(size_t index) const {
  return static_cast<int>(neighbors(index).size());
}

std::optional<int> StateSpace::distance(const Coloring& from, const Coloring& to) const {
  auto a = index_of(from), b = index_of(to);
  if (!a || !b) fail(ErrorKind::Validation, "state is not a proper L-coloring of the graph");
  std::vector<int> dist(states_.size(), -1);
  std::deque<size_t> q{*a};
  dist[*a] = 0;
  while (!q.empty()) {
    size_t s = q.front();
    q.pop_front();
    if (s == *b) return dist[s];
    for (size_t t : neighbors(s))
      if (dist[t] == -1) {
        dist[t] = dist[s] + 1;
        q.push_back(t);
      }
  }
  return std::nullopt;
}

std::optional<int> StateSpace::diameter() const {
  if (states_.empty()) return std::nullopt;
  int best = 0;
  for (size_t s = 0; s < states_.size(); ++s) {
    std::vector<int> dist(states_.size(), -1);
    std::deque<size_t> q{s};
    dist[s] = 0;
    size_t reached = 1;
    while (!q.empty()) {
      size_t v = q.front();
      q.pop_front();
      best = std::max(best, dist[v]);
      for (size_t t : neighbors(v))
        if (dist[t] == -1) {
          dist[t] = dist[v] + 1;
          ++reached;
          q.push_back(t);
        }
    }
    if (reached != states_.size()) return std::nullopt;  // disconnected
  }
  return best;
}

bool budget_reachable(const Graph& g, const ListAssignment& L, const Coloring& alpha,
                      const Coloring& beta, int k, uint64_t state_cap) {
  StateSpace space(g, L, state_cap);
  auto a = space.index_of(alpha), b = space.index_of(beta);
  if (!a || !b) fail(ErrorKind::Validation, "alpha/beta not proper L-colorings");
  int n = g.vertex_count();

  // budget vector encoded in radix (k+1)
  uint64_t budget_radix = 1;
  for (int i = 0; i < n; ++i) budget_radix *= static_cast<uint64_t>(k + 1);

  uint64_t start = *a * budget_radix;  // full budgets = all k, encoded as 0 used
  auto used_of = [&](uint64_t code, int v) {
    uint64_t b2 = code % budget_radix;
    for (int i = 0; i < v; ++i) b2 /= (k + 1);
    return static_cast<int>(b2 % (k + 1));
  };

  std::map<uint64_t, char> seen;
  std::deque<uint64_t> q{start};
  seen[start] = 1;
  while (!q.empty()) {
    uint64_t code = q.front();
    q.pop_front();
    size_t state = code / budget_radix;
    if (state == *b) return true;
    Coloring cur = space.coloring_of(state);
    for (size_t t : space.neighbors(state)) {
      Coloring next = space.coloring_of(t);
      Vertex moved = -1;
      for (Vertex v = 0; v < n; ++v)
        if (cur.at(v) != next.at(v)) { moved = v; break; }
      if (used_of(code, moved) >= k) continue;
      uint64_t inc = 1;
      for (int i = 0; i < moved; ++i) inc *= (k + 1);
      uint64_t ncode = t * budget_radix + (code % budget_radix) + inc;
      if (!seen.count(ncode)) {
        seen[ncode] = 1;
        q.push_back(ncode);
      }
    }
  }
  return false;
}

namespace {

struct GadgetEnumerator {
  const Graph* g;
  ListAssignment L;
  Coloring alpha_full;
  Vertex center;
  std::vector<Vertex> movers;  // vertices the inner sequence may recolor
  int max_len;
  int s_cap = -1;              // cap on moves of movers.back() (two-thread check); -1 = none

  ExtensionCheckReport report;
  RecoloringSequence inner;
  std::map<Vertex, Color> cur;
  std::map<Vertex, int> mover_counts;

  // Invoked at every enumeration node with the current inner sequence.
  std::function<bool(GadgetEnumerator&)> check;

  bool run() {
    for (Vertex v : movers) cur[v] = alpha_full.at(v);
    std::map<Vertex, Color> inner_start = cur;
    inner.start = Coloring(inner_start);
    report.ok = true;
    dfs(0);
    return report.ok;
  }

  void dfs(int depth) {
    if (!report.ok) return;
    report.sequences_checked++;
    if (!check(*this)) return;
    if (depth == max_len) return;
    for (Vertex v : movers) {
      if (s_cap >= 0 && v == movers.back() && mover_counts[v] >= s_cap) continue;
      Color old = cur[v];
      for (Color c : L.at(v)) {
        if (c == old) continue;
        bool proper = true;
        for (Vertex u : g->neighbors(v)) {
          if (!cur.count(u)) continue;  // center not in the inner graph
          if (cur[u] == c) { proper = false; break; }
        }
        if (!proper) continue;
        inner.steps.push_back({v, c, 0});
        cur[v] = c;
        mover_counts[v]++;
        dfs(depth + 1);
        mover_counts[v]--;
        cur[v] = old;
        inner.steps.pop_back();
        if (!report.ok) return;
      }
    }
  }
};

std::string describe_failure(const GadgetEnumerator& e, const std::string& what) {
  std::ostringstream out;
  out << what << "; inner sequence:";
  for (const auto& s : e.inner.steps) out << " (" << s.vertex << "->" << s.new_color << ")";
  return out.str();
}

}  // namespace

ExtensionCheckReport exhaustive_key_lemma_check(int d, int list_size, int max_len) {
  if (d < 1 || d > 3) fail(ErrorKind::Validation, "gadget degree must be 1..3");
  int k = list_size;
  int s = k - d - 1;
  if (s < 1) fail(ErrorKind::BudgetInapplicable, "key lemma needs |L| >= d+2");

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= d; ++i) edges.push_back({0, i});
  Graph star(d + 1, edges);
  std::map<Vertex, std::set<Color>> lists;
  std::set<Color> full;
  for (Color c = 0; c < k; ++c) full.insert(c);
  for (Vertex v = 0; v <= d; ++v) lists[v] = full;

  GadgetEnumerator e;
  e.g = &star;
  e.L = ListAssignment(lists);
  std::map<Vertex, Color> alpha{{0, 0}};
  for (int i = 1; i <= d; ++i) alpha[i] = 1;
  e.alpha_full = Coloring(alpha);
  e.center = 0;
  for (int i = 1; i <= d; ++i) e.movers.push_back(i);
  e.max_len = max_len;

  GraphView view(star);
  e.check = [&, k, s](GadgetEnumerator& en) -> bool {
    int t = static_cast<int>(en.inner.steps.size());
    int cap = (t + s - 1) / s + 1;
    en.report.claimed_cap = std::max(en.report.claimed_cap, cap);

    // Candidate beta colors for the center: proper against the final leaf
    // colors.  Short sequences try them all; long ones use the adversarial
    // choice (forcing a final recoloring whenever possible), which maximizes
    // the center's count.
    std::vector<Color> betas;
    for (Color c : en.L.at(en.center)) {
      bool ok = true;
      for (Vertex u : star.neighbors(en.center))
        if (en.cur[u] == c) { ok = false; break; }
      if (ok) betas.push_back(c);
    }
    if (betas.empty())
      fail(ErrorKind::InternalInvariant, "no proper target color for the center");
    if (t > 4) {
      Color pick = -1;
      for (Color c : betas)
        if (c != en.alpha_full.at(en.center)) { pick = c; break; }
      if (pick == -1) pick = betas[0];
      betas = {pick};
    }

    for (Color bc : betas) {
      std::map<Vertex, Color> target = en.cur;
      target[en.center] = bc;
      Coloring beta{target};
      RecoloringSequence out =
          extend_key_lemma(view, en.L, en.center, en.inner, en.alpha_full, beta);
      ValidationReport rep = validate_sequence(view, en.L, out, beta, k + t);
      int count = out.count_of(en.center);
      en.report.worst_count = std::max(en.report.worst_count, count);
      if (!rep.valid || count > cap) {
        en.report.ok = false;
        en.report.counterexample = describe_failure(
            en, !rep.valid ? ("invalid extension: " + rep.reason)
                           : ("center recolored " + std::to_string(count) + " > cap " +
                              std::to_string(cap)));
        return false;
      }
    }
    return true;
  };

  e.run();
  return e.report;
}

ExtensionCheckReport exhaustive_two_thread_check(int list_size, int max_len, int s_cap) {
  int k = list_size;
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  std::map<Vertex, std::set<Color>> lists;
  std::set<Color> full;
  for (Color c = 0; c < k; ++c) full.insert(c);
  for (Vertex v = 0; v < 4; ++v) lists[v] = full;

  GadgetEnumerator e;
  e.g = &path;
  e.L = ListAssignment(lists);
  e.alpha_full = Coloring(std::map<Vertex, Color>{{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  e.movers = {0, 3};  // endpoints; interior {1,2} is the extension's job
  e.max_len = max_len;
  e.s_cap = s_cap;

  GraphView view(path);
  e.check = [&](GadgetEnumerator& en) -> bool {
    int s = en.mover_counts[3];
    int cap = s + 3;
    en.report.claimed_cap = std::max(en.report.claimed_cap, cap);
    for (Color b1 : en.L.at(1)) {
      if (b1 == en.cur[0]) continue;
      for (Color b2 : en.L.at(2)) {
        if (b2 == b1 || b2 == en.cur[3]) continue;
        std::map<Vertex, Color> target{{0, en.cur[0]}, {1, b1}, {2, b2}, {3, en.cur[3]}};
        Coloring beta{target};
        Thread thread;
        thread.end_a = 0;
        thread.end_b = 3;
        thread.interior = {1, 2};
        RecoloringSequence out =
            extend_two_thread(view, en.L, thread, en.inner, en.alpha_full, beta);
        ValidationReport rep = validate_sequence(view, en.L, out, beta, 100);
        int count = out.count_of(2);
        en.report.worst_count = std::max(en.report.worst_count, count);
        if (!rep.valid || count > cap) {
          en.report.ok = false;
          en.report.counterexample = describe_failure(
              en, !rep.valid ? ("invalid extension: " + rep.reason)
                             : ("v3 recolored " + std::to_string(count) + " > cap " +
                                std::to_string(cap)));
          return false;
        }
      }
    }
    return true;
  };

  e.run();
  return e.report;
}

}  // namespace recolor
