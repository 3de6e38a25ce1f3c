#include "recolor/extend.hpp"

#include <algorithm>
#include <array>

namespace recolor {

namespace {

// Shared replay state for all extension procedures.  Colors live in a dense
// array indexed by host vertex id; every emitted or replayed step is checked
// against the host edges, so a scheduling bug surfaces as InternalInvariant
// instead of an invalid output sequence.
struct Builder {
  const GraphView& host;
  const ListAssignment& L;
  std::vector<Color> cur;
  RecoloringSequence out;
  int new_stage;

  Builder(const GraphView& h, const ListAssignment& lists, const Coloring& alpha,
          const RecoloringSequence& inner)
      : host(h), L(lists), cur(h.host().vertex_count(), -1) {
    for (Vertex v : h.vertices()) cur[v] = alpha.at(v);
    out.start = alpha;
    new_stage = 0;
    for (const auto& st : inner.steps) new_stage = std::max(new_stage, st.stage + 1);
  }

  Color color(Vertex v) const { return cur[v]; }

  Color pick(Vertex v, const std::vector<Color>& forbidden) const {
    for (Color c : L.at(v)) {
      if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end()) return c;
    }
    fail(ErrorKind::InternalInvariant,
         "no available color for vertex " + std::to_string(v) +
             " (availability property violated)");
  }

  void apply(Vertex v, Color c, int stage) {
    if (!host.active(v))
      fail(ErrorKind::InternalInvariant, "step on inactive vertex " + std::to_string(v));
    if (cur[v] == c)
      fail(ErrorKind::InternalInvariant, "no-op recoloring of vertex " + std::to_string(v));
    if (!L.contains(v, c))
      fail(ErrorKind::InternalInvariant, "color outside list at vertex " + std::to_string(v));
    for (Vertex u : host.neighbors(v))
      if (cur[u] == c)
        fail(ErrorKind::InternalInvariant, "conflict at edge " + std::to_string(v) + "-" +
                                               std::to_string(u) + " during extension");
    cur[v] = c;
    out.steps.push_back({v, c, stage});
  }

  void emit(Vertex v, Color c) { apply(v, c, new_stage); }
  void replay(const RecoloringStep& st) { apply(st.vertex, st.new_color, st.stage); }

  void fix(Vertex v, Color target) {
    if (cur[v] != target) emit(v, target);
  }

  // Moves the degree-2 thread vertex x out of the way: any list color not on
  // x or its two neighbors.
  void clear(Vertex x) {
    std::vector<Color> forbidden{cur[x]};
    for (Vertex u : host.neighbors(x)) forbidden.push_back(cur[u]);
    emit(x, pick(x, forbidden));
  }
};

void check_inner_contract(const GraphView& outer, const std::vector<Vertex>& added,
                          const RecoloringSequence& inner, const Coloring& alpha,
                          const Coloring& beta) {
  std::vector<char> is_added(outer.host().vertex_count(), 0);
  for (Vertex v : added) {
    if (!outer.active(v))
      fail(ErrorKind::ContractBreach, "extension vertex not active in the host graph");
    is_added[v] = 1;
  }
  std::map<Vertex, Color> state;
  for (Vertex v : outer.vertices()) {
    if (is_added[v]) continue;
    if (!inner.start.has(v))
      fail(ErrorKind::ContractBreach, "inner sequence misses vertex " + std::to_string(v));
    if (inner.start.at(v) != alpha.at(v))
      fail(ErrorKind::ContractBreach, "inner start disagrees with alpha");
    state[v] = inner.start.at(v);
  }
  for (const auto& st : inner.steps) {
    auto it = state.find(st.vertex);
    if (it == state.end())
      fail(ErrorKind::ContractBreach, "inner step on a vertex outside its domain");
    it->second = st.new_color;
  }
  for (auto& [v, c] : state)
    if (c != beta.at(v))
      fail(ErrorKind::ContractBreach,
           "inner sequence does not end at beta (vertex " + std::to_string(v) + ")");
}

int max_count(const RecoloringSequence& seq) {
  int best = 0;
  for (auto& [v, c] : seq.counts()) best = std::max(best, c);
  return best;
}

void assert_cap(const RecoloringSequence& seq, Vertex v, int cap, const char* what) {
  int c = seq.count_of(v);
  if (c > cap)
    fail(ErrorKind::InternalInvariant,
         std::string(what) + ": vertex " + std::to_string(v) + " recolored " +
             std::to_string(c) + " > " + std::to_string(cap) + " times");
}

}  // namespace

void assert_restriction(const GraphView& host, const RecoloringSequence& outer,
                        const RecoloringSequence& inner, const std::vector<Vertex>& added) {
  std::vector<char> keep(host.host().vertex_count(), 0);
  for (Vertex v : host.vertices()) keep[v] = 1;
  for (Vertex v : added) keep[v] = 0;
  std::vector<RecoloringStep> restricted = outer.steps_on(keep);
  bool same = restricted.size() == inner.steps.size();
  for (size_t i = 0; same && i < restricted.size(); ++i) same = restricted[i] == inner.steps[i];
  if (!same)
    fail(ErrorKind::InternalInvariant,
         "restriction property violated: outer sequence restricted to the inner domain "
         "differs from the inner sequence");
}

RecoloringSequence extend_key_lemma(const GraphView& host, const ListAssignment& L,
                                    Vertex v, const RecoloringSequence& inner,
                                    const Coloring& alpha, const Coloring& beta,
                                    ExtensionBudget* budget_out) {
  check_inner_contract(host, {v}, inner, alpha, beta);
  int d = host.degree(v);
  int s = static_cast<int>(L.at(v).size()) - d - 1;
  if (s < 1)
    fail(ErrorKind::BudgetInapplicable,
         "key lemma needs |L(v)| >= d(v)+2 (slack " + std::to_string(s) + ")");

  std::vector<Vertex> nbrs = host.neighbors(v);
  std::vector<char> is_nbr(host.host().vertex_count(), 0);
  for (Vertex u : nbrs) is_nbr[u] = 1;

  std::vector<size_t> stream_pos;
  std::vector<Color> stream_color;
  for (size_t i = 0; i < inner.steps.size(); ++i) {
    if (is_nbr[inner.steps[i].vertex]) {
      stream_pos.push_back(i);
      stream_color.push_back(inner.steps[i].new_color);
    }
  }
  int t = static_cast<int>(stream_pos.size());

  Builder b(host, L, alpha, inner);
  size_t j = 0;
  for (size_t i = 0; i < inner.steps.size(); ++i) {
    if (j < stream_pos.size() && stream_pos[j] == i && j % static_cast<size_t>(s) == 0) {
      // Next block of s neighborhood colors; dodge the whole block if v's
      // current color appears in it.
      std::vector<Color> block;
      for (size_t k = j; k < stream_pos.size() && k < j + static_cast<size_t>(s); ++k)
        block.push_back(stream_color[k]);
      if (std::find(block.begin(), block.end(), b.color(v)) != block.end()) {
        std::vector<Color> forbidden = block;
        for (Vertex u : nbrs) forbidden.push_back(b.color(u));
        b.emit(v, b.pick(v, forbidden));
      }
    }
    b.replay(inner.steps[i]);
    if (j < stream_pos.size() && stream_pos[j] == i) ++j;
  }
  b.fix(v, beta.at(v));

  ExtensionBudget budget{t, s, key_lemma_bound(t, s)};
  if (budget_out) *budget_out = budget;
  assert_cap(b.out, v, budget.bound, "key lemma cap");
  assert_restriction(host, b.out, inner, {v});
  return std::move(b.out);
}

namespace {

// One dodging side of a thread extension: `dodger` keeps itself off the
// colors the inner sequence is about to place on `anchor`.  `other` is the
// dodger's second neighbor inside the thread.  With use_block set the first
// anchor recoloring dodges three upcoming colors at once, clearing `other`
// out of the way when the block leaves only that escape color.
struct ThreadSide {
  Vertex anchor = -1;
  Vertex dodger = -1;
  Vertex other = -1;
  bool use_block = false;
  std::vector<Color> stream;
  int pos = 0;
};

void thread_dodge(Builder& b, const ThreadSide& side, Color next) {
  Vertex w = side.dodger;
  if (side.use_block && side.pos == 0) {
    std::vector<Color> block{b.color(side.anchor), next};
    if (side.stream.size() >= 2) block.push_back(side.stream[1]);
    if (std::find(block.begin(), block.end(), b.color(w)) == block.end()) return;
    std::vector<Color> candidates;
    for (Color c : b.L.at(w))
      if (std::find(block.begin(), block.end(), c) == block.end()) candidates.push_back(c);
    if (candidates.empty())
      fail(ErrorKind::InternalInvariant, "empty escape block for thread interior");
    if (candidates.size() == 1 && candidates[0] == b.color(side.other)) {
      b.clear(side.other);
    }
    for (Color c : candidates) {
      if (c != b.color(side.other)) {
        b.emit(w, c);
        return;
      }
    }
    fail(ErrorKind::InternalInvariant, "thread block dodge found no usable color");
  } else {
    if (b.color(w) != next) return;
    b.emit(w, b.pick(w, {b.color(side.anchor), next, b.color(side.other)}));
  }
}

struct ThreadCheck {
  Vertex v1, v4;
  std::vector<Vertex> interior;
};

void check_thread_shape(const GraphView& host, const Thread& thread, size_t k,
                        int min_list, const ListAssignment& L) {
  if (thread.interior.size() != k)
    fail(ErrorKind::ContractBreach, "thread has the wrong interior length");
  std::vector<Vertex> path;
  path.push_back(thread.end_a);
  for (Vertex x : thread.interior) path.push_back(x);
  path.push_back(thread.end_b);
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!host.has_edge(path[i], path[i + 1]))
      fail(ErrorKind::ContractBreach, "thread path edge missing in host");
  for (Vertex x : thread.interior) {
    if (host.degree(x) != 2)
      fail(ErrorKind::ContractBreach,
           "thread interior vertex " + std::to_string(x) + " has degree != 2");
    if (static_cast<int>(L.at(x).size()) < min_list)
      fail(ErrorKind::BudgetInapplicable, "list too small on thread interior");
  }
}

std::vector<Color> stream_on(const RecoloringSequence& inner, Vertex v) {
  std::vector<Color> out;
  for (const auto& st : inner.steps)
    if (st.vertex == v) out.push_back(st.new_color);
  return out;
}

}  // namespace

RecoloringSequence extend_two_thread(const GraphView& host, const ListAssignment& L,
                                     const Thread& thread, const RecoloringSequence& inner,
                                     const Coloring& alpha, const Coloring& beta) {
  check_thread_shape(host, thread, 2, 4, L);
  Vertex v1 = thread.end_a, v4 = thread.end_b;
  Vertex v2 = thread.interior[0], v3 = thread.interior[1];
  check_inner_contract(host, {v2, v3}, inner, alpha, beta);

  bool cycle = (v1 == v4);
  if (max_count(inner) > 14)
    fail(ErrorKind::BudgetInapplicable, "two-thread extension needs a 14-good inner sequence");
  std::vector<Color> a_stream = stream_on(inner, v1);
  std::vector<Color> b_stream = stream_on(inner, v4);
  int s = static_cast<int>(b_stream.size());
  if (s > 11)
    fail(ErrorKind::BudgetInapplicable,
         "two-thread extension needs the far endpoint recolored at most 11 times, got " +
             std::to_string(s));

  Builder b(host, L, alpha, inner);
  // v3 shields against v4's upcoming colors step by step; v2 shields against
  // v1's with a 3-color first block.  In the cycle case the anchor's next
  // color lands next to both interiors, so both sides run the plain
  // 2-lookahead rule (the block's forced clear of v3 could otherwise collide
  // with the color about to appear on the shared anchor).
  ThreadSide side_b{v4, v3, v2, false, b_stream, 0};
  ThreadSide side_a{v1, v2, v3, !cycle, a_stream, 0};

  for (const auto& st : inner.steps) {
    if (st.vertex == side_b.anchor) thread_dodge(b, side_b, st.new_color);
    if (st.vertex == side_a.anchor) thread_dodge(b, side_a, st.new_color);
    b.replay(st);
    if (st.vertex == side_b.anchor) side_b.pos++;
    if (st.vertex == side_a.anchor) side_a.pos++;
  }

  if (b.color(v2) != beta.at(v2)) {
    if (beta.at(v2) == b.color(v3)) b.clear(v3);
    b.emit(v2, beta.at(v2));
  }
  b.fix(v3, beta.at(v3));

  assert_cap(b.out, v3, s + 3, "two-thread cap (s+3)");
  assert_cap(b.out, v2, 14, "two-thread cap");
  assert_restriction(host, b.out, inner, {v2, v3});
  return std::move(b.out);
}

RecoloringSequence extend_three_thread(const GraphView& host, const ListAssignment& L,
                                       const Thread& thread, const RecoloringSequence& inner,
                                       const Coloring& alpha, const Coloring& beta) {
  check_thread_shape(host, thread, 3, 4, L);
  Vertex v1 = thread.end_a, v5 = thread.end_b;
  Vertex v2 = thread.interior[0], v3 = thread.interior[1], v4 = thread.interior[2];
  check_inner_contract(host, {v2, v3, v4}, inner, alpha, beta);
  if (max_count(inner) > 14)
    fail(ErrorKind::BudgetInapplicable, "three-thread extension needs a 14-good inner sequence");

  std::vector<Color> a_stream = stream_on(inner, v1);
  std::vector<Color> b_stream = stream_on(inner, v5);

  Builder b(host, L, alpha, inner);
  // The center v3 is not adjacent to either endpoint, so both sides may use
  // the 3-color first block, clearing v3 when it holds the only escape color.
  ThreadSide side_b{v5, v4, v3, true, b_stream, 0};
  ThreadSide side_a{v1, v2, v3, true, a_stream, 0};

  for (const auto& st : inner.steps) {
    if (st.vertex == side_b.anchor) thread_dodge(b, side_b, st.new_color);
    if (st.vertex == side_a.anchor) thread_dodge(b, side_a, st.new_color);
    b.replay(st);
    if (st.vertex == side_b.anchor) side_b.pos++;
    if (st.vertex == side_a.anchor) side_a.pos++;
  }

  // Endgame: bring v2 and v4 to their targets with at most one clearing of
  // v3, ordering the fixes so the clearing never faces four distinct
  // forbidden colors.
  Color c3 = b.color(v3);
  Color t2 = beta.at(v2), t4 = beta.at(v4);
  if (c3 != t2 && c3 != t4) {
    b.fix(v2, t2);
    b.fix(v4, t4);
  } else if (t2 == t4) {
    b.clear(v3);
    b.fix(v2, t2);
    b.fix(v4, t4);
  } else if (c3 == t2) {
    b.fix(v4, t4);
    b.clear(v3);
    b.fix(v2, t2);
  } else {  // c3 == t4
    b.fix(v2, t2);
    b.clear(v3);
    b.fix(v4, t4);
  }
  b.fix(v3, beta.at(v3));

  assert_cap(b.out, v3, 4, "three-thread center cap");
  assert_cap(b.out, v2, 14, "three-thread cap");
  assert_cap(b.out, v4, 14, "three-thread cap");
  assert_restriction(host, b.out, inner, {v2, v3, v4});
  return std::move(b.out);
}

RecoloringSequence extend_pendant_triple(const GraphView& host, const ListAssignment& L,
                                         Vertex v, Vertex w1, Vertex w2, Vertex w3,
                                         Vertex x1, const RecoloringSequence& inner,
                                         const Coloring& alpha, const Coloring& beta) {
  for (Vertex w : {w1, w2, w3}) {
    if (!host.has_edge(v, w) || host.degree(w) != 2)
      fail(ErrorKind::ContractBreach, "pendant-triple vertices do not match the host");
  }
  if (host.degree(v) != 3)
    fail(ErrorKind::ContractBreach, "pendant-triple center must be a 3-vertex");
  if (host.has_edge(w1, w2) || host.has_edge(w1, w3) || host.has_edge(w2, w3))
    fail(ErrorKind::Hypothesis, "degenerate pendant triple: adjacent 2-neighbors");

  auto other_neighbor = [&](Vertex w) {
    for (Vertex u : host.neighbors(w))
      if (u != v) return u;
    fail(ErrorKind::ContractBreach, "pendant vertex lacks an outer neighbor");
  };
  if (other_neighbor(w1) != x1)
    fail(ErrorKind::ContractBreach, "x1 is not the outer neighbor of w1");
  Vertex x2 = other_neighbor(w2), x3 = other_neighbor(w3);

  int x1_count = inner.count_of(x1);
  if (x1_count > 9)
    fail(ErrorKind::BudgetInapplicable,
         "pendant-triple extension needs x1 recolored at most 9 times, got " +
             std::to_string(x1_count));

  GraphView mid = host.without({w1});
  Thread t;
  t.end_a = x2;
  t.end_b = x3;
  t.interior = {w2, v, w3};
  RecoloringSequence seq_mid =
      extend_three_thread(mid, L, t, inner, alpha.restrict(mid), beta.restrict(mid));
  assert_cap(seq_mid, v, 4, "pendant-triple center cap");

  RecoloringSequence out = extend_key_lemma(host, L, w1, seq_mid, alpha, beta);
  assert_restriction(host, out, inner, {v, w1, w2, w3});
  return out;
}

namespace {

// Interleaved 6-list extension for a center v plus degree-3 neighbors W,
// deleted together.  Implements the block-dodging schedule: each w dodges
// three upcoming outside-stream colors per move for its first six stream
// entries (possibly pushing v aside when the only escape color sits on v),
// and afterwards two upcoming colors while avoiding all of N(w) including v.
RecoloringSequence extend_star_engine(const GraphView& host, const ListAssignment& L,
                                      Vertex v, const std::vector<Vertex>& W,
                                      const RecoloringSequence& inner, const Coloring& alpha,
                                      const Coloring& beta, int v_cap, int w_cap) {
  std::vector<Vertex> added{v};
  for (Vertex w : W) added.push_back(w);
  check_inner_contract(host, added, inner, alpha, beta);
  for (Vertex u : added)
    if (static_cast<int>(L.at(u).size()) < 6)
      fail(ErrorKind::BudgetInapplicable, "star extension needs 6-lists");
  for (Vertex w : W) {
    if (!host.has_edge(v, w) || host.degree(w) != 3)
      fail(ErrorKind::ContractBreach, "star extension: w must be a 3-neighbor of v");
  }
  if (max_count(inner) > 12)
    fail(ErrorKind::BudgetInapplicable, "star extension needs a 12-good inner sequence");

  std::vector<char> in_W(host.host().vertex_count(), 0);
  for (Vertex w : W) in_W[w] = 1;

  // Outside neighborhood streams.
  struct WState {
    Vertex w;
    std::vector<char> in_S;
    std::vector<Color> stream;
    int next = 0;
    int early_moves = 0;
  };
  std::vector<WState> ws;
  for (Vertex w : W) {
    WState state;
    state.w = w;
    state.in_S.assign(host.host().vertex_count(), 0);
    for (Vertex u : host.neighbors(w))
      if (u != v && !in_W[u]) state.in_S[u] = 1;
    for (const auto& st : inner.steps)
      if (state.in_S[st.vertex]) state.stream.push_back(st.new_color);
    ws.push_back(std::move(state));
  }

  std::vector<char> in_X(host.host().vertex_count(), 0);
  std::vector<Vertex> X;
  for (Vertex u : host.neighbors(v))
    if (!in_W[u]) {
      in_X[u] = 1;
      X.push_back(u);
    }
  std::vector<Color> x_stream;
  for (const auto& st : inner.steps)
    if (in_X[st.vertex]) x_stream.push_back(st.new_color);
  size_t x_next = 0;

  Builder b(host, L, alpha, inner);

  auto dodge_v = [&](std::vector<Color> forbidden) {
    forbidden.push_back(b.color(v));
    for (Vertex u : host.neighbors(v)) forbidden.push_back(b.color(u));
    if (x_next < x_stream.size()) forbidden.push_back(x_stream[x_next]);
    b.emit(v, b.pick(v, forbidden));
  };

  for (const auto& st : inner.steps) {
    if (in_X[st.vertex]) {
      if (b.color(v) == st.new_color) {
        std::vector<Color> extra;
        if (x_next + 1 < x_stream.size()) extra.push_back(x_stream[x_next + 1]);
        dodge_v(extra);
      }
    }
    for (WState& state : ws) {
      if (!state.in_S[st.vertex]) continue;
      int j = state.next;
      if (b.color(state.w) == st.new_color) {
        if (j < 6) {
          std::vector<Color> forbidden;
          for (int k = j; k < j + 3 && k < static_cast<int>(state.stream.size()); ++k)
            forbidden.push_back(state.stream[k]);
          for (Vertex u : host.neighbors(state.w))
            if (u != v) forbidden.push_back(b.color(u));
          std::vector<Color> candidates;
          for (Color c : L.at(state.w))
            if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end())
              candidates.push_back(c);
          if (candidates.empty())
            fail(ErrorKind::InternalInvariant, "star extension: empty early escape set");
          if (candidates.size() == 1 && candidates[0] == b.color(v)) dodge_v({});
          Color chosen = -1;
          for (Color c : candidates)
            if (c != b.color(v)) { chosen = c; break; }
          if (chosen == -1)
            fail(ErrorKind::InternalInvariant, "star extension: early dodge has no color");
          b.emit(state.w, chosen);
          state.early_moves++;
          if (state.early_moves > 2)
            fail(ErrorKind::InternalInvariant, "star extension: more than two early moves");
        } else {
          std::vector<Color> forbidden{st.new_color};
          if (j + 1 < static_cast<int>(state.stream.size()))
            forbidden.push_back(state.stream[j + 1]);
          for (Vertex u : host.neighbors(state.w)) forbidden.push_back(b.color(u));
          b.emit(state.w, b.pick(state.w, forbidden));
        }
      }
    }
    b.replay(st);
    if (in_X[st.vertex]) ++x_next;
    for (WState& state : ws)
      if (state.in_S[st.vertex]) ++state.next;
  }

  // Endgame.  Fix every w whose target is not blocked; break blocking cycles
  // among the W vertices; a single move of v then releases all w's whose
  // target is v's current color (they all want exactly that color).
  auto fixed = [&](Vertex w) { return b.color(w) == beta.at(w); };
  auto blocked_by = [&](Vertex w) -> Vertex {
    for (Vertex u : host.neighbors(w))
      if (b.color(u) == beta.at(w)) return u;
    return -1;
  };
  int guard = 0;
  while (true) {
    if (++guard > 4 * static_cast<int>(W.size()) + 8)
      fail(ErrorKind::InternalInvariant, "star extension endgame did not converge");
    bool progress = false;
    bool all_done = true;
    for (Vertex w : W) {
      if (fixed(w)) continue;
      if (blocked_by(w) == -1) {
        b.emit(w, beta.at(w));
        progress = true;
      } else {
        all_done = false;
      }
    }
    if (all_done && !progress) break;
    if (progress) continue;
    // Stalled: break the first w that blocks another unfixed w.
    Vertex breaker = -1;
    for (Vertex w : W) {
      if (fixed(w)) continue;
      for (Vertex u : W) {
        if (u == w || fixed(u)) continue;
        if (host.has_edge(w, u) && b.color(w) == beta.at(u)) breaker = w;
      }
      if (breaker != -1) break;
    }
    if (breaker == -1) break;  // only v blocks the rest
    std::vector<Color> forbidden{b.color(breaker)};
    for (Vertex u : host.neighbors(breaker)) forbidden.push_back(b.color(u));
    b.emit(breaker, b.pick(breaker, forbidden));
  }
  bool any_left = false;
  for (Vertex w : W)
    if (!fixed(w)) any_left = true;
  if (any_left) {
    for (Vertex w : W)
      if (!fixed(w) && beta.at(w) != b.color(v))
        fail(ErrorKind::InternalInvariant, "star extension: unfixed w not blocked by v");
    dodge_v({});
    for (Vertex w : W) b.fix(w, beta.at(w));
  }
  b.fix(v, beta.at(v));

  assert_cap(b.out, v, v_cap, "star extension center cap");
  for (Vertex w : W) assert_cap(b.out, w, w_cap, "star extension w cap");
  assert_restriction(host, b.out, inner, added);
  return std::move(b.out);
}

}  // namespace

RecoloringSequence extend_deg3_two_deg3_neighbors(const GraphView& host,
                                                  const ListAssignment& L, Vertex v,
                                                  Vertex w1, Vertex w2,
                                                  const RecoloringSequence& inner,
                                                  const Coloring& alpha,
                                                  const Coloring& beta) {
  if (host.degree(v) != 3)
    fail(ErrorKind::ContractBreach, "center must be a 3-vertex");
  return extend_star_engine(host, L, v, {w1, w2}, inner, alpha, beta, 12, 12);
}

RecoloringSequence extend_deg4_four_deg3_neighbors(const GraphView& host,
                                                   const ListAssignment& L, Vertex v,
                                                   const std::array<Vertex, 4>& w,
                                                   const RecoloringSequence& inner,
                                                   const Coloring& alpha,
                                                   const Coloring& beta) {
  if (host.degree(v) != 4)
    fail(ErrorKind::ContractBreach, "center must be a 4-vertex");
  return extend_star_engine(host, L, v, {w[0], w[1], w[2], w[3]}, inner, alpha, beta, 10, 12);
}

}  // namespace recolor
