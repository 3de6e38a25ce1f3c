#include "recolor.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "recolor/discharge.hpp"
#include "recolor/formats.hpp"
#include "recolor/generate.hpp"
#include "recolor/metrics.hpp"
#include "recolor/oracle.hpp"
#include "recolor/solve.hpp"

using namespace recolor;

struct rc_instance {
  Instance inst;
};

struct rc_sequence {
  RecoloringSequence seq;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

rc_status status_of(const Error& e) {
  return e.kind() == ErrorKind::Parse ? RC_USAGE : RC_INVALID;
}

template <typename F>
rc_status guarded(char** err, F&& body) {
  if (err) *err = nullptr;
  try {
    return body();
  } catch (const Error& e) {
    set_err(err, std::string(error_kind_name(e.kind())) + ": " + e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_err(err, std::string("error: ") + e.what());
    return RC_INVALID;
  }
}

uint64_t effective_state_cap(int64_t requested) {
  if (requested > 0) return static_cast<uint64_t>(requested);
  if (const char* env = std::getenv("RECOLOR_STATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultStateCap;
}

}  // namespace

extern "C" {

const char* rc_version(void) { return "recolor 1.0.0"; }

void rc_string_free(char* s) { std::free(s); }

rc_status rc_instance_parse(const char* text, rc_instance** out, char** err) {
  *out = nullptr;
  return guarded(err, [&]() {
    auto* handle = new rc_instance{parse_instance(text ? text : "")};
    *out = handle;
    return RC_OK;
  });
}

void rc_instance_free(rc_instance* inst) { delete inst; }

char* rc_instance_emit(const rc_instance* inst) {
  return dup_string(emit_instance(inst->inst));
}

rc_status rc_generate(const char* spec, uint64_t seed, char** instance_text, char** err) {
  *instance_text = nullptr;
  return guarded(err, [&]() {
    GenSpec gs = parse_gen_spec(spec ? spec : "");
    gs.seed = seed;
    Instance inst = generate_instance(gs);
    *instance_text = dup_string(emit_instance(inst));
    return RC_OK;
  });
}

rc_status rc_solve(const rc_instance* inst, int theorem, rc_sequence** out, char** err) {
  *out = nullptr;
  return guarded(err, [&]() {
    RecoloringSequence seq = solve_theorem(theorem, inst->inst.graph, inst->inst.lists,
                                           inst->inst.alpha, inst->inst.beta);
    *out = new rc_sequence{std::move(seq)};
    return RC_OK;
  });
}

void rc_sequence_free(rc_sequence* seq) { delete seq; }

char* rc_sequence_emit(const rc_sequence* seq) { return dup_string(emit_sequence(seq->seq)); }

rc_status rc_sequence_parse(const rc_instance* inst, const char* text, rc_sequence** out,
                            char** err) {
  *out = nullptr;
  return guarded(err, [&]() {
    RecoloringSequence seq = parse_sequence(text ? text : "", inst->inst.alpha);
    *out = new rc_sequence{std::move(seq)};
    return RC_OK;
  });
}

rc_status rc_verify(const rc_instance* inst, const rc_sequence* seq, int bound,
                    char** report) {
  if (report) *report = nullptr;
  try {
    ValidationReport rep = validate_sequence(inst->inst.graph, inst->inst.lists, seq->seq,
                                             inst->inst.beta, bound);
    std::ostringstream out;
    if (rep.valid) {
      out << "valid: max " << rep.max_count << " recolorings";
      if (rep.argmax_vertex >= 0) out << " (vertex " << rep.argmax_vertex << ")";
    } else {
      out << "invalid: " << rep.reason;
      if (rep.violation_index != static_cast<size_t>(-1))
        out << " (step " << rep.violation_index << ")";
    }
    if (report) *report = dup_string(out.str());
    return rep.valid ? RC_OK : RC_INVALID;
  } catch (const Error& e) {
    if (report) *report = dup_string(std::string(error_kind_name(e.kind())) + ": " + e.what());
    return status_of(e);
  }
}

rc_status rc_mad(const rc_instance* inst, int enumerate, char** result, char** err) {
  *result = nullptr;
  return guarded(err, [&]() {
    DensityReport rep = enumerate ? mad_by_enumeration(inst->inst.graph)
                                  : mad_exact(inst->inst.graph);
    std::ostringstream out;
    out << rat_to_string(rep.mad) << "\nwitness:";
    for (Vertex v : rep.witness) out << " " << v;
    out << "\n";
    *result = dup_string(out.str());
    return RC_OK;
  });
}

rc_status rc_girth(const rc_instance* inst, char** result, char** err) {
  *result = nullptr;
  return guarded(err, [&]() {
    int gv = girth(inst->inst.graph);
    *result = dup_string(gv == kGirthInfinite ? "infinity" : std::to_string(gv));
    return RC_OK;
  });
}

rc_status rc_mad_lemma(const rc_instance* inst, char** result, char** err) {
  *result = nullptr;
  return guarded(err, [&]() {
    MadLemmaReport rep = check_mad_lemma(inst->inst.graph);
    std::ostringstream out;
    out << "mad " << rat_to_string(rep.mad) << " < " << rat_to_string(rep.bound)
        << " (girth "
        << (rep.girth_value == kGirthInfinite ? std::string("infinity")
                                              : std::to_string(rep.girth_value))
        << ")";
    *result = dup_string(out.str());
    return RC_OK;
  });
}

rc_status rc_find_config(const rc_instance* inst, int theorem, char** result, char** err) {
  *result = nullptr;
  return guarded(err, [&]() {
    GraphView view(inst->inst.graph);
    ConfigMatch m;
    if (theorem == 1) m = find_config_thm1(view);
    else if (theorem == 2) m = find_config_thm2(view);
    else if (theorem == 3) m = find_config_thm3(view);
    else fail(ErrorKind::Parse, "find-config expects theorem 1, 2 or 3");
    *result = dup_string(m.to_string());
    return RC_OK;
  });
}

rc_status rc_discharge(const rc_instance* inst, const char* lemma, char** ledger,
                       char** report, char** err) {
  if (ledger) *ledger = nullptr;
  if (report) *report = nullptr;
  return guarded(err, [&]() {
    GraphView view(inst->inst.graph);
    AuditReport rep = run_audit(view, lemma ? lemma : "");
    if (ledger) *ledger = dup_string(rep.ledger.serialize());
    std::ostringstream out;
    out << "preconditions: " << (rep.preconditions_hold ? "hold" : "fail") << "\n";
    for (const auto& note : rep.notes) out << "note: " << note << "\n";
    out << "bound " << rat_to_string(rep.bound) << ": "
        << (rep.bound_holds ? "holds" : "violated") << "; min final "
        << rat_to_string(rep.min_final) << "\n";
    if (report) *report = dup_string(out.str());
    return (rep.preconditions_hold && rep.bound_holds) ? RC_OK : RC_INVALID;
  });
}

rc_status rc_oracle(const rc_instance* inst, const char* mode, int64_t state_cap,
                    char** result, char** err) {
  *result = nullptr;
  return guarded(err, [&]() {
    std::string m = mode ? mode : "";
    uint64_t cap = effective_state_cap(state_cap);
    StateSpace space(inst->inst.graph, inst->inst.lists, cap);
    std::ostringstream out;
    if (m == "space") {
      long long degsum = 0;
      for (size_t i = 0; i < space.state_count(); ++i) degsum += space.adjacency_degree(i);
      out << "states " << space.state_count() << "\nadjacency " << degsum / 2 << "\n";
    } else if (m == "distance") {
      auto d = space.distance(inst->inst.alpha, inst->inst.beta);
      if (d) out << *d << "\n";
      else out << "unreachable\n";
      *result = dup_string(out.str());
      return d ? RC_OK : RC_INVALID;
    } else if (m == "diameter") {
      auto d = space.diameter();
      if (d) out << *d << "\n";
      else out << "disconnected\n";
      *result = dup_string(out.str());
      return d ? RC_OK : RC_INVALID;
    } else {
      fail(ErrorKind::Parse, "oracle mode must be space, distance or diameter");
    }
    *result = dup_string(out.str());
    return RC_OK;
  });
}

}  // extern "C"
