// End-to-end exercise of the extern-C surface: everything here goes through
// recolor.h only.
#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "recolor.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main() {
  EXPECT(std::strstr(rc_version(), "recolor") != nullptr);

  // Generate, parse, emit round-trip.
  char* text = nullptr;
  char* err = nullptr;
  rc_status st = rc_generate("model=grid rows=3 cols=3 k=7 lists=random colors=disjoint",
                             42, &text, &err);
  EXPECT(st == RC_OK);
  EXPECT(text != nullptr);

  rc_instance* inst = nullptr;
  st = rc_instance_parse(text, &inst, &err);
  EXPECT(st == RC_OK);
  char* emitted = rc_instance_emit(inst);
  EXPECT(std::strcmp(emitted, text) == 0);
  rc_string_free(emitted);

  // Solve theorem 1 and verify through the C API.
  rc_sequence* seq = nullptr;
  st = rc_solve(inst, 1, &seq, &err);
  EXPECT(st == RC_OK);
  char* report = nullptr;
  st = rc_verify(inst, seq, 30, &report);
  EXPECT(st == RC_OK);
  EXPECT(std::strstr(report, "valid") == report);
  rc_string_free(report);

  // Emit the sequence, reparse, reverify.
  char* seq_text = rc_sequence_emit(seq);
  rc_sequence* seq2 = nullptr;
  st = rc_sequence_parse(inst, seq_text, &seq2, &err);
  EXPECT(st == RC_OK);
  report = nullptr;
  st = rc_verify(inst, seq2, 30, &report);
  EXPECT(st == RC_OK);
  rc_string_free(report);
  rc_string_free(seq_text);
  rc_sequence_free(seq2);

  // A bound of zero must fail verification with a report.
  report = nullptr;
  st = rc_verify(inst, seq, 0, &report);
  EXPECT(st == RC_INVALID);
  EXPECT(report != nullptr);
  rc_string_free(report);
  rc_sequence_free(seq);

  // Measurements.
  char* result = nullptr;
  st = rc_mad(inst, 0, &result, &err);
  EXPECT(st == RC_OK);
  EXPECT(std::strstr(result, "8/3") == result);
  rc_string_free(result);

  result = nullptr;
  st = rc_girth(inst, &result, &err);
  EXPECT(st == RC_OK);
  EXPECT(std::strcmp(result, "4") == 0);
  rc_string_free(result);

  result = nullptr;
  st = rc_mad_lemma(inst, &result, &err);
  EXPECT(st == RC_OK);
  rc_string_free(result);

  result = nullptr;
  st = rc_find_config(inst, 1, &result, &err);
  EXPECT(st == RC_OK);
  EXPECT(result != nullptr);
  rc_string_free(result);

  // Discharging: grids have 2-vertices, so the girth4 preconditions fail.
  char* ledger = nullptr;
  report = nullptr;
  st = rc_discharge(inst, "girth4", &ledger, &report, &err);
  EXPECT(st == RC_INVALID);
  EXPECT(std::strstr(ledger, "total -12 -12") != nullptr);
  EXPECT(std::strstr(report, "preconditions: fail") == report);
  rc_string_free(ledger);
  rc_string_free(report);
  rc_instance_free(inst);
  rc_string_free(text);

  // Oracle on a tiny instance.
  const char* tiny =
      "graph 2\nedge 0 1\nlist 0: 1 2 3\nlist 1: 1 2 3\n"
      "alpha 0 1\nalpha 1 2\nbeta 0 2\nbeta 1 1\n";
  rc_instance* small = nullptr;
  st = rc_instance_parse(tiny, &small, &err);
  EXPECT(st == RC_OK);
  result = nullptr;
  st = rc_oracle(small, "distance", 0, &result, &err);
  EXPECT(st == RC_OK);
  EXPECT(std::strcmp(result, "3\n") == 0);
  rc_string_free(result);
  result = nullptr;
  st = rc_oracle(small, "space", 0, &result, &err);
  EXPECT(st == RC_OK);
  EXPECT(std::strstr(result, "states 6") == result);
  rc_string_free(result);
  rc_instance_free(small);

  // Error paths: malformed text is a usage error with a message.
  rc_instance* bad = nullptr;
  err = nullptr;
  st = rc_instance_parse("graph 1\nedge 0 0\n", &bad, &err);
  EXPECT(st == RC_USAGE);
  EXPECT(bad == nullptr);
  EXPECT(err != nullptr && std::strstr(err, "line") != nullptr);
  rc_string_free(err);

  // Hypothesis failures surface as RC_INVALID.
  const char* k4 =
      "graph 3\nedge 0 1\nedge 1 2\nedge 0 2\n"
      "list 0: 1 2 3 4 5 6 7\nlist 1: 1 2 3 4 5 6 7\nlist 2: 1 2 3 4 5 6 7\n"
      "alpha 0 1\nalpha 1 2\nalpha 2 3\nbeta 0 1\nbeta 1 2\nbeta 2 3\n";
  rc_instance* tri = nullptr;
  st = rc_instance_parse(k4, &tri, &err);
  EXPECT(st == RC_OK);
  rc_sequence* no_seq = nullptr;
  err = nullptr;
  st = rc_solve(tri, 1, &no_seq, &err);
  EXPECT(st == RC_INVALID);
  EXPECT(no_seq == nullptr);
  EXPECT(err != nullptr && std::strstr(err, "hypothesis") != nullptr);
  rc_string_free(err);
  rc_instance_free(tri);

  if (failures == 0) std::printf("test_capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
