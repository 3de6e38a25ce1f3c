/* C interface to the recolor library: opaque handles, integer status codes,
 * and malloc'd strings released with rc_string_free.  All functions are
 * thread-compatible: distinct handles may be used concurrently. */
#ifndef RECOLOR_H
#define RECOLOR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rc_instance rc_instance;
typedef struct rc_sequence rc_sequence;

typedef enum rc_status {
  RC_OK = 0,       /* success / property holds */
  RC_INVALID = 1,  /* violation or infeasible input, message explains */
  RC_USAGE = 2     /* parse or usage error */
} rc_status;

const char* rc_version(void);

/* Frees any string returned through an out-parameter. */
void rc_string_free(char* s);

/* --- instances --------------------------------------------------------- */

/* Parses the line-oriented instance format (graph/edge/rot/list/alpha/beta).
 * On failure returns RC_USAGE and sets *err. */
rc_status rc_instance_parse(const char* text, rc_instance** out, char** err);
void rc_instance_free(rc_instance* inst);

/* Canonical re-emission of the instance text. */
char* rc_instance_emit(const rc_instance* inst);

/* Deterministic generator; spec is a key=value list such as
 * "model=grid rows=3 cols=3 k=7 lists=random colors=disjoint".  */
rc_status rc_generate(const char* spec, uint64_t seed, char** instance_text, char** err);

/* --- solving and verification ------------------------------------------ */

/* theorem: 1 (triangle-free planar, 7-lists, 30-good), 2 (mad<17/5, 6-lists,
 * 12-good), 3 (mad<22/9, 4-lists, 14-good), 0 (baseline, lists >= 2*maxdeg+1,
 * 2-good). */
rc_status rc_solve(const rc_instance* inst, int theorem, rc_sequence** out, char** err);
void rc_sequence_free(rc_sequence* seq);

char* rc_sequence_emit(const rc_sequence* seq);
rc_status rc_sequence_parse(const rc_instance* inst, const char* text, rc_sequence** out,
                            char** err);

/* Replays the sequence against the instance: every intermediate coloring must
 * be proper, the final coloring must equal beta, and no vertex may be
 * recolored more than bound times.  RC_OK when valid; RC_INVALID with a
 * report otherwise. */
rc_status rc_verify(const rc_instance* inst, const rc_sequence* seq, int bound,
                    char** report);

/* --- measurements ------------------------------------------------------- */

/* Exact maximum average degree as "p/q" plus the witness vertex set.
 * enumerate != 0 uses the brute-force oracle (<= 20 vertices). */
rc_status rc_mad(const rc_instance* inst, int enumerate, char** result, char** err);

/* Girth as a decimal string, or "infinity" for forests. */
rc_status rc_girth(const rc_instance* inst, char** result, char** err);

/* Checks mad(G) < 2g/(g-2) on an embedded instance; RC_OK when it holds. */
rc_status rc_mad_lemma(const rc_instance* inst, char** result, char** err);

/* --- structure ----------------------------------------------------------- */

/* Finds the reducible configuration for the theorem (1, 2 or 3).  RC_OK with
 * a one-line description, RC_INVALID when the structural claim fails. */
rc_status rc_find_config(const rc_instance* inst, int theorem, char** result, char** err);

/* Discharging audit; lemma is "girth4", "mad175" or "mad229".  RC_OK when the
 * audit preconditions hold and every final charge meets the bound; the ledger
 * text is returned either way. */
rc_status rc_discharge(const rc_instance* inst, const char* lemma, char** ledger,
                       char** report, char** err);

/* --- brute-force oracle -------------------------------------------------- */

/* mode: "space" (state count plus adjacency degree sum), "distance" (exact
 * alpha-to-beta distance or "unreachable"), "diameter".  state_cap <= 0 uses
 * the default (or the RECOLOR_STATE_CAP environment variable). */
rc_status rc_oracle(const rc_instance* inst, const char* mode, int64_t state_cap,
                    char** result, char** err);

#ifdef __cplusplus
}
#endif

#endif /* RECOLOR_H */
