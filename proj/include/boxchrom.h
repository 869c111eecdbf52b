/* C API for the box-arrangement coloring library.
 *
 * All functions return a bxc_status. Output strings are allocated by the
 * library and must be released with bxc_string_free(); handles with the
 * matching *_free(). On BXC_EINVAL / BXC_ERROR / BXC_ETIMEOUT a message is
 * available from bxc_last_error() (thread local). BXC_FAIL is a verdict
 * (unsat / claim fails / improper coloring), not an error.
 */
#ifndef BOXCHROM_H
#define BOXCHROM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bxc_arrangement bxc_arrangement;
typedef struct bxc_graph bxc_graph;

typedef enum {
  BXC_OK = 0,       /* success / sat / pass */
  BXC_FAIL = 1,     /* unsat / check fails */
  BXC_EINVAL = 2,   /* bad arguments or input */
  BXC_ERROR = 3,    /* internal error */
  BXC_ETIMEOUT = 4, /* time limit hit */
} bxc_status;

const char* bxc_last_error(void);
void bxc_string_free(char* s);

/* --- arrangements ------------------------------------------------------- */

/* kind: "x", "y", "z-geometric" or "figure1". */
bxc_status bxc_gen(const char* kind, bxc_arrangement** out);

/* bbox: {x_lo, x_hi, y_lo, y_hi, z_lo, z_hi}. Deterministic in seed. */
bxc_status bxc_gen_random(uint64_t seed, int target, const int64_t bbox[6], int64_t min_side,
                          bxc_arrangement** out);

bxc_status bxc_arrangement_from_json(const char* json, bxc_arrangement** out);
bxc_status bxc_arrangement_to_json(const bxc_arrangement* a, char** out);
/* BXC_OK when valid, BXC_FAIL with a violation report otherwise. */
bxc_status bxc_arrangement_validate(const bxc_arrangement* a, char** report_json);
void bxc_arrangement_free(bxc_arrangement* a);

/* --- conflict graphs ---------------------------------------------------- */

bxc_status bxc_graph_build(const bxc_arrangement* a, bxc_graph** out);
void bxc_graph_free(bxc_graph* g);
bxc_status bxc_graph_counts(const bxc_graph* g, int* vertices, int* edges);
bxc_status bxc_graph_dot(const bxc_graph* g, char** out);
bxc_status bxc_graph_edges_json(const bxc_graph* g, char** out);
/* stats: vertices, edges, components, degeneracy, max clique. */
bxc_status bxc_graph_stats(const bxc_graph* g, double timeout_sec, char** out);

/* --- coloring ----------------------------------------------------------- */

bxc_status bxc_chromatic(const bxc_graph* g, double timeout_sec, int* chi, char** coloring_json);
/* BXC_OK + coloring when sat, BXC_FAIL when provably unsat. */
bxc_status bxc_k_colorable(const bxc_graph* g, int k, double timeout_sec, char** coloring_json);
bxc_status bxc_export_cnf(const bxc_graph* g, int k, int clique_seed, char** out);
/* Runs `command <cnf-file>` and parses SAT-competition output. */
bxc_status bxc_k_colorable_external(const bxc_graph* g, int k, const char* command,
                                    char** coloring_json);
/* BXC_OK when proper; BXC_FAIL with the first violating edge otherwise. */
bxc_status bxc_verify_coloring(const bxc_graph* g, const char* coloring_json,
                               char** violation_json);
/* strategy: "level" (uses axis), "own-dim", "surface", "volume". */
bxc_status bxc_color_strategy(const bxc_arrangement* a, const char* strategy, int axis,
                              int64_t param, char** coloring_json, char** report_json);

/* --- certification ------------------------------------------------------ */

bxc_status bxc_check_claim1(const bxc_arrangement* x, char** result_json);
bxc_status bxc_check_claim2(const bxc_arrangement* y, double timeout_sec, char** result_json);
bxc_status bxc_z_abstract(char** zstructure_json, char** edges_json);
bxc_status bxc_certify_z(double timeout_sec, int with_cnf7, char** certificate_json);
bxc_status bxc_certificate_recheck(const char* certificate_json);

#ifdef __cplusplus
}
#endif

#endif /* BOXCHROM_H */
