#ifndef WELLCOVER_WELLCOVER_H
#define WELLCOVER_WELLCOVER_H
/* C interface to the well-covered graph library.
 *
 * Conventions:
 *   - Every function returns one of the WCG_* codes below; outputs go through
 *     out-parameters, which are written only on WCG_OK.
 *   - Returned char* strings are heap-allocated; release them with
 *     wcg_string_free. Handles are released with their matching *_free, which
 *     accept NULL.
 *   - wcg_last_error() describes the most recent call on the calling thread:
 *     empty after success, a message after a failure.
 *   - Structured data crosses the boundary as canonical JSON text (sorted
 *     keys, sorted edge lists, rationals as "p/q" in lowest terms). Vertex
 *     sets travel inward as id arrays, outward as JSON id arrays.
 *   - Functions taking `unchecked` normally reject graphs outside the
 *     bipartite 6-cycle-free family with WCG_ERR_DOMAIN; pass nonzero to skip
 *     the gate, at the price of undefined answers outside it.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  WCG_OK = 0,
  WCG_ERR_DOMAIN = 1,   /* invalid input for the operation (family, range, shape) */
  WCG_ERR_USAGE = 2,    /* NULL handle or argument, misused API */
  WCG_ERR_PARSE = 3,    /* malformed JSON */
  WCG_ERR_LIMIT = 4,    /* instance exceeds an exponential-oracle cap */
  WCG_ERR_INTERNAL = 5, /* unexpected failure */
};

typedef struct wcg_graph wcg_graph;       /* finite simple graph */
typedef struct wcg_cnf wcg_cnf;           /* formula with designated clause split */
typedef struct wcg_artifact wcg_artifact; /* reduction output: graph + designated subgraph */

const char* wcg_version(void);    /* static, do not free */
const char* wcg_last_error(void); /* thread-local, do not free */
void wcg_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* Accepts graph JSON {"n":..,"edges":[[u,v],..]} or edge-list text
 * ("n m" header line then one "u v" per edge). */
int wcg_graph_parse(const char* text, wcg_graph** out);
void wcg_graph_free(wcg_graph* g);
int wcg_graph_to_json(const wcg_graph* g, char** out_json);
int wcg_graph_n(const wcg_graph* g, uint32_t* out_n);

/* Families: "bip-c6free", "girth6", "no-c3c5", "c3c4c5c7-free", "any".
 * Emits a JSON array of {"rule","exhibit","message"}; empty array = member. */
int wcg_graph_validate_family(const wcg_graph* g, const char* family, char** out_violations_json);

/* ---- recognition and weight space -------------------------------------- */

/* Is the induced complete bipartite subgraph on (bx, by) generating, i.e. is
 * there an independent S outside its closed neighborhood with S + bx and
 * S + by both maximal independent? Sides travel as vertex-id arrays. */
int wcg_generating(const wcg_graph* g, const uint32_t* bx, size_t bx_len, const uint32_t* by,
                   size_t by_len, int unchecked, int* out_generating);

/* Largest T making the star on x generating ("[]" when none), and the
 * two-center analogue with |T| >= 2. */
int wcg_maxgen1(const wcg_graph* g, uint32_t x, int unchecked, char** out_set_json);
int wcg_maxgen2(const wcg_graph* g, uint32_t x1, uint32_t x2, int unchecked, char** out_set_json);

/* Constraint system for the space of weightings constant on maximal
 * independent sets: {"n","constraints","dimension","basis"}. */
int wcg_wcw(const wcg_graph* g, int unchecked, char** out_system_json);
int wcg_well_covered(const wcg_graph* g, int unchecked, int* out_well_covered);

/* Leaf-driven system for graphs with no 3-, 4-, 5- or 7-cycle. */
int wcg_wcw_leaf(const wcg_graph* g, int unchecked, char** out_system_json);

/* Does some generating subgraph put u and v on opposite sides? u-v must be
 * an edge. Any graph accepted; falls back to the exponential oracle off the
 * fast family. */
int wcg_relating_edge(const wcg_graph* g, uint32_t u, uint32_t v, int* out_relating);

/* ---- brute-force oracles (exponential; capped, see WELLCOVER_ORACLE_CAP
 * and WELLCOVER_SAT_CAP; over cap -> WCG_ERR_LIMIT) --------------------- */

int wcg_oracle_mis(const wcg_graph* g, char** out_sets_json); /* all maximal independent sets */
int wcg_oracle_well_covered(const wcg_graph* g, int* out_well_covered);
int wcg_oracle_wcw(const wcg_graph* g, char** out_system_json);
/* Witness S as a JSON id array, or "null" when (bx, by) is not generating. */
int wcg_oracle_generating(const wcg_graph* g, const uint32_t* bx, size_t bx_len,
                          const uint32_t* by, size_t by_len, char** out_witness_json);
/* Satisfying assignment as a JSON 0/1 array, or "null". */
int wcg_oracle_sat(const wcg_cnf* f, char** out_assignment_json);

/* ---- formulas ----------------------------------------------------------- */

/* Accepts formula JSON {"n_vars","c1","c2","kind"} or DIMACS (all clauses
 * land in c1). */
int wcg_cnf_parse(const char* text, wcg_cnf** out);
void wcg_cnf_free(wcg_cnf* f);
int wcg_cnf_to_json(const wcg_cnf* f, char** out_json);
int wcg_cnf_to_dimacs(const wcg_cnf* f, char** out_text);

/* Kinds: "generic", "monotone", "dsat", "dmsat" (case-insensitive). Same
 * violation-array shape as wcg_graph_validate_family. */
int wcg_cnf_validate(const wcg_cnf* f, const char* kind, char** out_violations_json);

/* ---- reductions --------------------------------------------------------- */

int wcg_dsat_to_dmsat(const wcg_cnf* f, wcg_cnf** out);

int wcg_artifact_parse(const char* json_text, wcg_artifact** out);
void wcg_artifact_free(wcg_artifact* a);
int wcg_artifact_to_json(const wcg_artifact* a, char** out_json);
int wcg_artifact_graph(const wcg_artifact* a, wcg_graph** out); /* copy of the graph */

int wcg_dmsat_to_gs(const wcg_cnf* f, wcg_artifact** out);
int wcg_monotone_to_gs(const wcg_cnf* f, wcg_artifact** out);
int wcg_extend_to_kpq(const wcg_artifact* a, uint32_t p, uint32_t q, wcg_artifact** out);

/* Truth assignment (bits[i] = variable i+1) <-> maximal-independent witness
 * in the reduction graph. */
int wcg_assignment_to_witness(const wcg_artifact* a, const uint8_t* bits, size_t n_bits,
                              char** out_set_json);
int wcg_witness_to_assignment(const wcg_artifact* a, const uint32_t* ids, size_t n_ids,
                              char** out_assignment_json);

/* ---- deterministic instance generation ---------------------------------- */

int wcg_random_tree(uint32_t n, uint64_t seed, wcg_graph** out);
/* Family-conditioned random graph, edge probability p_num/p_den. */
int wcg_random_graph(const char* family, uint32_t n, uint64_t p_num, uint64_t p_den,
                     uint64_t seed, wcg_graph** out);
/* kind: "dsat" or "monotone". */
int wcg_random_cnf(const char* kind, uint32_t n_vars, uint32_t n_clauses, uint64_t seed,
                   wcg_cnf** out);

/* Every labeled n-vertex graph in the family (n <= 9), ascending edge-mask
 * order. The JSON pointer is owned by the library and valid only during the
 * callback; return nonzero to stop early. out_visited may be NULL. */
typedef int (*wcg_graph_callback)(const char* graph_json, void* user);
int wcg_enumerate_graphs(uint32_t n, const char* family, wcg_graph_callback cb, void* user,
                         uint64_t* out_visited);

/* ---- self-verification --------------------------------------------------- */

/* Suites: generating, maxgen, wcw, wc, leaf, dsat-chain, monotone-chain,
 * exhaustive (n = max vertex count; count/seed ignored where meaningless).
 * out_ok may be NULL; *out_ok = 1 iff every comparison agreed or was a
 * registered expected disagreement. */
int wcg_verify(const char* suite, uint32_t n, uint32_t count, uint64_t seed,
               char** out_report_json, int* out_ok);

/* Replay the worked examples against the bundled fixtures. data_dir NULL
 * falls back to $WELLCOVER_DATA_DIR, then "data". */
int wcg_reproduce_paper(const char* data_dir, char** out_report_json, int* out_ok);

#ifdef __cplusplus
}
#endif

#endif /* WELLCOVER_WELLCOVER_H */
