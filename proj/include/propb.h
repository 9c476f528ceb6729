/* propb — randomized recoloring, witness trees, and local-lemma certificates
 * for n-uniform b-simple hypergraphs.
 *
 * C API of the shared library. All objects are opaque handles released with
 * their matching _free function; every fallible call returns a propb_status
 * and leaves a thread-local message readable via propb_last_error().
 * Strings returned through char** are heap-allocated; release them with
 * propb_string_free().
 */
#ifndef PROPB_H
#define PROPB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum propb_status {
    PROPB_OK = 0,
    PROPB_ERR_INVALID_ARGUMENT = 1,
    PROPB_ERR_INVALID_HYPERGRAPH = 2,
    PROPB_ERR_TRIM_COLLISION = 3,
    PROPB_ERR_INFEASIBLE = 4,
    PROPB_ERR_BUDGET_EXCEEDED = 5,
    PROPB_ERR_IO = 6,
    PROPB_ERR_PARSE = 7,
    PROPB_ERR_PRECONDITION = 8,
    PROPB_ERR_STRUCTURAL_VIOLATION = 9,
    PROPB_ERR_NO_WITNESS = 10,
    PROPB_ERR_UNCOLORABLE = 11,
    PROPB_ERR_LIMIT_EXCEEDED = 12,
    PROPB_ERR_INTERNAL = 13
} propb_status;

typedef struct propb_hypergraph propb_hypergraph;
typedef struct propb_trace propb_trace;

const char* propb_version(void);
const char* propb_status_name(propb_status status);
/* Message of the last failing call on this thread ("" if none). */
const char* propb_last_error(void);
void propb_string_free(char* s);

/* ---- hypergraphs -------------------------------------------------------- */

/* edges: m*n vertex ids, edge-major; each edge ascending. */
propb_status propb_hypergraph_create(int64_t vertex_count, int32_t uniformity,
                                     const int32_t* edges, int64_t edge_count,
                                     propb_hypergraph** out);
void propb_hypergraph_free(propb_hypergraph* h);

/* Accepts the "N M n" text format or the JSON object format. */
propb_status propb_hypergraph_parse(const char* bytes, size_t len,
                                    propb_hypergraph** out);
propb_status propb_hypergraph_read_file(const char* path, propb_hypergraph** out);
/* format: 0 = text, 1 = JSON. */
propb_status propb_hypergraph_emit(const propb_hypergraph* h, int format,
                                   char** out);

int64_t propb_hypergraph_vertex_count(const propb_hypergraph* h);
int32_t propb_hypergraph_uniformity(const propb_hypergraph* h);
int64_t propb_hypergraph_edge_count(const propb_hypergraph* h);
/* Copies edge `index` into out[0..n). */
propb_status propb_hypergraph_edge(const propb_hypergraph* h, int64_t index,
                                   int32_t* out);

propb_status propb_hypergraph_validate(const propb_hypergraph* h);
/* witness_a/witness_b receive an edge pair achieving the maximum (or -1). */
propb_status propb_hypergraph_simplicity(const propb_hypergraph* h,
                                         int32_t* max_intersection,
                                         int64_t* witness_a, int64_t* witness_b);
propb_status propb_hypergraph_max_edge_degree(const propb_hypergraph* h,
                                              int64_t* out);
propb_status propb_hypergraph_max_vertex_degree(const propb_hypergraph* h,
                                                int64_t* out);
/* proper = 0/1; monochromatic_edge = lowest offending index or -1. */
propb_status propb_hypergraph_is_proper(const propb_hypergraph* h,
                                        const int32_t* colors, int64_t len,
                                        int* proper, int64_t* monochromatic_edge);
propb_status propb_hypergraph_trim(const propb_hypergraph* h,
                                   propb_hypergraph** out);
propb_status propb_hypergraph_trim_k(const propb_hypergraph* h, int32_t k,
                                     propb_hypergraph** out);

/* ---- generators --------------------------------------------------------- */

propb_status propb_gen_bsimple(int32_t uniformity, int64_t vertex_count,
                               int64_t edge_count, int32_t max_intersection,
                               uint64_t seed, uint64_t max_rejections,
                               propb_hypergraph** out);
propb_status propb_gen_complete(int32_t uniformity, int64_t vertex_count,
                                propb_hypergraph** out);
propb_status propb_gen_fano(propb_hypergraph** out);

/* ---- recoloring runs ---------------------------------------------------- */

/* min(1, 5 ln n / n); NaN if n < 2. */
double propb_default_p(int32_t n);

#define PROPB_RULE_LOWEST_EDGE 0
#define PROPB_RULE_LEAST_TRIGGER_WEIGHT 1

propb_status propb_run(const propb_hypergraph* h, int32_t r, double p,
                       uint64_t seed, int rule, propb_trace** out);
/* Attempt 0 uses `seed`; success reports which attempt first succeeded. */
propb_status propb_run_with_restarts(const propb_hypergraph* h, int32_t r,
                                     double p, uint64_t seed,
                                     uint64_t max_restarts, int rule,
                                     propb_trace** out, int* success,
                                     uint64_t* attempts);

typedef struct propb_mc_stats {
    uint64_t successes;
    uint64_t failures;
    uint64_t total_events;
    double mean_events;
} propb_mc_stats;

propb_status propb_monte_carlo(const propb_hypergraph* h, int32_t r, double p,
                               uint64_t trials, uint64_t seed, int32_t threads,
                               int rule, propb_mc_stats* out);

void propb_trace_free(propb_trace* t);
int propb_trace_success(const propb_trace* t);
int64_t propb_trace_event_count(const propb_trace* t);
int64_t propb_trace_failure_edge_count(const propb_trace* t);
propb_status propb_trace_failure_edges(const propb_trace* t, int64_t* out);
/* Copies the final coloring into out[0..vertex_count). */
propb_status propb_trace_final_coloring(const propb_trace* t, int32_t* out);
propb_status propb_trace_emit(const propb_trace* t, char** out);
/* The trace references the hypergraph; keep h alive via the handle. */
propb_status propb_trace_parse(const char* bytes, size_t len,
                               const propb_hypergraph* h, propb_trace** out);

/* ---- witness trees ------------------------------------------------------ */

/* JSON for the blame tree rooted at root_edge (see README for the schema). */
propb_status propb_htree_extract(const propb_trace* t, int64_t root_edge,
                                 char** json_out);
/* Full structural report over every finally-monochromatic edge; b is the
 * simplicity parameter, threshold the degenerate-label cutoff (or -1 for
 * ceil(20 e ln n)). all_ok = 1 when every structural check passed. */
propb_status propb_trace_witness_report(const propb_trace* t, int32_t b,
                                        int64_t threshold, char** json_out,
                                        int* all_ok);

/* ---- exact oracle ------------------------------------------------------- */

/* witness may be NULL; otherwise filled with a proper coloring when
 * colorable. budget = 0 means the default 10^8 nodes. */
propb_status propb_oracle_colorable(const propb_hypergraph* h, int32_t r,
                                    uint64_t budget, int* colorable,
                                    int32_t* witness, uint64_t* nodes_explored);
propb_status propb_oracle_chromatic(const propb_hypergraph* h, uint64_t budget,
                                    int32_t* chromatic, uint64_t* nodes_explored);

/* ---- certificates ------------------------------------------------------- */

/* log of n r^{n-b} / (2e)^4; floor_valid = 1 when the rigorous integer floor
 * fits and is certain. */
propb_status propb_theorem_threshold(int64_t n, int32_t r, int32_t b,
                                     double* log_value, uint64_t* floor_value,
                                     int* floor_valid);
propb_status propb_vertex_degree_bound(int64_t n, int32_t r, int32_t b,
                                       double* log_value, uint64_t* floor_value,
                                       int* floor_valid);
propb_status propb_exact_b1_tail(int64_t n, int32_t r, double p, int64_t K,
                                 double* log_value, int* is_probability);
propb_status propb_m_lower_bound(int64_t n, int32_t r, int32_t b,
                                 double* log_value, int* chain_positive);

/* log_delta: natural log of the edge-degree bound (-HUGE_VAL for 0); pass
 * use_threshold = 1 to evaluate at the theorem threshold instead. tau0 <= 0,
 * p < 0 and K <= 0 select the defaults 1/(n+1), min(1, 5 ln n/n),
 * ceil(20 e ln n). */
propb_status propb_certify(int64_t n, int32_t r, int32_t b, double log_delta,
                           int use_threshold, double tau0, double p, int64_t K,
                           char** report_json, int* verdict);
/* Least n whose verdict is true at the theorem threshold. */
propb_status propb_certify_find_min_n(int32_t r, int32_t b, int64_t* n_star);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROPB_H */
