#ifndef MCS_H
#define MCS_H

/* C interface to the consistent-subset solver library. All functions
 * returning mcs_status write a human-readable message into errbuf (when
 * given) on failure. Handles are freed with the matching _free call. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mcs_graph mcs_graph;
typedef struct mcs_solution mcs_solution;

typedef enum {
  MCS_OK = 0,
  MCS_ERR_INVALID_ARGUMENT = 1,  /* null handle, bad enum, bad params */
  MCS_ERR_PARSE = 2,             /* instance text rejected */
  MCS_ERR_VALIDATION = 3,        /* graph invariant violated */
  MCS_ERR_PARAMETER_TOO_LARGE = 4,
  MCS_ERR_TIMEOUT = 5,           /* reserved; timeouts yield partials */
  MCS_ERR_IO = 6,
  MCS_ERR_INTERNAL = 7
} mcs_status;

const char* mcs_status_name(mcs_status status);

/* ---- instances ---- */

mcs_status mcs_graph_from_text(const char* text, mcs_graph** out,
                               char* errbuf, size_t errbuf_len);
mcs_status mcs_graph_from_file(const char* path, mcs_graph** out,
                               char* errbuf, size_t errbuf_len);
void mcs_graph_free(mcs_graph* g);

int mcs_graph_vertex_count(const mcs_graph* g);
int mcs_graph_edge_count(const mcs_graph* g);
int mcs_graph_color_count(const mcs_graph* g);
/* Color of a 0-based vertex, or -1 out of range. */
int mcs_graph_color_of(const mcs_graph* g, int vertex);

/* Canonical serialization; free the result with mcs_string_free. */
mcs_status mcs_graph_to_text(const mcs_graph* g, char** out,
                             char* errbuf, size_t errbuf_len);
void mcs_string_free(char* s);

/* ---- generators (deterministic per seed) ---- */

mcs_status mcs_generate_gnp(int n, double p, int colors, uint64_t seed,
                            mcs_graph** out, char* errbuf, size_t errbuf_len);
mcs_status mcs_generate_planted_vc(int k, int n, int colors, double density,
                                   uint64_t seed, mcs_graph** out,
                                   char* errbuf, size_t errbuf_len);
mcs_status mcs_generate_planted_nd(const int* sizes, int r, int colors,
                                   double density, uint64_t seed,
                                   mcs_graph** out, char* errbuf,
                                   size_t errbuf_len);

/* ---- structural parameters ---- */

/* Exact minimum vertex cover size. budget < 0 means unbounded; with a
 * budget, MCS_ERR_PARAMETER_TOO_LARGE when the minimum exceeds it. */
mcs_status mcs_vertex_cover(const mcs_graph* g, int budget, int* k_out,
                            char* errbuf, size_t errbuf_len);
/* Neighborhood diversity (twin class count). */
mcs_status mcs_neighborhood_diversity(const mcs_graph* g, int* r_out,
                                      char* errbuf, size_t errbuf_len);
/* Class lookup after mcs_neighborhood_diversity: index of the class of
 * a vertex, class size, and kind (1 clique, 0 independent). Classes are
 * numbered by smallest member. */
mcs_status mcs_type_info(const mcs_graph* g, int type_index, int* size_out,
                         int* clique_out, char* errbuf, size_t errbuf_len);
mcs_status mcs_type_of(const mcs_graph* g, int vertex, int* type_out,
                       char* errbuf, size_t errbuf_len);

/* ---- checking ---- */

/* vertices: 0-based ids, strictly ascending not required (sorted and
 * deduplicated internally). consistent_out gets 0/1; on inconsistency
 * witness_out (when non-null) gets the smallest violating vertex,
 * otherwise -1. */
mcs_status mcs_check_subset(const mcs_graph* g, const int* vertices,
                            int count, int* consistent_out, int* witness_out,
                            char* errbuf, size_t errbuf_len);

/* ---- solving ---- */

typedef struct {
  /* "auto", "brute", "vc" or "nd". */
  const char* method;
  int threads;        /* <= 0 means 1 */
  long timeout_ms;    /* <= 0 means none; expiry yields a non-optimal
                         verified partial, not an error */
} mcs_solve_options;

void mcs_solve_options_init(mcs_solve_options* options);

mcs_status mcs_solve(const mcs_graph* g, const mcs_solve_options* options,
                     mcs_solution** out, char* errbuf, size_t errbuf_len);
void mcs_solution_free(mcs_solution* s);

int mcs_solution_size(const mcs_solution* s);
/* Pointer to `size` ascending 0-based vertex ids, owned by the handle. */
const int* mcs_solution_vertices(const mcs_solution* s);
const char* mcs_solution_method(const mcs_solution* s);
int mcs_solution_verified(const mcs_solution* s);
int mcs_solution_optimal(const mcs_solution* s);
int mcs_solution_timed_out(const mcs_solution* s);
uint64_t mcs_solution_explored(const mcs_solution* s);

#ifdef __cplusplus
}
#endif

#endif /* MCS_H */
