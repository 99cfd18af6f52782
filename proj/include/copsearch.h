#ifndef COPSEARCH_H
#define COPSEARCH_H

/* C interface to the cops-and-robbers toolkit: exact k-cop game solving,
 * isomorph-free generation of small graphs under hereditary constraints, a
 * catalog of named small graphs, exhaustive finite-lemma verification, and the
 * four 13-vertex search pipelines. Handles are opaque; every fallible call
 * returns a status code and leaves a message for cs_last_error(). Pointer
 * out-parameters are set to NULL on failure. Strings and arrays returned
 * through out-parameters are owned by the caller and released with
 * cs_string_free / cs_ints_free; handles with their matching _free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_INVALID_ARGUMENT = 1,
  CS_ERR_PARSE = 2,
  CS_ERR_BUDGET = 3,
  CS_ERR_IO = 4,
  CS_ERR_INTERNAL = 5
} cs_status;

typedef struct cs_graph cs_graph;
typedef struct cs_graph_list cs_graph_list;

/* message from the most recent failing call on this thread; "" when none */
const char* cs_last_error(void);

void cs_string_free(char* s);
void cs_ints_free(int* p);

/* ---- graphs ---- */

cs_status cs_graph_from_g6(const char* line, cs_graph** out);
/* endpoints holds 2*edge_count vertex indices: u0,v0,u1,v1,... */
cs_status cs_graph_from_edges(int n, const int* endpoints, size_t edge_count, cs_graph** out);
void cs_graph_free(cs_graph* g);

int cs_graph_order(const cs_graph* g);
int cs_graph_edge_count(const cs_graph* g);
int cs_graph_has_edge(const cs_graph* g, int u, int v);
int cs_graph_connected(const cs_graph* g);
cs_status cs_graph_g6(const cs_graph* g, char** out);
cs_status cs_graph_canonical_g6(const cs_graph* g, char** out);
int cs_isomorphic(const cs_graph* a, const cs_graph* b);

/* ---- invariants and the pursuit game ---- */

cs_status cs_independence_number(const cs_graph* g, int* out);
cs_status cs_domination_number(const cs_graph* g, int* out);

/* cop number under the component-maximum convention */
cs_status cs_cop_number(const cs_graph* g, int* out);

/* exact k-cop decision on a connected graph; *wins becomes 0 or 1. When the
 * cops win and placement/placement_len are non-null, a winning initial
 * placement (k sorted vertices) is returned. */
cs_status cs_cop_wins(const cs_graph* g, int k, int* wins, int** placement,
                      size_t* placement_len);

/* connected graph reducible to one vertex by repeatedly deleting dominated
 * vertices; equivalent to cop number 1 */
cs_status cs_dismantlable(const cs_graph* g, int* out);

/* ---- named-graph catalog ---- */

size_t cs_catalog_count(void);
const char* cs_catalog_name(size_t index); /* NULL when out of range */
const char* cs_catalog_note(size_t index);
cs_status cs_catalog_graph(const char* name, cs_graph** out);

/* ---- isomorph-free generation ---- */

typedef struct cs_generate_options {
  int n;
  int max_degree;       /* < 0: unbounded */
  int max_edges;        /* < 0: unbounded */
  int forbid_k1;        /* k >= 2: keep only kK1-free graphs; else off */
  int deg5_remainders;  /* nonzero: every degree-5 vertex of an emitted graph
                           leaves K3+K1, 2K2 or P4 after deleting its closed
                           neighborhood (10-vertex graphs only) */
  int workers;          /* <= 0: library default */
} cs_generate_options;

cs_status cs_generate(const cs_generate_options* opts, cs_graph_list** out);

size_t cs_graph_list_size(const cs_graph_list* list);
cs_status cs_graph_list_g6(const cs_graph_list* list, size_t index, char** out);
cs_status cs_graph_list_get(const cs_graph_list* list, size_t index, cs_graph** out);
void cs_graph_list_free(cs_graph_list* list);

/* ---- exhaustive finite-lemma verification ----
 * target "3k1": every 6-vertex 3K1-free class contains K5+K1, K4+K2, K3+K3 or
 * B6 as a subgraph. target "classify6": the 6-vertex classification sweeps
 * (two disjoint triangles by crossing-edge count; the B6-containing
 * non-two-clique-coverable case). JSON list of {id, holds, witness?, count?}.
 */
cs_status cs_verify_lemma(const char* target, char** json_out);

/* ---- search pipelines ---- */

typedef struct cs_pipeline_options {
  char type;              /* 'A', 'B', 'C' or 'D' */
  const char* out_dir;    /* step1.g6, candidates.g6, report.json land here */
  int workers;            /* <= 0: library default (COPSEARCH_WORKERS or cores) */
  int raw_counts;         /* nonzero: solve every raw attachment, not one per class */
  int skip_connectedness; /* -1: per-type default, 0: check, 1: skip */
} cs_pipeline_options;

cs_status cs_pipeline_run(const cs_pipeline_options* opts, char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* COPSEARCH_H */
