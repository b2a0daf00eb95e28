#ifndef SNARKLAB_H
#define SNARKLAB_H

#include <stddef.h>

#if defined(SNARKLAB_BUILDING)
#define SL_API __attribute__((visibility("default")))
#else
#define SL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns a status; on failure sl_last_error_message() holds
 * a description for the calling thread until its next failing call. */
typedef enum sl_status {
  SL_OK = 0,
  SL_ERR_NOT_CUBIC,
  SL_ERR_NOT_SIMPLE,
  SL_ERR_INCONSISTENT,
  SL_ERR_SYNTAX,
  SL_ERR_DUPLICATE_EDGE,
  SL_ERR_MALFORMED_GRAPH6,
  SL_ERR_NON_ADJACENT_PAIR,
  SL_ERR_OVERLAPPING_CYCLES,
  SL_ERR_SIZE_CAP_EXCEEDED,
  SL_ERR_NOT_A_HIST,
  SL_ERR_INVALID_ANCHORS,
  SL_ERR_NO_VALID_ANCHORS,
  SL_ERR_ELEMENT_ABSENT,
  SL_ERR_VERIFICATION_FAILED,
  SL_ERR_NOT_ADMISSIBLE,
  SL_ERR_CONSTRUCTION_FAILED,
  SL_ERR_UNKNOWN_FIXTURE,
  SL_ERR_FIXTURE_CORRUPT,
  SL_ERR_INVALID_ARGUMENT,
  SL_ERR_INTERNAL
} sl_status;

typedef enum sl_format {
  SL_FORMAT_AUTO = 0,
  SL_FORMAT_GRAPH6,
  SL_FORMAT_PAPER,
  SL_FORMAT_DOT /* output only */
} sl_format;

/* Opaque handles. A hist carries its own copy of the graph; a construction
 * carries graph, hist and provenance. */
typedef struct sl_graph sl_graph;
typedef struct sl_hist sl_hist;
typedef struct sl_construction sl_construction;

SL_API const char* sl_version(void);
SL_API const char* sl_status_name(sl_status status);
SL_API const char* sl_last_error_message(void);
/* Frees any char* handed out by this library. */
SL_API void sl_string_free(char* s);

/* ---- graphs ---- */

/* Parses one graph. When the text declares outer cycles and `declared` is
 * non-NULL, *declared receives the complementary Hist (else NULL). */
SL_API sl_status sl_graph_parse(const char* text, sl_format format, sl_graph** out, sl_hist** declared);
SL_API void sl_graph_free(sl_graph* g);
SL_API sl_graph* sl_graph_clone(const sl_graph* g);
SL_API int sl_graph_order(const sl_graph* g);
SL_API int sl_graph_size(const sl_graph* g);
SL_API sl_status sl_graph_edge(const sl_graph* g, int index, int* u, int* v);
/* With a hist, DOT output styles tree and outer-cycle edges and paper output
 * starts with the outer-cycle declaration line. */
SL_API sl_status sl_graph_emit(const sl_graph* g, sl_format format, const sl_hist* hist, char** out);

/* ---- fixtures ---- */

SL_API size_t sl_fixture_count(void);
SL_API const char* sl_fixture_name(size_t index);
/* *hist is NULL for a Hist-free fixture; pass NULL to skip it. */
SL_API sl_status sl_fixture_load(const char* name, sl_graph** graph, sl_hist** hist);

/* ---- certification ---- */

typedef struct sl_certificate {
  int order;
  int connected;
  int girth;
  int cyclically_4_edge_connected; /* -1 when not run */
  int three_edge_colorable;        /* -1 when not run */
  int is_snark;
} sl_certificate;

/* max_vertices <= 0 keeps the default cap. `details` (optional) receives a
 * JSON object with the violating cut, coloring witness and checks run. */
SL_API sl_status sl_certify(const sl_graph* g, int max_vertices, sl_certificate* out, char** details);

/* ---- Hists ---- */

/* *out is NULL when the exhaustive search finds none. */
SL_API sl_status sl_hist_find(const sl_graph* g, int max_vertices, sl_hist** out);
/* Up to `limit` Hists; release with sl_hist_array_free. */
SL_API sl_status sl_hist_enumerate(const sl_graph* g, size_t limit, int max_vertices, sl_hist*** out,
                                   size_t* count);
SL_API void sl_hist_array_free(sl_hist** hists, size_t count);
SL_API void sl_hist_free(sl_hist* h);
/* Tree edges, as (u,v) pairs in canonical order; u and v must hold n-1 ints. */
SL_API sl_status sl_hist_tree_edges(const sl_hist* h, int* u, int* v, size_t capacity, size_t* count);
/* Profile lengths in ascending order. */
SL_API sl_status sl_hist_profile(const sl_hist* h, int* lengths, size_t capacity, size_t* count);
/* "{5,6}" */
SL_API sl_status sl_hist_profile_string(const sl_hist* h, char** out);
/* JSON array of outer cycles as vertex sequences in cyclic order. */
SL_API sl_status sl_hist_outer_cycles_json(const sl_hist* h, char** out);
/* Cycle double cover containing every outer cycle. *found is 0 when the
 * search is exhausted; `cycles` receives a JSON array of edge lists. */
SL_API sl_status sl_cdc(const sl_hist* h, int max_vertices, int* found, char** cycles);

/* ---- constructions ---- */

typedef enum sl_surgery {
  SL_SURGERY_DOT = 0,
  SL_SURGERY_BULLET1,
  SL_SURGERY_BULLET2,
  SL_SURGERY_BULLET3,
  SL_SURGERY_TRIANGLE
} sl_surgery;

/* x1,y1,x2,y2 are derived from a3,b3. c is only read by the triangle. */
typedef struct sl_anchors {
  int a1, b1, a2, b2, a3, b3, c;
} sl_anchors;

/* `ledger` (optional) receives a JSON object of the full anchor roles and
 * new vertex ids. */
SL_API sl_status sl_surgery_apply(sl_surgery kind, const sl_graph* g, const sl_graph* h, const sl_anchors* anchors,
                                  sl_graph** out, char** ledger);

typedef struct sl_construct_options {
  int verify_snark_structure; /* girth >= 5 and cyclic 4-edge-connectivity */
  int verify_colorability;
  int max_vertices;           /* <= 0 keeps the default */
} sl_construct_options;

SL_API void sl_construct_options_default(sl_construct_options* options);

SL_API sl_status sl_construction_from_fixture(const char* name, sl_construction** out);
/* Wraps a graph with a Hist under the given provenance label. */
SL_API sl_status sl_construction_from_hist(const char* label, const sl_hist* hist, sl_construction** out);
SL_API void sl_construction_free(sl_construction* c);
/* Both return new copies owned by the caller. */
SL_API sl_graph* sl_construction_graph(const sl_construction* c);
SL_API sl_hist* sl_construction_hist(const sl_construction* c);
SL_API sl_status sl_construction_provenance(const sl_construction* c, int indent, char** json);

/* `options` may be NULL for the defaults. */
SL_API sl_status sl_union_disjoint(const sl_construction* g, const sl_construction* h,
                                   const sl_construct_options* options, sl_construction** out);
SL_API sl_status sl_union_merge(const sl_construction* g, int k, const sl_construction* h, int l,
                                const sl_construct_options* options, sl_construction** out);
SL_API sl_status sl_reduce_i(const sl_construction* g, int k, const sl_construct_options* options,
                             sl_construction** out);
SL_API sl_status sl_reduce_ii(const sl_construction* g, const sl_construct_options* options, sl_construction** out);
SL_API sl_status sl_reduce_iii(const sl_construction* g, const sl_construct_options* options,
                               sl_construction** out);
SL_API sl_status sl_reduce_iv(const sl_construction* g, int k, const sl_construct_options* options,
                              sl_construction** out);

/* ---- realization ---- */

/* *admissible is 1 or 0; `reason` (optional) names the violated condition. */
SL_API sl_status sl_is_admissible(const int* lengths, size_t count, int* admissible, char** reason);
SL_API sl_status sl_realize_plan(const int* lengths, size_t count, char** plan);
SL_API sl_status sl_realize(const int* lengths, size_t count, const sl_construct_options* options,
                            sl_construction** out);

/* ---- batch scan ---- */

typedef struct sl_scan_summary {
  size_t graphs;
  size_t errors;
  size_t with_hist;
  size_t snarks;
  size_t snarks_with_hist;
} sl_scan_summary;

/* One graph6 graph per line. `records` receives JSON lines in input order,
 * `table` a human-readable summary; both optional. threads == 0 uses every
 * core. */
SL_API sl_status sl_scan_graph6(const char* text, unsigned threads, int max_vertices, int certify,
                                sl_scan_summary* summary, char** records, char** table);

#ifdef __cplusplus
}
#endif

#endif
