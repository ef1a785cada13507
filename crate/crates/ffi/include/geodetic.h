#ifndef GEODETIC_H
#define GEODETIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Largest order a graph may have.
#define GEODETIC_MAX_VERTICES 32

typedef enum GeodeticStatus {
  GEODETIC_STATUS_OK = 0,
  GEODETIC_STATUS_NULL_POINTER = 1,
  GEODETIC_STATUS_INVALID_ARGUMENT = 2,
  GEODETIC_STATUS_CAPACITY_EXCEEDED = 3,
  GEODETIC_STATUS_NOT_GEODETIC = 4,
  GEODETIC_STATUS_INVALID_CUT = 5,
  GEODETIC_STATUS_PARSE = 6,
  GEODETIC_STATUS_OVERFLOW = 7,
  GEODETIC_STATUS_PANIC = 8,
} GeodeticStatus;

// A simple undirected graph.
typedef struct GeodeticGraph GeodeticGraph;

// Graphs returned by an enumeration, in canonical order.
typedef struct GeodeticGraphSet GeodeticGraphSet;

// Invariants of a connected graph.
typedef struct GeodeticReport {
  size_t order;
  size_t radius;
  size_t diameter;
  size_t min_degree;
  size_t max_degree;
  bool is_regular;
  bool is_hamiltonian;
} GeodeticReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. The pointer stays
// valid until the next failing call on the same thread.
const char *geodetic_last_error(void);

// Static description of a status code.
const char *geodetic_status_message(enum GeodeticStatus status);

// Empty graph on `n` vertices.
//
// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_graph_new(size_t n, struct GeodeticGraph **out);

// # Safety
// `g` must come from this library and not be used afterwards. Null is ignored.
void geodetic_graph_free(struct GeodeticGraph *g);

// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_graph_clone(const struct GeodeticGraph *g, struct GeodeticGraph **out);

// # Safety
// `g` must be a live graph handle or null.
size_t geodetic_graph_order(const struct GeodeticGraph *g);

// # Safety
// `g` must be a live graph handle or null.
size_t geodetic_graph_edge_count(const struct GeodeticGraph *g);

// # Safety
// `g` must be a live graph handle.
enum GeodeticStatus geodetic_graph_add_edge(struct GeodeticGraph *g, size_t u, size_t v);

// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_graph_has_edge(const struct GeodeticGraph *g,
                                            size_t u,
                                            size_t v,
                                            bool *out);

// Parse one graph6 line.
//
// # Safety
// `text` must be a NUL-terminated string and `out` valid for writes.
enum GeodeticStatus geodetic_graph_from_graph6(const char *text, struct GeodeticGraph **out);

// graph6 encoding, to be released with [`geodetic_string_free`].
//
// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_graph_to_graph6(const struct GeodeticGraph *g, char **out);

// # Safety
// `s` must come from this library and not be used afterwards. Null is ignored.
void geodetic_string_free(char *s);

// Whether every pair of vertices has at most one shortest path. False for null.
//
// # Safety
// `g` must be a live graph handle or null.
bool geodetic_graph_is_geodetic(const struct GeodeticGraph *g);

// # Safety
// `g` must be a live graph handle or null.
bool geodetic_graph_is_connected(const struct GeodeticGraph *g);

// # Safety
// `g` must be a live graph handle or null.
bool geodetic_graph_is_biconnected(const struct GeodeticGraph *g);

// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_graph_report(const struct GeodeticGraph *g,
                                          struct GeodeticReport *out);

// The canonically relabeled copy of `g`: isomorphic graphs give equal copies.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_graph_canonical(const struct GeodeticGraph *g,
                                             struct GeodeticGraph **out);

// # Safety
// `a` and `b` must be live graph handles and `out` valid for writes.
enum GeodeticStatus geodetic_graphs_isomorphic(const struct GeodeticGraph *a,
                                               const struct GeodeticGraph *b,
                                               bool *out);

// Order of the automorphism group. Fails with `OVERFLOW` above 2^64 - 1.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_graph_automorphisms(const struct GeodeticGraph *g, uint64_t *out);

// Biconnected geodetic graphs on `n` vertices, optionally only the regular
// ones. `threads` of 0 means one.
//
// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_enumerate(size_t n,
                                       size_t threads,
                                       bool regular_only,
                                       struct GeodeticGraphSet **out);

// # Safety
// `set` must be a live set handle or null.
size_t geodetic_set_len(const struct GeodeticGraphSet *set);

// A copy of the `i`-th graph of the set.
//
// # Safety
// `set` must be a live set handle and `out` valid for writes.
enum GeodeticStatus geodetic_set_get(const struct GeodeticGraphSet *set,
                                     size_t i,
                                     struct GeodeticGraph **out);

// # Safety
// `set` must come from this library and not be used afterwards. Null is ignored.
void geodetic_set_free(struct GeodeticGraphSet *set);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_complete(size_t n, struct GeodeticGraph **out);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_cycle(size_t n, struct GeodeticGraph **out);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_petersen(struct GeodeticGraph **out);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_h_graph(size_t m, size_t n, size_t s, struct GeodeticGraph **out);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_big_h_graph(size_t m,
                                         size_t n,
                                         size_t p,
                                         size_t s,
                                         struct GeodeticGraph **out);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_f_graph(size_t k, struct GeodeticGraph **out);

// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_widespread_petersen(size_t t, struct GeodeticGraph **out);

// Incidence graph of the projective plane of prime order `k`.
//
// # Safety
// `out` must be valid for writes.
enum GeodeticStatus geodetic_projective_plane_graph(size_t k, struct GeodeticGraph **out);

// Complete graph on `len` vertices with edge `{i, j}` subdivided by
// `labels[i] + labels[j]` new vertices.
//
// # Safety
// `labels` must point to `len` readable values and `out` be valid for writes.
enum GeodeticStatus geodetic_subdivide_complete(const size_t *labels,
                                                size_t len,
                                                struct GeodeticGraph **out);

// Every edge subdivided by `t` new vertices; `t` must be even.
//
// # Safety
// `g` must be a live graph handle and `out` valid for writes.
enum GeodeticStatus geodetic_subdivide_uniform(const struct GeodeticGraph *g,
                                               size_t t,
                                               struct GeodeticGraph **out);

// Subdivide each edge of the cut separating `side` from the rest by `k`
// vertices.
//
// # Safety
// `g` must be a live graph handle, `side` must point to `len` readable
// values and `out` be valid for writes.
enum GeodeticStatus geodetic_subdivide_cut(const struct GeodeticGraph *g,
                                           const size_t *side,
                                           size_t len,
                                           size_t k,
                                           struct GeodeticGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEODETIC_H */
