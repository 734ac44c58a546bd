/*
 * orientdp C interface.
 *
 * All objects are opaque handles created by a function of this API and
 * released with the matching *_free function. Every fallible call returns an
 * odp_status; on failure a description of the most recent error on the
 * calling thread is available from odp_last_error().
 */
#ifndef ORIENTDP_ORIENTDP_H
#define ORIENTDP_ORIENTDP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ORIENTDP_BUILDING_LIBRARY)
#    define ODP_API __declspec(dllexport)
#  else
#    define ODP_API __declspec(dllimport)
#  endif
#else
#  define ODP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum odp_status {
  ODP_OK = 0,
  ODP_ERR_INVALID_ARGUMENT = 1,
  ODP_ERR_PARSE = 2,
  ODP_ERR_CAP_EXCEEDED = 3,
  ODP_ERR_NOT_CONNECTED = 4,
  ODP_ERR_INVALID_DECOMPOSITION = 5,
  ODP_ERR_NON_PLANAR = 6,
  ODP_ERR_BUFFER_TOO_SMALL = 7,
  ODP_ERR_INTERNAL = 8
} odp_status;

/* A distance in N u {inf}; `value` is meaningful only when is_infinite == 0. */
typedef struct odp_distance {
  uint64_t value;
  int is_infinite;
} odp_distance;

typedef struct odp_graph odp_graph;
typedef struct odp_decomposition odp_decomposition;
typedef struct odp_oracle_result odp_oracle_result;
typedef struct odp_route_report odp_route_report;
typedef struct odp_verdict odp_verdict;

ODP_API const char* odp_version(void);
ODP_API const char* odp_status_string(odp_status status);
/* Message of the last failed call on this thread; "" if none. */
ODP_API const char* odp_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

ODP_API odp_status odp_graph_parse(const char* text, size_t length, odp_graph** out);
/* family: "path", "cycle", "complete", "grid" or "book". */
ODP_API odp_status odp_graph_generate(const char* family, uint32_t parameter, odp_graph** out);
ODP_API odp_status odp_graph_from_edges(uint32_t n, const uint32_t* endpoints, size_t edge_count,
                                        odp_graph** out);
ODP_API void odp_graph_free(odp_graph* graph);

ODP_API size_t odp_graph_vertex_count(const odp_graph* graph);
ODP_API size_t odp_graph_edge_count(const odp_graph* graph);
/* Endpoints of canonical edge i, with *u < *v. */
ODP_API odp_status odp_graph_edge(const odp_graph* graph, size_t i, uint32_t* u, uint32_t* v);

/*
 * Canonical edge-list text. Writes at most `capacity` bytes including the
 * terminating NUL and stores the required size (including NUL) in *needed.
 * Returns ODP_ERR_BUFFER_TOO_SMALL when the text does not fit.
 */
ODP_API odp_status odp_graph_serialize(const odp_graph* graph, char* buffer, size_t capacity,
                                       size_t* needed);

ODP_API odp_status odp_graph_contract_edge(const odp_graph* graph, size_t edge, odp_graph** out);

ODP_API odp_status odp_graph_connectivity(const odp_graph* graph, int* connected, size_t* bridges,
                                          size_t capacity, size_t* bridge_count);

ODP_API odp_status odp_graph_undirected_diameter(const odp_graph* graph, odp_distance* out);

/* Diameter and Wiener index of the graph oriented by `bits` (one per edge,
 * 0 = lesser endpoint to greater). Either output may be NULL. */
ODP_API odp_status odp_orientation_measures(const odp_graph* graph, const uint8_t* bits,
                                            size_t bit_count, odp_distance* diameter,
                                            odp_distance* wiener);

/* ---- exhaustive oracle ------------------------------------------------- */

typedef struct odp_oracle_options {
  size_t edge_cap;        /* refuse graphs with more edges */
  int symmetry_halving;   /* fix edge 0 low-to-high */
  int prune_sources_sinks;
  unsigned threads;       /* 0 = hardware concurrency */
} odp_oracle_options;

ODP_API odp_oracle_options odp_oracle_default_options(void);

ODP_API odp_status odp_oracle_min_diameter(const odp_graph* graph, const odp_oracle_options* options,
                                           odp_oracle_result** out);
ODP_API odp_status odp_oracle_min_wiener(const odp_graph* graph, const odp_oracle_options* options,
                                         odp_oracle_result** out);
/* The result's optimum is 0 when feasible and infinite otherwise. */
ODP_API odp_status odp_oracle_decide_diameter(const odp_graph* graph, uint64_t l,
                                              const odp_oracle_options* options,
                                              odp_oracle_result** out);
ODP_API void odp_oracle_result_free(odp_oracle_result* result);

ODP_API odp_distance odp_oracle_result_optimum(const odp_oracle_result* result);
ODP_API uint64_t odp_oracle_result_explored(const odp_oracle_result* result);
/* Witness bits, or NULL when the result carries none. */
ODP_API const uint8_t* odp_oracle_result_witness(const odp_oracle_result* result, size_t* bit_count);

/* ---- tree decompositions ----------------------------------------------- */

typedef enum odp_strategy { ODP_MIN_DEGREE = 0, ODP_MIN_FILL = 1 } odp_strategy;

ODP_API odp_status odp_decomposition_heuristic(const odp_graph* graph, odp_strategy strategy,
                                               odp_decomposition** out);
ODP_API odp_status odp_decomposition_parse(const char* text, size_t length, odp_decomposition** out);
ODP_API void odp_decomposition_free(odp_decomposition* decomposition);

ODP_API long odp_decomposition_width(const odp_decomposition* decomposition);
ODP_API size_t odp_decomposition_node_count(const odp_decomposition* decomposition);
ODP_API const uint32_t* odp_decomposition_bag(const odp_decomposition* decomposition, size_t node,
                                              size_t* size);
ODP_API size_t odp_decomposition_tree_edge_count(const odp_decomposition* decomposition);
ODP_API odp_status odp_decomposition_tree_edge(const odp_decomposition* decomposition, size_t i,
                                               size_t* a, size_t* b);
/* Text format "b <id> v..." / "t <a> <b>"; same buffer protocol as
 * odp_graph_serialize. */
ODP_API odp_status odp_decomposition_serialize(const odp_decomposition* decomposition, char* buffer,
                                               size_t capacity, size_t* needed);

/* *valid receives 1 or 0. When `report` is non-NULL, the newline-separated
 * list of violations ("" when valid) is written with the usual buffer
 * protocol; with a NULL report only *needed is filled in. */
ODP_API odp_status odp_decomposition_validate(const odp_graph* graph,
                                              const odp_decomposition* decomposition, int* valid,
                                              char* report, size_t capacity, size_t* needed);

ODP_API size_t odp_treewidth_lower_bound(const odp_graph* graph);

/* ---- orientation DP ---------------------------------------------------- */

ODP_API odp_status odp_dp_decide(const odp_graph* graph, const odp_decomposition* decomposition,
                                 uint64_t l, int want_witness, int prune_dead, odp_verdict** out);
ODP_API void odp_verdict_free(odp_verdict* verdict);
ODP_API int odp_verdict_feasible(const odp_verdict* verdict);
ODP_API size_t odp_verdict_peak_states(const odp_verdict* verdict);
ODP_API const uint8_t* odp_verdict_witness(const odp_verdict* verdict, size_t* bit_count);

/* ---- pipeline ---------------------------------------------------------- */

ODP_API uint64_t odp_wiener_threshold(const odp_graph* graph);

typedef struct odp_theorem1_report {
  int holds;
  uint64_t threshold;
  odp_distance min_diameter;
  odp_distance min_wiener;
  uint64_t orientations_explored;
} odp_theorem1_report;

ODP_API odp_status odp_verify_theorem1(const odp_graph* graph, const odp_oracle_options* options,
                                       odp_theorem1_report* out);

ODP_API odp_status odp_decide_orientation(const odp_graph* graph, uint64_t l, int assert_planar,
                                          odp_strategy strategy, odp_route_report** out);
ODP_API void odp_route_report_free(odp_route_report* report);
/* 1 = yes, 0 = no. */
ODP_API int odp_route_report_answer(const odp_route_report* report);
/* "disconnected", "bridge", "undirected-diameter", "dp", "treewidth-bound". */
ODP_API const char* odp_route_report_route(const odp_route_report* report);
/* -1 when no decomposition was built. */
ODP_API long odp_route_report_width(const odp_route_report* report);
ODP_API uint64_t odp_route_report_threshold(const odp_route_report* report);
ODP_API size_t odp_route_report_peak_states(const odp_route_report* report);
ODP_API double odp_route_report_millis(const odp_route_report* report);
ODP_API const uint8_t* odp_route_report_witness(const odp_route_report* report, size_t* bit_count);

/* Least l <= l_max admitting an orientation of diameter <= l. On success
 * *value is infinite when none exists; otherwise the witness (one bit per
 * edge) is written to `witness`, which must hold edge_count bytes, or may be
 * NULL. */
ODP_API odp_status odp_minimize_diameter(const odp_graph* graph, uint64_t l_max,
                                         odp_distance* value, uint8_t* witness);

#ifdef __cplusplus
}
#endif

#endif /* ORIENTDP_ORIENTDP_H */
