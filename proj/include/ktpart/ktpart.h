/*
 * ktpart: minimum cuts, KT partitions and edge connectivity through
 * 2-respecting cuts of packed spanning trees.
 *
 * All handles are opaque. Functions returning ktp_status report failures
 * through the code and a thread-local message (ktp_last_error). Objects
 * returned through out-parameters are owned by the caller and released
 * with the matching *_free function.
 */
#ifndef KTPART_KTPART_H
#define KTPART_KTPART_H

#include <stddef.h>
#include <stdint.h>

#if defined(KTPART_BUILDING)
#define KTP_API __attribute__((visibility("default")))
#else
#define KTP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ktp_status {
  KTP_OK = 0,
  KTP_ERR_PARSE = 1,
  KTP_ERR_INVALID_ARGUMENT = 2,
  KTP_ERR_DISCONNECTED = 3,
  KTP_ERR_OVERFLOW = 4,
  KTP_ERR_NOT_SIMPLE = 5,
  KTP_ERR_TOO_LARGE = 6,
  KTP_ERR_VERIFICATION = 7,
  KTP_ERR_IO = 8,
  KTP_ERR_INTERNAL = 9
} ktp_status;

typedef enum ktp_weight_mode {
  /* Use the mode named in the input header, integer weights otherwise. */
  KTP_WEIGHTS_AUTO = 0,
  KTP_WEIGHTS_INT = 1,
  KTP_WEIGHTS_FLOAT = 2
} ktp_weight_mode;

typedef struct ktp_graph ktp_graph;
typedef struct ktp_partition ktp_partition;
typedef struct ktp_kt_result ktp_kt_result;
typedef struct ktp_cut ktp_cut;

typedef struct ktp_options {
  /* Trees per bundle: tree_multiplier * ceil(log2 n). */
  double tree_multiplier;
  /* Skeleton sampling constant. */
  double oversampling;
  uint64_t seed;
  int32_t workers;
  /* Second, twice larger bundle plus verification of every per-tree meet. */
  int paranoid;
  /* Exact check of every per-tree meet. */
  int verify;
  /* Edge connectivity: sparsifier sampling constant. */
  double sample_constant;
} ktp_options;

KTP_API void ktp_options_init(ktp_options* options);

KTP_API const char* ktp_last_error(void);
KTP_API const char* ktp_status_name(ktp_status status);
KTP_API const char* ktp_version(void);

/* Parses "a/b", integers and decimals into a reduced fraction. */
KTP_API ktp_status ktp_parse_ratio(const char* text, int64_t* num, int64_t* den);

/* Graphs. Parallel edges are merged and self-loops dropped. */
KTP_API ktp_status ktp_graph_from_text(const char* text, ktp_weight_mode mode, ktp_graph** out);
KTP_API ktp_status ktp_graph_from_file(const char* path, ktp_weight_mode mode, ktp_graph** out);
KTP_API ktp_status ktp_graph_from_edges(int32_t n, size_t m, const int32_t* u, const int32_t* v, const int64_t* w,
                                        ktp_graph** out);
KTP_API ktp_status ktp_graph_from_float_edges(int32_t n, size_t m, const int32_t* u, const int32_t* v,
                                              const double* w, ktp_graph** out);
/* kind: "gnm" (n m [max_w]), "cycle" (n [w]), "bridged-cliques" (a b),
 * "planted-cut" (n m_side cross [max_w]). */
KTP_API ktp_status ktp_graph_generate(const char* kind, const int64_t* params, size_t num_params, uint64_t seed,
                                      ktp_graph** out);
KTP_API void ktp_graph_free(ktp_graph* graph);
KTP_API int32_t ktp_graph_num_vertices(const ktp_graph* graph);
KTP_API size_t ktp_graph_num_edges(const ktp_graph* graph);
KTP_API int ktp_graph_is_float(const ktp_graph* graph);
/* Index base of the source text (0 or 1); output is shifted by it. */
KTP_API int ktp_graph_index_base(const ktp_graph* graph);
KTP_API ktp_status ktp_graph_edge(const ktp_graph* graph, size_t index, int32_t* u, int32_t* v, double* w);
KTP_API ktp_status ktp_graph_to_text(const ktp_graph* graph, char** out);
KTP_API void ktp_string_free(char* text);

/* Partitions of the vertex set; owned by the result they come from. */
KTP_API int32_t ktp_partition_size(const ktp_partition* p);
KTP_API int32_t ktp_partition_num_blocks(const ktp_partition* p);
/* Block ids are dense and numbered by smallest member; -1 if out of range. */
KTP_API int32_t ktp_partition_block_of(const ktp_partition* p, int32_t v);
KTP_API int ktp_partition_equal(const ktp_partition* a, const ktp_partition* b);
/* One line per block, sorted vertex ids plus base. */
KTP_API ktp_status ktp_partition_to_text(const ktp_partition* p, int base, char** out);

/* KT partition for epsilon = eps_num / eps_den in [0, 1/16]. */
KTP_API ktp_status ktp_kt_partition(const ktp_graph* graph, int64_t eps_num, int64_t eps_den,
                                    const ktp_options* options, ktp_kt_result** out);
/* Exhaustive reference over all cuts, n <= 16. */
KTP_API ktp_status ktp_oracle_kt_partition(const ktp_graph* graph, int64_t eps_num, int64_t eps_den,
                                           ktp_kt_result** out);
KTP_API void ktp_kt_result_free(ktp_kt_result* result);
KTP_API double ktp_kt_result_lambda(const ktp_kt_result* result);
/* KTP_ERR_INVALID_ARGUMENT for float graphs. */
KTP_API ktp_status ktp_kt_result_lambda_exact(const ktp_kt_result* result, int64_t* out);
KTP_API double ktp_kt_result_threshold(const ktp_kt_result* result);
/* Meet of the non-trivial near-minimum cuts, or of all of them. */
KTP_API const ktp_partition* ktp_kt_result_partition(const ktp_kt_result* result, int with_trivial);
KTP_API int32_t ktp_kt_result_trees_packed(const ktp_kt_result* result);
KTP_API int32_t ktp_kt_result_trees_distinct(const ktp_kt_result* result);
KTP_API int32_t ktp_kt_result_trees_with_forest(const ktp_kt_result* result);
KTP_API int ktp_kt_result_verified(const ktp_kt_result* result);

/* Cuts with one shore. */
KTP_API ktp_status ktp_min_cut(const ktp_graph* graph, const ktp_options* options, ktp_cut** out);
/* Simple unweighted graphs only (all weights 1). */
KTP_API ktp_status ktp_edge_connectivity(const ktp_graph* graph, const ktp_options* options, ktp_cut** out);
KTP_API ktp_status ktp_oracle_min_cut(const ktp_graph* graph, ktp_cut** out);
KTP_API void ktp_cut_free(ktp_cut* cut);
KTP_API double ktp_cut_weight(const ktp_cut* cut);
KTP_API ktp_status ktp_cut_weight_exact(const ktp_cut* cut, int64_t* out);
KTP_API int32_t ktp_cut_num_vertices(const ktp_cut* cut);
/* 1 if v is on the shore, 0 otherwise, -1 if out of range. */
KTP_API int ktp_cut_side(const ktp_cut* cut, int32_t v);
/* Edge connectivity details; zeros for other cuts. */
KTP_API int32_t ktp_cut_contracted_vertices(const ktp_cut* cut);
KTP_API int64_t ktp_cut_contracted_edges(const ktp_cut* cut);
KTP_API double ktp_cut_contracted_edge_bound(const ktp_cut* cut);
KTP_API int32_t ktp_cut_attempts(const ktp_cut* cut);
/* 1 when the edge connectivity came from the contracted graph, 0 when from
   the minimum degree. */
KTP_API int ktp_cut_from_contraction(const ktp_cut* cut);

#ifdef __cplusplus
}
#endif

#endif
