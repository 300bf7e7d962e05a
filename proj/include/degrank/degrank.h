// Copyright 2026 The degrank Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the degrank library.
 *
 * Objects are opaque handles created by degrank_* constructors and released
 * with the matching *_free function. Every fallible call returns a
 * degrank_status; on failure degrank_last_error() describes the problem for
 * the calling thread and output arguments are left untouched. */

#ifndef DEGRANK_DEGRANK_H_
#define DEGRANK_DEGRANK_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DEGRANK_BUILDING_LIBRARY)
#define DEGRANK_API __declspec(dllexport)
#else
#define DEGRANK_API __declspec(dllimport)
#endif
#else
#define DEGRANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum degrank_status {
  DEGRANK_OK = 0,
  DEGRANK_ERR_INVALID_ARGUMENT = 1,
  DEGRANK_ERR_SELF_LOOP = 2,
  DEGRANK_ERR_DUPLICATE_EDGE = 3,
  DEGRANK_ERR_EMPTY_EDGE_SET = 4,
  DEGRANK_ERR_PARSE = 5,
  DEGRANK_ERR_IO = 6,
  DEGRANK_ERR_INVALID_CONFIG = 7,
  DEGRANK_ERR_STUCK_WALK = 8,
  DEGRANK_ERR_INSUFFICIENT_GRAPH = 9,
  DEGRANK_ERR_NO_COLLISIONS = 10,
  DEGRANK_ERR_DEGENERATE_DEGREES = 11,
  DEGRANK_ERR_NON_SCALE_FREE = 12,
  DEGRANK_ERR_UNKNOWN_NODE = 13,
  DEGRANK_ERR_INTERNAL = 99
} degrank_status;

typedef struct degrank_graph degrank_graph;
typedef struct degrank_sample degrank_sample;
typedef struct degrank_table degrank_table;

typedef struct degrank_ba_config {
  uint64_t nodes;          /* n */
  uint64_t seed_nodes;     /* n0, disconnected at start */
  uint64_t edges_per_node; /* m */
  uint64_t rng_seed;
} degrank_ba_config;

typedef struct degrank_walk_config {
  uint64_t burn_in_steps;
  uint64_t sample_count;
  uint64_t thinning_interval;
  uint64_t rng_seed;
  int has_start_node; /* 0: degree-proportional random start */
  uint32_t start_node;
} degrank_walk_config;

typedef struct degrank_walk_stats {
  uint64_t steps;
  uint64_t sample_count;
  uint64_t unique_node_count;
} degrank_walk_stats;

typedef struct degrank_params {
  double n_est;
  uint32_t k_min;
  uint32_t k_max;
  double d_avg;
  double gamma;
  double c;
  double a;
  double b;
} degrank_params;

typedef struct degrank_degree_stats {
  uint64_t node_count;
  uint64_t edge_count;
  uint32_t k_min;
  uint32_t k_max;
  double d_avg;
} degrank_degree_stats;

typedef struct degrank_report {
  uint64_t network_size;
  double average_error;
  double std_dev;
  double pct_error;
} degrank_report;

typedef struct degrank_median_split {
  double above;
  double below;
  uint64_t above_rows;
  uint64_t below_rows;
} degrank_median_split;

DEGRANK_API const char* degrank_version(void);
DEGRANK_API const char* degrank_status_name(degrank_status status);
DEGRANK_API const char* degrank_last_error(void);
/* Line of the last DEGRANK_ERR_PARSE on this thread, 0 if none. */
DEGRANK_API uint64_t degrank_last_error_line(void);

/* Graphs. `pairs` holds edge_count (u, v) pairs, 2 * edge_count ids. */
DEGRANK_API degrank_status degrank_graph_from_edges(const uint32_t* pairs, size_t edge_count,
                                                    degrank_graph** out);
DEGRANK_API degrank_status degrank_graph_load(const char* path, degrank_graph** out);
/* header may be NULL; each of its lines becomes a "# " comment. */
DEGRANK_API degrank_status degrank_graph_save(const degrank_graph* g, const char* path,
                                              const char* header);
DEGRANK_API void degrank_graph_free(degrank_graph* g);
DEGRANK_API uint64_t degrank_graph_node_count(const degrank_graph* g);
DEGRANK_API uint64_t degrank_graph_edge_count(const degrank_graph* g);
DEGRANK_API degrank_status degrank_graph_degree(const degrank_graph* g, uint32_t node,
                                                uint32_t* out);
DEGRANK_API degrank_status degrank_graph_degree_stats(const degrank_graph* g,
                                                      degrank_degree_stats* out);
/* Two-call pattern: pass capacity 0 to learn the number of distinct degrees. */
DEGRANK_API degrank_status degrank_graph_histogram(const degrank_graph* g, uint32_t* degrees,
                                                   uint64_t* counts, size_t capacity,
                                                   size_t* len);
DEGRANK_API degrank_status degrank_graph_exact_rank(const degrank_graph* g, uint32_t node,
                                                    uint64_t* out);

/* Barabasi-Albert generation. */
DEGRANK_API void degrank_ba_config_default(degrank_ba_config* cfg);
DEGRANK_API degrank_status degrank_generate_ba(const degrank_ba_config* cfg, degrank_graph** out);

/* Random-walk sampling and estimation. */
DEGRANK_API void degrank_walk_config_default(degrank_walk_config* cfg);
DEGRANK_API uint64_t degrank_default_sample_count(uint64_t budget_hint);
DEGRANK_API degrank_status degrank_random_walk(const degrank_graph* g,
                                               const degrank_walk_config* cfg,
                                               degrank_sample** out);
/* Builds a sample from explicit observations; steps is reported as 0. */
DEGRANK_API degrank_status degrank_sample_from_observations(const uint32_t* nodes,
                                                            const uint32_t* degrees, size_t len,
                                                            degrank_sample** out);
DEGRANK_API void degrank_sample_free(degrank_sample* s);
DEGRANK_API degrank_status degrank_sample_stats(const degrank_sample* s, degrank_walk_stats* out);
DEGRANK_API degrank_status degrank_sample_observation(const degrank_sample* s, size_t index,
                                                      uint32_t* node, uint32_t* degree);
DEGRANK_API degrank_status degrank_estimate_size(const degrank_sample* s, double* out);
DEGRANK_API degrank_status degrank_estimate_avg_degree(const degrank_sample* s, double* out);
DEGRANK_API degrank_status degrank_estimate_degree_bounds(const degrank_sample* s,
                                                          uint32_t* k_min, uint32_t* k_max);
DEGRANK_API degrank_status degrank_fit_params(double n_est, uint32_t k_min, uint32_t k_max,
                                              double d_avg, degrank_params* out);
DEGRANK_API degrank_status degrank_ground_truth_params(const degrank_graph* g,
                                                       degrank_params* out);
/* stats may be NULL. */
DEGRANK_API degrank_status degrank_estimate_all(const degrank_graph* g,
                                                const degrank_walk_config* cfg,
                                                degrank_params* out, degrank_walk_stats* stats);

/* Rank prediction and evaluation. */
DEGRANK_API degrank_status degrank_predict_rank(const degrank_params* p, double k, int clamp,
                                                double* out);
DEGRANK_API degrank_status degrank_evaluate(const degrank_graph* g, const degrank_params* p,
                                            int per_node_weighting, int clamp,
                                            degrank_table** table, degrank_report* report);
DEGRANK_API void degrank_table_free(degrank_table* t);
DEGRANK_API uint64_t degrank_table_row_count(const degrank_table* t);
DEGRANK_API degrank_status degrank_table_row(const degrank_table* t, size_t index,
                                             uint32_t* degree, uint64_t* actual_rank,
                                             double* predicted_rank, double* abs_error);
DEGRANK_API degrank_status degrank_table_median_split(const degrank_table* t,
                                                      degrank_median_split* out);
DEGRANK_API degrank_status degrank_table_write_csv(const degrank_table* t, const char* path);
/* Recomputes the per-degree report from a CSV written by
 * degrank_table_write_csv. */
DEGRANK_API degrank_status degrank_table_summarize_csv(const char* path, uint64_t network_size,
                                                       degrank_report* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* DEGRANK_DEGRANK_H_ */
