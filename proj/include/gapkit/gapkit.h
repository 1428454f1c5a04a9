// Copyright 2026 The gapkit Authors.
//
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

/* C interface to the gapkit library.
 *
 * Objects are opaque handles created by gapkit_*_create / load / generate
 * functions and released with the matching *_free. Every fallible call
 * returns a gapkit_status; on failure gapkit_last_error() holds a message
 * for the calling thread. Node ids are dense 0-based indices.
 */
#ifndef GAPKIT_GAPKIT_H
#define GAPKIT_GAPKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GAPKIT_BUILDING_LIBRARY)
#    define GAPKIT_API __declspec(dllexport)
#  else
#    define GAPKIT_API __declspec(dllimport)
#  endif
#else
#  define GAPKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the command-line exit codes. */
typedef enum gapkit_status {
  GAPKIT_OK = 0,
  GAPKIT_ERR_INPUT = 2,
  GAPKIT_ERR_INFEASIBLE = 3,
  GAPKIT_ERR_INTERNAL = 4
} gapkit_status;

typedef struct gapkit_graph gapkit_graph;
typedef struct gapkit_opinions gapkit_opinions;
typedef struct gapkit_solution gapkit_solution;

typedef struct gapkit_edge {
  uint32_t u;
  uint32_t v;
} gapkit_edge;

GAPKIT_API const char* gapkit_version(void);
GAPKIT_API const char* gapkit_last_error(void);

/* ---- graphs ---------------------------------------------------------- */

GAPKIT_API gapkit_status gapkit_graph_parse(const char* text, size_t length,
                                            gapkit_graph** out);
GAPKIT_API gapkit_status gapkit_graph_load(const char* path, gapkit_graph** out);
GAPKIT_API gapkit_status gapkit_graph_from_edges(size_t node_count,
                                                 const gapkit_edge* edges,
                                                 size_t edge_count,
                                                 gapkit_graph** out);
GAPKIT_API gapkit_status gapkit_graph_save(const gapkit_graph* g,
                                           const char* path);
GAPKIT_API void gapkit_graph_free(gapkit_graph* g);

GAPKIT_API size_t gapkit_graph_node_count(const gapkit_graph* g);
GAPKIT_API size_t gapkit_graph_edge_count(const gapkit_graph* g);
/* Edges in lexicographic order; copies min(capacity, edge_count) entries and
 * returns edge_count. */
GAPKIT_API size_t gapkit_graph_edges(const gapkit_graph* g, gapkit_edge* out,
                                     size_t capacity);
/* Duplicate edges and self-loops dropped while parsing. */
GAPKIT_API void gapkit_graph_parse_warnings(const gapkit_graph* g,
                                            size_t* duplicates,
                                            size_t* self_loops);
/* Writes the NUL-terminated original label into buf (truncating), returns
 * the full label length. */
GAPKIT_API size_t gapkit_graph_label(const gapkit_graph* g, uint32_t node,
                                     char* buf, size_t capacity);

/* Induced subgraph on the first `limit` BFS-discovered nodes. If new_to_old
 * is non-NULL it must hold `limit` entries; *subgraph_nodes receives the
 * number filled. */
GAPKIT_API gapkit_status gapkit_graph_bfs_subgraph(const gapkit_graph* g,
                                                   uint32_t root, size_t limit,
                                                   gapkit_graph** out,
                                                   uint32_t* new_to_old,
                                                   size_t* subgraph_nodes);

/* ---- opinions -------------------------------------------------------- */

GAPKIT_API gapkit_status gapkit_opinions_parse(const char* text, size_t length,
                                               const gapkit_graph* g,
                                               gapkit_opinions** out);
GAPKIT_API gapkit_status gapkit_opinions_load(const char* path,
                                              const gapkit_graph* g,
                                              gapkit_opinions** out);
GAPKIT_API gapkit_status gapkit_opinions_from_array(const double* values,
                                                    size_t count,
                                                    gapkit_opinions** out);
GAPKIT_API gapkit_status gapkit_opinions_save(const gapkit_opinions* s,
                                              const gapkit_graph* g,
                                              const char* path);
GAPKIT_API void gapkit_opinions_free(gapkit_opinions* s);

GAPKIT_API size_t gapkit_opinions_size(const gapkit_opinions* s);
GAPKIT_API size_t gapkit_opinions_values(const gapkit_opinions* s, double* out,
                                         size_t capacity);
/* Nodes with no line in the opinion file (defaulted to 0). */
GAPKIT_API size_t gapkit_opinions_missing(const gapkit_opinions* s);
GAPKIT_API int gapkit_opinions_in_canonical_domain(const gapkit_opinions* s);

/* ---- gap evaluation -------------------------------------------------- */

GAPKIT_API gapkit_status gapkit_gap(const gapkit_graph* g,
                                    const gapkit_opinions* s, double* out);
/* Gap change from adding {u, v}; the pair must be a missing edge. */
GAPKIT_API gapkit_status gapkit_gap_delta(const gapkit_graph* g,
                                          const gapkit_opinions* s, uint32_t u,
                                          uint32_t v, double* out);

/* ---- spectral analysis ----------------------------------------------- */

typedef struct gapkit_spectral {
  double sigma1;
  double sigma2;
  double lambda2_norm_adj;
  double residual;
} gapkit_spectral;

GAPKIT_API gapkit_status gapkit_spectral_summary(const gapkit_graph* g,
                                                 gapkit_spectral* out);
GAPKIT_API gapkit_status gapkit_constrained_max_gap(const gapkit_graph* g,
                                                    double radius, double* out);
GAPKIT_API gapkit_status gapkit_expected_gap(const gapkit_graph* g, double* out);

typedef enum gapkit_distribution {
  GAPKIT_DIST_GAUSSIAN = 0,
  GAPKIT_DIST_UNIFORM = 1
} gapkit_distribution;

GAPKIT_API gapkit_status gapkit_expected_gap_mc(const gapkit_graph* g,
                                                size_t samples, uint64_t seed,
                                                gapkit_distribution dist,
                                                double* mean, double* stderr_out);
GAPKIT_API gapkit_status gapkit_sbm_closed_form(size_t n_per_block, double p,
                                                double q, int approx,
                                                double* out);

/* ---- generators ------------------------------------------------------ */

GAPKIT_API gapkit_status gapkit_generate_er(size_t n, double p, uint64_t seed,
                                            gapkit_graph** out);
GAPKIT_API gapkit_status gapkit_generate_ba(size_t n, size_t m, uint64_t seed,
                                            gapkit_graph** out);
GAPKIT_API gapkit_status gapkit_generate_sbm(size_t n_per_block, double p,
                                             double q, uint64_t seed,
                                             gapkit_graph** graph,
                                             gapkit_opinions** opinions);
GAPKIT_API gapkit_status gapkit_generate_cliques(size_t cliques,
                                                 gapkit_graph** graph,
                                                 gapkit_opinions** opinions);
/* removed must hold k entries (may be NULL when k == 0). */
GAPKIT_API gapkit_status gapkit_remove_random_edges(const gapkit_graph* g,
                                                    size_t k, uint64_t seed,
                                                    gapkit_graph** out,
                                                    gapkit_edge* removed);
GAPKIT_API gapkit_status gapkit_generate_opinions(size_t n,
                                                  gapkit_distribution dist,
                                                  uint64_t seed,
                                                  gapkit_opinions** out);

/* ---- optimization ---------------------------------------------------- */

typedef enum gapkit_algorithm {
  GAPKIT_ALGO_RANDOM = 0,
  GAPKIT_ALGO_GREEDY = 1,
  GAPKIT_ALGO_BATCH = 2,
  GAPKIT_ALGO_RANDBATCH = 3
} gapkit_algorithm;

GAPKIT_API gapkit_status gapkit_minimize(const gapkit_graph* g,
                                         const gapkit_opinions* s, size_t k,
                                         gapkit_algorithm algorithm,
                                         size_t batch, uint64_t seed,
                                         gapkit_solution** out);

typedef struct gapkit_exact_options {
  int use_prune;            /* nonzero: MPC pruning before enumeration */
  size_t incident_cap;      /* per-endpoint candidate cap, 0 disables */
  uint64_t evaluation_cap;  /* maximum number of subsets enumerated */
} gapkit_exact_options;

GAPKIT_API gapkit_exact_options gapkit_exact_default_options(void);
GAPKIT_API gapkit_status gapkit_exact(const gapkit_graph* g,
                                      const gapkit_opinions* s, size_t k,
                                      const gapkit_exact_options* options,
                                      gapkit_solution** out);
GAPKIT_API gapkit_status gapkit_evaluate(const gapkit_graph* g,
                                         const gapkit_opinions* s,
                                         const gapkit_edge* edges, size_t count,
                                         gapkit_solution** out);
/* MPC survivors for the exact search; copies min(capacity, count) edges into
 * out and stores the count. */
GAPKIT_API gapkit_status gapkit_mpc_survivors(const gapkit_graph* g,
                                              const gapkit_opinions* s,
                                              size_t k, size_t incident_cap,
                                              gapkit_edge* out, size_t capacity,
                                              size_t* count);
GAPKIT_API void gapkit_solution_free(gapkit_solution* sol);

GAPKIT_API size_t gapkit_solution_size(const gapkit_solution* sol);
GAPKIT_API gapkit_edge gapkit_solution_edge(const gapkit_solution* sol,
                                            size_t i);
/* gap_trajectory has size() + 1 entries. */
GAPKIT_API size_t gapkit_solution_trajectory(const gapkit_solution* sol,
                                             double* out, size_t capacity);
GAPKIT_API double gapkit_solution_final_gap(const gapkit_solution* sol);

/* ---- experiments ----------------------------------------------------- */

typedef struct gapkit_experiment_report {
  size_t cells_run;
  size_t cells_skipped;
} gapkit_experiment_report;

/* Runs a config file. out_dir overrides the config's out_dir when non-NULL. */
GAPKIT_API gapkit_status gapkit_experiment_run(const char* config_path,
                                               const char* out_dir,
                                               gapkit_experiment_report* report);

#ifdef __cplusplus
}
#endif

#endif /* GAPKIT_GAPKIT_H */
