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

#include "gapkit/gapkit.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "gapkit/error.hpp"
#include "gapkit/experiment.hpp"
#include "gapkit/gap.hpp"
#include "gapkit/generators.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/optimizer.hpp"
#include "gapkit/spectral.hpp"

struct gapkit_graph {
  gapkit::Graph graph;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

struct gapkit_opinions {
  gapkit::OpinionVector opinions;
  std::size_t missing = 0;
};

struct gapkit_solution {
  gapkit::SolutionSet solution;
};

namespace {

thread_local std::string last_error;

template <typename F>
gapkit_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return GAPKIT_OK;
  } catch (const gapkit::Error& e) {
    last_error = e.what();
    return static_cast<gapkit_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GAPKIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GAPKIT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return GAPKIT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) gapkit::throw_input(std::string("null argument: ") + what);
}

std::string read_file(const char* path) {
  require(path, "path");
  std::ifstream in(path, std::ios::binary);
  if (!in) gapkit::throw_input(std::string("cannot open `") + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const char* path, const std::string& text) {
  require(path, "path");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) gapkit::throw_input(std::string("cannot write `") + path + "`");
  out << text;
  if (!out) gapkit::throw_input(std::string("write failed for `") + path + "`");
}

gapkit_graph* wrap(gapkit::Graph g, std::size_t dup = 0, std::size_t loops = 0) {
  return new gapkit_graph{std::move(g), dup, loops};
}

gapkit_opinions* wrap(gapkit::OpinionVector s, std::size_t missing = 0) {
  return new gapkit_opinions{std::move(s), missing};
}

gapkit_solution* wrap(gapkit::SolutionSet sol) {
  return new gapkit_solution{std::move(sol)};
}

gapkit::Edge to_edge(const gapkit_edge& e) { return gapkit::make_edge(e.u, e.v); }
gapkit_edge to_c(const gapkit::Edge& e) { return {e.u, e.v}; }

gapkit::OpinionDistribution to_dist(gapkit_distribution d) {
  switch (d) {
    case GAPKIT_DIST_GAUSSIAN:
      return gapkit::OpinionDistribution::kGaussian;
    case GAPKIT_DIST_UNIFORM:
      return gapkit::OpinionDistribution::kUniform;
  }
  gapkit::throw_input("unknown distribution");
}

}  // namespace

extern "C" {

const char* gapkit_version(void) { return "1.0.0"; }

const char* gapkit_last_error(void) { return last_error.c_str(); }

gapkit_status gapkit_graph_parse(const char* text, size_t length, gapkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (text == nullptr && length > 0) require(text, "text");
    auto parsed = gapkit::parse_edge_list(std::string_view(text ? text : "", length));
    *out = wrap(std::move(parsed.graph), parsed.duplicate_edges, parsed.self_loops);
  });
}

gapkit_status gapkit_graph_load(const char* path, gapkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    auto parsed = gapkit::parse_edge_list(read_file(path));
    *out = wrap(std::move(parsed.graph), parsed.duplicate_edges, parsed.self_loops);
  });
}

gapkit_status gapkit_graph_from_edges(size_t node_count, const gapkit_edge* edges,
                                      size_t edge_count, gapkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count > 0) require(edges, "edges");
    std::vector<gapkit::Edge> list;
    list.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list.push_back(to_edge(edges[i]));
    *out = wrap(gapkit::Graph::from_edges(node_count, list));
  });
}

gapkit_status gapkit_graph_save(const gapkit_graph* g, const char* path) {
  return guarded([&] {
    require(g, "graph");
    write_file(path, gapkit::format_edge_list(g->graph));
  });
}

void gapkit_graph_free(gapkit_graph* g) { delete g; }

size_t gapkit_graph_node_count(const gapkit_graph* g) {
  return g ? g->graph.node_count() : 0;
}

size_t gapkit_graph_edge_count(const gapkit_graph* g) {
  return g ? g->graph.edge_count() : 0;
}

size_t gapkit_graph_edges(const gapkit_graph* g, gapkit_edge* out, size_t capacity) {
  if (g == nullptr) return 0;
  const auto edges = g->graph.edges();
  if (out != nullptr) {
    const size_t n = std::min(capacity, edges.size());
    for (size_t i = 0; i < n; ++i) out[i] = to_c(edges[i]);
  }
  return edges.size();
}

void gapkit_graph_parse_warnings(const gapkit_graph* g, size_t* duplicates,
                                 size_t* self_loops) {
  if (duplicates) *duplicates = g ? g->duplicates : 0;
  if (self_loops) *self_loops = g ? g->self_loops : 0;
}

size_t gapkit_graph_label(const gapkit_graph* g, uint32_t node, char* buf,
                          size_t capacity) {
  if (g == nullptr || node >= g->graph.node_count()) {
    if (buf && capacity) buf[0] = '\0';
    return 0;
  }
  const std::string label = g->graph.label(node);
  if (buf && capacity) {
    const size_t n = std::min(capacity - 1, label.size());
    std::memcpy(buf, label.data(), n);
    buf[n] = '\0';
  }
  return label.size();
}

gapkit_status gapkit_graph_bfs_subgraph(const gapkit_graph* g, uint32_t root,
                                        size_t limit, gapkit_graph** out,
                                        uint32_t* new_to_old, size_t* subgraph_nodes) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto sub = gapkit::bfs_subgraph(g->graph, root, limit);
    if (new_to_old) std::copy(sub.new_to_old.begin(), sub.new_to_old.end(), new_to_old);
    if (subgraph_nodes) *subgraph_nodes = sub.new_to_old.size();
    *out = wrap(std::move(sub.graph));
  });
}

gapkit_status gapkit_opinions_parse(const char* text, size_t length,
                                    const gapkit_graph* g, gapkit_opinions** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (length > 0) require(text, "text");
    auto parsed =
        gapkit::parse_opinions(std::string_view(text ? text : "", length), g->graph);
    *out = wrap(std::move(parsed.opinions), parsed.missing_nodes);
  });
}

gapkit_status gapkit_opinions_load(const char* path, const gapkit_graph* g,
                                   gapkit_opinions** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto parsed = gapkit::parse_opinions(read_file(path), g->graph);
    *out = wrap(std::move(parsed.opinions), parsed.missing_nodes);
  });
}

gapkit_status gapkit_opinions_from_array(const double* values, size_t count,
                                         gapkit_opinions** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(values, "values");
    *out = wrap(gapkit::OpinionVector(std::vector<double>(values, values + count)));
  });
}

gapkit_status gapkit_opinions_save(const gapkit_opinions* s, const gapkit_graph* g,
                                   const char* path) {
  return guarded([&] {
    require(s, "opinions");
    require(g, "graph");
    gapkit::check_dimensions(g->graph, s->opinions);
    write_file(path, gapkit::format_opinions(g->graph, s->opinions));
  });
}

void gapkit_opinions_free(gapkit_opinions* s) { delete s; }

size_t gapkit_opinions_size(const gapkit_opinions* s) {
  return s ? s->opinions.size() : 0;
}

size_t gapkit_opinions_values(const gapkit_opinions* s, double* out, size_t capacity) {
  if (s == nullptr) return 0;
  const auto values = s->opinions.values();
  if (out != nullptr) {
    std::copy_n(values.begin(), std::min(capacity, values.size()), out);
  }
  return values.size();
}

size_t gapkit_opinions_missing(const gapkit_opinions* s) { return s ? s->missing : 0; }

int gapkit_opinions_in_canonical_domain(const gapkit_opinions* s) {
  return s && s->opinions.in_canonical_domain() ? 1 : 0;
}

gapkit_status gapkit_gap(const gapkit_graph* g, const gapkit_opinions* s, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(s, "opinions");
    require(out, "out");
    *out = gapkit::compute_gap(g->graph, s->opinions);
  });
}

gapkit_status gapkit_gap_delta(const gapkit_graph* g, const gapkit_opinions* s,
                               uint32_t u, uint32_t v, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(s, "opinions");
    require(out, "out");
    const auto agg = gapkit::build_aggregates(g->graph, s->opinions);
    *out = gapkit::gap_delta_edge(g->graph, agg, s->opinions, gapkit::make_edge(u, v))
               .delta;
  });
}

gapkit_status gapkit_spectral_summary(const gapkit_graph* g, gapkit_spectral* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto sum = gapkit::spectral_summary(g->graph);
    *out = {sum.sigma1, sum.sigma2, sum.lambda2_norm_adj, sum.residual};
  });
}

gapkit_status gapkit_constrained_max_gap(const gapkit_graph* g, double radius,
                                         double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = gapkit::constrained_max_gap(g->graph, radius);
  });
}

gapkit_status gapkit_expected_gap(const gapkit_graph* g, double* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = gapkit::expected_gap(g->graph);
  });
}

gapkit_status gapkit_expected_gap_mc(const gapkit_graph* g, size_t samples,
                                     uint64_t seed, gapkit_distribution dist,
                                     double* mean, double* stderr_out) {
  return guarded([&] {
    require(g, "graph");
    require(mean, "mean");
    const auto est =
        gapkit::expected_gap_monte_carlo(g->graph, samples, seed, to_dist(dist));
    *mean = est.mean;
    if (stderr_out) *stderr_out = est.stderr_;
  });
}

gapkit_status gapkit_sbm_closed_form(size_t n_per_block, double p, double q,
                                     int approx, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = gapkit::sbm_gap_closed_form(n_per_block, p, q, approx != 0);
  });
}

gapkit_status gapkit_generate_er(size_t n, double p, uint64_t seed, gapkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gapkit::erdos_renyi(n, p, seed));
  });
}

gapkit_status gapkit_generate_ba(size_t n, size_t m, uint64_t seed, gapkit_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(gapkit::barabasi_albert(n, m, seed));
  });
}

gapkit_status gapkit_generate_sbm(size_t n_per_block, double p, double q,
                                  uint64_t seed, gapkit_graph** graph,
                                  gapkit_opinions** opinions) {
  return guarded([&] {
    require(graph, "graph");
    auto data = gapkit::sbm_sample(n_per_block, p, q, seed);
    *graph = wrap(std::move(data.graph));
    if (opinions) *opinions = wrap(std::move(data.opinions));
  });
}

gapkit_status gapkit_generate_cliques(size_t cliques, gapkit_graph** graph,
                                      gapkit_opinions** opinions) {
  return guarded([&] {
    require(graph, "graph");
    auto data = gapkit::clique_fixture(cliques);
    *graph = wrap(std::move(data.graph));
    if (opinions) *opinions = wrap(std::move(data.opinions));
  });
}

gapkit_status gapkit_remove_random_edges(const gapkit_graph* g, size_t k,
                                         uint64_t seed, gapkit_graph** out,
                                         gapkit_edge* removed) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    if (k > 0) require(removed, "removed");
    auto result = gapkit::remove_random_edges(g->graph, k, seed);
    for (size_t i = 0; i < result.removed.size(); ++i) removed[i] = to_c(result.removed[i]);
    *out = wrap(std::move(result.graph));
  });
}

gapkit_status gapkit_generate_opinions(size_t n, gapkit_distribution dist,
                                       uint64_t seed, gapkit_opinions** out) {
  return guarded([&] {
    require(out, "out");
    switch (to_dist(dist)) {
      case gapkit::OpinionDistribution::kGaussian:
        *out = wrap(gapkit::gaussian_opinions(n, seed));
        break;
      case gapkit::OpinionDistribution::kUniform:
        *out = wrap(gapkit::uniform_opinions(n, -1.0, 1.0, seed));
        break;
    }
  });
}

gapkit_status gapkit_minimize(const gapkit_graph* g, const gapkit_opinions* s,
                              size_t k, gapkit_algorithm algorithm, size_t batch,
                              uint64_t seed, gapkit_solution** out) {
  return guarded([&] {
    require(g, "graph");
    require(s, "opinions");
    require(out, "out");
    if ((algorithm == GAPKIT_ALGO_BATCH || algorithm == GAPKIT_ALGO_RANDBATCH) &&
        batch == 0) {
      gapkit::throw_input("batch size must be at least 1");
    }
    gapkit::SolutionSet sol;
    switch (algorithm) {
      case GAPKIT_ALGO_RANDOM:
        sol = gapkit::random_k(g->graph, s->opinions, k, seed);
        break;
      case GAPKIT_ALGO_GREEDY:
        sol = gapkit::greedy(g->graph, s->opinions, k);
        break;
      case GAPKIT_ALGO_BATCH:
        sol = gapkit::greedy(g->graph, s->opinions, k, {.batch = batch});
        break;
      case GAPKIT_ALGO_RANDBATCH:
        sol = gapkit::random_batch_greedy(g->graph, s->opinions, k, batch, seed);
        break;
      default:
        gapkit::throw_input("unknown algorithm");
    }
    *out = wrap(std::move(sol));
  });
}

gapkit_exact_options gapkit_exact_default_options(void) {
  const gapkit::ExactOptions d;
  return {d.use_prune ? 1 : 0, d.incident_cap, d.evaluation_cap};
}

gapkit_status gapkit_exact(const gapkit_graph* g, const gapkit_opinions* s, size_t k,
                           const gapkit_exact_options* options, gapkit_solution** out) {
  return guarded([&] {
    require(g, "graph");
    require(s, "opinions");
    require(out, "out");
    gapkit::ExactOptions opts;
    if (options) {
      opts.use_prune = options->use_prune != 0;
      opts.incident_cap = options->incident_cap;
      opts.evaluation_cap = options->evaluation_cap;
    }
    *out = wrap(gapkit::exact_min(g->graph, s->opinions, k, opts));
  });
}

gapkit_status gapkit_evaluate(const gapkit_graph* g, const gapkit_opinions* s,
                              const gapkit_edge* edges, size_t count,
                              gapkit_solution** out) {
  return guarded([&] {
    require(g, "graph");
    require(s, "opinions");
    require(out, "out");
    if (count > 0) require(edges, "edges");
    std::vector<gapkit::Edge> list;
    for (size_t i = 0; i < count; ++i) list.push_back(to_edge(edges[i]));
    *out = wrap(gapkit::evaluate_solution(g->graph, s->opinions, list));
  });
}

gapkit_status gapkit_mpc_survivors(const gapkit_graph* g, const gapkit_opinions* s,
                                   size_t k, size_t incident_cap, gapkit_edge* out,
                                   size_t capacity, size_t* count) {
  return guarded([&] {
    require(g, "graph");
    require(s, "opinions");
    require(count, "count");
    const auto result = gapkit::mpc_prune(g->graph, s->opinions, k, incident_cap);
    if (out) {
      const size_t n = std::min(capacity, result.survivors.size());
      for (size_t i = 0; i < n; ++i) out[i] = to_c(result.survivors[i]);
    }
    *count = result.survivors.size();
  });
}

void gapkit_solution_free(gapkit_solution* sol) { delete sol; }

size_t gapkit_solution_size(const gapkit_solution* sol) {
  return sol ? sol->solution.added.size() : 0;
}

gapkit_edge gapkit_solution_edge(const gapkit_solution* sol, size_t i) {
  if (sol == nullptr || i >= sol->solution.added.size()) return {0, 0};
  return to_c(sol->solution.added[i]);
}

size_t gapkit_solution_trajectory(const gapkit_solution* sol, double* out,
                                  size_t capacity) {
  if (sol == nullptr) return 0;
  const auto& t = sol->solution.gap_trajectory;
  if (out) std::copy_n(t.begin(), std::min(capacity, t.size()), out);
  return t.size();
}

double gapkit_solution_final_gap(const gapkit_solution* sol) {
  return sol ? sol->solution.final_gap : 0.0;
}

gapkit_status gapkit_experiment_run(const char* config_path, const char* out_dir,
                                    gapkit_experiment_report* report) {
  return guarded([&] {
    require(config_path, "config_path");
    auto config = gapkit::load_experiment_config(config_path);
    if (out_dir) config.out_dir = out_dir;
    const auto result = gapkit::run_experiment(config);
    if (report) *report = {result.cells_run, result.cells_skipped};
  });
}

}  // extern "C"
