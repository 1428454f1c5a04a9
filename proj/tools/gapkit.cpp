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

// gapkit command-line tool. Talks to the library only through gapkit.h.

#include <charconv>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gapkit/gapkit.h"

namespace {

namespace fs = std::filesystem;

// Thrown after a failed library call; carries the status as exit code.
struct Failure {
  int code;
};

void check(gapkit_status status) {
  if (status != GAPKIT_OK) {
    std::fprintf(stderr, "error: %s\n", gapkit_last_error());
    throw Failure{static_cast<int>(status)};
  }
}

[[noreturn]] void fail(int code, const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  throw Failure{code};
}

struct GraphDeleter {
  void operator()(gapkit_graph* g) const { gapkit_graph_free(g); }
};
struct OpinionsDeleter {
  void operator()(gapkit_opinions* s) const { gapkit_opinions_free(s); }
};
struct SolutionDeleter {
  void operator()(gapkit_solution* s) const { gapkit_solution_free(s); }
};
using GraphPtr = std::unique_ptr<gapkit_graph, GraphDeleter>;
using OpinionsPtr = std::unique_ptr<gapkit_opinions, OpinionsDeleter>;
using SolutionPtr = std::unique_ptr<gapkit_solution, SolutionDeleter>;

GraphPtr load_graph(const std::string& path) {
  gapkit_graph* g = nullptr;
  check(gapkit_graph_load(path.c_str(), &g));
  GraphPtr owned(g);
  size_t dup = 0, loops = 0;
  gapkit_graph_parse_warnings(g, &dup, &loops);
  if (dup > 0) std::fprintf(stderr, "warning: %zu duplicate edges dropped\n", dup);
  if (loops > 0) std::fprintf(stderr, "note: %zu self-loop lines ignored\n", loops);
  return owned;
}

OpinionsPtr load_opinions(const std::string& path, const gapkit_graph* g) {
  gapkit_opinions* s = nullptr;
  check(gapkit_opinions_load(path.c_str(), g, &s));
  OpinionsPtr owned(s);
  if (size_t missing = gapkit_opinions_missing(s); missing > 0) {
    std::fprintf(stderr, "warning: %zu nodes have no opinion, using 0\n", missing);
  }
  if (!gapkit_opinions_in_canonical_domain(s)) {
    std::fprintf(stderr, "warning: opinions outside [-1, 1]\n");
  }
  return owned;
}

std::string label(const gapkit_graph* g, uint32_t node) {
  const size_t len = gapkit_graph_label(g, node, nullptr, 0);
  std::string out(len + 1, '\0');
  gapkit_graph_label(g, node, out.data(), out.size());
  out.resize(len);
  return out;
}

// Shortest round-trip decimal, locale independent.
std::string real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void print_value(const char* name, double x) { std::printf("%s=%.12g\n", name, x); }

uint64_t effective_seed(const CLI::Option* opt, uint64_t given) {
  if (opt->count() > 0) return given;
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(2, "cannot write `" + path.string() + "`");
  return out;
}

int cmd_gap(const std::string& graph_file, const std::string& opinion_file) {
  auto g = load_graph(graph_file);
  auto s = load_opinions(opinion_file, g.get());
  double gap = 0.0;
  check(gapkit_gap(g.get(), s.get(), &gap));
  print_value("gap", gap);
  return 0;
}

int cmd_bounds(const std::string& graph_file, double radius) {
  if (!(radius > 0.0)) fail(2, "radius must be positive");
  auto g = load_graph(graph_file);
  gapkit_spectral sp{};
  check(gapkit_spectral_summary(g.get(), &sp));
  double max_gap = 0.0;
  check(gapkit_constrained_max_gap(g.get(), radius, &max_gap));
  print_value("sigma1", sp.sigma1);
  print_value("sigma2", sp.sigma2);
  print_value("lambda2", sp.lambda2_norm_adj);
  print_value("constrained_max", max_gap);
  const double r2 = radius * radius;
  const double lo = sp.sigma2 * sp.sigma2 * r2;
  const double hi = sp.sigma1 * sp.sigma1 * r2;
  const bool ok = lo - 1e-8 <= max_gap && max_gap <= hi + 1e-8;
  std::printf("bracket sigma2^2*R^2 <= max <= sigma1^2*R^2: %s\n", ok ? "pass" : "fail");
  return ok ? 0 : 4;
}

int cmd_expected(const std::string& graph_file, size_t samples, const CLI::Option* seed_opt,
                 uint64_t seed, const std::string& dist) {
  auto g = load_graph(graph_file);
  double expected = 0.0;
  check(gapkit_expected_gap(g.get(), &expected));
  print_value("expected", expected);
  if (samples == 0) return 0;
  seed = effective_seed(seed_opt, seed);
  std::printf("seed=%" PRIu64 "\n", seed);
  const gapkit_distribution d =
      dist == "uniform" ? GAPKIT_DIST_UNIFORM : GAPKIT_DIST_GAUSSIAN;
  double mean = 0.0, se = 0.0;
  check(gapkit_expected_gap_mc(g.get(), samples, seed, d, &mean, &se));
  print_value("mc_mean", mean);
  print_value("mc_stderr", se);
  print_value("z", se > 0.0 ? (mean - expected) / se : 0.0);
  return 0;
}

struct GenerateArgs {
  std::string model;
  std::string out_prefix;
  size_t n = 100;
  double p = 0.05;
  double q = 0.03;
  size_t m = 4;
  uint64_t seed = 0;
  uint64_t opinion_seed = 0;
  std::string opinions = "uniform";
  size_t remove = 0;
  const CLI::Option* seed_opt = nullptr;
  const CLI::Option* opinion_seed_opt = nullptr;
  const CLI::Option* m_opt = nullptr;
};

int cmd_generate(GenerateArgs a) {
  a.seed = effective_seed(a.seed_opt, a.seed);
  std::printf("seed=%" PRIu64 "\n", a.seed);

  gapkit_graph* raw_g = nullptr;
  gapkit_opinions* raw_s = nullptr;
  if (a.model == "er") {
    check(gapkit_generate_er(a.n, a.p, a.seed, &raw_g));
  } else if (a.model == "ba") {
    check(gapkit_generate_ba(a.n, a.m, a.seed, &raw_g));
  } else if (a.model == "sbm") {
    check(gapkit_generate_sbm(a.n, a.p, a.q, a.seed, &raw_g, &raw_s));
  } else {
    check(gapkit_generate_cliques(a.m_opt->count() ? a.m : 100, &raw_g, &raw_s));
  }
  GraphPtr g(raw_g);
  OpinionsPtr s(raw_s);
  if (!s) {
    const uint64_t os =
        a.opinion_seed_opt->count() ? a.opinion_seed : a.seed + 1;
    const gapkit_distribution d =
        a.opinions == "gaussian" ? GAPKIT_DIST_GAUSSIAN : GAPKIT_DIST_UNIFORM;
    check(gapkit_generate_opinions(gapkit_graph_node_count(g.get()), d, os, &raw_s));
    s.reset(raw_s);
    std::printf("opinion_seed=%" PRIu64 "\n", os);
  }

  if (a.remove > 0) {
    std::vector<gapkit_edge> removed(a.remove);
    gapkit_graph* trimmed = nullptr;
    check(gapkit_remove_random_edges(g.get(), a.remove, a.seed, &trimmed, removed.data()));
    const fs::path path = a.out_prefix + ".removed";
    auto out = open_out(path);
    for (const gapkit_edge& e : removed) {
      out << label(g.get(), e.u) << ' ' << label(g.get(), e.v) << '\n';
    }
    g.reset(trimmed);
    std::printf("removed=%s\n", path.c_str());
  }

  const std::string edges_path = a.out_prefix + ".edges";
  const std::string opinions_path = a.out_prefix + ".opinions";
  check(gapkit_graph_save(g.get(), edges_path.c_str()));
  check(gapkit_opinions_save(s.get(), g.get(), opinions_path.c_str()));
  std::printf("nodes=%zu\nedges=%zu\n", gapkit_graph_node_count(g.get()),
              gapkit_graph_edge_count(g.get()));
  std::printf("graph=%s\nopinions=%s\n", edges_path.c_str(), opinions_path.c_str());
  return 0;
}

// Writes the record row to csv_out and the per-step rows next to it as
// <stem>_trajectory.csv.
void write_record(const fs::path& csv_out, const std::string& dataset,
                  const std::string& algorithm, size_t k, uint64_t seed,
                  const gapkit_graph* g, const gapkit_solution* sol, long long wall_ms) {
  std::vector<double> traj(gapkit_solution_trajectory(sol, nullptr, 0));
  gapkit_solution_trajectory(sol, traj.data(), traj.size());
  {
    auto out = open_out(csv_out);
    out << "dataset,algorithm,k,seed,gap_before,gap_after,wall_time_ms\n";
    out << dataset << ',' << algorithm << ',' << k << ',' << seed << ','
        << real(traj.front()) << ',' << real(gapkit_solution_final_gap(sol)) << ','
        << wall_ms << '\n';
  }
  fs::path traj_path = csv_out;
  traj_path.replace_filename(csv_out.stem().string() + "_trajectory.csv");
  auto out = open_out(traj_path);
  out << "step,u,v,gap\n";
  out << "0,,," << real(traj.front()) << '\n';
  for (size_t i = 0; i < gapkit_solution_size(sol); ++i) {
    const gapkit_edge e = gapkit_solution_edge(sol, i);
    out << i + 1 << ',' << label(g, e.u) << ',' << label(g, e.v) << ','
        << real(traj[i + 1]) << '\n';
  }
}

void report_solution(const gapkit_graph* g, const gapkit_solution* sol) {
  std::vector<double> traj(gapkit_solution_trajectory(sol, nullptr, 0));
  gapkit_solution_trajectory(sol, traj.data(), traj.size());
  print_value("gap_before", traj.front());
  for (size_t i = 0; i < gapkit_solution_size(sol); ++i) {
    const gapkit_edge e = gapkit_solution_edge(sol, i);
    std::printf("add %s %s\n", label(g, e.u).c_str(), label(g, e.v).c_str());
  }
  print_value("gap_after", gapkit_solution_final_gap(sol));
}

struct MinimizeArgs {
  std::string graph_file;
  std::string opinion_file;
  size_t k = 0;
  std::string algo = "greedy";
  size_t batch = 5;
  uint64_t seed = 0;
  std::string csv_out;
  const CLI::Option* seed_opt = nullptr;
};

int cmd_minimize(MinimizeArgs a) {
  auto g = load_graph(a.graph_file);
  auto s = load_opinions(a.opinion_file, g.get());
  gapkit_algorithm algo = GAPKIT_ALGO_GREEDY;
  if (a.algo == "random") algo = GAPKIT_ALGO_RANDOM;
  if (a.algo == "batch") algo = GAPKIT_ALGO_BATCH;
  if (a.algo == "randbatch") algo = GAPKIT_ALGO_RANDBATCH;
  a.seed = effective_seed(a.seed_opt, a.seed);
  std::printf("seed=%" PRIu64 "\n", a.seed);

  const auto start = std::chrono::steady_clock::now();
  gapkit_solution* raw = nullptr;
  check(gapkit_minimize(g.get(), s.get(), a.k, algo, a.batch, a.seed, &raw));
  SolutionPtr sol(raw);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  report_solution(g.get(), sol.get());
  if (!a.csv_out.empty()) {
    write_record(a.csv_out, fs::path(a.graph_file).stem().string(), a.algo, a.k, a.seed,
                 g.get(), sol.get(), ms);
  }
  return 0;
}

struct ExactArgs {
  std::string graph_file;
  std::string opinion_file;
  size_t k = 0;
  bool no_prune = false;
  size_t incident_cap = 0;
  uint64_t evaluation_cap = 0;
  std::string csv_out;
};

int cmd_exact(const ExactArgs& a) {
  auto g = load_graph(a.graph_file);
  auto s = load_opinions(a.opinion_file, g.get());
  gapkit_exact_options opts = gapkit_exact_default_options();
  opts.use_prune = a.no_prune ? 0 : 1;
  opts.incident_cap = a.incident_cap;
  opts.evaluation_cap = a.evaluation_cap;

  const auto start = std::chrono::steady_clock::now();
  gapkit_solution* raw = nullptr;
  check(gapkit_exact(g.get(), s.get(), a.k, &opts, &raw));
  SolutionPtr sol(raw);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  report_solution(g.get(), sol.get());
  if (!a.csv_out.empty()) {
    write_record(a.csv_out, fs::path(a.graph_file).stem().string(), "exact", a.k, 0,
                 g.get(), sol.get(), ms);
  }
  return 0;
}

int cmd_experiment(const std::string& config, const std::string& out_dir) {
  gapkit_experiment_report report{};
  check(gapkit_experiment_run(config.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
                              &report));
  std::printf("cells_run=%zu\ncells_skipped=%zu\n", report.cells_run,
              report.cells_skipped);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perception-gap analysis and minimization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gapkit_version()));

  std::string graph_file, opinion_file;
  auto* gap = app.add_subcommand("gap", "Print the perception gap of a graph and opinions");
  gap->add_option("graph", graph_file, "Edge-list file")->required();
  gap->add_option("opinions", opinion_file, "Opinion file")->required();

  double radius = 1.0;
  auto* bounds = app.add_subcommand("bounds", "Spectral bounds on the worst-case gap");
  bounds->add_option("graph", graph_file, "Edge-list file")->required();
  bounds->add_option("-R,--radius", radius, "Opinion norm budget")->capture_default_str();

  size_t mc_samples = 0;
  uint64_t mc_seed = 0;
  std::string mc_dist = "gaussian";
  auto* expected = app.add_subcommand("expected", "Expected gap under random opinions");
  expected->add_option("graph", graph_file, "Edge-list file")->required();
  expected->add_option("--mc", mc_samples, "Monte-Carlo sample count (0 skips)");
  auto* mc_seed_opt = expected->add_option("--seed", mc_seed, "Monte-Carlo seed");
  expected->add_option("--dist", mc_dist, "Opinion distribution")
      ->check(CLI::IsMember({"gaussian", "uniform"}))
      ->capture_default_str();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic graph and opinions");
  generate->add_option("model", gen.model, "er | ba | sbm | cliques")
      ->required()
      ->check(CLI::IsMember({"er", "ba", "sbm", "cliques"}));
  generate->add_option("out_prefix", gen.out_prefix, "Writes <prefix>.edges, .opinions")
      ->required();
  generate->add_option("--n", gen.n, "Nodes (er, ba) or nodes per block (sbm)")
      ->capture_default_str();
  generate->add_option("--p", gen.p, "Edge / intra-block probability")->capture_default_str();
  generate->add_option("--q", gen.q, "Inter-block probability")->capture_default_str();
  gen.m_opt = generate->add_option("--m", gen.m, "Links per arrival (ba) or clique count")
                  ->capture_default_str();
  gen.seed_opt = generate->add_option("--seed", gen.seed, "Generator seed");
  gen.opinion_seed_opt =
      generate->add_option("--opinion-seed", gen.opinion_seed, "Opinion seed (er, ba)");
  generate->add_option("--opinions", gen.opinions, "Opinion model for er and ba")
      ->check(CLI::IsMember({"uniform", "gaussian"}))
      ->capture_default_str();
  generate->add_option("--remove", gen.remove, "Delete this many random edges afterwards");

  MinimizeArgs mini;
  auto* minimize = app.add_subcommand("minimize", "Add k edges with a heuristic");
  minimize->add_option("graph", mini.graph_file, "Edge-list file")->required();
  minimize->add_option("opinions", mini.opinion_file, "Opinion file")->required();
  minimize->add_option("-k,--k", mini.k, "Edge budget")->required();
  minimize->add_option("--algo", mini.algo, "random | greedy | batch | randbatch")
      ->check(CLI::IsMember({"random", "greedy", "batch", "randbatch"}))
      ->capture_default_str();
  minimize->add_option("-b,--b", mini.batch, "Batch size")->capture_default_str();
  mini.seed_opt = minimize->add_option("--seed", mini.seed, "Seed for random algorithms");
  minimize->add_option("--csv", mini.csv_out, "Record CSV path");

  ExactArgs ex;
  ex.incident_cap = gapkit_exact_default_options().incident_cap;
  ex.evaluation_cap = gapkit_exact_default_options().evaluation_cap;
  auto* exact = app.add_subcommand("exact", "Optimal k-edge set by enumeration");
  exact->add_option("graph", ex.graph_file, "Edge-list file")->required();
  exact->add_option("opinions", ex.opinion_file, "Opinion file")->required();
  exact->add_option("-k,--k", ex.k, "Edge budget")->required();
  exact->add_flag("--no-prune", ex.no_prune, "Enumerate every candidate subset");
  exact->add_option("--incident-cap", ex.incident_cap,
                    "Max candidates per endpoint when pruning (0 disables)")
      ->capture_default_str();
  exact->add_option("--evaluation-cap", ex.evaluation_cap, "Max subsets enumerated")
      ->capture_default_str();
  exact->add_option("--csv", ex.csv_out, "Record CSV path");

  std::string config_file, out_dir;
  auto* experiment = app.add_subcommand("experiment", "Run a config-driven sweep");
  experiment->add_option("config", config_file, "Config file")->required();
  experiment->add_option("--out-dir", out_dir, "Overrides the config's out_dir");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gap) return cmd_gap(graph_file, opinion_file);
    if (*bounds) return cmd_bounds(graph_file, radius);
    if (*expected) return cmd_expected(graph_file, mc_samples, mc_seed_opt, mc_seed, mc_dist);
    if (*generate) return cmd_generate(gen);
    if (*minimize) return cmd_minimize(mini);
    if (*exact) return cmd_exact(ex);
    if (*experiment) return cmd_experiment(config_file, out_dir);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
  return 4;
}
