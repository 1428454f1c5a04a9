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

#ifndef GAPKIT_EXPERIMENT_HPP
#define GAPKIT_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gapkit/generators.hpp"
#include "gapkit/optimizer.hpp"

namespace gapkit {

struct ExperimentRecord {
  std::string dataset;
  std::string algorithm;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double gap_before = 0.0;
  double gap_after = 0.0;
  std::vector<double> trajectory;
  std::vector<Edge> added;
  std::int64_t wall_time_ms = 0;
};

struct DatasetSpec {
  std::string name;
  std::map<std::string, std::string> params;  // includes "model"
  std::filesystem::path base_dir;             // resolves relative file paths
};

struct RunSpec {
  std::vector<std::string> datasets;
  std::vector<std::string> algorithms;
  std::vector<std::size_t> ks;
  std::vector<std::uint64_t> seeds;
  std::size_t batch = 5;
  ExactOptions exact;
};

struct ExperimentConfig {
  std::filesystem::path out_dir = "results";  // resolved against the config directory
  std::vector<DatasetSpec> datasets;
  std::vector<RunSpec> runs;
};

inline constexpr std::string_view kAlgorithms[] = {"random", "greedy", "batch",
                                                   "randbatch", "exact"};

// INI-style text: `key = value` lines at top level, then `[dataset NAME]`
// and `[run]` sections. Unknown datasets or algorithms are rejected here,
// before anything runs.
ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::filesystem::path& base_dir);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

GraphWithOpinions build_dataset(const DatasetSpec& spec);

bool is_known_algorithm(std::string_view name);

// One optimizer run. `algorithm` is one of kAlgorithms.
ExperimentRecord run_algorithm(const std::string& dataset, const Graph& g,
                               const OpinionVector& s,
                               const std::string& algorithm, std::size_t k,
                               std::uint64_t seed, std::size_t batch,
                               const ExactOptions& exact = {});

struct ExperimentReport {
  std::size_t cells_run = 0;
  std::size_t cells_skipped = 0;
  std::vector<std::filesystem::path> dataset_csvs;
  std::filesystem::path summary_csv;
};

// Writes <out_dir>/<dataset>.csv (dataset,algorithm,k,seed,gap) and
// <out_dir>/summary.csv (mean over seeds). Rows whose key is already present
// are skipped, so an interrupted run resumes where it stopped.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Shortest decimal form that parses back to the same double.
std::string format_real(double x);

// Accepts "3", "1,2,5", "0..100", "0..100:10" and mixtures of comma parts.
std::vector<std::uint64_t> parse_integer_list(std::string_view text);

}  // namespace gapkit

#endif  // GAPKIT_EXPERIMENT_HPP
