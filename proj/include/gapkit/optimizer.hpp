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

#ifndef GAPKIT_OPTIMIZER_HPP
#define GAPKIT_OPTIMIZER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gapkit/graph.hpp"

namespace gapkit {

struct SolutionSet {
  std::vector<Edge> added;            // in commit order
  std::vector<double> gap_trajectory; // gap after 0, 1, ..., |added| edges
  double final_gap = 0.0;
};

// All non-adjacent pairs in lexicographic order.
std::vector<Edge> enumerate_missing_edges(const Graph& g);

// k distinct missing edges drawn uniformly.
SolutionSet random_k(const Graph& g, const OpinionVector& s, std::size_t k,
                     std::uint64_t seed);

struct GreedyOptions {
  std::size_t batch = 1;
  // Rescore every candidate each round instead of only those touching the
  // endpoints just committed. Same result, used as the reference path.
  bool full_rescan = false;
};

// Each round ranks the remaining candidates by their individual gap delta
// (ties by edge) and commits the top min(batch, k - |T|) together.
SolutionSet greedy(const Graph& g, const OpinionVector& s, std::size_t k,
                   const GreedyOptions& options = {});

// Each round commits one edge drawn uniformly from the top `batch` ranked
// candidates.
SolutionSet random_batch_greedy(const Graph& g, const OpinionVector& s,
                                std::size_t k, std::size_t batch,
                                std::uint64_t seed, bool full_rescan = false);

inline constexpr std::size_t kDefaultIncidentCap = 20;
inline constexpr std::uint64_t kDefaultEvaluationCap = 100'000'000;

struct MpcEntry {
  Edge edge;
  double mpc = 0.0;
};

struct MpcTable {
  std::vector<MpcEntry> ranking;  // mpc non-increasing, ties by edge
  double greedy_reduction = 0.0;  // gap(G) - gap(G + greedy-k)
  double top_sum = 0.0;           // sum of the k-1 largest mpc values
};

struct MpcResult {
  MpcTable table;
  std::vector<Edge> survivors;  // lexicographic
};

// Maximum potential contribution of each candidate e = {u, v}: the largest
// reduction e achieves after any k' < k other candidates touching u or v were
// added. Candidates whose mpc plus the k-1 best mpc values cannot beat the
// greedy reduction are dropped. incident_cap bounds the candidate count at
// each endpoint (0 disables); exceeding it throws an infeasibility error.
MpcResult mpc_prune(const Graph& g, const OpinionVector& s, std::size_t k,
                    std::size_t incident_cap = kDefaultIncidentCap);

struct ExactOptions {
  bool use_prune = true;
  std::size_t incident_cap = kDefaultIncidentCap;
  std::uint64_t evaluation_cap = kDefaultEvaluationCap;
};

// Minimizes the gap over every k-subset of (surviving) candidates. Ties go to
// the lexicographically smallest subset.
SolutionSet exact_min(const Graph& g, const OpinionVector& s, std::size_t k,
                      const ExactOptions& options = {});

// Scores a caller-supplied edge set. Throws on duplicates or present edges.
SolutionSet evaluate_solution(const Graph& g, const OpinionVector& s,
                              std::span<const Edge> edges);

}  // namespace gapkit

#endif  // GAPKIT_OPTIMIZER_HPP
