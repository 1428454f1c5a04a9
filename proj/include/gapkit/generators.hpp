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

#ifndef GAPKIT_GENERATORS_HPP
#define GAPKIT_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gapkit/graph.hpp"

namespace gapkit {

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Growth from an m-clique; each arriving node links to m distinct existing
// nodes drawn proportionally to their current degree.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

struct GraphWithOpinions {
  Graph graph;
  OpinionVector opinions;
};

// Two blocks of n_per_block nodes: ids [0, n) hold +1, [n, 2n) hold -1.
GraphWithOpinions sbm_sample(std::size_t n_per_block, double p, double q,
                             std::uint64_t seed);

// Expected adjacency of the two-block model, unit diagonal.
WeightedGraph sbm_expected(std::size_t n_per_block, double p, double q);

// +1 for the first half of the nodes, -1 for the second.
OpinionVector block_opinions(std::size_t n_per_block);

// M disjoint K4s; clique c owns nodes 4c..4c+3 with opinions +1,+1,-1,-1.
GraphWithOpinions clique_fixture(std::size_t cliques);

struct EdgeRemoval {
  Graph graph;
  std::vector<Edge> removed;  // sorted
};

EdgeRemoval remove_random_edges(const Graph& g, std::size_t k,
                                std::uint64_t seed);

OpinionVector uniform_opinions(std::size_t n, double lo, double hi,
                               std::uint64_t seed);
OpinionVector gaussian_opinions(std::size_t n, std::uint64_t seed);

// Generalized-partition reduction: K_N on nodes 1..N with s_i = v_i / v_max,
// plus an isolated node 0 (u0) holding t = W / N where W = sum s_i. Adding
// any k edges from u0 to an endpoint set B yields gap
// ((sum_B v - b) / (v_max (k + 1)))^2 with b = k/N * sum v.
struct GppInstance {
  std::vector<long long> values;
  std::size_t k = 0;
  Graph graph;
  OpinionVector opinions;
  double target_b = 0.0;
  long long v_max = 0;
  double total_w = 0.0;

  static constexpr NodeId kHub = 0;

  NodeId node_of(std::size_t value_index) const {
    return static_cast<NodeId>(value_index + 1);
  }
  // The N missing edges {u0, u_i}.
  std::vector<Edge> hub_candidates() const;
  // Predicted gap when the chosen value indices are linked to u0.
  double predicted_gap(const std::vector<std::size_t>& chosen) const;
};

GppInstance gpp_instance(std::vector<long long> values, std::size_t k);

}  // namespace gapkit

#endif  // GAPKIT_GENERATORS_HPP
