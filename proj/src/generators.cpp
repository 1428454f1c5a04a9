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

#include "gapkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "gapkit/error.hpp"
#include "gapkit/rng.hpp"

namespace gapkit {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw_input(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw_input("ER graph needs at least one node");
  require_probability(p, "p");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw_input("BA attachment count m must be at least 1");
  if (n <= m) throw_input("BA graph needs n > m");
  Rng rng(seed);
  std::vector<Edge> edges;
  // Each endpoint occurrence appears once, so uniform draws from this list
  // are degree-proportional.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u < m; ++u) {
    for (NodeId v = u + 1; v < m; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId node = static_cast<NodeId>(m); node < n; ++node) {
    targets.clear();
    while (targets.size() < m) {
      // A lone seed node has degree zero; fall back to uniform choice.
      NodeId pick = endpoints.empty()
                        ? static_cast<NodeId>(rng.below(node))
                        : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (NodeId t : targets) {
      edges.push_back(make_edge(node, t));
      endpoints.push_back(node);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, edges);
}

OpinionVector block_opinions(std::size_t n_per_block) {
  std::vector<double> s(2 * n_per_block, -1.0);
  std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n_per_block), 1.0);
  return OpinionVector(std::move(s));
}

GraphWithOpinions sbm_sample(std::size_t n_per_block, double p, double q,
                             std::uint64_t seed) {
  if (n_per_block == 0) throw_input("SBM block size must be positive");
  require_probability(p, "p");
  require_probability(q, "q");
  if (!(q < p)) throw_input("SBM requires q < p");
  const std::size_t n = 2 * n_per_block;
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const bool same = (u < n_per_block) == (v < n_per_block);
      if (rng.bernoulli(same ? p : q)) edges.push_back({u, v});
    }
  }
  return {Graph::from_edges(n, edges), block_opinions(n_per_block)};
}

WeightedGraph sbm_expected(std::size_t n_per_block, double p, double q) {
  if (n_per_block == 0) throw_input("SBM block size must be positive");
  require_probability(p, "p");
  require_probability(q, "q");
  const std::size_t n = 2 * n_per_block;
  std::vector<double> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool same = (i < n_per_block) == (j < n_per_block);
      w[i * n + j] = i == j ? 1.0 : (same ? p : q);
    }
  }
  return WeightedGraph(n, std::move(w));
}

GraphWithOpinions clique_fixture(std::size_t cliques) {
  if (cliques == 0) throw_input("clique fixture needs at least one clique");
  std::vector<Edge> edges;
  std::vector<double> s;
  for (std::size_t c = 0; c < cliques; ++c) {
    const auto base = static_cast<NodeId>(4 * c);
    for (NodeId a = 0; a < 4; ++a) {
      for (NodeId b = a + 1; b < 4; ++b) edges.push_back({base + a, base + b});
    }
    s.insert(s.end(), {1.0, 1.0, -1.0, -1.0});
  }
  return {Graph::from_edges(4 * cliques, edges), OpinionVector(std::move(s))};
}

EdgeRemoval remove_random_edges(const Graph& g, std::size_t k,
                                std::uint64_t seed) {
  std::vector<Edge> pool = g.edges();
  if (k > pool.size()) {
    throw_input("cannot remove " + std::to_string(k) + " edges from a graph with " +
                std::to_string(pool.size()));
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  EdgeRemoval out;
  out.removed.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.removed.begin(), out.removed.end());
  out.graph = g.without_edges(out.removed);
  out.graph.set_labels(g.labels());
  return out;
}

OpinionVector uniform_opinions(std::size_t n, double lo, double hi,
                               std::uint64_t seed) {
  if (!(lo <= hi)) throw_input("uniform opinion range is empty");
  Rng rng(seed);
  std::vector<double> s(n);
  for (double& x : s) x = rng.uniform(lo, hi);
  return OpinionVector(std::move(s));
}

OpinionVector gaussian_opinions(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> s(n);
  for (double& x : s) x = rng.normal();
  return OpinionVector(std::move(s));
}

std::vector<Edge> GppInstance::hub_candidates() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back({kHub, node_of(i)});
  return out;
}

double GppInstance::predicted_gap(const std::vector<std::size_t>& chosen) const {
  if (chosen.size() != k) throw_input("GPP subset must have exactly k elements");
  double sum = 0.0;
  for (std::size_t i : chosen) sum += static_cast<double>(values.at(i));
  const double r = (sum - target_b) /
                   (static_cast<double>(v_max) * static_cast<double>(k + 1));
  return r * r;
}

GppInstance gpp_instance(std::vector<long long> values, std::size_t k) {
  const std::size_t n = values.size();
  if (n == 0) throw_input("GPP needs at least one value");
  if (k < 1 || k > n) throw_input("GPP budget must satisfy 1 <= k <= N");
  long long v_max = 0;
  for (long long v : values) v_max = std::max(v_max, std::llabs(v));
  if (v_max == 0) throw_input("GPP values are all zero");

  GppInstance inst;
  inst.k = k;
  inst.v_max = v_max;
  double value_sum = 0.0;
  for (long long v : values) value_sum += static_cast<double>(v);
  inst.target_b = static_cast<double>(k) / static_cast<double>(n) * value_sum;

  std::vector<double> s(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    s[i + 1] = static_cast<double>(values[i]) / static_cast<double>(v_max);
    inst.total_w += s[i + 1];
  }
  s[GppInstance::kHub] = inst.total_w / static_cast<double>(n);

  std::vector<Edge> edges;
  for (NodeId a = 1; a <= n; ++a) {
    for (NodeId b = a + 1; b <= n; ++b) edges.push_back({a, b});
  }
  inst.graph = Graph::from_edges(n + 1, edges);
  inst.opinions = OpinionVector(std::move(s));
  inst.values = std::move(values);
  return inst;
}

}  // namespace gapkit
