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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "candidates.hpp"
#include "gapkit/error.hpp"
#include "gapkit/gap.hpp"
#include "gapkit/optimizer.hpp"
#include "gapkit/parallel.hpp"

namespace gapkit {
namespace {

using detail::CandidateIndex;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Survivor test slack. An optimal subset's reduction never exceeds the mpc
// bound mathematically; the slack absorbs rounding between the two routes.
constexpr double kPruneSlack = 1e-9;

// best[a] = largest reduction node x's term can show for adding {x, other}
// after `a` other candidates at x were added, over all such a-subsets.
std::vector<double> best_side(const NodeAggregates& agg, const OpinionVector& s,
                              NodeId x, NodeId other,
                              const std::vector<NodeId>& missing,
                              std::size_t max_pre) {
  std::vector<double> pool;
  pool.reserve(missing.size());
  for (NodeId w : missing) {
    if (w != other) pool.push_back(s[w]);
  }
  const double mean = agg.global_mean();
  const double hat = agg.hat_s(x);
  const double deg = static_cast<double>(agg.closed_degree(x));
  const double s_other = s[other];

  std::vector<double> best(max_pre + 1, kNegInf);
  auto score = [&](double added_sum, std::size_t a) {
    const double d = deg + static_cast<double>(a);
    const double before = (hat + added_sum) / d - mean;
    const double after = (hat + added_sum + s_other) / (d + 1.0) - mean;
    return before * before - after * after;
  };
  // Depth-first over combinations in index order.
  auto walk = [&](auto&& self, std::size_t start, std::size_t depth,
                  double sum) -> void {
    best[depth] = std::max(best[depth], score(sum, depth));
    if (depth == max_pre) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      self(self, i + 1, depth + 1, sum + pool[i]);
    }
  };
  walk(walk, 0, 0, 0.0);
  return best;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k,
                                  std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

MpcResult mpc_prune(const Graph& g, const OpinionVector& s, std::size_t k,
                    std::size_t incident_cap) {
  check_dimensions(g, s);
  if (k == 0) throw_input("MPC pruning needs k >= 1");
  const CandidateIndex cands(g);
  detail::require_budget(k, cands.size());

  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> missing(n);
  for (const Edge& e : cands.edges()) {
    missing[e.u].push_back(e.v);
    missing[e.v].push_back(e.u);
  }
  if (incident_cap > 0 && k >= 2) {
    for (NodeId x = 0; x < n; ++x) {
      // Candidates at x other than the one being scored.
      if (missing[x].size() > incident_cap + 1) {
        throw_infeasible("exact path infeasible: node " + g.label(x) + " has " +
                         std::to_string(missing[x].size() - 1) +
                         " incident candidates, cap is " +
                         std::to_string(incident_cap));
      }
    }
  }

  const NodeAggregates agg(g, s);
  const std::size_t max_pre = k - 1;
  std::vector<double> mpc(cands.size(), kNegInf);
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (cands.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(cands.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const Edge e = cands[i];
      auto bu = best_side(agg, s, e.u, e.v, missing[e.u], max_pre);
      auto bv = best_side(agg, s, e.v, e.u, missing[e.v], max_pre);
      double m = kNegInf;
      for (std::size_t a = 0; a <= max_pre; ++a) {
        for (std::size_t b = 0; a + b <= max_pre; ++b) {
          if (bu[a] == kNegInf || bv[b] == kNegInf) continue;
          m = std::max(m, bu[a] + bv[b]);
        }
      }
      mpc[i] = m;
    }
  });

  MpcResult result;
  auto& table = result.table;
  table.ranking.reserve(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    table.ranking.push_back({cands[i], mpc[i]});
  }
  std::sort(table.ranking.begin(), table.ranking.end(),
            [](const MpcEntry& a, const MpcEntry& b) {
              if (a.mpc != b.mpc) return a.mpc > b.mpc;
              return a.edge < b.edge;
            });
  for (std::size_t i = 0; i + 1 < k; ++i) table.top_sum += table.ranking[i].mpc;

  const SolutionSet baseline = greedy(g, s, k);
  table.greedy_reduction = baseline.gap_trajectory.front() - baseline.final_gap;

  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (mpc[i] + table.top_sum >= table.greedy_reduction - kPruneSlack) {
      result.survivors.push_back(cands[i]);
    }
  }
  return result;
}

SolutionSet exact_min(const Graph& g, const OpinionVector& s, std::size_t k,
                      const ExactOptions& options) {
  check_dimensions(g, s);
  std::vector<Edge> pool;
  if (k == 0) return evaluate_solution(g, s, {});
  if (options.use_prune) {
    pool = mpc_prune(g, s, k, options.incident_cap).survivors;
  } else {
    pool = enumerate_missing_edges(g);
    detail::require_budget(k, pool.size());
  }
  if (pool.size() < k) {
    throw_internal("MPC pruning left fewer than k candidates");
  }

  const std::uint64_t subsets =
      saturating_binomial(pool.size(), k, options.evaluation_cap);
  if (subsets > options.evaluation_cap) {
    throw_infeasible("exact path infeasible: more than " +
                     std::to_string(options.evaluation_cap) + " subsets of " +
                     std::to_string(pool.size()) + " candidates");
  }

  const NodeAggregates base(g, s);
  const double gap0 = base.gap();

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> picks;
  };
  // Shard by the first (smallest) index so shard order equals lexicographic
  // order of the subsets it holds.
  const std::size_t shards = pool.size() - k + 1;
  std::vector<Best> shard_best(shards);
  parallel_for(shards, [&](std::size_t first) {
    NodeAggregates agg = base;
    std::vector<std::size_t> picks{first};
    Best best;
    const double d0 = agg.delta(s, pool[first]);
    auto snap0 = agg.snapshot(pool[first]);
    agg.add_edge(s, pool[first]);

    auto walk = [&](auto&& self, std::size_t start, double value) -> void {
      if (picks.size() == k) {
        if (value < best.value) {
          best.value = value;
          best.picks = picks;
        }
        return;
      }
      const std::size_t remaining = k - picks.size();
      for (std::size_t i = start; i + remaining <= pool.size(); ++i) {
        const Edge e = pool[i];
        const double d = agg.delta(s, e);
        auto snap = agg.snapshot(e);
        agg.add_edge(s, e);
        picks.push_back(i);
        self(self, i + 1, value + d);
        picks.pop_back();
        agg.restore(snap);
      }
    };
    walk(walk, first + 1, gap0 + d0);
    agg.restore(snap0);
    shard_best[first] = std::move(best);
  });

  Best best;
  for (Best& b : shard_best) {
    if (b.value < best.value) best = std::move(b);
  }
  if (best.picks.size() != k) throw_internal("exact search found no subset");
  std::vector<Edge> chosen;
  for (std::size_t i : best.picks) chosen.push_back(pool[i]);
  return evaluate_solution(g, s, chosen);
}

}  // namespace gapkit
