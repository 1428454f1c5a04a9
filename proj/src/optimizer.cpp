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

#include "gapkit/optimizer.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "candidates.hpp"
#include "gapkit/error.hpp"
#include "gapkit/gap.hpp"
#include "gapkit/rng.hpp"

namespace gapkit {
namespace {

using detail::CandidateIndex;
using detail::RankTree;

// Shared state of the ranked heuristics: aggregates of the current graph and
// the per-candidate delta ranking.
class RankedSearch {
 public:
  RankedSearch(const Graph& g, const OpinionVector& s, bool full_rescan)
      : s_(s), cands_(g), agg_(g, s), ranks_(cands_.size()),
        full_rescan_(full_rescan) {
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      ranks_.set(i, agg_.delta(s_, cands_[i]));
    }
    solution_.gap_trajectory.push_back(agg_.gap());
  }

  std::size_t candidate_count() const { return cands_.size(); }
  std::size_t committed() const { return solution_.added.size(); }

  // Up to `count` best remaining candidates, best first. They are taken out
  // of the ranking; hand back the ones not committed via restore().
  std::vector<std::size_t> take_top(std::size_t count) {
    if (full_rescan_) rescan_all();
    std::vector<std::size_t> top;
    while (top.size() < count && ranks_.active_count() > 0) {
      std::size_t i = ranks_.top();
      top.push_back(i);
      ranks_.disable(i);
    }
    return top;
  }

  void restore(std::size_t i) { ranks_.set(i, ranks_.value(i)); }

  // Adds the given candidates in order, then refreshes every delta that
  // involves one of their endpoints.
  void commit(const std::vector<std::size_t>& chosen) {
    std::vector<NodeId> touched;
    for (std::size_t i : chosen) {
      const Edge e = cands_[i];
      agg_.add_edge(s_, e);
      solution_.added.push_back(e);
      solution_.gap_trajectory.push_back(agg_.gap());
      touched.push_back(e.u);
      touched.push_back(e.v);
    }
    if (full_rescan_) return;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (NodeId x : touched) {
      cands_.for_each_incident(x, [&](std::size_t i) {
        if (ranks_.active(i)) ranks_.set(i, agg_.delta(s_, cands_[i]));
      });
    }
  }

  SolutionSet finish() {
    solution_.final_gap = solution_.gap_trajectory.back();
    return std::move(solution_);
  }

 private:
  void rescan_all() {
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      if (ranks_.active(i)) ranks_.set(i, agg_.delta(s_, cands_[i]));
    }
  }

  const OpinionVector& s_;
  CandidateIndex cands_;
  NodeAggregates agg_;
  RankTree ranks_;
  bool full_rescan_;
  SolutionSet solution_;
};

SolutionSet trajectory_of(const Graph& g, const OpinionVector& s,
                          std::span<const Edge> edges) {
  NodeAggregates agg(g, s);
  SolutionSet out;
  out.gap_trajectory.push_back(agg.gap());
  for (const Edge& e : edges) {
    agg.add_edge(s, e);
    out.added.push_back(e);
    out.gap_trajectory.push_back(agg.gap());
  }
  out.final_gap = out.gap_trajectory.back();
  return out;
}

}  // namespace

std::vector<Edge> enumerate_missing_edges(const Graph& g) {
  return CandidateIndex(g).edges();
}

SolutionSet random_k(const Graph& g, const OpinionVector& s, std::size_t k,
                     std::uint64_t seed) {
  check_dimensions(g, s);
  std::vector<Edge> pool = enumerate_missing_edges(g);
  detail::require_budget(k, pool.size());
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  return trajectory_of(g, s, std::span(pool).first(k));
}

SolutionSet greedy(const Graph& g, const OpinionVector& s, std::size_t k,
                   const GreedyOptions& options) {
  check_dimensions(g, s);
  if (options.batch == 0) throw_input("batch size must be at least 1");
  RankedSearch search(g, s, options.full_rescan);
  detail::require_budget(k, search.candidate_count());
  while (search.committed() < k) {
    const std::size_t t = std::min(options.batch, k - search.committed());
    search.commit(search.take_top(t));
  }
  return search.finish();
}

SolutionSet random_batch_greedy(const Graph& g, const OpinionVector& s,
                                std::size_t k, std::size_t batch,
                                std::uint64_t seed, bool full_rescan) {
  check_dimensions(g, s);
  if (batch == 0) throw_input("batch size must be at least 1");
  RankedSearch search(g, s, full_rescan);
  detail::require_budget(k, search.candidate_count());
  Rng rng(seed);
  while (search.committed() < k) {
    std::vector<std::size_t> top = search.take_top(batch);
    const std::size_t pick = top.size() == 1 ? 0 : rng.below(top.size());
    for (std::size_t j = 0; j < top.size(); ++j) {
      if (j != pick) search.restore(top[j]);
    }
    search.commit({top[pick]});
  }
  return search.finish();
}

SolutionSet evaluate_solution(const Graph& g, const OpinionVector& s,
                              std::span<const Edge> edges) {
  check_dimensions(g, s);
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u >= e.v || e.v >= g.node_count()) {
      throw_input("invalid edge {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "}");
    }
    if (g.has_edge(e.u, e.v)) {
      throw_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  "} already present");
    }
    if (!seen.insert(e).second) {
      throw_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  "} listed twice");
    }
  }
  return trajectory_of(g, s, edges);
}

}  // namespace gapkit
