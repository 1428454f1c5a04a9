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

#ifndef GAPKIT_GAP_HPP
#define GAPKIT_GAP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "gapkit/graph.hpp"

namespace gapkit {

// Sum over nodes of (local closed-neighborhood mean - global mean)^2.
double compute_gap(const Graph& g, const OpinionVector& s);

// ||D^-1 W S_centered||^2 with D the row sums of W.
double compute_gap_weighted(const WeightedGraph& wg, const OpinionVector& s);

struct GapDelta {
  Edge edge;
  double delta = 0.0;
};

// Orders by delta, then lexicographically by edge.
inline bool delta_less(const GapDelta& a, const GapDelta& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  return a.edge < b.edge;
}

// Per-node closed-neighborhood opinion sums and closed degrees. Adding an
// edge touches exactly two entries, which is what makes single-edge deltas
// O(1).
class NodeAggregates {
 public:
  NodeAggregates() = default;
  NodeAggregates(const Graph& g, const OpinionVector& s);

  std::size_t size() const noexcept { return hat_s_.size(); }
  double hat_s(NodeId i) const { return hat_s_[i]; }
  std::size_t closed_degree(NodeId i) const { return closed_deg_[i]; }
  double global_mean() const noexcept { return global_mean_; }

  const std::vector<double>& hat_s() const noexcept { return hat_s_; }
  const std::vector<std::size_t>& closed_degrees() const noexcept {
    return closed_deg_;
  }

  // Gap evaluated from the cached sums.
  double gap() const;

  // Contribution (hat_s/d - mean)^2 of one node.
  double node_term(NodeId i) const;

  // Gap change from adding e. Does not check that e is absent.
  double delta(const OpinionVector& s, Edge e) const;

  // Commits e into the cached sums. Local-search loops use this together
  // with remove_edge to walk subsets without copying.
  void add_edge(const OpinionVector& s, Edge e);
  void remove_edge(const OpinionVector& s, Edge e);

  // Exact pre-edit values of both endpoints; restore() undoes add_edge
  // without floating-point drift.
  struct Snapshot {
    Edge edge;
    double hat_u = 0.0;
    double hat_v = 0.0;
    std::size_t deg_u = 0;
    std::size_t deg_v = 0;
  };
  Snapshot snapshot(Edge e) const {
    return {e, hat_s_[e.u], hat_s_[e.v], closed_deg_[e.u], closed_deg_[e.v]};
  }
  void restore(const Snapshot& snap) {
    hat_s_[snap.edge.u] = snap.hat_u;
    hat_s_[snap.edge.v] = snap.hat_v;
    closed_deg_[snap.edge.u] = snap.deg_u;
    closed_deg_[snap.edge.v] = snap.deg_v;
  }

  friend bool operator==(const NodeAggregates&, const NodeAggregates&) = default;

 private:
  std::vector<double> hat_s_;
  std::vector<std::size_t> closed_deg_;
  double global_mean_ = 0.0;
};

NodeAggregates build_aggregates(const Graph& g, const OpinionVector& s);

// Throws when e is already an edge of g.
GapDelta gap_delta_edge(const Graph& g, const NodeAggregates& agg,
                        const OpinionVector& s, Edge e);

// New graph and aggregates with e added. Throws when e is present.
std::pair<Graph, NodeAggregates> apply_edge(const NodeAggregates& agg,
                                            const Graph& g,
                                            const OpinionVector& s, Edge e);

}  // namespace gapkit

#endif  // GAPKIT_GAP_HPP
