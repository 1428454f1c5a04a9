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

#include "gapkit/gap.hpp"

#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

double compute_gap(const Graph& g, const OpinionVector& s) {
  check_dimensions(g, s);
  const double mean = s.mean();
  double total = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    double hat = s[i];
    for (NodeId j : g.neighbors(i)) hat += s[j];
    double local = hat / static_cast<double>(g.closed_degree(i));
    total += (local - mean) * (local - mean);
  }
  return total;
}

double compute_gap_weighted(const WeightedGraph& wg, const OpinionVector& s) {
  const std::size_t n = wg.node_count();
  if (s.size() != n) {
    throw_input("opinion vector has " + std::to_string(s.size()) +
                " entries but weighted graph has " + std::to_string(n) + " nodes");
  }
  // D^-1 W is row-stochastic, so D^-1 W S_centered = D^-1 W S - mean * 1.
  // The diagonal term is summed first to mirror compute_gap term order, which
  // makes a 0/1 weight matrix reproduce it bit for bit.
  const double mean = s.mean();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = wg.row(i);
    double row_sum = row[i];
    double weighted = row[i] * s[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || row[j] == 0.0) continue;
      row_sum += row[j];
      weighted += row[j] * s[j];
    }
    double local = weighted / row_sum - mean;
    total += local * local;
  }
  return total;
}

NodeAggregates::NodeAggregates(const Graph& g, const OpinionVector& s) {
  check_dimensions(g, s);
  const std::size_t n = g.node_count();
  hat_s_.resize(n);
  closed_deg_.resize(n);
  for (NodeId i = 0; i < n; ++i) {
    double hat = s[i];
    for (NodeId j : g.neighbors(i)) hat += s[j];
    hat_s_[i] = hat;
    closed_deg_[i] = g.closed_degree(i);
  }
  global_mean_ = s.mean();
}

double NodeAggregates::node_term(NodeId i) const {
  double local = hat_s_[i] / static_cast<double>(closed_deg_[i]) - global_mean_;
  return local * local;
}

double NodeAggregates::gap() const {
  double total = 0.0;
  for (NodeId i = 0; i < hat_s_.size(); ++i) total += node_term(i);
  return total;
}

double NodeAggregates::delta(const OpinionVector& s, Edge e) const {
  auto side = [&](NodeId a, NodeId b) {
    const double d = static_cast<double>(closed_deg_[a]);
    double after = (hat_s_[a] + s[b]) / (d + 1.0) - global_mean_;
    double before = hat_s_[a] / d - global_mean_;
    return after * after - before * before;
  };
  return side(e.u, e.v) + side(e.v, e.u);
}

void NodeAggregates::add_edge(const OpinionVector& s, Edge e) {
  hat_s_[e.u] += s[e.v];
  hat_s_[e.v] += s[e.u];
  ++closed_deg_[e.u];
  ++closed_deg_[e.v];
}

void NodeAggregates::remove_edge(const OpinionVector& s, Edge e) {
  hat_s_[e.u] -= s[e.v];
  hat_s_[e.v] -= s[e.u];
  --closed_deg_[e.u];
  --closed_deg_[e.v];
}

NodeAggregates build_aggregates(const Graph& g, const OpinionVector& s) {
  return NodeAggregates(g, s);
}

namespace {

void require_candidate(const Graph& g, const NodeAggregates& agg, Edge e) {
  if (agg.size() != g.node_count()) throw_input("aggregates do not match graph");
  if (e.u >= e.v || e.v >= g.node_count()) {
    throw_input("invalid candidate {" + std::to_string(e.u) + "," +
                std::to_string(e.v) + "}");
  }
  if (g.has_edge(e.u, e.v)) {
    throw_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                "} already present");
  }
}

}  // namespace

GapDelta gap_delta_edge(const Graph& g, const NodeAggregates& agg,
                        const OpinionVector& s, Edge e) {
  require_candidate(g, agg, e);
  return {e, agg.delta(s, e)};
}

std::pair<Graph, NodeAggregates> apply_edge(const NodeAggregates& agg,
                                            const Graph& g,
                                            const OpinionVector& s, Edge e) {
  require_candidate(g, agg, e);
  NodeAggregates next = agg;
  next.add_edge(s, e);
  return {g.with_edge(e), std::move(next)};
}

}  // namespace gapkit
