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

#include "gapkit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "gapkit/error.hpp"

namespace gapkit {

Edge make_edge(NodeId a, NodeId b) {
  if (a == b) throw_input("self-loop {" + std::to_string(a) + "," +
                          std::to_string(b) + "} is not an edge");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  Graph g(node_count);
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  "} out of range for " + std::to_string(node_count) +
                  " nodes");
    }
    if (e.u == e.v) throw_input("self-loop at node " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::size_t half_edges = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    half_edges += nbrs.size();
  }
  g.edge_count_ = half_edges / 2;
  return g;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count() || a == b) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(Edge e) const { return with_edges(std::span(&e, 1)); }

Graph Graph::with_edges(std::span<const Edge> added) const {
  Graph g = *this;
  for (const Edge& e : added) {
    if (e.u >= node_count() || e.v >= node_count() || e.u == e.v) {
      throw_input("invalid edge {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "}");
    }
    auto& a = g.adjacency_[e.u];
    auto it = std::lower_bound(a.begin(), a.end(), e.v);
    if (it != a.end() && *it == e.v) {
      throw_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  "} already present");
    }
    a.insert(it, e.v);
    auto& b = g.adjacency_[e.v];
    b.insert(std::lower_bound(b.begin(), b.end(), e.u), e.u);
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  Graph g = *this;
  for (const Edge& e : removed) {
    if (!has_edge(e.u, e.v)) {
      throw_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  "} not present");
    }
    auto& a = g.adjacency_[e.u];
    auto ia = std::lower_bound(a.begin(), a.end(), e.v);
    if (ia == a.end() || *ia != e.v) throw_input("edge removed twice");
    a.erase(ia);
    auto& b = g.adjacency_[e.v];
    b.erase(std::lower_bound(b.begin(), b.end(), e.u));
    --g.edge_count_;
  }
  return g;
}

std::string Graph::label(NodeId i) const {
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count()) {
    throw_input("label table size does not match node count");
  }
  labels_ = std::move(labels);
}

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<double> weights)
    : n_(node_count), w_(std::move(weights)) {
  if (n_ == 0) throw_input("weighted graph needs at least one node");
  if (w_.size() != n_ * n_) throw_input("weight matrix must be n x n");
  for (std::size_t i = 0; i < n_; ++i) {
    if (w_[i * n_ + i] != 1.0) throw_input("weight diagonal must be 1");
    for (std::size_t j = 0; j < n_; ++j) {
      double w = w_[i * n_ + j];
      if (!std::isfinite(w) || w < 0.0) throw_input("weights must be finite and nonnegative");
      if (w != w_[j * n_ + i]) throw_input("weight matrix must be symmetric");
    }
  }
}

WeightedGraph WeightedGraph::from_graph(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> w(n * n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    w[i * n + i] = 1.0;
    for (NodeId j : g.neighbors(i)) w[i * n + j] = 1.0;
  }
  return WeightedGraph(n, std::move(w));
}

OpinionVector::OpinionVector(std::vector<double> values)
    : values_(std::move(values)) {
  for (double x : values_) {
    if (!std::isfinite(x)) throw_input("opinions must be finite");
    if (x < -1.0 || x > 1.0) canonical_ = false;
  }
}

double OpinionVector::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

double OpinionVector::mean() const {
  if (values_.empty()) throw_input("mean of empty opinion vector");
  return sum() / static_cast<double>(values_.size());
}

OpinionVector mean_centered(const OpinionVector& s) {
  const double mu = s.mean();
  std::vector<double> out(s.values().begin(), s.values().end());
  for (double& x : out) x -= mu;
  return OpinionVector(std::move(out));
}

Subgraph bfs_subgraph(const Graph& g, NodeId root, std::size_t limit) {
  if (root >= g.node_count()) throw_input("BFS root out of range");
  if (limit == 0) throw_input("BFS limit must be positive");

  Subgraph sub;
  sub.old_to_new.assign(g.node_count(), kNoNode);
  std::deque<NodeId> queue{root};
  sub.old_to_new[root] = 0;
  sub.new_to_old.push_back(root);
  while (!queue.empty() && sub.new_to_old.size() < limit) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (sub.new_to_old.size() >= limit) break;
      if (sub.old_to_new[v] != kNoNode) continue;
      sub.old_to_new[v] = static_cast<NodeId>(sub.new_to_old.size());
      sub.new_to_old.push_back(v);
      queue.push_back(v);
    }
  }

  std::vector<Edge> edges;
  for (NodeId nu = 0; nu < sub.new_to_old.size(); ++nu) {
    for (NodeId v : g.neighbors(sub.new_to_old[nu])) {
      NodeId nv = sub.old_to_new[v];
      if (nv != kNoNode && nu < nv) edges.push_back({nu, nv});
    }
  }
  sub.graph = Graph::from_edges(sub.new_to_old.size(), edges);
  std::vector<std::string> labels;
  labels.reserve(sub.new_to_old.size());
  for (NodeId old : sub.new_to_old) labels.push_back(g.label(old));
  sub.graph.set_labels(std::move(labels));
  return sub;
}

void check_dimensions(const Graph& g, const OpinionVector& s) {
  if (s.size() != g.node_count()) {
    throw_input("opinion vector has " + std::to_string(s.size()) +
                " entries but graph has " + std::to_string(g.node_count()) +
                " nodes");
  }
}

}  // namespace gapkit
