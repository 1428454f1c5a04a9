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

#ifndef GAPKIT_GRAPH_HPP
#define GAPKIT_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapkit {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Unordered node pair stored with u < v. Used both for existing edges and
// for candidate (missing) edges.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes endpoint order. Throws on u == v.
Edge make_edge(NodeId a, NodeId b);

// Immutable undirected simple graph. Self-loops are never stored; every gap
// formula adds the implicit unit self-loop arithmetically, so the closed
// degree of node i is neighbors(i).size() + 1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);

  // Duplicate pairs collapse. Out-of-range ids and self-loops throw.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Ascending neighbor ids.
  std::span<const NodeId> neighbors(NodeId i) const { return adjacency_[i]; }
  std::size_t closed_degree(NodeId i) const { return adjacency_[i].size() + 1; }

  bool has_edge(NodeId a, NodeId b) const;

  // All edges, lexicographically sorted.
  std::vector<Edge> edges() const;

  Graph with_edge(Edge e) const;
  Graph with_edges(std::span<const Edge> added) const;
  Graph without_edges(std::span<const Edge> removed) const;

  // Original labels from parsing. Defaults to the decimal node id.
  std::string label(NodeId i) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

// Symmetric nonnegative weights with unit diagonal, stored dense row-major.
class WeightedGraph {
 public:
  WeightedGraph(std::size_t node_count, std::vector<double> weights);

  // 0/1 adjacency plus unit diagonal.
  static WeightedGraph from_graph(const Graph& g);

  std::size_t node_count() const noexcept { return n_; }
  double weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(w_).subspan(i * n_, n_);
  }

 private:
  std::size_t n_;
  std::vector<double> w_;
};

class OpinionVector {
 public:
  OpinionVector() = default;
  // Throws on non-finite entries.
  explicit OpinionVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  // True when every entry lies in [-1, 1].
  bool in_canonical_domain() const noexcept { return canonical_; }

  double sum() const;
  double mean() const;

 private:
  std::vector<double> values_;
  bool canonical_ = true;
};

// S - mean(S) * 1.
OpinionVector mean_centered(const OpinionVector& s);

struct EdgeListParse {
  Graph graph;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

struct OpinionParse {
  OpinionVector opinions;
  std::size_t missing_nodes = 0;
};

// SNAP-style edge list: one `u v` pair per line, `#` comments, blank lines
// ignored. Labels are densified in first-appearance order.
EdgeListParse parse_edge_list(std::string_view text);

// `label value` per line, resolved through the graph's label table. Nodes
// without a line default to 0.
OpinionParse parse_opinions(std::string_view text, const Graph& g);

std::string format_edge_list(const Graph& g);
std::string format_opinions(const Graph& g, const OpinionVector& s);

struct Subgraph {
  Graph graph;
  std::vector<NodeId> new_to_old;
  std::vector<NodeId> old_to_new;  // kNoNode for nodes outside the subgraph
};

// Induced subgraph on the first `limit` nodes reached by FIFO BFS from
// `root`, visiting neighbors in ascending id order.
Subgraph bfs_subgraph(const Graph& g, NodeId root, std::size_t limit);

// Throws a dimension error unless |s| == n.
void check_dimensions(const Graph& g, const OpinionVector& s);

}  // namespace gapkit

#endif  // GAPKIT_GRAPH_HPP
