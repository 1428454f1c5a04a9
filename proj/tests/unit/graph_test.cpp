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

#include <random>

#include "doctest.h"
#include "gapkit/error.hpp"
#include "gapkit/experiment.hpp"
#include "gapkit/graph.hpp"
#include "oracles.hpp"

namespace gk = gapkit;
using gk::Edge;
using gk::Graph;

namespace {

std::size_t degree_sum(const Graph& g) {
  std::size_t total = 0;
  for (gk::NodeId i = 0; i < g.node_count(); ++i) total += g.neighbors(i).size();
  return total;
}

gk::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const gk::Error& e) {
    return e.code();
  }
  FAIL("expected gapkit::Error");
  return gk::ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("graph construction keeps adjacency symmetric and sorted") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{2, 0}, {0, 1}, {1, 0}, {3, 1}});
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(2, 3));
  auto n1 = g.neighbors(1);
  CHECK(std::vector<gk::NodeId>(n1.begin(), n1.end()) == std::vector<gk::NodeId>{0, 3});
  CHECK(g.closed_degree(1) == 3);
  CHECK(g.closed_degree(2) == 2);
  CHECK(degree_sum(g) == 2 * g.edge_count());
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("isolated nodes still have closed degree one") {
  const Graph g(3);
  for (gk::NodeId i = 0; i < 3; ++i) CHECK(g.closed_degree(i) == 1);
}

TEST_CASE("graph construction rejects self-loops and out-of-range ids") {
  CHECK(code_of([] { Graph::from_edges(2, std::vector<Edge>{{1, 1}}); }) ==
        gk::ErrorCode::kInput);
  CHECK(code_of([] { Graph::from_edges(2, std::vector<Edge>{{0, 2}}); }) ==
        gk::ErrorCode::kInput);
  CHECK_THROWS_AS(gk::make_edge(3, 3), gk::Error);
  CHECK(gk::make_edge(5, 2) == Edge{2, 5});
}

TEST_CASE("with_edges and without_edges") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  const Graph h = g.with_edge({1, 2});
  CHECK(h.edge_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.with_edge({0, 1}), gk::Error);
  CHECK(h.without_edges(std::vector<Edge>{{1, 2}}) == g);
  CHECK_THROWS_AS(g.without_edges(std::vector<Edge>{{1, 2}}), gk::Error);
}

TEST_CASE("parse_edge_list basics") {
  auto simple = gk::parse_edge_list("0 1\n1 2");
  CHECK(simple.graph.node_count() == 3);
  CHECK(simple.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  auto dup = gk::parse_edge_list("a b\nb a\n# c");
  CHECK(dup.graph.node_count() == 2);
  CHECK(dup.graph.edge_count() == 1);
  CHECK(dup.duplicate_edges == 1);

  auto loop = gk::parse_edge_list("0 0\n0 1");
  CHECK(loop.graph.node_count() == 2);
  CHECK(loop.graph.edge_count() == 1);
  CHECK(loop.self_loops == 1);
}

TEST_CASE("parse_edge_list densifies labels in first-appearance order") {
  auto r = gk::parse_edge_list("# header\n\n  17\t4 \n4 99\n");
  CHECK(r.graph.node_count() == 3);
  CHECK(r.graph.label(0) == "17");
  CHECK(r.graph.label(1) == "4");
  CHECK(r.graph.label(2) == "99");
  CHECK(r.graph.has_edge(1, 2));
}

TEST_CASE("parse_edge_list errors") {
  try {
    gk::parse_edge_list("0 1\n2\n");
    FAIL("no throw");
  } catch (const gk::Error& e) {
    CHECK(e.code() == gk::ErrorCode::kInput);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(gk::parse_edge_list("0 1 2\n"), gk::Error);
  try {
    gk::parse_edge_list("# nothing\n\n");
    FAIL("no throw");
  } catch (const gk::Error& e) {
    CHECK(std::string(e.what()).find("empty graph") != std::string::npos);
  }
}

TEST_CASE("parse_opinions") {
  const Graph g = gk::parse_edge_list("0 1").graph;
  auto both = gk::parse_opinions("0 1.0\n1 -1.0", g);
  CHECK(gk::oracle::values(both.opinions) == std::vector<double>{1.0, -1.0});
  CHECK(both.missing_nodes == 0);
  CHECK(both.opinions.in_canonical_domain());

  auto partial = gk::parse_opinions("0 0.5", g);
  CHECK(gk::oracle::values(partial.opinions) == std::vector<double>{0.5, 0.0});
  CHECK(partial.missing_nodes == 1);

  auto wide = gk::parse_opinions("0 2.0", g);
  CHECK(wide.opinions[0] == 2.0);
  CHECK_FALSE(wide.opinions.in_canonical_domain());

  CHECK_THROWS_AS(gk::parse_opinions("7 1.0", g), gk::Error);
  CHECK_THROWS_AS(gk::parse_opinions("0 abc", g), gk::Error);
  CHECK_THROWS_AS(gk::parse_opinions("0 1\n0 1", g), gk::Error);
  CHECK_THROWS_AS(gk::parse_opinions("0 nan", g), gk::Error);
  try {
    gk::parse_opinions("0 1\n1 x1", g);
    FAIL("no throw");
  } catch (const gk::Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("dimension mismatch is an input error") {
  const Graph g(3);
  CHECK(code_of([&] { gk::check_dimensions(g, gk::OpinionVector({1.0})); }) ==
        gk::ErrorCode::kInput);
}

TEST_CASE("OpinionVector rejects non-finite values") {
  CHECK_THROWS_AS(gk::OpinionVector({1.0, std::numeric_limits<double>::infinity()}),
                  gk::Error);
}

TEST_CASE("mean_centered") {
  CHECK(gk::oracle::values(gk::mean_centered(gk::OpinionVector({1.0, -1.0}))) ==
        std::vector<double>{1.0, -1.0});
  CHECK(gk::oracle::values(gk::mean_centered(gk::OpinionVector({1.0, 1.0, 1.0}))) ==
        std::vector<double>{0.0, 0.0, 0.0});
  const gk::OpinionVector fig({0, -1, -1, -1, 1, 1, 1});
  CHECK(gk::oracle::values(gk::mean_centered(fig)) == gk::oracle::values(fig));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const gk::OpinionVector s(gk::oracle::random_opinions(n, rng));
    const auto once = gk::mean_centered(s);
    const auto twice = gk::mean_centered(once);
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += once[i];
      CHECK(std::abs(once[i] - twice[i]) <= 1e-12);
    }
    CHECK(std::abs(sum) <= 1e-12 * static_cast<double>(n));
  }
}

TEST_CASE("bfs_subgraph") {
  const Graph path = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  auto p = gk::bfs_subgraph(path, 0, 2);
  CHECK(p.graph.node_count() == 2);
  CHECK(p.graph.edge_count() == 1);
  CHECK(p.new_to_old == std::vector<gk::NodeId>{0, 1});
  CHECK(p.old_to_new[3] == gk::kNoNode);

  auto s = gk::bfs_subgraph(gk::oracle::star(5), 0, 3);
  CHECK(s.new_to_old == std::vector<gk::NodeId>{0, 1, 2});
  CHECK(s.graph.edge_count() == 2);

  const Graph triangles = Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto t = gk::bfs_subgraph(triangles, 1, 100);
  CHECK(t.graph.node_count() == 3);
  CHECK(t.graph.edge_count() == 3);

  CHECK_THROWS_AS(gk::bfs_subgraph(path, 9, 2), gk::Error);
  CHECK_THROWS_AS(gk::bfs_subgraph(path, 0, 0), gk::Error);
}

TEST_CASE("bfs_subgraph keeps labels and only original edges") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = gk::oracle::random_graph(n, 0.15, rng);
    const auto root = static_cast<gk::NodeId>(rng() % n);
    const std::size_t limit = 1 + rng() % n;
    auto sub = gk::bfs_subgraph(g, root, limit);
    CHECK(sub.new_to_old.front() == root);
    CHECK(sub.graph.node_count() <= limit);
    for (const Edge& e : sub.graph.edges()) {
      CHECK(g.has_edge(sub.new_to_old[e.u], sub.new_to_old[e.v]));
    }
    for (gk::NodeId a = 0; a < sub.graph.node_count(); ++a) {
      CHECK(sub.graph.label(a) == g.label(sub.new_to_old[a]));
      for (gk::NodeId b = a + 1; b < sub.graph.node_count(); ++b) {
        CHECK(sub.graph.has_edge(a, b) == g.has_edge(sub.new_to_old[a], sub.new_to_old[b]));
      }
    }
  }
}

TEST_CASE("edge-list serialization round-trips, including isolated nodes") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    const Graph g = gk::oracle::random_graph(n, 0.1, rng);
    const auto text = gk::format_edge_list(g);
    const Graph back = gk::parse_edge_list(text).graph;
    CHECK(back == g);
    CHECK(gk::format_edge_list(back) == text);
  }
  const auto parsed = gk::parse_edge_list("x y\ny z\nw x\n");
  const Graph again = gk::parse_edge_list(gk::format_edge_list(parsed.graph)).graph;
  CHECK(again == parsed.graph);
  CHECK(again.labels() == parsed.graph.labels());
}

TEST_CASE("opinion serialization round-trips exactly") {
  std::mt19937_64 rng(8);
  const Graph g = gk::oracle::random_graph(20, 0.2, rng);
  std::normal_distribution<double> normal;
  std::vector<double> s(20);
  for (double& x : s) x = normal(rng) * 1e-3;
  const gk::OpinionVector opinions(s);
  const auto text = gk::format_opinions(g, opinions);
  const auto back = gk::parse_opinions(text, g);
  CHECK(gk::oracle::values(back.opinions) == s);
}

TEST_CASE("format_real is shortest round-trip") {
  CHECK(gk::format_real(0.1) == "0.1");
  CHECK(gk::format_real(5.125) == "5.125");
  CHECK(gk::format_real(0.0) == "0");
  const double x = 1.0 / 3.0;
  CHECK(std::stod(gk::format_real(x)) == x);
}

TEST_CASE("WeightedGraph validation") {
  CHECK_NOTHROW(gk::WeightedGraph(2, {1, 0.5, 0.5, 1}));
  CHECK_THROWS_AS(gk::WeightedGraph(2, {1, 0.5, 0.4, 1}), gk::Error);
  CHECK_THROWS_AS(gk::WeightedGraph(2, {0.9, 0.5, 0.5, 1}), gk::Error);
  CHECK_THROWS_AS(gk::WeightedGraph(2, {1, -0.5, -0.5, 1}), gk::Error);
  CHECK_THROWS_AS(gk::WeightedGraph(2, {1, 0, 0}), gk::Error);
}
