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
#include "gapkit/gap.hpp"
#include "gapkit/generators.hpp"
#include "gapkit/spectral.hpp"
#include "oracles.hpp"

namespace gk = gapkit;
namespace orc = gapkit::oracle;
using gk::Edge;
using gk::Graph;

namespace {
enum : gk::NodeId { A, B, C, D, E, F, G };
}

TEST_CASE("worked example gap values") {
  const auto fx = orc::seven_node();
  const auto s = orc::values(fx.opinions);
  CHECK(gk::compute_gap(fx.graph, fx.opinions) == 5.125);
  CHECK(std::abs(gk::compute_gap(fx.graph, fx.opinions) - orc::gap(fx.graph, s)) <= 1e-12);
  CHECK(std::abs(gk::compute_gap(fx.graph.with_edge({C, G}), fx.opinions) - 3.625) <= 1e-12);
  CHECK(std::abs(gk::compute_gap(fx.graph.with_edge({C, E}), fx.opinions) - 3.9725) <= 1e-12);
  CHECK(std::abs(gk::compute_gap(fx.graph.with_edge({A, C}), fx.opinions) - 4.75) <= 1e-12);
}

TEST_CASE("complete graphs have zero gap") {
  std::mt19937_64 rng(1);
  const Graph k5 = orc::complete(5);
  for (int i = 0; i < 10; ++i) {
    const gk::OpinionVector s(orc::random_opinions(5, rng));
    CHECK(gk::compute_gap(k5, s) <= 1e-30);
  }
}

TEST_CASE("isolated nodes each see only themselves") {
  CHECK(gk::compute_gap(Graph(3), gk::OpinionVector({1.0, -1.0, 0.0})) == 2.0);
}

TEST_CASE("compute_gap dimension mismatch") {
  CHECK_THROWS_AS(gk::compute_gap(Graph(3), gk::OpinionVector({1.0})), gk::Error);
}

TEST_CASE("gap matches brute force and dense matrix form on random graphs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    const Graph g = orc::random_graph(n, p, rng);
    const auto s = orc::random_opinions(n, rng);
    const double got = gk::compute_gap(g, gk::OpinionVector(s));
    CHECK(got >= 0.0);
    CHECK(std::abs(got - orc::gap(g, s)) <= 1e-10);
    CHECK(std::abs(got - orc::matrix_gap(g, s)) <= 1e-10);
  }
}

TEST_CASE("gap is invariant under mean-centering and shifts") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = orc::random_graph(n, 0.2, rng);
    auto s = orc::random_opinions(n, rng);
    const gk::OpinionVector sv(s);
    const double base = gk::compute_gap(g, sv);
    CHECK(std::abs(base - gk::compute_gap(g, gk::mean_centered(sv))) <= 1e-12);
    for (double& x : s) x += 0.75;
    CHECK(std::abs(base - gk::compute_gap(g, gk::OpinionVector(s))) <= 1e-12);
  }
}

TEST_CASE("gap never exceeds the top singular value ceiling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 39;
    const Graph g = orc::random_graph(n, 0.25, rng);
    const double sigma1 = gk::spectral_summary(g).sigma1;
    for (int rep = 0; rep < 50; ++rep) {
      const gk::OpinionVector s(orc::random_opinions(n, rng));
      const auto c = gk::mean_centered(s);
      double norm2 = 0;
      for (double x : c.values()) norm2 += x * x;
      CHECK(gk::compute_gap(g, s) <= sigma1 * sigma1 * norm2 + 1e-8);
    }
  }
}

TEST_CASE("weighted gap") {
  SUBCASE("0/1 weights reproduce compute_gap exactly") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 30;
      const Graph g = orc::random_graph(n, 0.3, rng);
      const gk::OpinionVector s(orc::random_opinions(n, rng));
      CHECK(gk::compute_gap_weighted(gk::WeightedGraph::from_graph(g), s) ==
            gk::compute_gap(g, s));
    }
  }
  SUBCASE("constant opinions give zero") {
    const auto w = gk::sbm_expected(4, 0.7, 0.2);
    CHECK(gk::compute_gap_weighted(w, gk::OpinionVector(std::vector<double>(8, 0.3))) <=
          1e-30);
  }
  SUBCASE("identity weights") {
    const gk::WeightedGraph w(2, {1, 0, 0, 1});
    CHECK(gk::compute_gap_weighted(w, gk::OpinionVector({1.0, -1.0})) == 2.0);
  }
  SUBCASE("expected SBM adjacency at n=100") {
    const double got = gk::compute_gap_weighted(gk::sbm_expected(100, 0.05, 0.03),
                                                gk::block_opinions(100));
    const double r = (0.02 + 0.95 / 100) / (0.08 + 0.95 / 100);
    CHECK(std::abs(got - r * r * 200) <= 1e-9);
    CHECK(std::abs(got - 21.728410474) <= 1e-8);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(gk::compute_gap_weighted(gk::sbm_expected(2, 0.5, 0.1),
                                             gk::OpinionVector({1.0})),
                    gk::Error);
  }
}

TEST_CASE("aggregates") {
  const auto fx = orc::seven_node();
  const auto agg = gk::build_aggregates(fx.graph, fx.opinions);
  CHECK(agg.hat_s(G) == 3.0);
  CHECK(agg.closed_degree(G) == 3);
  CHECK(agg.global_mean() == 0.0);
  CHECK(std::abs(agg.gap() - 5.125) <= 1e-12);

  const auto single = gk::build_aggregates(Graph(1), gk::OpinionVector({0.5}));
  CHECK(single.hat_s() == std::vector<double>{0.5});
  CHECK(single.closed_degrees() == std::vector<std::size_t>{1});

  const auto k3 = gk::build_aggregates(orc::complete(3), gk::OpinionVector({1.0, 0.0, -1.0}));
  CHECK(k3.hat_s() == std::vector<double>{0.0, 0.0, 0.0});

  std::size_t deg = 0;
  for (auto d : agg.closed_degrees()) deg += d - 1;
  CHECK(deg == 2 * fx.graph.edge_count());
  CHECK_THROWS_AS(gk::build_aggregates(fx.graph, gk::OpinionVector({1.0})), gk::Error);
}

TEST_CASE("edge deltas on the fixtures") {
  const auto fx = orc::seven_node();
  const auto agg = gk::build_aggregates(fx.graph, fx.opinions);
  CHECK(std::abs(gk::gap_delta_edge(fx.graph, agg, fx.opinions, {C, G}).delta + 1.5) <=
        1e-12);
  CHECK(std::abs(gk::gap_delta_edge(fx.graph, agg, fx.opinions, {A, C}).delta + 0.375) <=
        1e-12);
  CHECK_THROWS_AS(gk::gap_delta_edge(fx.graph, agg, fx.opinions, {A, B}), gk::Error);
  CHECK_THROWS_AS(gk::gap_delta_edge(fx.graph, agg, fx.opinions, {A, 9}), gk::Error);

  const auto nm = orc::non_monotone();
  const auto nagg = gk::build_aggregates(nm.graph, nm.opinions);
  CHECK(gk::compute_gap(nm.graph, nm.opinions) == 0.0);
  CHECK(std::abs(gk::gap_delta_edge(nm.graph, nagg, nm.opinions, {1, 3}).delta - 2.0 / 9.0) <=
        1e-12);
}

TEST_CASE("delta matches full recompute on 1000 random triples") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = 2 + rng() % 40;
    const Graph g = orc::random_graph(n, 0.2, rng);
    const auto missing = orc::missing(g);
    if (missing.empty()) continue;
    const auto s = orc::random_opinions(n, rng);
    const gk::OpinionVector sv(s);
    const auto pick = missing[rng() % missing.size()];
    const Edge e{pick.first, pick.second};
    const auto agg = gk::build_aggregates(g, sv);
    const double delta = gk::gap_delta_edge(g, agg, sv, e).delta;
    CHECK(std::abs(delta - (orc::gap(g, {pick}, s) - orc::gap(g, s))) <= 1e-9);
    ++checked;
  }
}

TEST_CASE("apply_edge updates only the endpoints and equals a rebuild") {
  const auto fx = orc::seven_node();
  const auto agg = gk::build_aggregates(fx.graph, fx.opinions);
  auto [g1, a1] = gk::apply_edge(agg, fx.graph, fx.opinions, {C, G});
  CHECK(a1.closed_degree(G) == 4);
  CHECK(a1.hat_s(G) == 2.0);
  CHECK(a1 == gk::build_aggregates(g1, fx.opinions));
  auto [g2, a2] = gk::apply_edge(a1, g1, fx.opinions, {C, E});
  CHECK(a2 == gk::build_aggregates(g2, fx.opinions));
  CHECK_THROWS_AS(gk::apply_edge(a2, g2, fx.opinions, {C, E}), gk::Error);

  const auto pair = gk::build_aggregates(Graph(2), gk::OpinionVector({1.0, -1.0}));
  auto [g3, a3] = gk::apply_edge(pair, Graph(2), gk::OpinionVector({1.0, -1.0}), {0, 1});
  CHECK(a3.closed_degrees() == std::vector<std::size_t>{2, 2});
  CHECK(g3.edge_count() == 1);
}

TEST_CASE("snapshot restore is exact") {
  std::mt19937_64 rng(12);
  const Graph g = orc::random_graph(20, 0.2, rng);
  const gk::OpinionVector s(orc::random_opinions(20, rng));
  auto agg = gk::build_aggregates(g, s);
  const auto before = agg;
  std::vector<gk::NodeAggregates::Snapshot> stack;
  for (auto [u, v] : orc::missing(g)) {
    if (stack.size() == 6) break;
    stack.push_back(agg.snapshot({u, v}));
    agg.add_edge(s, {u, v});
  }
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) agg.restore(*it);
  CHECK(agg == before);

  auto [u, v] = orc::missing(g).front();
  agg.add_edge(s, {u, v});
  agg.remove_edge(s, {u, v});
  for (gk::NodeId i = 0; i < 20; ++i) {
    CHECK(std::abs(agg.hat_s(i) - before.hat_s(i)) <= 1e-15);
    CHECK(agg.closed_degree(i) == before.closed_degree(i));
  }
}
