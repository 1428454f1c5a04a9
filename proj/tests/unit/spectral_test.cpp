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

#include <cmath>
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

TEST_CASE("complete graph spectrum") {
  for (std::size_t n : {2, 5, 10}) {
    const auto sum = gk::spectral_summary(orc::complete(n));
    CHECK(std::abs(sum.sigma1 - 1.0) <= 1e-12);
    CHECK(std::abs(sum.sigma2) <= 1e-7);
    CHECK(std::abs(sum.lambda2_norm_adj) <= 1e-12);
    CHECK(gk::constrained_max_gap(orc::complete(n), 1.0) == 0.0);
  }
  CHECK(gk::constrained_max_gap(orc::complete(6), 1.0, gk::EigenMethod::kIterative) == 0.0);
}

TEST_CASE("four-cycle spectrum") {
  const Graph c4 = orc::cycle(4);
  const auto sum = gk::spectral_summary(c4);
  CHECK(std::abs(sum.sigma1 - 1.0) <= 1e-12);
  CHECK(std::abs(sum.sigma2 - 1.0 / 3.0) <= 1e-12);
  CHECK(std::abs(gk::constrained_max_gap(c4, 1.0) - 1.0 / 9.0) <= 1e-12);
  CHECK(std::abs(gk::constrained_max_gap(c4, 3.0) - 1.0) <= 1e-12);
  CHECK(sum.residual <= 1e-8);
}

TEST_CASE("two disjoint edges have two unit singular values") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto sum = gk::spectral_summary(g);
  CHECK(std::abs(sum.sigma1 - 1.0) <= 1e-12);
  CHECK(std::abs(sum.sigma2 - 1.0) <= 1e-12);
}

TEST_CASE("sigma1 can exceed one on irregular graphs") {
  // D^-1 A is row-stochastic, not doubly stochastic.
  const auto sum = gk::spectral_summary(orc::star(9));
  CHECK(sum.sigma1 > 1.0 + 1e-3);
  CHECK(std::abs(sum.sigma1 - orc::spectrum(orc::star(9)).sigma1) <= 1e-10);
}

TEST_CASE("spectral errors") {
  CHECK_THROWS_AS(gk::spectral_summary(Graph(1)), gk::Error);
  CHECK_THROWS_AS(gk::constrained_max_gap(Graph(1), 1.0), gk::Error);
  CHECK_THROWS_AS(gk::constrained_max_gap(orc::cycle(4), 0.0), gk::Error);
  CHECK_THROWS_AS(gk::constrained_max_gap(orc::cycle(4), -1.0), gk::Error);
}

TEST_CASE("spectral summary matches SVD oracle and brackets the constrained max") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 39;
    const double p = std::uniform_real_distribution<double>(0.02, 0.7)(rng);
    const Graph g = orc::random_graph(n, p, rng);
    const auto sum = gk::spectral_summary(g);
    const auto ref = orc::spectrum(g);
    CHECK(std::abs(sum.sigma1 - ref.sigma1) <= 1e-9);
    CHECK(std::abs(sum.sigma2 - ref.sigma2) <= 1e-7);
    CHECK(std::abs(sum.lambda2_norm_adj - ref.lambda2) <= 1e-9);
    CHECK(sum.sigma1 >= sum.sigma2);
    CHECK(sum.sigma2 >= 0.0);
    const double r = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
    const double max_gap = gk::constrained_max_gap(g, r);
    CHECK(std::abs(max_gap - orc::constrained_max(g, r)) <= 1e-9);
    CHECK(max_gap >= sum.sigma2 * sum.sigma2 * r * r - 1e-8);
    CHECK(max_gap <= sum.sigma1 * sum.sigma1 * r * r + 1e-8);
  }
}

TEST_CASE("G(12, 0.4) bracket at R = 2") {
  const Graph g = gk::erdos_renyi(12, 0.4, 3);
  const auto sum = gk::spectral_summary(g);
  const double v = gk::constrained_max_gap(g, 2.0);
  CHECK(v >= sum.sigma2 * sum.sigma2 * 4 - 1e-8);
  CHECK(v <= sum.sigma1 * sum.sigma1 * 4 + 1e-8);
}

TEST_CASE("constrained max is attained by no opinion vector above it") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng() % 20;
    const Graph g = orc::random_graph(n, 0.3, rng);
    const double ceiling = gk::constrained_max_gap(g, 1.0);
    for (int rep = 0; rep < 30; ++rep) {
      auto s = gk::mean_centered(gk::OpinionVector(orc::random_opinions(n, rng)));
      double norm = 0;
      for (double x : s.values()) norm += x * x;
      std::vector<double> unit;
      for (double x : s.values()) unit.push_back(x / std::sqrt(norm));
      CHECK(gk::compute_gap(g, gk::OpinionVector(unit)) <= ceiling + 1e-10);
    }
  }
}

TEST_CASE("regular graphs: sigma2 equals |lambda2| and the eigenvalue bound") {
  std::mt19937_64 rng(7);
  int premise_holds = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng() % 4;
    std::size_t n = 8 + rng() % 24;
    if ((n * d) % 2) ++n;
    const Graph g = orc::random_regular(n, d, rng);
    const auto sum = gk::spectral_summary(g);
    const auto ref = orc::spectrum(g);
    // Second singular value of a symmetric matrix is its second largest
    // |eigenvalue|.
    const double second_abs = std::max(ref.lambda2, std::abs(ref.lambda_min));
    CHECK(std::abs(sum.sigma2 - second_abs) <= 1e-8);
    if (ref.lambda2 >= std::abs(ref.lambda_min)) {
      ++premise_holds;
      CHECK(gk::constrained_max_gap(g, 1.5) <= ref.lambda2 * ref.lambda2 * 2.25 + 1e-8);
    }
  }
  CHECK(premise_holds > 0);
}

TEST_CASE("iterative solver agrees with dense") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 30 + rng() % 120;
    const Graph g = orc::random_graph(n, 0.08, rng);
    const auto dense = gk::spectral_summary(g, gk::EigenMethod::kDense);
    const auto iter = gk::spectral_summary(g, gk::EigenMethod::kIterative);
    CHECK(std::abs(dense.sigma1 - iter.sigma1) <= 1e-7);
    CHECK(std::abs(dense.sigma2 - iter.sigma2) <= 1e-6);
    CHECK(std::abs(dense.lambda2_norm_adj - iter.lambda2_norm_adj) <= 1e-7);
    CHECK(iter.residual <= 1e-6);
    const double cd = gk::constrained_max_gap(g, 1.0, gk::EigenMethod::kDense);
    const double ci = gk::constrained_max_gap(g, 1.0, gk::EigenMethod::kIterative);
    CHECK(std::abs(cd - ci) <= 1e-7);
  }
}

TEST_CASE("iterative path above the dense cutoff") {
  const Graph g = gk::erdos_renyi(2100, 0.004, 5);
  const auto sum = gk::spectral_summary(g);
  CHECK(sum.sigma1 >= sum.sigma2);
  CHECK(sum.sigma2 > 0.0);
  CHECK(sum.residual <= 1e-6);
  const double c = gk::constrained_max_gap(g, 1.0);
  CHECK(c <= sum.sigma1 * sum.sigma1 + 1e-8);
  CHECK(c >= sum.sigma2 * sum.sigma2 - 1e-8);
}

TEST_CASE("expected gap formula") {
  CHECK(std::abs(gk::expected_gap(orc::complete(7))) <= 1e-15);
  CHECK(std::abs(gk::expected_gap(orc::cycle(12)) - 3.0) <= 1e-12);
  CHECK(std::abs(gk::expected_gap(orc::cycle(30)) - 9.0) <= 1e-12);
  CHECK(std::abs(gk::expected_gap(orc::star(9)) - 3.6) <= 1e-12);
  CHECK(std::abs(gk::expected_gap(Graph(4)) - 3.0) <= 1e-15);
  CHECK_THROWS_AS(gk::expected_gap(Graph()), gk::Error);
}

TEST_CASE("Monte Carlo estimate") {
  SUBCASE("complete graph gives zero") {
    const auto est = gk::expected_gap_monte_carlo(orc::complete(5), 100, 3,
                                                  gk::OpinionDistribution::kGaussian);
    CHECK(est.mean <= 1e-24);
    CHECK(est.samples == 100);
  }
  SUBCASE("cycle within four standard errors for both distributions") {
    for (auto dist : {gk::OpinionDistribution::kGaussian, gk::OpinionDistribution::kUniform}) {
      const auto est = gk::expected_gap_monte_carlo(orc::cycle(12), 20000, 42, dist);
      CHECK(est.stderr_ > 0.0);
      CHECK(std::abs(est.mean - 3.0) <= 4 * est.stderr_);
    }
  }
  SUBCASE("deterministic and independent of worker count") {
    const Graph g = gk::erdos_renyi(40, 0.2, 1);
    const auto a = gk::expected_gap_monte_carlo(g, 3000, 9, gk::OpinionDistribution::kUniform);
    const auto b = gk::expected_gap_monte_carlo(g, 3000, 9, gk::OpinionDistribution::kUniform);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_ == b.stderr_);
    setenv("GAPKIT_THREADS", "1", 1);
    const auto c = gk::expected_gap_monte_carlo(g, 3000, 9, gk::OpinionDistribution::kUniform);
    unsetenv("GAPKIT_THREADS");
    CHECK(a.mean == c.mean);
    const auto d = gk::expected_gap_monte_carlo(g, 3000, 10, gk::OpinionDistribution::kUniform);
    CHECK(a.mean != d.mean);
  }
  SUBCASE("zero samples rejected") {
    CHECK_THROWS_AS(gk::expected_gap_monte_carlo(orc::cycle(4), 0, 1,
                                                 gk::OpinionDistribution::kGaussian),
                    gk::Error);
  }
}

TEST_CASE("SBM closed form") {
  const double r = (0.02 + 0.95 / 100) / (0.08 + 0.95 / 100);
  CHECK(std::abs(gk::sbm_gap_closed_form(100, 0.05, 0.03) - r * r * 200) <= 1e-12);
  const double exact = gk::sbm_gap_closed_form(10000, 0.05, 0.03);
  const double approx = gk::sbm_gap_closed_form(10000, 0.05, 0.03, true);
  CHECK(std::abs(approx - 1250.0) <= 1e-9);
  CHECK(std::abs(exact - 1258.9115130196) <= 1e-6);
  CHECK(std::abs(exact / approx - 1.0) <= 0.0075);

  const double pq = gk::sbm_gap_closed_form(50, 0.2, 0.2);
  const double t = (0.8 / 50) / (0.4 + 0.8 / 50);
  CHECK(std::abs(pq - 100 * t * t) <= 1e-12);
  CHECK(gk::sbm_gap_closed_form(50, 0.2, 0.2, true) == 0.0);

  CHECK_THROWS_AS(gk::sbm_gap_closed_form(10, 0.03, 0.05), gk::Error);
  CHECK_THROWS_AS(gk::sbm_gap_closed_form(0, 0.05, 0.03), gk::Error);
  CHECK_THROWS_AS(gk::sbm_gap_closed_form(10, 1.5, 0.03), gk::Error);
}

TEST_CASE("SBM closed form equals weighted gap on the expected adjacency") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 250;
    const double p = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
    const double q = std::uniform_real_distribution<double>(0.0, p)(rng);
    const double weighted =
        gk::compute_gap_weighted(gk::sbm_expected(n, p, q), gk::block_opinions(n));
    CHECK(std::abs(weighted - gk::sbm_gap_closed_form(n, p, q)) <= 1e-9);
  }
}
