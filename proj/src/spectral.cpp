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

#include "gapkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gapkit/error.hpp"
#include "gapkit/gap.hpp"
#include "gapkit/parallel.hpp"
#include "gapkit/rng.hpp"

namespace gapkit {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using LinearOperator = std::function<void(const VectorXd&, VectorXd&)>;

void require_two_nodes(const Graph& g) {
  if (g.node_count() < 2) {
    throw_input("spectral analysis needs at least 2 nodes, got " +
                std::to_string(g.node_count()));
  }
}

bool use_dense(const Graph& g, EigenMethod method) {
  switch (method) {
    case EigenMethod::kDense:
      return true;
    case EigenMethod::kIterative:
      return false;
    case EigenMethod::kAuto:
      break;
  }
  return g.node_count() <= kDenseCutoff;
}

// (A x)_i with the implicit unit diagonal.
void apply_adjacency(const Graph& g, const VectorXd& x, VectorXd& y) {
  y.resize(x.size());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    double acc = x[i];
    for (NodeId j : g.neighbors(i)) acc += x[j];
    y[i] = acc;
  }
}

// A D^-2 A assembled from its outer-product form sum_k a_k a_k^T / d_k^2.
MatrixXd dense_gram(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  MatrixXd m = MatrixXd::Zero(n, n);
  std::vector<NodeId> closed;
  for (NodeId k = 0; k < g.node_count(); ++k) {
    closed.assign(g.neighbors(k).begin(), g.neighbors(k).end());
    closed.push_back(k);
    const double w = 1.0 / std::pow(static_cast<double>(g.closed_degree(k)), 2);
    for (NodeId i : closed) {
      for (NodeId j : closed) m(i, j) += w;
    }
  }
  return m;
}

MatrixXd dense_normalized_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  MatrixXd m = MatrixXd::Zero(n, n);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double di = static_cast<double>(g.closed_degree(i));
    m(i, i) = 1.0 / di;
    for (NodeId j : g.neighbors(i)) {
      m(i, j) = 1.0 / std::sqrt(di * static_cast<double>(g.closed_degree(j)));
    }
  }
  return m;
}

double relative_residual(const MatrixXd& m, double value, const VectorXd& vec) {
  const double r = (m * vec - value * vec).norm();
  return std::abs(value) > 1e-12 ? r / std::abs(value) : r;
}

struct EigenPair {
  double value = 0.0;
  VectorXd vector;
  double residual = 0.0;
};

// Largest algebraic eigenpair of a symmetric operator restricted to the
// orthogonal complement of `deflate` (orthonormal vectors). Lanczos with full
// reorthogonalization; converged when the Ritz residual falls below
// tolerance * |theta|.
EigenPair lanczos_largest(Eigen::Index n, const LinearOperator& op,
                          const std::vector<VectorXd>& deflate,
                          double tolerance) {
  auto project = [&](VectorXd& x) {
    for (const VectorXd& q : deflate) x -= q.dot(x) * q;
  };

  const Eigen::Index max_steps =
      std::max<Eigen::Index>(1, n - static_cast<Eigen::Index>(deflate.size()));
  Rng rng(0x6c616e637a6f73ULL);
  VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform01() - 0.5;
  project(v);
  if (v.norm() == 0.0) throw_internal("Lanczos start vector vanished");
  v.normalize();

  std::vector<VectorXd> basis{v};
  std::vector<double> alpha;
  std::vector<double> beta;
  VectorXd w(n);
  EigenPair best;

  for (Eigen::Index step = 0; step < max_steps; ++step) {
    op(basis.back(), w);
    project(w);
    const double a = basis.back().dot(w);
    alpha.push_back(a);
    for (int pass = 0; pass < 2; ++pass) {
      for (const VectorXd& q : basis) w -= q.dot(w) * q;
      project(w);
    }
    const double b = w.norm();

    const auto m = static_cast<Eigen::Index>(alpha.size());
    const bool exhausted = b < 1e-13 || m == max_steps;
    if (m % 8 == 0 || exhausted) {
      MatrixXd t = MatrixXd::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<MatrixXd> tri(t);
      const double theta = tri.eigenvalues()[m - 1];
      const VectorXd y = tri.eigenvectors().col(m - 1);
      const double ritz_residual = std::abs(b * y[m - 1]);
      const double scale = std::max(std::abs(theta), 1e-12);
      if (exhausted || ritz_residual <= tolerance * scale) {
        best.value = theta;
        best.vector = VectorXd::Zero(n);
        for (Eigen::Index i = 0; i < m; ++i) best.vector += y[i] * basis[i];
        best.vector.normalize();
        VectorXd check(n);
        op(best.vector, check);
        project(check);
        const double r = (check - theta * best.vector).norm();
        best.residual = std::abs(theta) > 1e-12 ? r / std::abs(theta) : r;
        return best;
      }
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  throw_internal("Lanczos iteration did not converge");
}

}  // namespace

SpectralSummary spectral_summary(const Graph& g, EigenMethod method) {
  require_two_nodes(g);
  SpectralSummary out;
  const auto n = static_cast<Eigen::Index>(g.node_count());

  if (use_dense(g, method)) {
    const MatrixXd gram = dense_gram(g);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(gram);
    const auto& ev = es.eigenvalues();
    out.sigma1 = std::sqrt(std::max(0.0, ev[n - 1]));
    out.sigma2 = std::sqrt(std::max(0.0, ev[n - 2]));
    out.residual = std::max(relative_residual(gram, ev[n - 1], es.eigenvectors().col(n - 1)),
                            relative_residual(gram, ev[n - 2], es.eigenvectors().col(n - 2)));

    const MatrixXd norm_adj = dense_normalized_adjacency(g);
    Eigen::SelfAdjointEigenSolver<MatrixXd> na(norm_adj);
    out.lambda2_norm_adj = na.eigenvalues()[n - 2];
    out.residual = std::max(out.residual,
                            relative_residual(norm_adj, na.eigenvalues()[n - 2],
                                              na.eigenvectors().col(n - 2)));
    return out;
  }

  std::vector<double> inv_deg_sq(g.node_count());
  std::vector<double> inv_sqrt_deg(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double d = static_cast<double>(g.closed_degree(i));
    inv_deg_sq[i] = 1.0 / (d * d);
    inv_sqrt_deg[i] = 1.0 / std::sqrt(d);
  }
  VectorXd scratch(n);
  LinearOperator gram = [&](const VectorXd& x, VectorXd& y) {
    apply_adjacency(g, x, scratch);
    for (Eigen::Index i = 0; i < n; ++i) scratch[i] *= inv_deg_sq[i];
    apply_adjacency(g, scratch, y);
  };
  EigenPair top = lanczos_largest(n, gram, {}, kIterativeTolerance);
  EigenPair second = lanczos_largest(n, gram, {top.vector}, kIterativeTolerance);
  out.sigma1 = std::sqrt(std::max(0.0, top.value));
  out.sigma2 = std::sqrt(std::max(0.0, second.value));

  // D^1/2 1 is the eigenvector of D^-1/2 A D^-1/2 for eigenvalue 1.
  VectorXd known(n);
  for (Eigen::Index i = 0; i < n; ++i) known[i] = 1.0 / inv_sqrt_deg[i];
  known.normalize();
  VectorXd scaled(n);
  LinearOperator norm_adj = [&](const VectorXd& x, VectorXd& y) {
    for (Eigen::Index i = 0; i < n; ++i) scaled[i] = x[i] * inv_sqrt_deg[i];
    apply_adjacency(g, scaled, y);
    for (Eigen::Index i = 0; i < n; ++i) y[i] *= inv_sqrt_deg[i];
  };
  EigenPair lam2 = lanczos_largest(n, norm_adj, {known}, kIterativeTolerance);
  out.lambda2_norm_adj = lam2.value;
  out.residual = std::max({top.residual, second.residual, lam2.residual});
  return out;
}

double constrained_max_gap(const Graph& g, double radius, EigenMethod method) {
  require_two_nodes(g);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw_input("radius must be positive");
  }
  const auto n = static_cast<Eigen::Index>(g.node_count());
  const double nd = static_cast<double>(n);
  double top = 0.0;

  if (use_dense(g, method)) {
    // P M P with P = I - 11^T/n, built from the rank-one corrections.
    MatrixXd m = dense_gram(g);
    const VectorXd u = m.rowwise().sum();
    const double c = u.sum();
    m -= (u * VectorXd::Ones(n).transpose() + VectorXd::Ones(n) * u.transpose()) / nd;
    m.array() += c / (nd * nd);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(m, Eigen::EigenvaluesOnly);
    top = es.eigenvalues()[n - 1];
  } else {
    std::vector<double> inv_deg_sq(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) {
      const double d = static_cast<double>(g.closed_degree(i));
      inv_deg_sq[i] = 1.0 / (d * d);
    }
    VectorXd scratch(n);
    LinearOperator gram = [&](const VectorXd& x, VectorXd& y) {
      apply_adjacency(g, x, scratch);
      for (Eigen::Index i = 0; i < n; ++i) scratch[i] *= inv_deg_sq[i];
      apply_adjacency(g, scratch, y);
    };
    const VectorXd ones = VectorXd::Ones(n) / std::sqrt(nd);
    top = lanczos_largest(n, gram, {ones}, kIterativeTolerance).value;
  }
  // trace(A D^-2 A) = sum 1/d_j bounds the spectrum; anything below n eps of
  // it is solver round-off (K_n lands here), reported as an exact zero.
  double trace = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    trace += 1.0 / static_cast<double>(g.closed_degree(i));
  }
  if (top <= nd * std::numeric_limits<double>::epsilon() * trace) top = 0.0;
  return top * radius * radius;
}

double expected_gap(const Graph& g) {
  if (g.node_count() == 0) throw_input("expected gap of an empty graph");
  double total = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    total += 1.0 / static_cast<double>(g.closed_degree(i));
  }
  return total - 1.0;
}

MonteCarloEstimate expected_gap_monte_carlo(const Graph& g, std::size_t samples,
                                            std::uint64_t seed,
                                            OpinionDistribution dist) {
  if (samples == 0) throw_input("Monte Carlo needs at least one sample");
  if (g.node_count() == 0) throw_input("Monte Carlo on an empty graph");

  constexpr std::size_t kShardSize = 1024;
  const std::size_t shards = (samples + kShardSize - 1) / kShardSize;
  struct Partial {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  std::vector<Partial> partials(shards);
  const double half_width = std::sqrt(3.0);

  parallel_for(shards, [&](std::size_t shard) {
    Rng rng(seed, shard + 1);
    const std::size_t begin = shard * kShardSize;
    const std::size_t end = std::min(samples, begin + kShardSize);
    std::vector<double> draw(g.node_count());
    Partial p;
    for (std::size_t t = begin; t < end; ++t) {
      for (double& x : draw) {
        x = dist == OpinionDistribution::kGaussian
                ? rng.normal()
                : rng.uniform(-half_width, half_width);
      }
      const double gap = compute_gap(g, OpinionVector(draw));
      p.sum += gap;
      p.sum_sq += gap * gap;
    }
    partials[shard] = p;
  });

  Partial total;
  for (const Partial& p : partials) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  MonteCarloEstimate est;
  est.samples = samples;
  const double count = static_cast<double>(samples);
  est.mean = total.sum / count;
  if (samples > 1) {
    const double var =
        std::max(0.0, (total.sum_sq - count * est.mean * est.mean) / (count - 1.0));
    est.stderr_ = std::sqrt(var / count);
  }
  return est;
}

double sbm_gap_closed_form(std::size_t n_per_block, double p, double q,
                           bool approx) {
  if (n_per_block == 0) throw_input("SBM block size must be positive");
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0)) {
    throw_input("SBM probabilities must lie in [0, 1]");
  }
  if (q > p) throw_input("SBM closed form requires q <= p (homophily)");
  const double n = static_cast<double>(n_per_block);
  if (approx) {
    if (p + q == 0.0) throw_input("approximate SBM form undefined for p = q = 0");
    const double ratio = (p - q) / (p + q);
    return ratio * ratio * 2.0 * n;
  }
  const double self = (1.0 - p) / n;
  const double ratio = (p - q + self) / (p + q + self);
  return ratio * ratio * 2.0 * n;
}

}  // namespace gapkit
