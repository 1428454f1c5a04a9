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

#ifndef GAPKIT_SPECTRAL_HPP
#define GAPKIT_SPECTRAL_HPP

#include <cstddef>
#include <cstdint>

#include "gapkit/graph.hpp"

namespace gapkit {

struct SpectralSummary {
  double sigma1 = 0.0;            // largest singular value of D^-1 A
  double sigma2 = 0.0;            // second largest singular value of D^-1 A
  double lambda2_norm_adj = 0.0;  // second eigenvalue of D^-1/2 A D^-1/2
  double residual = 0.0;          // worst relative eigen-residual achieved
};

enum class EigenMethod {
  kAuto,       // dense up to kDenseCutoff nodes, Lanczos above
  kDense,
  kIterative,
};

inline constexpr std::size_t kDenseCutoff = 2000;
inline constexpr double kIterativeTolerance = 1e-8;

// A carries the implicit unit diagonal throughout. Singular values come from
// the symmetric surrogate A D^-2 A. Requires n >= 2.
SpectralSummary spectral_summary(const Graph& g,
                                 EigenMethod method = EigenMethod::kAuto);

// max S^T A D^-2 A S over ||S||_2 <= radius, S orthogonal to the all-ones
// vector. This is the largest gap an adversary can reach with opinion
// budget `radius`.
double constrained_max_gap(const Graph& g, double radius,
                           EigenMethod method = EigenMethod::kAuto);

// Expected gap under i.i.d. zero-mean unit-variance opinions:
// sum_i 1/d_i - 1 with closed degrees.
double expected_gap(const Graph& g);

enum class OpinionDistribution { kGaussian, kUniform };

struct MonteCarloEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

// Uniform draws are on [-sqrt(3), sqrt(3)] (unit variance). Work is split
// into fixed-size shards with derived seeds, so the result does not depend
// on the worker count.
MonteCarloEstimate expected_gap_monte_carlo(const Graph& g, std::size_t samples,
                                            std::uint64_t seed,
                                            OpinionDistribution dist);

// Gap of the two-block expected adjacency with block opinions +1 / -1.
// `approx` drops the (1-p)/n terms. Requires q < p.
double sbm_gap_closed_form(std::size_t n_per_block, double p, double q,
                           bool approx = false);

}  // namespace gapkit

#endif  // GAPKIT_SPECTRAL_HPP
