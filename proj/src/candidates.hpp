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

#ifndef GAPKIT_SRC_CANDIDATES_HPP
#define GAPKIT_SRC_CANDIDATES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "gapkit/graph.hpp"

namespace gapkit::detail {

// Missing edges in lexicographic order plus per-row offsets, so the index of
// a candidate also encodes its tie-break rank.
class CandidateIndex {
 public:
  explicit CandidateIndex(const Graph& g);

  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  // Index of {a, b}, or npos when it is not a candidate.
  std::size_t find(NodeId a, NodeId b) const;

  // Calls f(index) for every candidate with x as an endpoint.
  template <typename F>
  void for_each_incident(NodeId x, F&& f) const {
    for (NodeId w = 0; w < x; ++w) {
      std::size_t i = find(w, x);
      if (i != npos) f(i);
    }
    for (std::size_t i = offsets_[x]; i < offsets_[x + 1]; ++i) f(i);
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
};

// Min-tournament over (delta, index) keys; index order breaks ties.
class RankTree {
 public:
  explicit RankTree(std::size_t count);

  void set(std::size_t i, double delta);
  void disable(std::size_t i);
  double value(std::size_t i) const { return keys_[i]; }
  bool active(std::size_t i) const { return active_[i]; }

  // Smallest active entry, or npos when none remain.
  std::size_t top() const { return tree_.empty() ? npos : tree_[1]; }
  std::size_t active_count() const noexcept { return active_count_; }

  static constexpr std::size_t npos = CandidateIndex::npos;

 private:
  bool less(std::size_t a, std::size_t b) const;
  void refresh(std::size_t leaf);

  std::size_t width_ = 1;
  std::vector<double> keys_;
  std::vector<bool> active_;
  std::vector<std::size_t> tree_;
  std::size_t active_count_ = 0;
};

void require_budget(std::size_t k, std::size_t missing);

}  // namespace gapkit::detail

#endif  // GAPKIT_SRC_CANDIDATES_HPP
