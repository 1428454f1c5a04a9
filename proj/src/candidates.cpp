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

#include "candidates.hpp"

#include <algorithm>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit::detail {

CandidateIndex::CandidateIndex(const Graph& g) {
  const std::size_t n = g.node_count();
  offsets_.assign(n + 1, 0);
  for (NodeId u = 0; u < n; ++u) {
    offsets_[u] = edges_.size();
    auto nbrs = g.neighbors(u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (NodeId v = u + 1; v < n; ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
        continue;
      }
      edges_.push_back({u, v});
    }
  }
  offsets_[n] = edges_.size();
}

std::size_t CandidateIndex::find(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  if (a == b || b + 1 >= offsets_.size()) return npos;
  auto first = edges_.begin() + static_cast<std::ptrdiff_t>(offsets_[a]);
  auto last = edges_.begin() + static_cast<std::ptrdiff_t>(offsets_[a + 1]);
  auto it = std::lower_bound(first, last, Edge{a, b});
  if (it == last || it->v != b) return npos;
  return static_cast<std::size_t>(it - edges_.begin());
}

RankTree::RankTree(std::size_t count) : keys_(count, 0.0), active_(count, false) {
  while (width_ < count) width_ *= 2;
  tree_.assign(2 * width_, npos);
}

bool RankTree::less(std::size_t a, std::size_t b) const {
  if (a == npos) return false;
  if (b == npos) return true;
  if (keys_[a] != keys_[b]) return keys_[a] < keys_[b];
  return a < b;
}

void RankTree::refresh(std::size_t leaf) {
  std::size_t node = (leaf + width_) / 2;
  while (node >= 1) {
    std::size_t l = tree_[2 * node];
    std::size_t r = tree_[2 * node + 1];
    tree_[node] = less(r, l) ? r : l;
    node /= 2;
  }
}

void RankTree::set(std::size_t i, double delta) {
  keys_[i] = delta;
  if (!active_[i]) {
    active_[i] = true;
    ++active_count_;
  }
  tree_[i + width_] = i;
  refresh(i);
}

void RankTree::disable(std::size_t i) {
  if (!active_[i]) return;
  active_[i] = false;
  --active_count_;
  tree_[i + width_] = npos;
  refresh(i);
}

void require_budget(std::size_t k, std::size_t missing) {
  if (k > missing) {
    throw_input("budget exceeds missing edges: k = " + std::to_string(k) +
                " but only " + std::to_string(missing) + " candidates");
  }
}

}  // namespace gapkit::detail
