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

#ifndef GAPKIT_RNG_HPP
#define GAPKIT_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace gapkit {

// Seeded random source with reproducible output on every platform.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Independent streams are derived by seeding through std::seed_seq
// with (seed, stream) words; seed_seq's mixing is also fully specified.
// Standard distributions are implementation-defined, so the conversions to
// doubles, bounded integers and normals are done here explicitly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal via the Marsaglia polar method.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gapkit

#endif  // GAPKIT_RNG_HPP
