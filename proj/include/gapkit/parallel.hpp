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

#ifndef GAPKIT_PARALLEL_HPP
#define GAPKIT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace gapkit {

// Worker cap from GAPKIT_THREADS; 0 or unset means hardware concurrency.
std::size_t worker_count();

// Calls body(i) for every i in [0, count), spread over at most
// worker_count() threads. Each index runs exactly once; callers write
// results into per-index slots so the outcome is independent of scheduling.
// The first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace gapkit

#endif  // GAPKIT_PARALLEL_HPP
