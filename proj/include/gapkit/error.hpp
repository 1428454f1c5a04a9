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

#ifndef GAPKIT_ERROR_HPP
#define GAPKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gapkit {

// Numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kInput = 2,       // malformed files, bad parameters, dimension mismatch
  kInfeasible = 3,  // exact search exceeds its configured budget
  kInternal = 4,    // invariant violation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_input(const std::string& what) {
  throw Error(ErrorCode::kInput, what);
}

[[noreturn]] inline void throw_infeasible(const std::string& what) {
  throw Error(ErrorCode::kInfeasible, what);
}

[[noreturn]] inline void throw_internal(const std::string& what) {
  throw Error(ErrorCode::kInternal, what);
}

}  // namespace gapkit

#endif  // GAPKIT_ERROR_HPP
