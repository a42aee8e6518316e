// Copyright 2026 The swipt-link Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWIPT_ERRORS_HPP_
#define SWIPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace swipt {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidParams,
  kInfeasible,
  kPeakViolation,
  kConfig,
  kIo,
};

// Base exception for the toolkit. The C API maps `code()` onto its status
// enum, so every throw site picks the most specific code it can.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a required harvested power exceeds what the receiver can reach.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, double feasible_max)
      : Error(ErrorCode::kInfeasible, what), feasible_max_(feasible_max) {}

  double feasible_max() const noexcept { return feasible_max_; }

 private:
  double feasible_max_;
};

inline void Require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace swipt

#endif  // SWIPT_ERRORS_HPP_
