// Copyright 2026 The sectsqrt Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sectsqrt {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,     // input on a branch cut or outside a formula's domain
  Singular = 3,   // exact pole hit or singular shifted system
  Breakdown = 4,  // zero pivot in tridiagonal elimination
  Numerical = 5,  // iteration failed to converge, precision exhausted
  Io = 6,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type thrown by every module of the library. The C API maps
/// `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sectsqrt
