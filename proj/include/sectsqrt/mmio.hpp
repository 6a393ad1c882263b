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

#include <string>

#include "sectsqrt/opfun.hpp"

namespace sectsqrt {

/// Reads a Matrix Market coordinate file (real or complex; general or
/// symmetric). The result is stored as Diagonal or Tridiagonal when the
/// sparsity pattern allows it, Dense otherwise. Sector metadata is left at
/// its defaults and must be attached by the caller.
OperatorData read_matrix_market(const std::string& path);

/// Writes the nonzero pattern as a complex general coordinate file.
void write_matrix_market(const std::string& path, const Operator& A);

/// One entry per line, "re im" or just "re".
ComplexVector read_vector(const std::string& path);
void write_vector(const std::string& path, const ComplexVector& v);

}  // namespace sectsqrt
