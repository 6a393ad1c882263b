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

#include <complex>
#include <functional>
#include <vector>

namespace sectsqrt {

/// n-point Gauss-Legendre rule on [-1, 1]. Nodes are strictly ascending and
/// mirrored exactly about zero; weights are positive and mirrored as well.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

constexpr int kMaxQuadratureOrder = 10000;

/// Computes the rule from scratch (Newton on the three-term recurrence).
/// Throws InvalidArgument unless 1 <= n <= kMaxQuadratureOrder.
QuadratureRule compute_gauss_legendre(int n);

/// Cached variant. The returned reference stays valid for the lifetime of
/// the process; concurrent callers are serialized per build.
const QuadratureRule& gauss_legendre(int n);

/// Sum_j w_j f(t_j).
std::complex<double> integrate(const QuadratureRule& rule,
                               const std::function<std::complex<double>(double)>& f);

}  // namespace sectsqrt
