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

namespace sectsqrt {

/// Which integrand of the split representation a pole belongs to:
/// First is 1/(4 tau + lambda (t+1)^2), Second is 1/(tau (t+1)^2 + 4 lambda).
enum class Integrand { First = 1, Second = 2 };

struct PoleData {
  std::complex<double> t0;  // pole in the upper half plane
  double growth;            // S = |t0 + sqrt(t0^2 - 1)| > 1
  double residue_modulus;   // |lambda|^{-1/2} / (4 sqrt(tau))
};

/// Asymptotic (Barrett-type) modulus estimate of the quadrature error. This
/// is an approximation, not a guaranteed bound.
struct ScalarErrorEstimate {
  double e1;     // Phi^(1)
  double e2;     // Phi^(2)
  double total;  // 4 |lambda|^{-1/2} (S1^{-2n} + S2^{-2n})
};

/// Safety factor callers apply to the estimate when it drives a stopping
/// decision.
constexpr double kDefaultEstimateSafety = 10.0;

/// Radius of the Joukowsky circle whose image ellipse passes through t0.
double joukowsky_growth(std::complex<double> t0);

/// Throws Domain for lambda on (-inf, 0], InvalidArgument for tau <= 0.
PoleData pole_pair(Integrand which, std::complex<double> lambda, double tau);

/// Phi^(i) = (pi / sqrt(tau)) |lambda|^{-1/2} S^{-2n}.
double phi(Integrand which, double tau, std::complex<double> lambda, int n);

ScalarErrorEstimate total_estimate(std::complex<double> lambda, double tau, int n);

}  // namespace sectsqrt
