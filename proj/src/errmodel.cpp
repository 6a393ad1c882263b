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

#include "sectsqrt/errmodel.hpp"

#include <cmath>
#include <numbers>

#include "sectsqrt/error.hpp"
#include "sectsqrt/rational.hpp"

namespace sectsqrt {

using cplx = std::complex<double>;

namespace {

void check_inputs(cplx lambda, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    fail(ErrorCode::InvalidArgument, "error model: tau must be positive");
  }
  if (on_branch_cut(lambda)) {
    fail(ErrorCode::Domain, "error model: lambda lies on (-inf, 0]");
  }
}

void check_order(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "error model: n must be >= 1");
}

}  // namespace

double joukowsky_growth(cplx t0) {
  const cplx w = std::sqrt(t0 * t0 - 1.0);
  const double plus = std::abs(t0 + w);
  return plus > 1.0 ? plus : std::abs(t0 - w);
}

PoleData pole_pair(Integrand which, cplx lambda, double tau) {
  check_inputs(lambda, tau);
  const cplx ratio = which == Integrand::First ? cplx(tau) / lambda : lambda / tau;
  const cplx t0 = 2.0 * std::sqrt(ratio) * cplx(0.0, 1.0) - 1.0;
  PoleData out;
  out.t0 = t0;
  out.growth = joukowsky_growth(t0);
  out.residue_modulus = 1.0 / (4.0 * std::sqrt(tau) * std::sqrt(std::abs(lambda)));
  return out;
}

double phi(Integrand which, double tau, cplx lambda, int n) {
  check_order(n);
  const PoleData pole = pole_pair(which, lambda, tau);
  return std::numbers::pi / std::sqrt(tau) / std::sqrt(std::abs(lambda)) *
         std::pow(pole.growth, -2.0 * n);
}

ScalarErrorEstimate total_estimate(cplx lambda, double tau, int n) {
  check_order(n);
  const double s1 = pole_pair(Integrand::First, lambda, tau).growth;
  const double s2 = pole_pair(Integrand::Second, lambda, tau).growth;
  const double m = 1.0 / std::sqrt(std::abs(lambda));
  const double d1 = std::pow(s1, -2.0 * n);
  const double d2 = std::pow(s2, -2.0 * n);
  ScalarErrorEstimate est;
  est.e1 = std::numbers::pi / std::sqrt(tau) * m * d1;
  est.e2 = std::numbers::pi / std::sqrt(tau) * m * d2;
  est.total = 4.0 * m * (d1 + d2);
  return est;
}

}  // namespace sectsqrt
