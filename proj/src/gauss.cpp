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

#include "sectsqrt/gauss.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "sectsqrt/error.hpp"

namespace sectsqrt {

namespace {

constexpr double kNewtonTolerance = 1e-15;
constexpr int kNewtonMaxIterations = 100;

struct LegendreValue {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

LegendreValue legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double pn = n == 0 ? 1.0 : p1;
  const double pnm1 = n == 0 ? 0.0 : p0;
  // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1); nodes never reach |x| = 1.
  const double dp = n * (x * pn - pnm1) / (x * x - 1.0);
  return {pn, dp};
}

}  // namespace

QuadratureRule compute_gauss_legendre(int n) {
  if (n < 1 || n > kMaxQuadratureOrder) {
    fail(ErrorCode::InvalidArgument,
         "gauss_legendre: order must lie in [1, " +
             std::to_string(kMaxQuadratureOrder) + "], got " +
             std::to_string(n));
  }
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  // Roots come in +-pairs; compute the positive half (plus 0 for odd n) and
  // mirror so the symmetry holds bit for bit.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root; Chebyshev-angle initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    LegendreValue v{};
    for (int it = 0; it < kNewtonMaxIterations; ++it) {
      v = legendre(n, x);
      const double dx = v.p / v.dp;
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance) break;
    }
    if (n % 2 == 1 && i == half - 1) x = 0.0;
    v = legendre(n, x);
    const double w = 2.0 / ((1.0 - x * x) * v.dp * v.dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

const QuadratureRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto rule = std::make_unique<const QuadratureRule>(compute_gauss_legendre(n));
    it = cache.emplace(n, std::move(rule)).first;
  }
  return *it->second;
}

std::complex<double> integrate(
    const QuadratureRule& rule,
    const std::function<std::complex<double>(double)>& f) {
  std::complex<double> sum = 0.0;
  for (int j = 0; j < rule.order; ++j) sum += rule.weights[j] * f(rule.nodes[j]);
  return sum;
}

}  // namespace sectsqrt
