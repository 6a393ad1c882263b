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

#include "sectsqrt/rational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sectsqrt/error.hpp"

namespace sectsqrt {

using cplx = std::complex<double>;

bool on_branch_cut(cplx lambda) noexcept {
  return lambda.imag() == 0.0 && lambda.real() <= 0.0;
}

RationalHalfPower::RationalHalfPower(int n, double tau) : n_(n), tau_(tau) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "rational: n must be >= 1");
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    fail(ErrorCode::InvalidArgument, "rational: tau must be positive and finite");
  }
  rule_ = &gauss_legendre(n);

  const double scale = 4.0 * std::sqrt(tau) / std::numbers::pi;
  terms_.reserve(2 * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t1 = rule_->nodes[j] + 1.0;
    const double w = rule_->weights[j];
    // 1 / (4 tau + lambda t1^2) = t1^-2 / (lambda + 4 tau / t1^2)
    terms_.push_back({scale * w / (t1 * t1), 4.0 * tau / (t1 * t1)});
    // 1 / (tau t1^2 + 4 lambda) = (1/4) / (lambda + tau t1^2 / 4)
    terms_.push_back({scale * w / 4.0, tau * t1 * t1 / 4.0});
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const PartialFraction& a, const PartialFraction& b) {
              return a.shift < b.shift;
            });
}

cplx RationalHalfPower::operator()(cplx lambda) const {
  cplx sum = 0.0;
  for (const auto& term : terms_) {
    const cplx denom = lambda + term.shift;
    if (denom == 0.0) {
      fail(ErrorCode::Singular, "rational: lambda hits the pole at -" +
                                    std::to_string(term.shift));
    }
    sum += term.residue / denom;
  }
  return sum;
}

Evaluation RationalHalfPower::evaluate(cplx lambda) const {
  return {(*this)(lambda), on_branch_cut(lambda)};
}

cplx RationalHalfPower::evaluate_sums(cplx lambda) const {
  cplx first = 0.0;
  cplx second = 0.0;
  for (int j = 0; j < n_; ++j) {
    const double t1 = rule_->nodes[j] + 1.0;
    const double w = rule_->weights[j];
    first += w / (4.0 * tau_ + lambda * (t1 * t1));
    second += w / (tau_ * t1 * t1 + 4.0 * lambda);
  }
  return 4.0 * std::sqrt(tau_) / std::numbers::pi * (first + second);
}

GeneralAlphaApprox::GeneralAlphaApprox(int n, double tau, double alpha)
    : n_(n), tau_(tau), alpha_(alpha) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "general alpha: n must be >= 1");
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    fail(ErrorCode::InvalidArgument, "general alpha: tau must be positive");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    fail(ErrorCode::InvalidArgument, "general alpha: alpha must lie in (0, 1)");
  }
  rule_ = &gauss_legendre(n);
}

cplx GeneralAlphaApprox::operator()(cplx lambda) const {
  const double p1 = 1.0 / alpha_;
  const double p2 = 1.0 / (1.0 - alpha_);
  cplx first = 0.0;
  cplx second = 0.0;
  for (int j = 0; j < n_; ++j) {
    const double t = 0.5 * (rule_->nodes[j] + 1.0);
    const double w = rule_->weights[j];
    first += w / (tau_ + lambda * std::pow(t, p1));
    second += w / (tau_ * std::pow(t, p2) + lambda);
  }
  // The 1/2 is the Jacobian of t = (s + 1) / 2.
  const double front = std::sin(alpha_ * std::numbers::pi) / std::numbers::pi *
                       std::pow(tau_, 1.0 - alpha_) * 0.5;
  return front * (p1 * first + p2 * second);
}

}  // namespace sectsqrt
