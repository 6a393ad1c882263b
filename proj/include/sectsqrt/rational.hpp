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
#include <vector>

#include "sectsqrt/gauss.hpp"

namespace sectsqrt {

/// One partial-fraction term residue / (lambda + shift).
struct PartialFraction {
  double residue;
  double shift;
};

/// Result of evaluating an approximant together with a flag telling whether
/// lambda was on (-inf, 0], where the rational value exists but no longer
/// approximates the principal power.
struct Evaluation {
  std::complex<double> value;
  bool off_principal_domain;
};

/// Rational approximation R_{2n-1,2n}(lambda) ~ lambda^{-1/2} obtained by
/// applying the n-point Gauss-Legendre rule to both integrals of
///
///   lambda^{-1/2} = (4 sqrt(tau)/pi) ( int dt / (4 tau + lambda (t+1)^2)
///                                    + int dt / (tau (t+1)^2 + 4 lambda) ).
///
/// Stored as 2n partial fractions sorted by ascending shift; all residues and
/// shifts are positive, so applying R to an operator only needs solves with
/// real positive shifts.
class RationalHalfPower {
 public:
  /// Throws InvalidArgument for n < 1 or tau <= 0 (or non-finite tau).
  RationalHalfPower(int n, double tau);

  int order() const noexcept { return n_; }
  double tau() const noexcept { return tau_; }
  /// The integral splitting was derived for tau >= 1; smaller values are
  /// accepted but flagged here.
  bool tau_below_one() const noexcept { return tau_ < 1.0; }
  const QuadratureRule& rule() const noexcept { return *rule_; }
  const std::vector<PartialFraction>& terms() const noexcept { return terms_; }

  /// Sum_k residue_k / (lambda + shift_k), accumulated in ascending shift
  /// order. Throws Singular if lambda coincides with a pole.
  std::complex<double> operator()(std::complex<double> lambda) const;
  Evaluation evaluate(std::complex<double> lambda) const;

  /// Direct evaluation of the two quadrature sums. Kept only to cross-check
  /// the partial-fraction form.
  std::complex<double> evaluate_sums(std::complex<double> lambda) const;

 private:
  int n_;
  double tau_;
  const QuadratureRule* rule_;
  std::vector<PartialFraction> terms_;
};

inline std::complex<double> eval_half(const RationalHalfPower& r,
                                      std::complex<double> lambda) {
  return r(lambda);
}

/// Quadrature for lambda^{-alpha}, 0 < alpha < 1, from the split
///
///   lambda^{-alpha} = sin(alpha pi)/pi tau^{1-alpha} [ 1/alpha int_0^1 dt/(tau + lambda t^{1/alpha})
///                     + 1/(1-alpha) int_0^1 dt/(tau t^{1/(1-alpha)} + lambda) ]
///
/// with both integrals mapped to [-1, 1]. No error model is attached: for
/// alpha != 1/2 the integrands are not analytic on the whole interval.
class GeneralAlphaApprox {
 public:
  GeneralAlphaApprox(int n, double tau, double alpha);

  int order() const noexcept { return n_; }
  double tau() const noexcept { return tau_; }
  double alpha() const noexcept { return alpha_; }
  const QuadratureRule& rule() const noexcept { return *rule_; }

  std::complex<double> operator()(std::complex<double> lambda) const;

 private:
  int n_;
  double tau_;
  double alpha_;
  const QuadratureRule* rule_;
};

/// lambda on the closed negative real axis (-inf, 0].
bool on_branch_cut(std::complex<double> lambda) noexcept;

}  // namespace sectsqrt
