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

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sectsqrt/error.hpp"
#include "sectsqrt/opfun.hpp"

namespace sectsqrt {

namespace {

namespace mp = boost::multiprecision;

constexpr unsigned kDigits = 200;
using big = mp::number<mp::cpp_bin_float<kDigits>>;

struct ToeplitzCoefficients {
  double sub;
  double diag;
  double super;
};

double constant_real(const ComplexVector& band, const char* name) {
  const std::complex<double> first = band.front();
  for (const auto& z : band) {
    if (z != first) {
      fail(ErrorCode::InvalidArgument,
           std::string("toeplitz oracle: ") + name + " band is not constant");
    }
  }
  if (first.imag() != 0.0) {
    fail(ErrorCode::InvalidArgument,
         std::string("toeplitz oracle: ") + name + " band is not real");
  }
  return first.real();
}

ToeplitzCoefficients coefficients(const Tridiagonal& A) {
  if (A.diag.size() < 2) fail(ErrorCode::InvalidArgument, "toeplitz oracle: N must be >= 2");
  if (A.sub.size() + 1 != A.diag.size() || A.super.size() + 1 != A.diag.size()) {
    fail(ErrorCode::InvalidArgument, "toeplitz oracle: inconsistent band lengths");
  }
  ToeplitzCoefficients t{constant_real(A.sub, "sub"), constant_real(A.diag, "main"),
                         constant_real(A.super, "super")};
  if (!(t.sub * t.super > 0.0)) {
    fail(ErrorCode::Domain, "toeplitz oracle: requires sub * super > 0");
  }
  return t;
}

}  // namespace

std::vector<double> toeplitz_eigenvalues(const Tridiagonal& A) {
  const ToeplitzCoefficients t = coefficients(A);
  const int n = static_cast<int>(A.diag.size());
  const double s = std::copysign(std::sqrt(t.sub * t.super), t.sub);
  std::vector<double> eig(n);
  for (int k = 1; k <= n; ++k) {
    eig[k - 1] = t.diag + 2.0 * s * std::cos(k * std::numbers::pi / (n + 1));
  }
  return eig;
}

ComplexVector oracle_tridiag_toeplitz(const Tridiagonal& A, std::span<const std::complex<double>> v,
                                      double alpha) {
  const ToeplitzCoefficients t = coefficients(A);
  const int n = static_cast<int>(A.diag.size());
  if (v.size() != static_cast<std::size_t>(n)) {
    fail(ErrorCode::InvalidArgument, "toeplitz oracle: vector length mismatch");
  }
  if (!std::isfinite(alpha)) fail(ErrorCode::InvalidArgument, "toeplitz oracle: alpha not finite");

  // The similarity scaling spans (sub/super)^{(N-1)/2} in each direction.
  const double ratio = t.sub / t.super;
  const double needed = std::abs(std::log10(ratio)) * (n - 1) + 40.0;
  if (needed > kDigits) {
    fail(ErrorCode::Numerical, "toeplitz oracle: similarity scaling exceeds working precision");
  }

  const big pi = boost::math::constants::pi<big>();
  const big b(t.sub);
  const big c(t.super);
  const big s = t.sub > 0 ? big(mp::sqrt(b * c)) : big(-mp::sqrt(b * c));
  const big root = mp::sqrt(big(b / c));

  // sin(m pi / (N+1)) depends on m modulo 2(N+1).
  const int period = 2 * (n + 1);
  std::vector<big> sines(period);
  for (int m = 0; m < period; ++m) sines[m] = mp::sin(pi * m / (n + 1));

  std::vector<big> scale(n);  // d_j = (b/c)^{j/2}, j = 1..N
  scale[0] = root;
  for (int j = 1; j < n; ++j) scale[j] = scale[j - 1] * root;

  std::vector<big> powers(n);
  for (int k = 1; k <= n; ++k) {
    const big lambda = big(t.diag) + 2 * s * mp::cos(pi * k / (n + 1));
    if (lambda <= 0) {
      fail(ErrorCode::Domain, "toeplitz oracle: nonpositive eigenvalue");
    }
    powers[k - 1] = mp::pow(lambda, big(-alpha));
  }

  std::vector<big> wr(n), wi(n);
  for (int j = 0; j < n; ++j) {
    wr[j] = big(v[j].real()) / scale[j];
    wi[j] = big(v[j].imag()) / scale[j];
  }

  // Coefficients in the orthonormal sine basis, scaled by lambda_k^{-alpha}.
  const big norm = big(2) / (n + 1);
  std::vector<big> cr(n), ci(n);
  for (int k = 1; k <= n; ++k) {
    big sr = 0;
    big si = 0;
    for (int j = 1; j <= n; ++j) {
      const big& sn = sines[(j * k) % period];
      sr += sn * wr[j - 1];
      si += sn * wi[j - 1];
    }
    cr[k - 1] = sr * powers[k - 1];
    ci[k - 1] = si * powers[k - 1];
  }

  ComplexVector out(n);
  for (int j = 1; j <= n; ++j) {
    big sr = 0;
    big si = 0;
    for (int k = 1; k <= n; ++k) {
      const big& sn = sines[(j * k) % period];
      sr += sn * cr[k - 1];
      si += sn * ci[k - 1];
    }
    sr *= norm * scale[j - 1];
    si *= norm * scale[j - 1];
    out[j - 1] = {static_cast<double>(sr), static_cast<double>(si)};
  }
  return out;
}

}  // namespace sectsqrt
