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

#include <boost/math/special_functions/legendre.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "sectsqrt/error.hpp"
#include "sectsqrt/gauss.hpp"

using namespace sectsqrt;

namespace {

double monomial_error(const QuadratureRule& rule, int k) {
  const auto v = integrate(rule, [k](double t) { return std::complex<double>(std::pow(t, k)); });
  return std::abs(v.real() - oracle::monomial_moment(k));
}

}  // namespace

TEST_SUITE("gauss") {

TEST_CASE("one and two point rules") {
  const auto r1 = compute_gauss_legendre(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const auto r2 = compute_gauss_legendre(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rejects orders outside the supported range") {
  CHECK_THROWS_AS(compute_gauss_legendre(0), Error);
  CHECK_THROWS_AS(gauss_legendre(-3), Error);
  CHECK_THROWS_AS(gauss_legendre(kMaxQuadratureOrder + 1), Error);
}

TEST_CASE("sixteen points integrate degree 31 but not 32") {
  const auto& rule = gauss_legendre(16);
  for (int k = 0; k <= 31; ++k) {
    CAPTURE(k);
    CHECK(monomial_error(rule, k) < 1e-13);
  }
  CHECK(monomial_error(rule, 32) > 1e-10);
}

TEST_CASE("exactness up to degree 2n-1 for n <= 64") {
  for (int n = 1; n <= 64; ++n) {
    const auto& rule = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(monomial_error(rule, k) < 1e-12);
    }
  }
}

TEST_CASE("structure: symmetry, weight sum, interior nodes") {
  for (int n : {1, 2, 3, 7, 20, 101, 400, 1000}) {
    CAPTURE(n);
    const auto& r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(r.nodes[j] + r.nodes[n - 1 - j]) <= 1e-14);
      CHECK(std::abs(r.weights[j] - r.weights[n - 1 - j]) <= 1e-14 * r.weights[j]);
      CHECK(r.nodes[j] > -1.0);
      CHECK(r.nodes[j] < 1.0);
      CHECK(r.weights[j] > 0.0);
      if (j > 0) CHECK(r.nodes[j] > r.nodes[j - 1]);
      wsum += r.weights[j];
    }
    CHECK(std::abs(wsum - 2.0) <= 1e-13);
  }
}

TEST_CASE("nodes match an independent Legendre zero finder") {
  for (int n : {5, 12, 33, 80}) {
    const auto zeros = boost::math::legendre_p_zeros<double>(n);  // nonnegative zeros, ascending
    const auto& r = gauss_legendre(n);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      const double node = r.nodes[n - zeros.size() + i];
      CAPTURE(n);
      CHECK(std::abs(node - zeros[i]) < 1e-14);
    }
  }
}

TEST_CASE("nodes interlace between consecutive orders") {
  for (int n = 1; n < 60; ++n) {
    const auto& a = gauss_legendre(n);
    const auto& b = gauss_legendre(n + 1);
    for (int j = 0; j < n; ++j) {
      CAPTURE(n);
      CHECK(b.nodes[j] < a.nodes[j]);
      CHECK(a.nodes[j] < b.nodes[j + 1]);
    }
  }
}

TEST_CASE("cached and fresh rules are bit identical") {
  for (int n : {3, 64, 257}) {
    const auto fresh = compute_gauss_legendre(n);
    const auto& cached = gauss_legendre(n);
    CHECK(fresh.nodes == cached.nodes);
    CHECK(fresh.weights == cached.weights);
    CHECK(&gauss_legendre(n) == &cached);
  }
}

TEST_CASE("integrate") {
  const auto& r5 = gauss_legendre(5);
  CHECK(std::abs(integrate(r5, [](double) { return std::complex<double>(1.0); }) - 2.0) < 1e-14);
  CHECK(std::abs(integrate(r5, [](double t) { return std::complex<double>(std::pow(t, 7)); })) <
        1e-15);

  // First integrand of the split at lambda = 10, tau = 2.
  const auto f = [](double t) { return std::complex<double>(1.0 / (8.0 + 10.0 * (t + 1) * (t + 1))); };
  const auto ref = oracle::adaptive_simpson(f, -1.0, 1.0);
  const auto got = integrate(gauss_legendre(20), f);
  CHECK(std::abs(got - ref) < 1e-12);
}

}  // TEST_SUITE
