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

// Exercises the shared library through its C header only.

#include <cmath>
#include <complex>
#include <cstring>
#include <filesystem>
#include <thread>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sectsqrt/sectsqrt.h"

TEST_CASE("status strings and last error") {
  CHECK(std::strcmp(sectsqrt_status_string(SECTSQRT_OK), "ok") == 0);
  sectsqrt_rational* r = nullptr;
  CHECK(sectsqrt_rational_create(0, 1.0, &r) == SECTSQRT_E_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(std::strlen(sectsqrt_last_error()) > 0);
  CHECK(sectsqrt_rational_create(3, 1.0, nullptr) == SECTSQRT_E_INVALID_ARGUMENT);
  sectsqrt_rational_destroy(nullptr);
  sectsqrt_operator_destroy(nullptr);
}

TEST_CASE("last error is per thread") {
  sectsqrt_rational* r = nullptr;
  CHECK(sectsqrt_rational_create(0, 1.0, &r) != SECTSQRT_OK);
  const std::string here = sectsqrt_last_error();
  std::string there;
  std::thread([&] {
    double w;
    sectsqrt_lambert_w(-1.0, &w);
    there = sectsqrt_last_error();
  }).join();
  CHECK(here != there);
  CHECK(std::string(sectsqrt_last_error()) == here);
}

TEST_CASE("quadrature and rational handles") {
  std::vector<double> t(4), w(4);
  REQUIRE(sectsqrt_gauss_legendre(4, t.data(), w.data()) == SECTSQRT_OK);
  CHECK(w[0] + w[1] + w[2] + w[3] == doctest::Approx(2.0));

  sectsqrt_rational* r = nullptr;
  REQUIRE(sectsqrt_rational_create(1, 1.0, &r) == SECTSQRT_OK);
  REQUIRE(sectsqrt_rational_term_count(r) == 2);
  double res[2], sh[2];
  REQUIRE(sectsqrt_rational_terms(r, res, sh) == SECTSQRT_OK);
  CHECK(sh[0] == doctest::Approx(0.25));
  CHECK(sh[1] == doctest::Approx(4.0));
  sectsqrt_complex a, b;
  REQUIRE(sectsqrt_rational_eval(r, {5.0, 5.0}, &a) == SECTSQRT_OK);
  REQUIRE(sectsqrt_rational_eval_sums(r, {5.0, 5.0}, &b) == SECTSQRT_OK);
  CHECK(a.re == doctest::Approx(b.re));
  CHECK(a.im == doctest::Approx(b.im));
  CHECK(sectsqrt_rational_eval(r, {-4.0, 0.0}, &a) == SECTSQRT_E_SINGULAR);
  sectsqrt_rational_destroy(r);

  sectsqrt_estimate est;
  CHECK(sectsqrt_error_estimate({-1.0, 0.0}, 2.0, 5, &est) == SECTSQRT_E_DOMAIN);
  REQUIRE(sectsqrt_error_estimate({10.0, 0.0}, 2.0, 5, &est) == SECTSQRT_OK);
  CHECK(est.total > 0.0);
}

TEST_CASE("parameter selection") {
  sectsqrt_sector s;
  REQUIRE(sectsqrt_sector_constants(5.0 / 12.0, 1.0, nullptr, &s) == SECTSQRT_OK);
  CHECK(s.has_rho_n == 0);
  sectsqrt_selection sel;
  REQUIRE(sectsqrt_select_params(10, &s, 0.0, &sel) == SECTSQRT_OK);
  CHECK(sel.regime == SECTSQRT_REGIME_UNBOUNDED);
  CHECK(sel.tau == doctest::Approx(101.76).epsilon(1e-3));
  CHECK(sectsqrt_sector_constants(0.7, 1.0, nullptr, &s) == SECTSQRT_E_INVALID_ARGUMENT);

  const double rho = 1e4;
  REQUIRE(sectsqrt_sector_constants(1.0 / 6.0, 1.0, &rho, &s) == SECTSQRT_OK);
  REQUIRE(sectsqrt_select_params(40, &s, 0.0, &sel) == SECTSQRT_OK);
  CHECK(sel.regime == SECTSQRT_REGIME_BOUNDED);
  CHECK(sel.has_n_bar == 1);
  double bb;
  REQUIRE(sectsqrt_bound_bounded(40, &s, &bb) == SECTSQRT_OK);
  CHECK(bb == sel.predicted_error);
}

TEST_CASE("operators, solves and application") {
  const sectsqrt_complex entries[] = {{4.0, 0.0}, {9.0, 0.0}};
  sectsqrt_sector s;
  REQUIRE(sectsqrt_sector_constants(0.0, 4.0, nullptr, &s) == SECTSQRT_OK);
  sectsqrt_operator* op = nullptr;
  REQUIRE(sectsqrt_operator_diagonal(entries, 2, &s, &op) == SECTSQRT_OK);
  CHECK(sectsqrt_operator_size(op) == 2);
  CHECK(sectsqrt_operator_storage(op) == SECTSQRT_STORAGE_DIAGONAL);

  const sectsqrt_complex v[] = {{1.0, 0.0}, {1.0, 0.0}};
  sectsqrt_complex y[2];
  sectsqrt_apply_info info;
  REQUIRE(sectsqrt_apply_half_power(op, v, 2, 30, 0.0, y, &info) == SECTSQRT_OK);
  CHECK(info.solve_count == 60);
  CHECK(std::abs(y[0].re - 0.5) <= info.predicted_error);
  CHECK(std::abs(y[1].re - 1.0 / 3.0) <= info.predicted_error);
  CHECK(sectsqrt_apply_half_power(op, v, 3, 30, 0.0, y, nullptr) == SECTSQRT_E_INVALID_ARGUMENT);

  REQUIRE(sectsqrt_oracle_apply(op, v, 2, 0.5, y) == SECTSQRT_OK);
  CHECK(y[1].re == doctest::Approx(1.0 / 3.0));
  REQUIRE(sectsqrt_solve_shifted(op, 1.0, v, 2, y) == SECTSQRT_OK);
  CHECK(y[0].re == doctest::Approx(0.2));
  sectsqrt_operator_destroy(op);

  REQUIRE(sectsqrt_operator_convection_diffusion(60, 50.0, nullptr, &op) ==
          SECTSQRT_E_INVALID_ARGUMENT);
  const double beta = 0.3;
  REQUIRE(sectsqrt_operator_convection_diffusion(60, 30.0, &beta, &op) == SECTSQRT_OK);
  CHECK(sectsqrt_operator_storage(op) == SECTSQRT_STORAGE_TRIDIAGONAL);
  std::vector<sectsqrt_complex> ones(60, {1.0, 0.0}), a(60), b(60);
  REQUIRE(sectsqrt_apply_half_power(op, ones.data(), 60, 50, 0.0, a.data(), nullptr) ==
          SECTSQRT_OK);
  REQUIRE(sectsqrt_oracle_apply(op, ones.data(), 60, 0.5, b.data()) == SECTSQRT_OK);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 60; ++i) {
    num += std::norm(std::complex<double>(a[i].re - b[i].re, a[i].im - b[i].im));
    den += std::norm(std::complex<double>(b[i].re, b[i].im));
  }
  CHECK(std::sqrt(num / den) < 1e-10);

  std::vector<double> eig(60);
  REQUIRE(sectsqrt_toeplitz_eigenvalues(op, eig.data()) == SECTSQRT_OK);
  CHECK(eig[59] > 0.0);

  const std::string path = (std::filesystem::temp_directory_path() / "sectsqrt_capi.mtx").string();
  REQUIRE(sectsqrt_operator_write(op, path.c_str()) == SECTSQRT_OK);
  sectsqrt_operator* back = nullptr;
  REQUIRE(sectsqrt_operator_read(path.c_str(), nullptr, &back) == SECTSQRT_OK);
  CHECK(sectsqrt_operator_size(back) == 60);
  CHECK(sectsqrt_operator_storage(back) == SECTSQRT_STORAGE_TRIDIAGONAL);
  sectsqrt_operator_destroy(back);
  sectsqrt_operator_destroy(op);
  std::filesystem::remove(path);

  CHECK(sectsqrt_operator_read("/nonexistent/x.mtx", nullptr, &op) == SECTSQRT_E_IO);
}

TEST_CASE("diagonal sector spectral errors") {
  std::vector<double> x;
  for (int i = 0; i <= 40; ++i) x.push_back(0.1 * i);
  sectsqrt_operator* op = nullptr;
  REQUIRE(sectsqrt_operator_diag_sector(1.0 / 6.0, x.data(), x.size(), &op) == SECTSQRT_OK);
  CHECK(sectsqrt_operator_size(op) == 83);
  sectsqrt_sector s;
  REQUIRE(sectsqrt_operator_sector(op, &s) == SECTSQRT_OK);
  CHECK(s.has_rho_n == 1);
  CHECK(s.rho_n == doctest::Approx(1e4));

  sectsqrt_rational* r = nullptr;
  REQUIRE(sectsqrt_rational_create(20, 100.0, &r) == SECTSQRT_OK);
  sectsqrt_general* g = nullptr;
  REQUIRE(sectsqrt_general_create(20, 100.0, 0.5, &g) == SECTSQRT_OK);
  double e1 = 0.0, e2 = 0.0;
  REQUIRE(sectsqrt_spectral_error(op, r, 0.5, &e1) == SECTSQRT_OK);
  REQUIRE(sectsqrt_spectral_error_general(op, g, &e2) == SECTSQRT_OK);
  CHECK(e1 == doctest::Approx(e2).epsilon(1e-6));
  sectsqrt_rational_destroy(r);
  sectsqrt_general_destroy(g);
  sectsqrt_operator_destroy(op);
}

TEST_CASE("vector io") {
  const std::string path = (std::filesystem::temp_directory_path() / "sectsqrt_capi_vec.txt").string();
  const sectsqrt_complex v[] = {{1.0, 2.0}, {-3.5, 0.0}};
  REQUIRE(sectsqrt_write_vector(path.c_str(), v, 2) == SECTSQRT_OK);
  sectsqrt_complex* back = nullptr;
  size_t len = 0;
  REQUIRE(sectsqrt_read_vector(path.c_str(), &back, &len) == SECTSQRT_OK);
  REQUIRE(len == 2);
  CHECK(back[1].re == -3.5);
  sectsqrt_free(back);
  std::filesystem::remove(path);
}
