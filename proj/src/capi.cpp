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

#include "sectsqrt/sectsqrt.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sectsqrt/errmodel.hpp"
#include "sectsqrt/error.hpp"
#include "sectsqrt/gauss.hpp"
#include "sectsqrt/mmio.hpp"
#include "sectsqrt/opfun.hpp"
#include "sectsqrt/params.hpp"
#include "sectsqrt/rational.hpp"

struct sectsqrt_rational {
  sectsqrt::RationalHalfPower impl;
};

struct sectsqrt_general {
  sectsqrt::GeneralAlphaApprox impl;
};

struct sectsqrt_operator {
  sectsqrt::Operator impl;
};

namespace {

using sectsqrt::ComplexVector;
using sectsqrt::ErrorCode;
using sectsqrt::fail;
using cplx = std::complex<double>;

thread_local std::string last_error;

sectsqrt_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SECTSQRT_E_INVALID_ARGUMENT;
    case ErrorCode::Domain: return SECTSQRT_E_DOMAIN;
    case ErrorCode::Singular: return SECTSQRT_E_SINGULAR;
    case ErrorCode::Breakdown: return SECTSQRT_E_BREAKDOWN;
    case ErrorCode::Numerical: return SECTSQRT_E_NUMERICAL;
    case ErrorCode::Io: return SECTSQRT_E_IO;
  }
  return SECTSQRT_E_INTERNAL;
}

template <class F>
sectsqrt_status guarded(F&& body) {
  try {
    body();
    return SECTSQRT_OK;
  } catch (const sectsqrt::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SECTSQRT_E_NO_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SECTSQRT_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SECTSQRT_E_INTERNAL;
  }
}

template <class T>
const T& deref(const T* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  return *p;
}

template <class T>
T& deref_out(T* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  return *p;
}

cplx to_cpp(sectsqrt_complex z) { return {z.re, z.im}; }
sectsqrt_complex to_c(cplx z) { return {z.real(), z.imag()}; }

ComplexVector to_vector(const sectsqrt_complex* p, size_t len, const char* what) {
  if (p == nullptr && len > 0) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
  ComplexVector v(len);
  for (size_t i = 0; i < len; ++i) v[i] = to_cpp(p[i]);
  return v;
}

void copy_out(const ComplexVector& v, sectsqrt_complex* out) {
  if (out == nullptr) fail(ErrorCode::InvalidArgument, "output buffer is NULL");
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_c(v[i]);
}

sectsqrt::SectorGeometry from_c(const sectsqrt_sector& s) {
  sectsqrt::SectorGeometry g;
  g.beta = s.beta;
  g.vertex = s.vertex;
  if (s.has_rho_n) g.rho_n = s.rho_n;
  g.C = s.C;
  g.rho0 = s.rho0;
  g.Aminus = s.a_minus;
  g.Aplus = s.a_plus;
  g.D = s.D;
  g.G = s.G;
  g.H = s.H;
  return g;
}

sectsqrt_sector to_c(const sectsqrt::SectorGeometry& g) {
  sectsqrt_sector s{};
  s.beta = g.beta;
  s.vertex = g.vertex;
  s.has_rho_n = g.rho_n.has_value() ? 1 : 0;
  s.rho_n = g.rho_n.value_or(0.0);
  s.C = g.C;
  s.rho0 = g.rho0;
  s.a_minus = g.Aminus;
  s.a_plus = g.Aplus;
  s.D = g.D;
  s.G = g.G;
  s.H = g.H;
  return s;
}

sectsqrt::SectorGeometry sector_or_default(const sectsqrt_sector* s) {
  return s ? from_c(*s) : sectsqrt::sector_constants(0.0);
}

sectsqrt_regime to_c(sectsqrt::Regime r) {
  return r == sectsqrt::Regime::Bounded ? SECTSQRT_REGIME_BOUNDED : SECTSQRT_REGIME_UNBOUNDED;
}

const sectsqrt::Operator& op_of(const sectsqrt_operator* op) { return deref(op, "operator").impl; }

void check_len(const sectsqrt::Operator& A, size_t len) {
  if (len != A.size()) {
    fail(ErrorCode::InvalidArgument, "vector length " + std::to_string(len) +
                                         " does not match operator size " +
                                         std::to_string(A.size()));
  }
}

const sectsqrt::Diagonal& diagonal_of(const sectsqrt::Operator& A) {
  const auto* d = A.as_diagonal();
  if (!d) fail(ErrorCode::InvalidArgument, "operation requires a diagonal operator");
  return *d;
}

}  // namespace

extern "C" {

const char* sectsqrt_version(void) { return "0.1.0"; }

const char* sectsqrt_status_string(sectsqrt_status status) {
  switch (status) {
    case SECTSQRT_OK: return "ok";
    case SECTSQRT_E_INVALID_ARGUMENT: return "invalid argument";
    case SECTSQRT_E_DOMAIN: return "domain error";
    case SECTSQRT_E_SINGULAR: return "singular";
    case SECTSQRT_E_BREAKDOWN: return "breakdown";
    case SECTSQRT_E_NUMERICAL: return "numerical failure";
    case SECTSQRT_E_IO: return "i/o error";
    case SECTSQRT_E_NO_MEMORY: return "out of memory";
    case SECTSQRT_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sectsqrt_last_error(void) { return last_error.c_str(); }

sectsqrt_status sectsqrt_gauss_legendre(int n, double* nodes, double* weights) {
  return guarded([&] {
    const auto& rule = sectsqrt::gauss_legendre(n);
    if (!nodes || !weights) fail(ErrorCode::InvalidArgument, "output buffer is NULL");
    std::memcpy(nodes, rule.nodes.data(), sizeof(double) * rule.nodes.size());
    std::memcpy(weights, rule.weights.data(), sizeof(double) * rule.weights.size());
  });
}

sectsqrt_status sectsqrt_rational_create(int n, double tau, sectsqrt_rational** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    *out = new sectsqrt_rational{sectsqrt::RationalHalfPower(n, tau)};
  });
}

void sectsqrt_rational_destroy(sectsqrt_rational* r) { delete r; }

int sectsqrt_rational_term_count(const sectsqrt_rational* r) {
  return r ? static_cast<int>(r->impl.terms().size()) : 0;
}

sectsqrt_status sectsqrt_rational_terms(const sectsqrt_rational* r, double* residues,
                                        double* shifts) {
  return guarded([&] {
    const auto& terms = deref(r, "rational").impl.terms();
    if (!residues || !shifts) fail(ErrorCode::InvalidArgument, "output buffer is NULL");
    for (size_t k = 0; k < terms.size(); ++k) {
      residues[k] = terms[k].residue;
      shifts[k] = terms[k].shift;
    }
  });
}

sectsqrt_status sectsqrt_rational_eval(const sectsqrt_rational* r, sectsqrt_complex lambda,
                                       sectsqrt_complex* out) {
  return guarded([&] {
    const auto& R = deref(r, "rational").impl;
    deref_out(out, "out") = to_c(R(to_cpp(lambda)));
  });
}

sectsqrt_status sectsqrt_rational_eval_sums(const sectsqrt_rational* r, sectsqrt_complex lambda,
                                            sectsqrt_complex* out) {
  return guarded([&] {
    const auto& R = deref(r, "rational").impl;
    deref_out(out, "out") = to_c(R.evaluate_sums(to_cpp(lambda)));
  });
}

sectsqrt_status sectsqrt_general_create(int n, double tau, double alpha,
                                        sectsqrt_general** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    *out = new sectsqrt_general{sectsqrt::GeneralAlphaApprox(n, tau, alpha)};
  });
}

void sectsqrt_general_destroy(sectsqrt_general* g) { delete g; }

sectsqrt_status sectsqrt_general_eval(const sectsqrt_general* g, sectsqrt_complex lambda,
                                      sectsqrt_complex* out) {
  return guarded([&] {
    const auto& G = deref(g, "approximant").impl;
    deref_out(out, "out") = to_c(G(to_cpp(lambda)));
  });
}

sectsqrt_status sectsqrt_error_estimate(sectsqrt_complex lambda, double tau, int n,
                                        sectsqrt_estimate* out) {
  return guarded([&] {
    const auto est = sectsqrt::total_estimate(to_cpp(lambda), tau, n);
    deref_out(out, "out") = {est.e1, est.e2, est.total};
  });
}

sectsqrt_status sectsqrt_pole_growth(sectsqrt_integrand which, sectsqrt_complex lambda,
                                     double tau, double* growth) {
  return guarded([&] {
    if (which != SECTSQRT_INTEGRAND_FIRST && which != SECTSQRT_INTEGRAND_SECOND) {
      fail(ErrorCode::InvalidArgument, "unknown integrand");
    }
    const auto w = which == SECTSQRT_INTEGRAND_FIRST ? sectsqrt::Integrand::First
                                                     : sectsqrt::Integrand::Second;
    deref_out(growth, "growth") = sectsqrt::pole_pair(w, to_cpp(lambda), tau).growth;
  });
}

sectsqrt_status sectsqrt_sector_constants(double beta, double vertex, const double* rho_n,
                                          sectsqrt_sector* out) {
  return guarded([&] {
    std::optional<double> r;
    if (rho_n) r = *rho_n;
    deref_out(out, "out") = to_c(sectsqrt::sector_constants(beta, vertex, r));
  });
}

sectsqrt_status sectsqrt_lambert_w(double x, double* out) {
  return guarded([&] { deref_out(out, "out") = sectsqrt::lambert_w(x); });
}

sectsqrt_status sectsqrt_tau_unbounded(int n, const sectsqrt_sector* s, double* out) {
  return guarded([&] {
    deref_out(out, "out") = sectsqrt::tau_unbounded(n, from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_rho_hat(int n, const sectsqrt_sector* s, double* out) {
  return guarded([&] { deref_out(out, "out") = sectsqrt::rho_hat(n, from_c(deref(s, "sector"))); });
}

sectsqrt_status sectsqrt_bound_unbounded(int n, const sectsqrt_sector* s, double k, double* out) {
  return guarded([&] {
    const auto g = from_c(deref(s, "sector"));
    deref_out(out, "out") =
        sectsqrt::bound_unbounded(n, g, k > 0.0 ? k : sectsqrt::default_crouzeix(g.beta));
  });
}

sectsqrt_status sectsqrt_tau_bounded(int n, const sectsqrt_sector* s, double* out) {
  return guarded([&] {
    deref_out(out, "out") = sectsqrt::tau_bounded(n, from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_bound_bounded(int n, const sectsqrt_sector* s, double* out) {
  return guarded([&] {
    deref_out(out, "out") = sectsqrt::bound_bounded(n, from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_n_bar(const sectsqrt_sector* s, double* out) {
  return guarded([&] { deref_out(out, "out") = sectsqrt::n_bar(from_c(deref(s, "sector"))); });
}

sectsqrt_status sectsqrt_balance_g1(double tau, double rho, int n, const sectsqrt_sector* s,
                                    double* out) {
  return guarded([&] {
    deref_out(out, "out") = sectsqrt::g1(tau, rho, n, from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_balance_g2(double tau, int n, const sectsqrt_sector* s, double* out) {
  return guarded([&] {
    deref_out(out, "out") = sectsqrt::g2(tau, n, from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_bounded_mismatch(double tau, int n, const sectsqrt_sector* s,
                                          double* out) {
  return guarded([&] {
    deref_out(out, "out") =
        sectsqrt::bounded_balance_mismatch(tau, n, from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_select_params(int n, const sectsqrt_sector* s, double k,
                                       sectsqrt_selection* out) {
  return guarded([&] {
    const auto sel = sectsqrt::select_params(n, from_c(deref(s, "sector")), k);
    sectsqrt_selection& o = deref_out(out, "out");
    o.n = sel.n;
    o.tau = sel.tau;
    o.regime = to_c(sel.regime);
    o.rho_hat = sel.rho_hat;
    o.has_n_bar = sel.n_bar.has_value() ? 1 : 0;
    o.n_bar = sel.n_bar.value_or(0.0);
    o.predicted_error = sel.predicted_error;
    o.crouzeix_k = sel.crouzeix_K;
  });
}

sectsqrt_status sectsqrt_beta_star(double tau, double* out) {
  return guarded([&] { deref_out(out, "out") = sectsqrt::beta_star(tau); });
}

sectsqrt_status sectsqrt_operator_diag_sector(double beta, const double* exponents, size_t count,
                                              sectsqrt_operator** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    if (!exponents && count > 0) fail(ErrorCode::InvalidArgument, "exponents is NULL");
    *out = new sectsqrt_operator{
        sectsqrt::make_diag_sector(beta, std::span<const double>(exponents, count))};
  });
}

sectsqrt_status sectsqrt_operator_convection_diffusion(int n, double c, const double* beta,
                                                       sectsqrt_operator** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    std::optional<double> b;
    if (beta) b = *beta;
    *out = new sectsqrt_operator{sectsqrt::make_convection_diffusion(n, c, b)};
  });
}

sectsqrt_status sectsqrt_operator_diagonal(const sectsqrt_complex* entries, size_t n,
                                           const sectsqrt_sector* s, sectsqrt_operator** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    sectsqrt::Diagonal d{to_vector(entries, n, "entries")};
    *out = new sectsqrt_operator{sectsqrt::Operator(std::move(d), sector_or_default(s))};
  });
}

sectsqrt_status sectsqrt_operator_tridiagonal(const sectsqrt_complex* sub,
                                              const sectsqrt_complex* diag,
                                              const sectsqrt_complex* super, size_t n,
                                              const sectsqrt_sector* s, sectsqrt_operator** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    if (n < 1) fail(ErrorCode::InvalidArgument, "tridiagonal: n must be >= 1");
    sectsqrt::Tridiagonal t{to_vector(sub, n - 1, "sub"), to_vector(diag, n, "diag"),
                            to_vector(super, n - 1, "super")};
    *out = new sectsqrt_operator{sectsqrt::Operator(std::move(t), sector_or_default(s))};
  });
}

sectsqrt_status sectsqrt_operator_dense(const sectsqrt_complex* entries, size_t n,
                                        const sectsqrt_sector* s, sectsqrt_operator** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    if (!entries) fail(ErrorCode::InvalidArgument, "entries is NULL");
    const auto m = static_cast<Eigen::Index>(n);
    sectsqrt::Dense d{Eigen::MatrixXcd(m, m)};
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) d.matrix(i, j) = to_cpp(entries[i * m + j]);
    }
    *out = new sectsqrt_operator{sectsqrt::Operator(std::move(d), sector_or_default(s))};
  });
}

sectsqrt_status sectsqrt_operator_read(const char* path, const sectsqrt_sector* s,
                                       sectsqrt_operator** out) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    if (!path) fail(ErrorCode::InvalidArgument, "path is NULL");
    *out = new sectsqrt_operator{
        sectsqrt::Operator(sectsqrt::read_matrix_market(path), sector_or_default(s))};
  });
}

sectsqrt_status sectsqrt_operator_write(const sectsqrt_operator* op, const char* path) {
  return guarded([&] {
    if (!path) fail(ErrorCode::InvalidArgument, "path is NULL");
    sectsqrt::write_matrix_market(path, op_of(op));
  });
}

void sectsqrt_operator_destroy(sectsqrt_operator* op) { delete op; }

size_t sectsqrt_operator_size(const sectsqrt_operator* op) { return op ? op->impl.size() : 0; }

sectsqrt_storage sectsqrt_operator_storage(const sectsqrt_operator* op) {
  if (op && op->impl.as_diagonal()) return SECTSQRT_STORAGE_DIAGONAL;
  if (op && op->impl.as_tridiagonal()) return SECTSQRT_STORAGE_TRIDIAGONAL;
  return SECTSQRT_STORAGE_DENSE;
}

sectsqrt_status sectsqrt_operator_sector(const sectsqrt_operator* op, sectsqrt_sector* out) {
  return guarded([&] { deref_out(out, "out") = to_c(op_of(op).sector()); });
}

sectsqrt_status sectsqrt_operator_set_sector(sectsqrt_operator* op, const sectsqrt_sector* s) {
  return guarded([&] {
    deref_out(op, "operator").impl.set_sector(from_c(deref(s, "sector")));
  });
}

sectsqrt_status sectsqrt_operator_multiply(const sectsqrt_operator* op, const sectsqrt_complex* x,
                                           size_t len, sectsqrt_complex* y) {
  return guarded([&] {
    const auto& A = op_of(op);
    check_len(A, len);
    copy_out(A.multiply(to_vector(x, len, "x")), y);
  });
}

sectsqrt_status sectsqrt_solve_shifted(const sectsqrt_operator* op, double shift,
                                       const sectsqrt_complex* rhs, size_t len,
                                       sectsqrt_complex* x) {
  return guarded([&] {
    const auto& A = op_of(op);
    check_len(A, len);
    copy_out(sectsqrt::solve_shifted(A, shift, to_vector(rhs, len, "rhs")), x);
  });
}

sectsqrt_status sectsqrt_apply_half_power(const sectsqrt_operator* op, const sectsqrt_complex* v,
                                          size_t len, int n, double k, sectsqrt_complex* out,
                                          sectsqrt_apply_info* info) {
  return guarded([&] {
    const auto& A = op_of(op);
    check_len(A, len);
    if (!out) fail(ErrorCode::InvalidArgument, "output buffer is NULL");
    const auto report = sectsqrt::apply_half_power(A, to_vector(v, len, "v"), n, k);
    copy_out(report.result, out);
    if (info) {
      *info = {report.n, report.tau, to_c(report.regime), report.predicted_error,
               report.solve_count};
    }
  });
}

sectsqrt_status sectsqrt_apply_rational(const sectsqrt_operator* op, const sectsqrt_rational* r,
                                        const sectsqrt_complex* v, size_t len,
                                        sectsqrt_complex* out) {
  return guarded([&] {
    const auto& A = op_of(op);
    check_len(A, len);
    copy_out(sectsqrt::apply_rational(A, deref(r, "rational").impl, to_vector(v, len, "v")),
             out);
  });
}

sectsqrt_status sectsqrt_oracle_apply(const sectsqrt_operator* op, const sectsqrt_complex* v,
                                      size_t len, double alpha, sectsqrt_complex* out) {
  return guarded([&] {
    const auto& A = op_of(op);
    check_len(A, len);
    const ComplexVector x = to_vector(v, len, "v");
    if (const auto* d = A.as_diagonal()) {
      const auto p = sectsqrt::oracle_diag(*d, alpha);
      ComplexVector y(len);
      for (size_t i = 0; i < len; ++i) y[i] = p.entries[i] * x[i];
      copy_out(y, out);
    } else if (const auto* t = A.as_tridiagonal()) {
      copy_out(sectsqrt::oracle_tridiag_toeplitz(*t, x, alpha), out);
    } else {
      fail(ErrorCode::InvalidArgument, "no closed-form oracle for dense operators");
    }
  });
}

sectsqrt_status sectsqrt_toeplitz_eigenvalues(const sectsqrt_operator* op, double* eigenvalues) {
  return guarded([&] {
    const auto* t = op_of(op).as_tridiagonal();
    if (!t) fail(ErrorCode::InvalidArgument, "operation requires a tridiagonal operator");
    if (!eigenvalues) fail(ErrorCode::InvalidArgument, "output buffer is NULL");
    const auto eig = sectsqrt::toeplitz_eigenvalues(*t);
    std::memcpy(eigenvalues, eig.data(), sizeof(double) * eig.size());
  });
}

sectsqrt_status sectsqrt_spectral_error(const sectsqrt_operator* op, const sectsqrt_rational* r,
                                        double alpha, double* out) {
  return guarded([&] {
    deref_out(out, "out") =
        sectsqrt::spectral_error(diagonal_of(op_of(op)), deref(r, "rational").impl, alpha);
  });
}

sectsqrt_status sectsqrt_spectral_error_general(const sectsqrt_operator* op,
                                                const sectsqrt_general* g, double* out) {
  return guarded([&] {
    deref_out(out, "out") =
        sectsqrt::spectral_error(diagonal_of(op_of(op)), deref(g, "approximant").impl);
  });
}

sectsqrt_status sectsqrt_read_vector(const char* path, sectsqrt_complex** out, size_t* len) {
  return guarded([&] {
    deref_out(out, "out") = nullptr;
    if (!path || !len) fail(ErrorCode::InvalidArgument, "path or len is NULL");
    const ComplexVector v = sectsqrt::read_vector(path);
    auto* buf = static_cast<sectsqrt_complex*>(std::malloc(sizeof(sectsqrt_complex) * v.size()));
    if (!buf) throw std::bad_alloc();
    copy_out(v, buf);
    *out = buf;
    *len = v.size();
  });
}

sectsqrt_status sectsqrt_write_vector(const char* path, const sectsqrt_complex* v, size_t len) {
  return guarded([&] {
    if (!path) fail(ErrorCode::InvalidArgument, "path is NULL");
    sectsqrt::write_vector(path, to_vector(v, len, "v"));
  });
}

void sectsqrt_free(void* p) { std::free(p); }

}  // extern "C"
