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

#ifndef SECTSQRT_SECTSQRT_H
#define SECTSQRT_SECTSQRT_H

/*
 * C interface to the sectsqrt library: rational approximation of the inverse
 * square root of sectorial operators by Gauss-Legendre quadrature.
 *
 * Every fallible call returns a sectsqrt_status. On failure the message is
 * available from sectsqrt_last_error() until the next failing call on the
 * same thread. Handles are opaque; each *_create has a matching *_destroy,
 * and destroying NULL is a no-op. Handles may be shared between threads for
 * read-only calls.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SECTSQRT_BUILDING_LIBRARY)
#    define SECTSQRT_API __declspec(dllexport)
#  else
#    define SECTSQRT_API __declspec(dllimport)
#  endif
#elif defined(SECTSQRT_BUILDING_LIBRARY)
#  define SECTSQRT_API __attribute__((visibility("default")))
#else
#  define SECTSQRT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sectsqrt_status {
  SECTSQRT_OK = 0,
  SECTSQRT_E_INVALID_ARGUMENT = 1,
  SECTSQRT_E_DOMAIN = 2,
  SECTSQRT_E_SINGULAR = 3,
  SECTSQRT_E_BREAKDOWN = 4,
  SECTSQRT_E_NUMERICAL = 5,
  SECTSQRT_E_IO = 6,
  SECTSQRT_E_NO_MEMORY = 7,
  SECTSQRT_E_INTERNAL = 8
} sectsqrt_status;

typedef enum sectsqrt_regime {
  SECTSQRT_REGIME_UNBOUNDED = 0,
  SECTSQRT_REGIME_BOUNDED = 1
} sectsqrt_regime;

typedef enum sectsqrt_integrand {
  SECTSQRT_INTEGRAND_FIRST = 1,
  SECTSQRT_INTEGRAND_SECOND = 2
} sectsqrt_integrand;

typedef enum sectsqrt_storage {
  SECTSQRT_STORAGE_DIAGONAL = 0,
  SECTSQRT_STORAGE_TRIDIAGONAL = 1,
  SECTSQRT_STORAGE_DENSE = 2
} sectsqrt_storage;

typedef struct sectsqrt_complex {
  double re;
  double im;
} sectsqrt_complex;

/* Sector Sigma_{beta,1} constants. has_rho_n = 0 means an unbounded sector. */
typedef struct sectsqrt_sector {
  double beta;
  double vertex;
  int has_rho_n;
  double rho_n;
  double C;
  double rho0;
  double a_minus;
  double a_plus;
  double D;
  double G;
  double H;
} sectsqrt_sector;

typedef struct sectsqrt_selection {
  int n;
  double tau;
  sectsqrt_regime regime;
  double rho_hat;
  int has_n_bar;
  double n_bar;
  double predicted_error;
  double crouzeix_k;
} sectsqrt_selection;

typedef struct sectsqrt_estimate {
  double e1;
  double e2;
  double total;
} sectsqrt_estimate;

typedef struct sectsqrt_apply_info {
  int n;
  double tau;
  sectsqrt_regime regime;
  double predicted_error;
  int solve_count;
} sectsqrt_apply_info;

typedef struct sectsqrt_rational sectsqrt_rational;
typedef struct sectsqrt_general sectsqrt_general;
typedef struct sectsqrt_operator sectsqrt_operator;

SECTSQRT_API const char* sectsqrt_version(void);
SECTSQRT_API const char* sectsqrt_status_string(sectsqrt_status status);
SECTSQRT_API const char* sectsqrt_last_error(void);

/* Quadrature. nodes and weights must hold n values each. */
SECTSQRT_API sectsqrt_status sectsqrt_gauss_legendre(int n, double* nodes, double* weights);

/* Rational approximant R_{2n-1,2n} of lambda^{-1/2}. */
SECTSQRT_API sectsqrt_status sectsqrt_rational_create(int n, double tau, sectsqrt_rational** out);
SECTSQRT_API void sectsqrt_rational_destroy(sectsqrt_rational* r);
SECTSQRT_API int sectsqrt_rational_term_count(const sectsqrt_rational* r);
/* residues and shifts receive term_count values, ascending shift order. */
SECTSQRT_API sectsqrt_status sectsqrt_rational_terms(const sectsqrt_rational* r, double* residues,
                                                     double* shifts);
SECTSQRT_API sectsqrt_status sectsqrt_rational_eval(const sectsqrt_rational* r,
                                                    sectsqrt_complex lambda,
                                                    sectsqrt_complex* out);
SECTSQRT_API sectsqrt_status sectsqrt_rational_eval_sums(const sectsqrt_rational* r,
                                                         sectsqrt_complex lambda,
                                                         sectsqrt_complex* out);

/* Quadrature approximant of lambda^{-alpha}, 0 < alpha < 1. */
SECTSQRT_API sectsqrt_status sectsqrt_general_create(int n, double tau, double alpha,
                                                     sectsqrt_general** out);
SECTSQRT_API void sectsqrt_general_destroy(sectsqrt_general* g);
SECTSQRT_API sectsqrt_status sectsqrt_general_eval(const sectsqrt_general* g,
                                                   sectsqrt_complex lambda,
                                                   sectsqrt_complex* out);

/* Scalar error model. */
SECTSQRT_API sectsqrt_status sectsqrt_error_estimate(sectsqrt_complex lambda, double tau, int n,
                                                     sectsqrt_estimate* out);
SECTSQRT_API sectsqrt_status sectsqrt_pole_growth(sectsqrt_integrand which,
                                                  sectsqrt_complex lambda, double tau,
                                                  double* growth);

/* Parameter selection. rho_n may be NULL for an unbounded sector. */
SECTSQRT_API sectsqrt_status sectsqrt_sector_constants(double beta, double vertex,
                                                       const double* rho_n,
                                                       sectsqrt_sector* out);
SECTSQRT_API sectsqrt_status sectsqrt_lambert_w(double x, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_tau_unbounded(int n, const sectsqrt_sector* s, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_rho_hat(int n, const sectsqrt_sector* s, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_bound_unbounded(int n, const sectsqrt_sector* s, double k,
                                                      double* out);
SECTSQRT_API sectsqrt_status sectsqrt_tau_bounded(int n, const sectsqrt_sector* s, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_bound_bounded(int n, const sectsqrt_sector* s, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_n_bar(const sectsqrt_sector* s, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_balance_g1(double tau, double rho, int n,
                                                 const sectsqrt_sector* s, double* out);
SECTSQRT_API sectsqrt_status sectsqrt_balance_g2(double tau, int n, const sectsqrt_sector* s,
                                                 double* out);
SECTSQRT_API sectsqrt_status sectsqrt_bounded_mismatch(double tau, int n,
                                                       const sectsqrt_sector* s, double* out);
/* k <= 0 selects the default Crouzeix constant. */
SECTSQRT_API sectsqrt_status sectsqrt_select_params(int n, const sectsqrt_sector* s, double k,
                                                    sectsqrt_selection* out);
SECTSQRT_API sectsqrt_status sectsqrt_beta_star(double tau, double* out);

/* Operators. Vector arguments must have length sectsqrt_operator_size(). */
SECTSQRT_API sectsqrt_status sectsqrt_operator_diag_sector(double beta, const double* exponents,
                                                           size_t count,
                                                           sectsqrt_operator** out);
/* beta may be NULL for the tabulated c in {0, 30, 200}. */
SECTSQRT_API sectsqrt_status sectsqrt_operator_convection_diffusion(int n, double c,
                                                                    const double* beta,
                                                                    sectsqrt_operator** out);
SECTSQRT_API sectsqrt_status sectsqrt_operator_diagonal(const sectsqrt_complex* entries,
                                                        size_t n, const sectsqrt_sector* s,
                                                        sectsqrt_operator** out);
SECTSQRT_API sectsqrt_status sectsqrt_operator_tridiagonal(const sectsqrt_complex* sub,
                                                           const sectsqrt_complex* diag,
                                                           const sectsqrt_complex* super,
                                                           size_t n, const sectsqrt_sector* s,
                                                           sectsqrt_operator** out);
/* Row-major n x n. */
SECTSQRT_API sectsqrt_status sectsqrt_operator_dense(const sectsqrt_complex* entries, size_t n,
                                                     const sectsqrt_sector* s,
                                                     sectsqrt_operator** out);
SECTSQRT_API sectsqrt_status sectsqrt_operator_read(const char* path, const sectsqrt_sector* s,
                                                    sectsqrt_operator** out);
SECTSQRT_API sectsqrt_status sectsqrt_operator_write(const sectsqrt_operator* op,
                                                     const char* path);
SECTSQRT_API void sectsqrt_operator_destroy(sectsqrt_operator* op);
SECTSQRT_API size_t sectsqrt_operator_size(const sectsqrt_operator* op);
SECTSQRT_API sectsqrt_storage sectsqrt_operator_storage(const sectsqrt_operator* op);
SECTSQRT_API sectsqrt_status sectsqrt_operator_sector(const sectsqrt_operator* op,
                                                      sectsqrt_sector* out);
SECTSQRT_API sectsqrt_status sectsqrt_operator_set_sector(sectsqrt_operator* op,
                                                          const sectsqrt_sector* s);
SECTSQRT_API sectsqrt_status sectsqrt_operator_multiply(const sectsqrt_operator* op,
                                                        const sectsqrt_complex* x, size_t len,
                                                        sectsqrt_complex* y);

SECTSQRT_API sectsqrt_status sectsqrt_solve_shifted(const sectsqrt_operator* op, double shift,
                                                    const sectsqrt_complex* rhs, size_t len,
                                                    sectsqrt_complex* x);
/* info may be NULL. k <= 0 selects the default Crouzeix constant. */
SECTSQRT_API sectsqrt_status sectsqrt_apply_half_power(const sectsqrt_operator* op,
                                                       const sectsqrt_complex* v, size_t len,
                                                       int n, double k, sectsqrt_complex* out,
                                                       sectsqrt_apply_info* info);
SECTSQRT_API sectsqrt_status sectsqrt_apply_rational(const sectsqrt_operator* op,
                                                     const sectsqrt_rational* r,
                                                     const sectsqrt_complex* v, size_t len,
                                                     sectsqrt_complex* out);

/* Exact A^{-alpha} v: entrywise for diagonal operators, closed-form
 * eigenpairs for real Toeplitz tridiagonal ones. */
SECTSQRT_API sectsqrt_status sectsqrt_oracle_apply(const sectsqrt_operator* op,
                                                   const sectsqrt_complex* v, size_t len,
                                                   double alpha, sectsqrt_complex* out);
/* eigenvalues receives size() values. Toeplitz tridiagonal only. */
SECTSQRT_API sectsqrt_status sectsqrt_toeplitz_eigenvalues(const sectsqrt_operator* op,
                                                           double* eigenvalues);
/* max_i |lambda_i^{-alpha} - R(lambda_i)| for a diagonal operator. */
SECTSQRT_API sectsqrt_status sectsqrt_spectral_error(const sectsqrt_operator* op,
                                                     const sectsqrt_rational* r, double alpha,
                                                     double* out);
SECTSQRT_API sectsqrt_status sectsqrt_spectral_error_general(const sectsqrt_operator* op,
                                                             const sectsqrt_general* g,
                                                             double* out);

/* Vector files, one "re im" pair per line. The buffer from read_vector is
 * released with sectsqrt_free. */
SECTSQRT_API sectsqrt_status sectsqrt_read_vector(const char* path, sectsqrt_complex** out,
                                                  size_t* len);
SECTSQRT_API sectsqrt_status sectsqrt_write_vector(const char* path, const sectsqrt_complex* v,
                                                   size_t len);
SECTSQRT_API void sectsqrt_free(void* p);

#ifdef __cplusplus
}
#endif

#endif /* SECTSQRT_SECTSQRT_H */
