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

#include "sectsqrt/opfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sectsqrt/error.hpp"

namespace sectsqrt {

using cplx = std::complex<double>;

namespace {

std::size_t size_of(const OperatorData& data) {
  return std::visit(
      [](const auto& rep) -> std::size_t {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, Diagonal>) {
          return rep.entries.size();
        } else if constexpr (std::is_same_v<T, Tridiagonal>) {
          return rep.diag.size();
        } else {
          return static_cast<std::size_t>(rep.matrix.rows());
        }
      },
      data);
}

void validate(const OperatorData& data) {
  if (const auto* t = std::get_if<Tridiagonal>(&data)) {
    const std::size_t n = t->diag.size();
    if (n == 0 || t->sub.size() + 1 != n || t->super.size() + 1 != n) {
      fail(ErrorCode::InvalidArgument, "tridiagonal: inconsistent band lengths");
    }
  } else if (const auto* d = std::get_if<Dense>(&data)) {
    if (d->matrix.rows() != d->matrix.cols() || d->matrix.rows() == 0) {
      fail(ErrorCode::InvalidArgument, "dense: matrix must be square and nonempty");
    }
  } else if (std::get<Diagonal>(data).entries.empty()) {
    fail(ErrorCode::InvalidArgument, "diagonal: no entries");
  }
}

void check_length(const Operator& A, std::size_t len) {
  if (len != A.size()) {
    fail(ErrorCode::InvalidArgument,
         "vector length " + std::to_string(len) + " does not match operator size " +
             std::to_string(A.size()));
  }
}

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

ComplexVector dense_solve(const Eigen::MatrixXcd& M, double shift, std::span<const cplx> rhs) {
  const Eigen::Index n = M.rows();
  Eigen::MatrixXcd shifted = M;
  shifted.diagonal().array() += shift;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
  const auto& u = lu.matrixLU();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (u(i, i) == cplx(0.0)) {
      fail(ErrorCode::Singular, "dense solve: shifted matrix is singular");
    }
  }
  Eigen::VectorXcd b(n);
  for (Eigen::Index i = 0; i < n; ++i) b(i) = rhs[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd x = lu.solve(b);
  return ComplexVector(x.data(), x.data() + n);
}

}  // namespace

Operator::Operator(OperatorData data, SectorGeometry sector)
    : data_(std::move(data)), sector_(std::move(sector)) {
  validate(data_);
  size_ = size_of(data_);
}

ComplexVector Operator::multiply(std::span<const cplx> x) const {
  check_length(*this, x.size());
  const std::size_t n = size_;
  ComplexVector y(n);
  if (const auto* d = as_diagonal()) {
    for (std::size_t i = 0; i < n; ++i) y[i] = d->entries[i] * x[i];
  } else if (const auto* t = as_tridiagonal()) {
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = t->diag[i] * x[i];
      if (i > 0) s += t->sub[i - 1] * x[i - 1];
      if (i + 1 < n) s += t->super[i] * x[i + 1];
      y[i] = s;
    }
  } else {
    const auto& M = std::get<Dense>(data_).matrix;
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += M(i, j) * x[j];
      y[i] = s;
    }
  }
  return y;
}

Eigen::MatrixXcd Operator::to_dense() const {
  const auto n = static_cast<Eigen::Index>(size_);
  if (const auto* dn = std::get_if<Dense>(&data_)) return dn->matrix;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  if (const auto* d = as_diagonal()) {
    for (Eigen::Index i = 0; i < n; ++i) M(i, i) = d->entries[i];
  } else {
    const auto& t = std::get<Tridiagonal>(data_);
    for (Eigen::Index i = 0; i < n; ++i) {
      M(i, i) = t.diag[i];
      if (i > 0) M(i, i - 1) = t.sub[i - 1];
      if (i + 1 < n) M(i, i + 1) = t.super[i];
    }
  }
  return M;
}

std::vector<double> exponent_grid(double max, double step) {
  if (!(step > 0.0) || !(max >= 0.0)) {
    fail(ErrorCode::InvalidArgument, "exponent grid: need step > 0 and max >= 0");
  }
  const auto count = static_cast<int>(std::lround(max / step));
  std::vector<double> x(count + 1);
  for (int i = 0; i <= count; ++i) x[i] = i * step;
  return x;
}

Operator make_diag_sector(double beta, std::span<const double> exponents) {
  if (exponents.empty()) fail(ErrorCode::InvalidArgument, "diag sector: no exponents");
  double xmax = exponents.front();
  for (double x : exponents) {
    if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "diag sector: exponent not finite");
    xmax = std::max(xmax, x);
  }
  const double rho_n = std::pow(10.0, xmax);
  SectorGeometry sector = sector_constants(beta, 1.0, rho_n);

  const cplx up = std::polar(1.0, beta * std::numbers::pi);
  Diagonal d;
  d.entries.reserve(2 * exponents.size() + 1);
  d.entries.push_back(1.0);
  for (double x : exponents) {
    const double rho = std::pow(10.0, x);
    d.entries.push_back(1.0 + rho * up);
    d.entries.push_back(1.0 + rho * std::conj(up));
  }
  return Operator(std::move(d), std::move(sector));
}

Operator make_convection_diffusion(int N, double c, std::optional<double> beta) {
  if (N < 2) fail(ErrorCode::InvalidArgument, "convection-diffusion: N must be >= 2");
  if (!(c >= 0.0) || !std::isfinite(c)) {
    fail(ErrorCode::InvalidArgument, "convection-diffusion: c must be >= 0");
  }
  if (!beta) {
    // Tabulated sector angles for N = 200.
    if (c == 0.0) {
      beta = 0.0;
    } else if (c == 30.0) {
      beta = 0.44;
    } else if (c == 200.0) {
      beta = 0.49;
    } else {
      fail(ErrorCode::InvalidArgument,
           "convection-diffusion: no tabulated sector angle for c = " + std::to_string(c) +
               "; pass beta explicitly");
    }
  }
  const double h = 1.0 / (N + 1);
  const double lower = -1.0 / (h * h) - c / (2.0 * h);
  const double main = 2.0 / (h * h);
  const double upper = -1.0 / (h * h) + c / (2.0 * h);

  Tridiagonal t;
  t.sub.assign(N - 1, lower);
  t.diag.assign(N, main);
  t.super.assign(N - 1, upper);

  double vertex = main;
  if (lower * upper > 0.0) {
    vertex = main - 2.0 * std::sqrt(lower * upper) * std::cos(std::numbers::pi / (N + 1));
  }
  // sqrt(||A||_1 ||A||_inf) bounds every |z| in the numerical range.
  const double norm = std::abs(main) + std::abs(lower) + std::abs(upper);
  const double rho_n = norm / vertex + 1.0;
  return Operator(std::move(t), sector_constants(*beta, vertex, rho_n));
}

ComplexVector thomas_solve(const Tridiagonal& A, double shift, std::span<const cplx> rhs) {
  const std::size_t n = A.diag.size();
  if (rhs.size() != n) fail(ErrorCode::InvalidArgument, "thomas: size mismatch");
  ComplexVector c(n);
  ComplexVector d(n);
  cplx pivot = A.diag[0] + shift;
  if (pivot == cplx(0.0)) fail(ErrorCode::Breakdown, "thomas: zero pivot at row 0");
  c[0] = n > 1 ? A.super[0] / pivot : cplx(0.0);
  d[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = A.diag[i] + shift - A.sub[i - 1] * c[i - 1];
    if (pivot == cplx(0.0)) {
      fail(ErrorCode::Breakdown, "thomas: zero pivot at row " + std::to_string(i));
    }
    if (i + 1 < n) c[i] = A.super[i] / pivot;
    d[i] = (rhs[i] - A.sub[i - 1] * d[i - 1]) / pivot;
  }
  ComplexVector x(n);
  x[n - 1] = d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

ComplexVector solve_shifted(const Operator& A, double shift, std::span<const cplx> rhs) {
  if (!(shift > 0.0) || !std::isfinite(shift)) {
    fail(ErrorCode::InvalidArgument, "solve_shifted: shift must be positive");
  }
  check_length(A, rhs.size());
  if (const auto* d = A.as_diagonal()) {
    ComplexVector x(rhs.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const cplx denom = d->entries[i] + shift;
      if (denom == cplx(0.0)) {
        fail(ErrorCode::Singular, "solve_shifted: diagonal entry equals -shift");
      }
      x[i] = rhs[i] / denom;
    }
    return x;
  }
  if (const auto* t = A.as_tridiagonal()) {
    try {
      return thomas_solve(*t, shift, rhs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Breakdown) throw;
    }
    return dense_solve(A.to_dense(), shift, rhs);
  }
  return dense_solve(std::get<Dense>(A.data()).matrix, shift, rhs);
}

double shifted_residual(const Operator& A, double shift, std::span<const cplx> x,
                        std::span<const cplx> rhs) {
  ComplexVector r = A.multiply(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += shift * x[i] - rhs[i];
  return norm2(r) / norm2(rhs);
}

ComplexVector apply_rational(const Operator& A, const RationalHalfPower& R,
                             std::span<const cplx> v) {
  check_length(A, v.size());
  ComplexVector out(v.size(), cplx(0.0));
  // Terms are stored in ascending shift order; the reduction follows it.
  for (const auto& term : R.terms()) {
    const ComplexVector x = solve_shifted(A, term.shift, v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += term.residue * x[i];
  }
  return out;
}

ApplyReport apply_half_power(const Operator& A, std::span<const cplx> v, int n, double K) {
  return apply_half_power(A, v, n, A.sector(), K);
}

ApplyReport apply_half_power(const Operator& A, std::span<const cplx> v, int n,
                             const SectorGeometry& sector, double K) {
  check_length(A, v.size());
  if (!(norm2(v) > 0.0)) fail(ErrorCode::InvalidArgument, "apply_half_power: v is zero");
  if (const auto* d = A.as_diagonal()) {
    for (const cplx& z : d->entries) {
      if (on_branch_cut(z)) {
        fail(ErrorCode::Domain, "apply_half_power: diagonal entry on (-inf, 0]");
      }
    }
  }
  const ParamSelection sel = select_params(n, sector, K);
  // A^{-1/2} = a^{-1/2} (A/a)^{-1/2} and R_{a tau}(A) = a^{-1/2} R_tau(A/a).
  const double a = sector.vertex;
  const RationalHalfPower R(n, sel.tau * a);

  ApplyReport report;
  report.result = apply_rational(A, R, v);
  report.n = n;
  report.tau = R.tau();
  report.regime = sel.regime;
  report.predicted_error = sel.predicted_error / std::sqrt(a);
  report.solve_count = static_cast<int>(R.terms().size());
  return report;
}

Diagonal oracle_diag(const Diagonal& A, double alpha) {
  Diagonal out;
  out.entries.reserve(A.entries.size());
  for (const cplx& z : A.entries) {
    if (on_branch_cut(z)) fail(ErrorCode::Domain, "oracle_diag: entry on (-inf, 0]");
    out.entries.push_back(std::exp(-alpha * std::log(z)));
  }
  return out;
}

double spectral_error(const Diagonal& A, const RationalHalfPower& R, double alpha) {
  const Diagonal exact = oracle_diag(A, alpha);
  double worst = 0.0;
  for (std::size_t i = 0; i < A.entries.size(); ++i) {
    worst = std::max(worst, std::abs(exact.entries[i] - R(A.entries[i])));
  }
  return worst;
}

double spectral_error(const Diagonal& A, const GeneralAlphaApprox& G) {
  const Diagonal exact = oracle_diag(A, G.alpha());
  double worst = 0.0;
  for (std::size_t i = 0; i < A.entries.size(); ++i) {
    worst = std::max(worst, std::abs(exact.entries[i] - G(A.entries[i])));
  }
  return worst;
}

}  // namespace sectsqrt
