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
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "sectsqrt/params.hpp"
#include "sectsqrt/rational.hpp"

namespace sectsqrt {

using ComplexVector = std::vector<std::complex<double>>;

struct Diagonal {
  ComplexVector entries;
};

/// sub and super have length N-1, diag has length N.
struct Tridiagonal {
  ComplexVector sub;
  ComplexVector diag;
  ComplexVector super;
};

struct Dense {
  Eigen::MatrixXcd matrix;
};

using OperatorData = std::variant<Diagonal, Tridiagonal, Dense>;

/// A linear operator together with the sector its numerical range is claimed
/// to lie in. The claim is metadata; it is not verified.
class Operator {
 public:
  Operator(OperatorData data, SectorGeometry sector);

  std::size_t size() const noexcept { return size_; }
  const OperatorData& data() const noexcept { return data_; }
  const SectorGeometry& sector() const noexcept { return sector_; }
  void set_sector(SectorGeometry sector) { sector_ = std::move(sector); }

  const Diagonal* as_diagonal() const noexcept { return std::get_if<Diagonal>(&data_); }
  const Tridiagonal* as_tridiagonal() const noexcept {
    return std::get_if<Tridiagonal>(&data_);
  }

  ComplexVector multiply(std::span<const std::complex<double>> x) const;
  Eigen::MatrixXcd to_dense() const;

 private:
  OperatorData data_;
  SectorGeometry sector_;
  std::size_t size_;
};

/// x_i = i * step for i = 0 .. round(max / step); used for the log10-radius
/// grids of the diagonal test matrices.
std::vector<double> exponent_grid(double max, double step = 0.1);

/// diag(1, 1 + 10^x_1 e^{+i beta pi}, 1 + 10^x_1 e^{-i beta pi}, ...). Sector
/// metadata: vertex 1, rho_N = 10^max(x).
Operator make_diag_sector(double beta, std::span<const double> exponents);

/// Central-difference discretization of -u'' + c u' on [0, 1] with Dirichlet
/// conditions and N interior points. Without an explicit beta, only the
/// tabulated c in {0, 30, 200} are accepted.
Operator make_convection_diffusion(int N, double c, std::optional<double> beta = std::nullopt);

/// Solves (A + shift I) x = rhs. Tridiagonal systems use Thomas elimination
/// and fall back to dense LU if a pivot vanishes.
ComplexVector solve_shifted(const Operator& A, double shift,
                            std::span<const std::complex<double>> rhs);

/// Thomas elimination without fallback; throws Breakdown on a zero pivot.
ComplexVector thomas_solve(const Tridiagonal& A, double shift,
                           std::span<const std::complex<double>> rhs);

/// ||(A + shift I) x - rhs|| / ||rhs||.
double shifted_residual(const Operator& A, double shift,
                        std::span<const std::complex<double>> x,
                        std::span<const std::complex<double>> rhs);

struct ApplyReport {
  ComplexVector result;
  int n = 0;
  double tau = 0.0;  // tau of the approximant actually applied (vertex scaled)
  Regime regime = Regime::Unbounded;
  double predicted_error = 0.0;  // relative to ||v||, for A itself
  int solve_count = 0;
};

/// A^{-1/2} v through 2n shifted solves. tau is chosen for the sector
/// normalized to vertex 1 and then rescaled by the vertex. K <= 0 picks the
/// default Crouzeix constant.
ApplyReport apply_half_power(const Operator& A, std::span<const std::complex<double>> v,
                             int n, double K = 0.0);
ApplyReport apply_half_power(const Operator& A, std::span<const std::complex<double>> v,
                             int n, const SectorGeometry& sector, double K = 0.0);

/// Applies an already built approximant: sum_k residue_k (A + shift_k)^{-1} v.
ComplexVector apply_rational(const Operator& A, const RationalHalfPower& R,
                             std::span<const std::complex<double>> v);

/// Entrywise principal lambda^{-alpha}. Throws Domain on (-inf, 0].
Diagonal oracle_diag(const Diagonal& A, double alpha);

/// A^{-alpha} v for a real constant tridiagonal (Toeplitz) matrix with
/// sub * super > 0, through its closed-form eigenpairs. Evaluated in extended
/// precision so the diagonal similarity (sub/super)^{j/2} does not destroy
/// the result.
ComplexVector oracle_tridiag_toeplitz(const Tridiagonal& A,
                                      std::span<const std::complex<double>> v,
                                      double alpha);

/// Closed-form eigenvalues a + 2 s cos(k pi / (N+1)), k = 1..N, of a real
/// Toeplitz tridiagonal matrix with sub * super > 0.
std::vector<double> toeplitz_eigenvalues(const Tridiagonal& A);

/// max_i |lambda_i^{-alpha} - approx(lambda_i)|; for a normal matrix this is
/// the operator-norm error.
double spectral_error(const Diagonal& A, const RationalHalfPower& R, double alpha = 0.5);
double spectral_error(const Diagonal& A, const GeneralAlphaApprox& G);

}  // namespace sectsqrt
