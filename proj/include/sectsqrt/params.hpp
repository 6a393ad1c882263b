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

#include <optional>

namespace sectsqrt {

/// Constants of the sector Sigma_{beta,1} = { 1 + rho e^{i theta pi},
/// |theta| <= beta } that drive the choice of tau. The analysis is normalized
/// to vertex 1; `vertex` records the scale of the operator the geometry was
/// attached to, and `rho_n` the optional radius of a bounded sector.
struct SectorGeometry {
  double beta = 0.0;
  double vertex = 1.0;
  std::optional<double> rho_n;

  double C = 1.0;       // sqrt(2) cos(pi (beta + 1) / 4)
  double rho0 = 0.0;    // tan^2(beta pi / 2)
  double Aminus = 0.0;
  double Aplus = 1.0;
  double D = 1.0;       // (1 + 2 rho0 cos(beta pi) + rho0^2)^{1/4}
  double G = 1.0;       // sqrt(D - sqrt(A-))
  double H = 0.0;       // 2 e C G / sqrt(D)
};

enum class Regime { Unbounded, Bounded };

const char* to_string(Regime regime) noexcept;

struct ParamSelection {
  int n = 0;
  double tau = 0.0;
  Regime regime = Regime::Unbounded;
  double rho_hat = 0.0;
  std::optional<double> n_bar;  // only in the bounded regime
  double predicted_error = 0.0;
  double crouzeix_K = 1.0;
};

/// Principal branch of Lambert W for x >= 0 (Halley iteration).
double lambert_w(double x);

/// Throws InvalidArgument unless 0 <= beta < 1/2.
SectorGeometry sector_constants(double beta);
SectorGeometry sector_constants(double beta, double vertex, std::optional<double> rho_n);

/// Default Crouzeix constant: 1 for the self-adjoint case beta = 0, 1 + sqrt(2)
/// otherwise.
double default_crouzeix(double beta) noexcept;

// Balance evaluators. g1 models Phi^(1) on the upper sector ray at distance
// rho, g2 models Phi^(2) at rho0 on the lower ray.
double g1(double tau, double rho, int n, const SectorGeometry& geom);
double g2(double tau, int n, const SectorGeometry& geom);

/// Residual of the bounded balance g1(tau, rho_N) = g2(tau, rho0), as
/// |lhs - rhs| / max(lhs, rhs).
double bounded_balance_mismatch(double tau, int n, const SectorGeometry& geom);

/// tau_bar = D^2 / (4 C^4 e^4 (n-1)^4) exp(4 W(H n (n-1))). Requires n >= 2.
double tau_unbounded(int n, const SectorGeometry& geom);

/// rho_hat = D^2 / e^4 exp(4 W(H n (n-1))), the location of the interior
/// maximum of Phi^(1) along the sector boundary. Requires n >= 2.
double rho_hat(int n, const SectorGeometry& geom);

/// 4 K [ln(H n^2) / (2 e C G)]^2 n^-4. Requires n >= 2, K in [1, 1 + sqrt 2].
double bound_unbounded(int n, const SectorGeometry& geom, double K);

/// Closed-form tau for the bounded sector (rho_N > 1 required), refined by
/// bisection on ln tau when the closed form leaves a balance mismatch above
/// 50%.
double tau_bounded(int n, const SectorGeometry& geom);
double tau_bounded_closed_form(int n, const SectorGeometry& geom);

/// 4 rho_N^{-1/4} D^{-1/2} exp(-2 sqrt(2) sqrt(G C) n rho_N^{-1/8}).
double bound_bounded(int n, const SectorGeometry& geom);

/// Order beyond which rho_hat exceeds rho_N.
double n_bar(const SectorGeometry& geom);

/// Chooses the regime and tau for an n-point rule. rho_n absent means an
/// unbounded sector. K <= 0 selects default_crouzeix(beta).
ParamSelection select_params(int n, double beta, std::optional<double> rho_n,
                             double K = 0.0);
ParamSelection select_params(int n, const SectorGeometry& geom, double K = 0.0);

struct EllipsePoint {
  double s0;
  double sin_phi0;
  double cos_phi0;
};

/// Joukowsky ellipse through 2i/sqrt(tau) - 1. Throws InvalidArgument for
/// tau <= 0.
EllipsePoint ellipse_s0(double tau);

/// Slope m of the tangent to that ellipse at 2i/sqrt(tau) - 1.
double tangent_slope(double tau);

/// Sector angle (/pi) at which Phi^(2) starts to have an interior maximum;
/// tends to 1/4 as tau grows.
double beta_star(double tau);

}  // namespace sectsqrt
