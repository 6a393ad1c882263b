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

#include "sectsqrt/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sectsqrt/error.hpp"

namespace sectsqrt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kMaxCrouzeix = 1.0 + std::numbers::sqrt2;
constexpr double kFallbackMismatch = 0.5;

void require_order(int n, int min, const char* who) {
  if (n < min) {
    fail(ErrorCode::InvalidArgument,
         std::string(who) + ": n must be >= " + std::to_string(min));
  }
}

double require_rho_n(const SectorGeometry& geom, const char* who) {
  if (!geom.rho_n) {
    fail(ErrorCode::InvalidArgument, std::string(who) + ": rho_N is required");
  }
  const double rho_n = *geom.rho_n;
  if (!(rho_n > 1.0) || !std::isfinite(rho_n)) {
    fail(ErrorCode::InvalidArgument, std::string(who) + ": rho_N must exceed 1");
  }
  return rho_n;
}

void require_crouzeix(double K) {
  if (!(K >= 1.0) || K > kMaxCrouzeix + 1e-12) {
    fail(ErrorCode::InvalidArgument, "Crouzeix constant must lie in [1, 1+sqrt(2)]");
  }
}

// exp(4 W(H n (n-1))), shared by tau_bar and rho_hat.
double lambert_growth(int n, const SectorGeometry& geom) {
  return std::exp(4.0 * lambert_w(geom.H * n * (n - 1.0)));
}

// ln g1(tau, rho_N) - ln g2(tau, rho0); decreasing in tau. The common pi /
// sqrt(tau) factor cancels.
double log_bounded_balance(double tau, int n, const SectorGeometry& geom) {
  const double rho_n = *geom.rho_n;
  const double lhs = -0.5 * std::log(rho_n) -
                     2.0 * n * std::log1p(kSqrt2 * geom.C * std::pow(tau / rho_n, 0.25));
  const double rhs = -std::log(geom.D) -
                     2.0 * n * std::log1p(kSqrt2 * geom.G * std::pow(tau, -0.25));
  return lhs - rhs;
}

}  // namespace

const char* to_string(Regime regime) noexcept {
  return regime == Regime::Unbounded ? "unbounded" : "bounded";
}

double lambert_w(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    fail(ErrorCode::InvalidArgument, "lambert_w: argument must be finite and >= 0");
  }
  if (x == 0.0) return 0.0;
  double w = x < kE ? std::log1p(x) : std::log(x) - std::log(std::log(x));
  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

SectorGeometry sector_constants(double beta) {
  return sector_constants(beta, 1.0, std::nullopt);
}

SectorGeometry sector_constants(double beta, double vertex, std::optional<double> rho_n) {
  if (!(beta >= 0.0 && beta < 0.5)) {
    fail(ErrorCode::InvalidArgument, "sector: beta must lie in [0, 1/2)");
  }
  if (!(vertex > 0.0) || !std::isfinite(vertex)) {
    fail(ErrorCode::InvalidArgument, "sector: vertex must be positive");
  }
  if (rho_n && (!(*rho_n > 0.0) || !std::isfinite(*rho_n))) {
    fail(ErrorCode::InvalidArgument, "sector: rho_N must be positive");
  }
  SectorGeometry g;
  g.beta = beta;
  g.vertex = vertex;
  g.rho_n = rho_n;
  g.C = kSqrt2 * std::cos(kPi / 4.0 * (beta + 1.0));
  const double half_tan = std::tan(beta * kPi / 2.0);
  g.rho0 = half_tan * half_tan;
  const double cb = std::cos(beta * kPi);
  const double modulus = std::sqrt(1.0 + 2.0 * g.rho0 * cb + g.rho0 * g.rho0);
  g.D = std::sqrt(modulus);
  g.Aminus = std::max(0.0, (-1.0 - g.rho0 * cb + modulus) / 2.0);
  g.Aplus = (1.0 + g.rho0 * cb + modulus) / 2.0;
  g.G = std::sqrt(g.D - std::sqrt(g.Aminus));
  g.H = 2.0 * kE * g.C * g.G / std::sqrt(g.D);
  return g;
}

double default_crouzeix(double beta) noexcept {
  return beta == 0.0 ? 1.0 : kMaxCrouzeix;
}

double g1(double tau, double rho, int n, const SectorGeometry& geom) {
  return kPi / std::sqrt(tau) / std::sqrt(rho) *
         std::pow(1.0 + kSqrt2 * geom.C * std::pow(tau / rho, 0.25), -2.0 * n);
}

double g2(double tau, int n, const SectorGeometry& geom) {
  return kPi / (std::sqrt(tau) * geom.D) *
         std::pow(1.0 + kSqrt2 * geom.G * std::pow(tau, -0.25), -2.0 * n);
}

double bounded_balance_mismatch(double tau, int n, const SectorGeometry& geom) {
  const double rho_n = require_rho_n(geom, "bounded balance");
  const double lhs = g1(tau, rho_n, n, geom);
  const double rhs = g2(tau, n, geom);
  return std::abs(lhs - rhs) / std::max(lhs, rhs);
}

double tau_unbounded(int n, const SectorGeometry& geom) {
  require_order(n, 2, "tau_unbounded");
  const double c4 = std::pow(geom.C, 4);
  const double nm1 = n - 1.0;
  return geom.D * geom.D / (4.0 * c4 * std::pow(kE, 4) * std::pow(nm1, 4)) *
         lambert_growth(n, geom);
}

double rho_hat(int n, const SectorGeometry& geom) {
  require_order(n, 2, "rho_hat");
  return geom.D * geom.D / std::pow(kE, 4) * lambert_growth(n, geom);
}

double bound_unbounded(int n, const SectorGeometry& geom, double K) {
  require_order(n, 2, "bound_unbounded");
  require_crouzeix(K);
  const double nn = static_cast<double>(n);
  const double q = std::log(geom.H * nn * nn) / (2.0 * kE * geom.C * geom.G);
  return 4.0 * K * q * q / std::pow(nn, 4);
}

double tau_bounded_closed_form(int n, const SectorGeometry& geom) {
  require_order(n, 1, "tau_bounded");
  const double rho_n = require_rho_n(geom, "tau_bounded");
  // Positive root u = tau^{1/4} of u^2 + 2 p u - (G/C) rho_N^{1/4} = 0.
  const double r4 = std::pow(rho_n, 0.25);
  const double p = r4 / (4.0 * kSqrt2 * geom.C * n) * std::log(std::sqrt(rho_n) / geom.D);
  const double u = -p + std::sqrt(p * p + geom.G / geom.C * r4);
  return std::pow(u, 4);
}

double tau_bounded(int n, const SectorGeometry& geom) {
  const double closed = tau_bounded_closed_form(n, geom);
  if (bounded_balance_mismatch(closed, n, geom) <= kFallbackMismatch) return closed;

  double lo = 0.0;
  double hi = std::log(*geom.rho_n);
  double flo = log_bounded_balance(std::exp(lo), n, geom);
  const double fhi = log_bounded_balance(std::exp(hi), n, geom);
  if (flo * fhi > 0.0) return closed;  // no root in [1, rho_N]
  for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = log_bounded_balance(std::exp(mid), n, geom);
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

double bound_bounded(int n, const SectorGeometry& geom) {
  require_order(n, 1, "bound_bounded");
  const double rho_n = require_rho_n(geom, "bound_bounded");
  return 4.0 * std::pow(rho_n, -0.25) / std::sqrt(geom.D) *
         std::exp(-2.0 * kSqrt2 * std::sqrt(geom.G * geom.C) * n * std::pow(rho_n, -0.125));
}

double n_bar(const SectorGeometry& geom) {
  const double rho_n = require_rho_n(geom, "n_bar");
  return std::pow(rho_n, 0.125) * std::sqrt(std::log(rho_n)) / (2.0 * std::sqrt(2.0 * geom.C));
}

ParamSelection select_params(int n, double beta, std::optional<double> rho_n, double K) {
  return select_params(n, sector_constants(beta, 1.0, rho_n), K);
}

ParamSelection select_params(int n, const SectorGeometry& geom, double K) {
  require_order(n, 2, "select_params");
  if (K <= 0.0) K = default_crouzeix(geom.beta);
  require_crouzeix(K);
  if (geom.rho_n) require_rho_n(geom, "select_params");

  ParamSelection sel;
  sel.n = n;
  sel.crouzeix_K = K;
  sel.rho_hat = rho_hat(n, geom);
  if (!geom.rho_n || sel.rho_hat <= *geom.rho_n) {
    sel.regime = Regime::Unbounded;
    sel.tau = tau_unbounded(n, geom);
    sel.predicted_error = bound_unbounded(n, geom, K);
  } else {
    sel.regime = Regime::Bounded;
    sel.tau = tau_bounded(n, geom);
    sel.predicted_error = bound_bounded(n, geom);
    sel.n_bar = n_bar(geom);
  }
  return sel;
}

EllipsePoint ellipse_s0(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    fail(ErrorCode::InvalidArgument, "ellipse_s0: tau must be positive");
  }
  // sqrt(1 + tau) - 1 without cancellation.
  const double q = tau / (std::sqrt(1.0 + tau) + 1.0);
  const double cos_radicand = 1.0 - 2.0 / tau * q;
  if (!(cos_radicand > 0.0)) {
    fail(ErrorCode::Domain, "ellipse_s0: tau too small for the ellipse construction");
  }
  EllipsePoint p;
  p.sin_phi0 = std::sqrt(2.0 / tau) * std::sqrt(q);
  p.cos_phi0 = -std::sqrt(cos_radicand);
  p.s0 = kSqrt2 / std::sqrt(q) + 1.0 / std::sqrt(cos_radicand);
  return p;
}

double tangent_slope(double tau) {
  const EllipsePoint p = ellipse_s0(tau);
  const double delta = 0.5 * (p.s0 - 1.0 / p.s0);
  const double d2 = delta * delta;
  return d2 / (d2 + 1.0) * std::sqrt(tau) / 2.0;
}

double beta_star(double tau) {
  return 0.5 * (1.0 - 2.0 / kPi * std::atan(tangent_slope(tau)));
}

}  // namespace sectsqrt
