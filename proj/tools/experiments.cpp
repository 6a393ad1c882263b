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

#include "experiments.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <vector>

#include "sectsqrt/sectsqrt.h"

namespace sectsqrt::cli {

namespace {

constexpr double kFig1Tau = 2.0;
constexpr double kDiagExponentMax = 16.0;
constexpr double kTruncatedExponentMax = 4.0;
constexpr double kExponentStep = 0.1;
constexpr int kConvectionN = 200;
constexpr double kSelectFloor = 1e-15;
constexpr int kSelectMaxOrder = 5000;

struct RationalDeleter {
  void operator()(sectsqrt_rational* r) const { sectsqrt_rational_destroy(r); }
};
struct GeneralDeleter {
  void operator()(sectsqrt_general* g) const { sectsqrt_general_destroy(g); }
};
struct OperatorDeleter {
  void operator()(sectsqrt_operator* op) const { sectsqrt_operator_destroy(op); }
};
using RationalPtr = std::unique_ptr<sectsqrt_rational, RationalDeleter>;
using GeneralPtr = std::unique_ptr<sectsqrt_general, GeneralDeleter>;
using OperatorPtr = std::unique_ptr<sectsqrt_operator, OperatorDeleter>;

void check(sectsqrt_status s) {
  if (s == SECTSQRT_OK) return;
  const std::string msg = std::string(sectsqrt_status_string(s)) + ": " + sectsqrt_last_error();
  if (s == SECTSQRT_E_INVALID_ARGUMENT || s == SECTSQRT_E_IO) throw ConfigError(msg);
  throw NumericalError(msg);
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::string short_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string full_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<int> n_values(const ExperimentConfig& c, int lo, int hi, int step) {
  const int a = c.n_min.value_or(lo);
  const int b = c.n_max.value_or(hi);
  const int s = c.n_step.value_or(step);
  if (s < 1) throw ConfigError("--n-step must be >= 1");
  if (a < 1) throw ConfigError("--n-min must be >= 1");
  if (a > b) throw ConfigError("empty n range: --n-min exceeds --n-max");
  std::vector<int> ns;
  for (int n = a; n <= b; n += s) ns.push_back(n);
  return ns;
}

std::vector<double> betas_or(const ExperimentConfig& c, std::vector<double> defaults) {
  if (c.beta) return {*c.beta};
  return defaults;
}

void config_line(std::ostream& out, const ExperimentConfig& c) {
  out << "# sectsqrt " << experiment_name(c.experiment);
  if (c.n_min) out << " n_min=" << *c.n_min;
  if (c.n_max) out << " n_max=" << *c.n_max;
  if (c.n_step) out << " n_step=" << *c.n_step;
  if (c.beta) out << " beta=" << short_num(*c.beta);
  if (c.tau) out << " tau=" << short_num(*c.tau);
  if (c.rho_n) out << " rho_n=" << short_num(*c.rho_n);
  if (c.alpha) out << " alpha=" << short_num(*c.alpha);
  if (c.K > 0.0) out << " K=" << short_num(c.K);
  if (c.eps) out << " eps=" << short_num(*c.eps);
  if (c.convection) out << " c=" << short_num(*c.convection);
  if (c.vertex) out << " vertex=" << short_num(*c.vertex);
  if (c.order) out << " order=" << *c.order;
  if (!c.matrix_path.empty()) out << " matrix=" << c.matrix_path;
  if (!c.vector_path.empty()) out << " vector=" << c.vector_path;
  out << '\n';
}

sectsqrt_sector sector(double beta, const double* rho_n) {
  sectsqrt_sector s;
  check(sectsqrt_sector_constants(beta, 1.0, rho_n, &s));
  return s;
}

RationalPtr make_rational(int n, double tau) {
  sectsqrt_rational* r = nullptr;
  check(sectsqrt_rational_create(n, tau, &r));
  return RationalPtr(r);
}

OperatorPtr diag_sector(double beta, double exponent_max) {
  std::vector<double> x;
  const auto count = static_cast<int>(std::lround(exponent_max / kExponentStep));
  for (int i = 0; i <= count; ++i) x.push_back(i * kExponentStep);
  sectsqrt_operator* op = nullptr;
  check(sectsqrt_operator_diag_sector(beta, x.data(), x.size(), &op));
  return OperatorPtr(op);
}

double vector_norm(const std::vector<sectsqrt_complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += z.re * z.re + z.im * z.im;
  return std::sqrt(s);
}

std::vector<sectsqrt_complex> normalized_ones(size_t n) {
  const double x = 1.0 / std::sqrt(static_cast<double>(n));
  return std::vector<sectsqrt_complex>(n, sectsqrt_complex{x, 0.0});
}

void run_fig1(const ExperimentConfig& c, std::ostream& out) {
  struct Point {
    const char* label;
    sectsqrt_complex lambda;
  };
  const Point points[] = {{"10", {10.0, 0.0}}, {"5+5i", {5.0, 5.0}}, {"-5+10i", {-5.0, 10.0}}};
  const double tau = c.tau.value_or(kFig1Tau);
  config_line(out, c);
  out << "n,lambda,measured_error,estimate\n";
  for (int n : n_values(c, 2, 100, 1)) {
    const RationalPtr r = make_rational(n, tau);
    for (const Point& p : points) {
      sectsqrt_complex approx;
      check(sectsqrt_rational_eval(r.get(), p.lambda, &approx));
      const std::complex<double> exact =
          std::pow(std::complex<double>(p.lambda.re, p.lambda.im), -0.5);
      const double err = std::abs(exact - std::complex<double>(approx.re, approx.im));
      sectsqrt_estimate est;
      check(sectsqrt_error_estimate(p.lambda, tau, n, &est));
      out << n << ',' << p.label << ',' << num(err) << ',' << num(est.total) << '\n';
    }
  }
}

void run_fig3(const ExperimentConfig& c, std::ostream& out) {
  config_line(out, c);
  out << "n,beta,spectral_error,bound\n";
  for (double beta : betas_or(c, {0.0, 1.0 / 3.0, 5.0 / 12.0})) {
    const OperatorPtr op = diag_sector(beta, kDiagExponentMax);
    const sectsqrt_sector s = sector(beta, nullptr);
    for (int n : n_values(c, 5, 100, 5)) {
      double tau = 0.0;
      if (c.tau) {
        tau = *c.tau;
      } else {
        check(sectsqrt_tau_unbounded(n, &s, &tau));
      }
      const RationalPtr r = make_rational(n, tau);
      double err = 0.0;
      double bound = 0.0;
      check(sectsqrt_spectral_error(op.get(), r.get(), 0.5, &err));
      check(sectsqrt_bound_unbounded(n, &s, c.K, &bound));
      out << n << ',' << short_num(beta) << ',' << num(err) << ',' << num(bound) << '\n';
    }
  }
}

void run_table1(const ExperimentConfig& c, std::ostream& out) {
  const double beta = c.beta.value_or(5.0 / 12.0);
  const sectsqrt_sector s = sector(beta, nullptr);
  std::vector<int> ns{10, 25, 40, 55, 70, 85, 100};
  if (c.n_min || c.n_max || c.n_step) ns = n_values(c, 10, 100, 15);
  config_line(out, c);
  out << "n,tau,rho_hat\n";
  for (int n : ns) {
    double tau = 0.0;
    double rho = 0.0;
    check(sectsqrt_tau_unbounded(n, &s, &tau));
    check(sectsqrt_rho_hat(n, &s, &rho));
    out << n << ',' << num(tau) << ',' << num(rho) << '\n';
  }
}

void run_fig7(const ExperimentConfig& c, std::ostream& out) {
  config_line(out, c);
  out << "n,beta,error,bound,regime\n";
  for (double beta : betas_or(c, {1.0 / 6.0, 1.0 / 3.0, 5.0 / 12.0})) {
    const OperatorPtr op = diag_sector(beta, kTruncatedExponentMax);
    sectsqrt_sector s;
    check(sectsqrt_operator_sector(op.get(), &s));
    if (c.rho_n) {
      s.has_rho_n = 1;
      s.rho_n = *c.rho_n;
    }
    for (int n : n_values(c, 5, 100, 5)) {
      sectsqrt_selection sel;
      check(sectsqrt_select_params(n, &s, c.K, &sel));
      const RationalPtr r = make_rational(n, c.tau.value_or(sel.tau));
      double err = 0.0;
      check(sectsqrt_spectral_error(op.get(), r.get(), 0.5, &err));
      out << n << ',' << short_num(beta) << ',' << num(err) << ',' << num(sel.predicted_error)
          << ',' << (sel.regime == SECTSQRT_REGIME_BOUNDED ? "bounded" : "unbounded") << '\n';
    }
  }
}

void run_fig5(const ExperimentConfig& c, std::ostream& out) {
  std::vector<double> cs{0.0, 30.0, 200.0};
  if (c.convection) cs = {*c.convection};
  config_line(out, c);
  out << "n,c,error\n";
  for (double conv : cs) {
    sectsqrt_operator* raw = nullptr;
    const double* beta = c.beta ? &*c.beta : nullptr;
    check(sectsqrt_operator_convection_diffusion(kConvectionN, conv, beta, &raw));
    const OperatorPtr op(raw);
    const size_t size = sectsqrt_operator_size(op.get());
    const auto v = normalized_ones(size);
    std::vector<sectsqrt_complex> exact(size);
    check(sectsqrt_oracle_apply(op.get(), v.data(), size, 0.5, exact.data()));
    for (int n : n_values(c, 5, 100, 5)) {
      std::vector<sectsqrt_complex> y(size);
      check(sectsqrt_apply_half_power(op.get(), v.data(), size, n, c.K, y.data(), nullptr));
      for (size_t i = 0; i < size; ++i) {
        y[i].re -= exact[i].re;
        y[i].im -= exact[i].im;
      }
      out << n << ',' << short_num(conv) << ',' << num(vector_norm(y) / vector_norm(v)) << '\n';
    }
  }
}

void run_fig8(const ExperimentConfig& c, std::ostream& out) {
  const double beta = c.beta.value_or(1.0 / 6.0);
  const OperatorPtr op = diag_sector(beta, kDiagExponentMax);
  const sectsqrt_sector s = sector(beta, nullptr);
  std::vector<double> alphas{0.5, 0.75, 0.9};
  if (c.alpha) alphas = {*c.alpha};
  config_line(out, c);
  out << "n,alpha,spectral_error\n";
  for (double alpha : alphas) {
    for (int n : n_values(c, 5, 100, 5)) {
      double tau = 0.0;
      if (c.tau) {
        tau = *c.tau;
      } else {
        check(sectsqrt_tau_unbounded(n, &s, &tau));
      }
      sectsqrt_general* raw = nullptr;
      check(sectsqrt_general_create(n, tau, alpha, &raw));
      const GeneralPtr g(raw);
      double err = 0.0;
      check(sectsqrt_spectral_error_general(op.get(), g.get(), &err));
      out << n << ',' << short_num(alpha) << ',' << num(err) << '\n';
    }
  }
}

void run_select(const ExperimentConfig& c, std::ostream& out) {
  if (!c.eps) throw ConfigError("select requires --eps");
  const double eps = *c.eps;
  if (!(eps > 0.0)) throw ConfigError("--eps must be positive");
  if (eps < kSelectFloor) {
    throw ConfigError("target accuracy " + short_num(eps) +
                      " is unreachable in double precision (floor 1e-15)");
  }
  const double beta = c.beta.value_or(0.0);
  const sectsqrt_sector s = sector(beta, c.rho_n ? &*c.rho_n : nullptr);
  for (int n = 2; n <= kSelectMaxOrder; ++n) {
    sectsqrt_selection sel;
    check(sectsqrt_select_params(n, &s, c.K, &sel));
    if (sel.predicted_error <= eps) {
      config_line(out, c);
      out << "n = " << n << '\n';
      out << "tau = " << num(sel.tau) << '\n';
      out << "regime = " << (sel.regime == SECTSQRT_REGIME_BOUNDED ? "bounded" : "unbounded")
          << '\n';
      out << "rho_hat = " << num(sel.rho_hat) << '\n';
      out << "n_bar = ";
      if (sel.has_n_bar) {
        out << num(sel.n_bar) << '\n';
      } else {
        out << "n/a\n";
      }
      out << "predicted_error = " << num(sel.predicted_error) << '\n';
      out << "crouzeix_K = " << short_num(sel.crouzeix_k) << '\n';
      return;
    }
  }
  throw NumericalError("no order up to " + std::to_string(kSelectMaxOrder) + " reaches " +
                       short_num(eps));
}

void run_apply(const ExperimentConfig& c, std::ostream& out) {
  if (c.matrix_path.empty()) throw ConfigError("apply requires --matrix");
  if (!c.order) throw ConfigError("apply requires --order");
  const double beta = c.beta.value_or(0.0);
  sectsqrt_sector s;
  check(sectsqrt_sector_constants(beta, c.vertex.value_or(1.0), c.rho_n ? &*c.rho_n : nullptr,
                                  &s));
  sectsqrt_operator* raw = nullptr;
  check(sectsqrt_operator_read(c.matrix_path.c_str(), &s, &raw));
  const OperatorPtr op(raw);
  const size_t size = sectsqrt_operator_size(op.get());

  std::vector<sectsqrt_complex> v;
  if (c.vector_path.empty()) {
    v = normalized_ones(size);
  } else {
    sectsqrt_complex* buf = nullptr;
    size_t len = 0;
    check(sectsqrt_read_vector(c.vector_path.c_str(), &buf, &len));
    v.assign(buf, buf + len);
    sectsqrt_free(buf);
  }
  std::vector<sectsqrt_complex> y(v.size());
  sectsqrt_apply_info info;
  check(sectsqrt_apply_half_power(op.get(), v.data(), v.size(), *c.order, c.K, y.data(), &info));
  config_line(out, c);
  out << "# n=" << info.n << " tau=" << num(info.tau)
      << " regime=" << (info.regime == SECTSQRT_REGIME_BOUNDED ? "bounded" : "unbounded")
      << " predicted_error=" << num(info.predicted_error) << " solves=" << info.solve_count
      << '\n';
  for (const auto& z : y) out << full_num(z.re) << ' ' << full_num(z.im) << '\n';
}

void run_matrix(const ExperimentConfig& c) {
  if (c.output_path.empty()) throw ConfigError("matrix requires -o");
  sectsqrt_operator* raw = nullptr;
  const double* beta = c.beta ? &*c.beta : nullptr;
  check(sectsqrt_operator_convection_diffusion(c.grid_points, c.convection.value_or(0.0), beta,
                                               &raw));
  const OperatorPtr op(raw);
  check(sectsqrt_operator_write(op.get(), c.output_path.c_str()));
}

}  // namespace

std::optional<Experiment> parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::Fig1, Experiment::Fig3, Experiment::Table1, Experiment::Fig7,
                       Experiment::Fig5, Experiment::Fig8, Experiment::Select, Experiment::Apply,
                       Experiment::Matrix}) {
    if (name == experiment_name(e)) return e;
  }
  return std::nullopt;
}

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Fig1: return "fig1";
    case Experiment::Fig3: return "fig3";
    case Experiment::Table1: return "table1";
    case Experiment::Fig7: return "fig7";
    case Experiment::Fig5: return "fig5";
    case Experiment::Fig8: return "fig8";
    case Experiment::Select: return "select";
    case Experiment::Apply: return "apply";
    case Experiment::Matrix: return "matrix";
  }
  return "unknown";
}

void run_experiment(const ExperimentConfig& config, std::ostream& out) {
  switch (config.experiment) {
    case Experiment::Fig1: return run_fig1(config, out);
    case Experiment::Fig3: return run_fig3(config, out);
    case Experiment::Table1: return run_table1(config, out);
    case Experiment::Fig7: return run_fig7(config, out);
    case Experiment::Fig5: return run_fig5(config, out);
    case Experiment::Fig8: return run_fig8(config, out);
    case Experiment::Select: return run_select(config, out);
    case Experiment::Apply: return run_apply(config, out);
    case Experiment::Matrix: return run_matrix(config);
  }
}

int run_to_destination(const ExperimentConfig& config, std::ostream& err) {
  try {
    if (config.experiment == Experiment::Matrix) {
      run_matrix(config);
      return 0;
    }
    std::ostringstream buffer;
    run_experiment(config, buffer);
    if (config.output_path.empty()) {
      std::cout << buffer.str() << std::flush;
      return 0;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw ConfigError(config.output_path + ": cannot open for writing");
    file << buffer.str();
    if (!file.flush()) throw ConfigError(config.output_path + ": write failed");
    return 0;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace sectsqrt::cli
