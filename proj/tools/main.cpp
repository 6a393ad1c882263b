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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "experiments.hpp"

namespace {

constexpr const char* kExperiments = "fig1|fig3|table1|fig7|fig5|fig8|select|apply|matrix";

}  // namespace

int main(int argc, char** argv) {
  using sectsqrt::cli::ExperimentConfig;

  CLI::App app{"Rational approximation of A^{-1/2} by Gauss-Legendre quadrature"};
  app.set_version_flag("--version", "sectsqrt 0.1.0");

  std::string experiment;
  ExperimentConfig cfg;
  double beta = 0.0, tau = 0.0, rho_n = 0.0, alpha = 0.0, eps = 0.0, vertex = 0.0, conv = 0.0;
  int n_min = 0, n_max = 0, n_step = 0, order = 0;

  app.add_option("experiment", experiment, kExperiments)->required();
  auto* o_beta = app.add_option("--beta", beta, "Sector half-angle divided by pi, in [0, 1/2)");
  auto* o_nmin = app.add_option("--n-min", n_min, "Smallest quadrature order");
  auto* o_nmax = app.add_option("--n-max", n_max, "Largest quadrature order");
  auto* o_nstep = app.add_option("--n-step", n_step, "Order increment");
  auto* o_tau = app.add_option("--tau", tau, "Fixed tau instead of the selected one");
  auto* o_rho = app.add_option("--rho-n", rho_n, "Radius of a bounded sector");
  auto* o_alpha = app.add_option("--alpha", alpha, "Exponent for fig8");
  app.add_option("--K", cfg.K, "Crouzeix constant (default: 1 if beta = 0, else 1 + sqrt 2)");
  auto* o_eps = app.add_option("--eps", eps, "Target accuracy for select");
  app.add_option("--matrix", cfg.matrix_path, "Matrix Market input for apply");
  app.add_option("--vector", cfg.vector_path, "Vector input for apply (default: normalized ones)");
  auto* o_vertex = app.add_option("--vertex", vertex, "Sector vertex for apply");
  auto* o_order = app.add_option("--order", order, "Quadrature order for apply");
  app.add_option("--N", cfg.grid_points, "Interior grid points for matrix");
  auto* o_conv = app.add_option("--c", conv, "Convection coefficient for fig5 and matrix");
  app.add_option("-o,--output", cfg.output_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto parsed = sectsqrt::cli::parse_experiment(experiment);
  if (!parsed) {
    std::cerr << "error: unknown experiment '" << experiment << "' (expected " << kExperiments
              << ")\n";
    return 1;
  }
  cfg.experiment = *parsed;
  if (*o_beta) cfg.beta = beta;
  if (*o_nmin) cfg.n_min = n_min;
  if (*o_nmax) cfg.n_max = n_max;
  if (*o_nstep) cfg.n_step = n_step;
  if (*o_tau) cfg.tau = tau;
  if (*o_rho) cfg.rho_n = rho_n;
  if (*o_alpha) cfg.alpha = alpha;
  if (*o_eps) cfg.eps = eps;
  if (*o_vertex) cfg.vertex = vertex;
  if (*o_order) cfg.order = order;
  if (*o_conv) cfg.convection = conv;

  return sectsqrt::cli::run_to_destination(cfg, std::cerr);
}
