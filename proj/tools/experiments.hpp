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
#include <ostream>
#include <stdexcept>
#include <string>

namespace sectsqrt::cli {

enum class Experiment { Fig1, Fig3, Table1, Fig7, Fig5, Fig8, Select, Apply, Matrix };

std::optional<Experiment> parse_experiment(const std::string& name);
const char* experiment_name(Experiment e);

struct ExperimentConfig {
  Experiment experiment = Experiment::Fig1;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> n_step;
  std::optional<double> beta;
  std::optional<double> tau;
  std::optional<double> rho_n;
  std::optional<double> alpha;
  double K = 0.0;  // <= 0: default Crouzeix constant
  std::optional<double> eps;

  // apply / matrix
  std::string matrix_path;
  std::string vector_path;
  std::optional<double> vertex;
  std::optional<int> order;
  int grid_points = 200;
  std::optional<double> convection;

  std::string output_path;  // empty: stdout
};

/// Bad or inconsistent configuration; exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure inside the numerical library; exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes the experiment output (CSV, or a key = value report for select)
/// to `out`. Throws ConfigError or NumericalError.
void run_experiment(const ExperimentConfig& config, std::ostream& out);

/// Runs and writes to config.output_path (or stdout). Returns the process
/// exit code and prints diagnostics to `err`.
int run_to_destination(const ExperimentConfig& config, std::ostream& err);

}  // namespace sectsqrt::cli
