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

#include "sectsqrt/mmio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "sectsqrt/error.hpp"

namespace sectsqrt {

using cplx = std::complex<double>;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

[[noreturn]] void io_fail(const std::string& path, const std::string& what) {
  fail(ErrorCode::Io, path + ": " + what);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

OperatorData read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_fail(path, "cannot open for reading");

  std::string line;
  if (!std::getline(in, line)) io_fail(path, "empty file");
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate") {
    io_fail(path, "expected a '%%MatrixMarket matrix coordinate' banner");
  }
  field = lower(field);
  symmetry = lower(symmetry);
  const bool is_complex = field == "complex";
  if (!is_complex && field != "real" && field != "integer") {
    io_fail(path, "unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    io_fail(path, "unsupported symmetry '" + symmetry + "'");
  }

  do {
    if (!std::getline(in, line)) io_fail(path, "missing size line");
  } while (line.empty() || line[0] == '%');
  long rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> nnz) || rows <= 0 || rows != cols || nnz < 0) {
      io_fail(path, "size line must describe a nonempty square matrix");
    }
  }

  std::map<std::pair<long, long>, cplx> entries;
  for (long k = 0; k < nnz; ++k) {
    if (!std::getline(in, line)) io_fail(path, "fewer entries than declared");
    if (line.empty() || line[0] == '%') {
      --k;
      continue;
    }
    std::istringstream entry(line);
    long i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!(entry >> i >> j >> re) || (is_complex && !(entry >> im))) {
      io_fail(path, "malformed entry on line: " + line);
    }
    if (i < 1 || i > rows || j < 1 || j > cols) io_fail(path, "entry index out of range");
    entries[{i - 1, j - 1}] += cplx(re, im);
    if (symmetry == "symmetric" && i != j) entries[{j - 1, i - 1}] += cplx(re, im);
  }

  long bandwidth = 0;
  for (const auto& [ij, z] : entries) {
    if (z != cplx(0.0)) bandwidth = std::max(bandwidth, std::abs(ij.first - ij.second));
  }
  const auto n = static_cast<std::size_t>(rows);
  if (bandwidth == 0) {
    Diagonal d;
    d.entries.assign(n, cplx(0.0));
    for (const auto& [ij, z] : entries) {
      if (ij.first == ij.second) d.entries[ij.first] = z;
    }
    return d;
  }
  if (bandwidth == 1 && n >= 2) {
    Tridiagonal t;
    t.sub.assign(n - 1, cplx(0.0));
    t.diag.assign(n, cplx(0.0));
    t.super.assign(n - 1, cplx(0.0));
    for (const auto& [ij, z] : entries) {
      const auto [i, j] = ij;
      if (i == j) {
        t.diag[i] = z;
      } else if (i == j + 1) {
        t.sub[j] = z;
      } else if (j == i + 1) {
        t.super[i] = z;
      }
    }
    return t;
  }
  Dense dense{Eigen::MatrixXcd::Zero(rows, cols)};
  for (const auto& [ij, z] : entries) dense.matrix(ij.first, ij.second) = z;
  return dense;
}

void write_matrix_market(const std::string& path, const Operator& A) {
  const Eigen::MatrixXcd M = A.to_dense();
  std::vector<std::pair<std::pair<long, long>, cplx>> nz;
  for (Eigen::Index j = 0; j < M.cols(); ++j) {
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      if (M(i, j) != cplx(0.0)) nz.push_back({{i, j}, M(i, j)});
    }
  }
  std::ofstream out(path);
  if (!out) io_fail(path, "cannot open for writing");
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << M.rows() << ' ' << M.cols() << ' ' << nz.size() << '\n';
  for (const auto& [ij, z] : nz) {
    out << ij.first + 1 << ' ' << ij.second + 1 << ' ' << format_double(z.real()) << ' '
        << format_double(z.imag()) << '\n';
  }
  if (!out) io_fail(path, "write failed");
}

ComplexVector read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) io_fail(path, "cannot open for reading");
  ComplexVector v;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == '%') continue;
    std::istringstream entry(line);
    double re = 0.0, im = 0.0;
    if (!(entry >> re)) io_fail(path, "malformed vector entry: " + line);
    entry >> im;
    v.emplace_back(re, im);
  }
  if (v.empty()) io_fail(path, "no vector entries");
  return v;
}

void write_vector(const std::string& path, const ComplexVector& v) {
  std::ofstream out(path);
  if (!out) io_fail(path, "cannot open for writing");
  for (const cplx& z : v) out << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
  if (!out) io_fail(path, "write failed");
}

}  // namespace sectsqrt
