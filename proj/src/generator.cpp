// Copyright 2026 The MHD Authors
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

#include "mhd/generator.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "mhd/errors.hpp"

namespace mhd {

namespace {

// Integer sign pattern S with Y = S / sqrt(m-1). Doubling acts on S exactly:
// [[S, S + I], [S - I, -S]], so no rounding accumulates across sizes.
using SignMatrix = std::vector<std::vector<int>>;

SignMatrix signs_of(const Mat& y) {
  const std::size_t m = y.size();
  SignMatrix s(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) s[i][j] = y(i, j) > 0.0 ? 1 : (y(i, j) < 0.0 ? -1 : 0);
  return s;
}

SignMatrix double_signs(const SignMatrix& s) {
  const std::size_t m = s.size();
  SignMatrix out(2 * m, std::vector<int>(2 * m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int diag = (i == j) ? 1 : 0;
      out[i][j] = s[i][j];
      out[i][j + m] = s[i][j] + diag;
      out[i + m][j] = s[i][j] - diag;
      out[i + m][j + m] = -s[i][j];
    }
  }
  return out;
}

Mat scale_signs(const SignMatrix& s) {
  const std::size_t m = s.size();
  const double mag = 1.0 / std::sqrt(static_cast<double>(m - 1));
  Mat y(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) y(i, j) = s[i][j] * mag;
  return y;
}

}  // namespace

ValidationReport validate(const Mat& y, double tol) {
  const std::size_t m = y.size();
  ValidationReport report;

  report.skew_symmetric = true;
  for (std::size_t i = 0; i < m && report.skew_symmetric; ++i) {
    if (y(i, i) != 0.0) report.skew_symmetric = false;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (std::abs(y(i, j) + y(j, i)) > tol) {
        report.skew_symmetric = false;
        break;
      }
    }
  }

  // For m = 1 there are no off-diagonal entries and the condition is vacuous.
  report.equal_magnitude = true;
  if (m > 1) {
    const double mag = 1.0 / std::sqrt(static_cast<double>(m - 1));
    for (std::size_t i = 0; i < m && report.equal_magnitude; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && std::abs(std::abs(y(i, j)) - mag) > tol) {
          report.equal_magnitude = false;
          break;
        }
      }
    }
  }

  report.orthogonal = is_orthogonal(y, tol);
  report.square_is_minus_identity =
      max_abs_diff(y * y, Mat::identity(m) * -1.0) <= tol;
  return report;
}

Generator Generator::from_matrix(Mat y) {
  const ValidationReport r = validate(y);
  if (!r.all()) {
    throw ConfigurationError(
        "matrix is not a valid generator (A1=" + std::to_string(r.skew_symmetric) +
        ", A2=" + std::to_string(r.equal_magnitude) +
        ", A3=" + std::to_string(r.orthogonal) + ")");
  }
  return Generator(std::move(y));
}

int Generator::sign(std::size_t i, std::size_t j) const {
  const double v = y_(i, j);
  return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

Generator y2() { return Generator(Mat{{0.0, 1.0}, {-1.0, 0.0}}); }

Generator doubled(const Generator& g) {
  Mat y = scale_signs(double_signs(signs_of(g.matrix())));
  if (!validate(y).all()) {
    throw InternalError("doubling produced an invalid " +
                        std::to_string(y.size()) + "-mode generator");
  }
  return Generator(std::move(y));
}

Generator build_generator(std::size_t m) {
  if (m < 2 || !std::has_single_bit(m)) {
    throw SizeError("generators are constructed only for m = 2^k with k >= 1 "
                    "(block doubling from the 2-mode generator); got m = " +
                    std::to_string(m));
  }
  SignMatrix s{{0, 1}, {-1, 0}};
  while (s.size() < m) s = double_signs(s);
  Mat y = scale_signs(s);
  if (!validate(y).all()) {
    throw InternalError("built generator for m = " + std::to_string(m) +
                        " failed validation");
  }
  return Generator(std::move(y));
}

}  // namespace mhd
