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

#include "mhd/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mhd/errors.hpp"

namespace mhd {

InputPair::InputPair(std::size_t i, std::size_t j) : first(i), second(j) {
  if (i >= j) {
    throw std::invalid_argument("input pair needs two distinct modes in "
                                "increasing order, got (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
  }
}

MHDNetwork::MHDNetwork(Generator g, double theta)
    : g_(std::move(g)), theta_(theta), d_(g_.modes()) {
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Mat& y = g_.matrix();
  const std::size_t m = y.size();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t col = 0; col < m; ++col)
      d_(r, col) = (r == col) ? c : s * y(r, col);
}

double theta_dip(std::size_t m) {
  if (m < 2) throw SizeError("theta_dip needs m >= 2");
  return std::acos(1.0 / std::sqrt(static_cast<double>(m)));
}

Mat submatrix(const MHDNetwork& net, std::size_t p, std::size_t q,
              std::size_t i, std::size_t j) {
  const std::size_t m = net.modes();
  if (p >= m || q >= m || i >= m || j >= m) {
    throw IndexError("submatrix index out of range for " + std::to_string(m) +
                     "-mode network");
  }
  const Mat& d = net.matrix();
  return Mat{{d(p, i), d(p, j)}, {d(q, i), d(q, j)}};
}

bool hadamard_check(const MHDNetwork& net, double tol) {
  const std::size_t m = net.modes();
  const Mat h = net.matrix() * std::sqrt(static_cast<double>(m));
  for (double v : h.entries()) {
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  }
  // Entries are +-1 up to tol, so the Gram residual scales with m.
  const Mat gram = h * h.transpose();
  return max_abs_diff(gram, Mat::identity(m) * static_cast<double>(m)) <=
         tol * static_cast<double>(m);
}

}  // namespace mhd
