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

#pragma once

#include <cstddef>

#include "mhd/generator.hpp"
#include "mhd/matrix.hpp"

namespace mhd {

/// Unordered pair of distinct input modes, stored with first < second.
/// Indices are 0-based here; the CLI converts from the 1-based notation.
struct InputPair {
  std::size_t first;
  std::size_t second;

  /// Throws std::invalid_argument unless first < second.
  InputPair(std::size_t i, std::size_t j);

  bool operator==(const InputPair&) const = default;
  auto operator<=>(const InputPair&) const = default;
};

/// D(theta) = cos(theta) I + sin(theta) Y. Since Y^2 = -I this is exactly
/// exp(theta Y), orthogonal for every real theta.
class MHDNetwork {
 public:
  MHDNetwork(Generator g, double theta);

  std::size_t modes() const { return d_.size(); }
  double theta() const { return theta_; }
  const Mat& matrix() const { return d_; }
  const Generator& generator() const { return g_; }

 private:
  Generator g_;
  double theta_;
  Mat d_;
};

inline MHDNetwork build_network(const Generator& g, double theta) {
  return MHDNetwork(g, theta);
}

/// arccos(1/sqrt(m)): every cross-group coincidence vanishes here.
double theta_dip(std::size_t m);

/// [[D(p,i), D(p,j)], [D(q,i), D(q,j)]].
Mat submatrix(const MHDNetwork& net, std::size_t p, std::size_t q,
              std::size_t i, std::size_t j);

/// sqrt(m) D has +-1 entries and (sqrt(m) D)(sqrt(m) D)^T = m I.
bool hadamard_check(const MHDNetwork& net, double tol = kAlgebraicTol);

}  // namespace mhd
