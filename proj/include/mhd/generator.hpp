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

#include "mhd/matrix.hpp"

namespace mhd {

/// Per-condition outcome of checking a candidate generator matrix.
struct ValidationReport {
  bool skew_symmetric = false;      // A1: Y^T = -Y, zero diagonal
  bool equal_magnitude = false;     // A2: |Y(i,j)| = 1/sqrt(m-1) off the diagonal
  bool orthogonal = false;          // A3: Y Y^T = I
  bool square_is_minus_identity = false;

  bool all() const {
    return skew_symmetric && equal_magnitude && orthogonal && square_is_minus_identity;
  }
};

/// Each flag is evaluated on its own; never throws.
ValidationReport validate(const Mat& y, double tol = kAlgebraicTol);

/// Real skew-symmetric orthogonal matrix whose off-diagonal entries share the
/// magnitude 1/sqrt(m-1). The network D(theta) = exp(theta Y) is built from it.
class Generator {
 public:
  /// Wraps a user-supplied matrix. Throws ConfigurationError if any of the
  /// validation flags is false.
  static Generator from_matrix(Mat y);

  std::size_t modes() const { return y_.size(); }
  const Mat& matrix() const { return y_; }

  /// Off-diagonal sign s(i,j) in {-1, 0, +1}.
  int sign(std::size_t i, std::size_t j) const;

 private:
  explicit Generator(Mat y) : y_(std::move(y)) {}

  friend Generator y2();
  friend Generator doubled(const Generator& g);
  friend Generator build_generator(std::size_t m);

  Mat y_;
};

/// [[0, 1], [-1, 0]].
Generator y2();

/// Block construction from m to 2m modes:
///   sqrt(m-1)/sqrt(2m-1) * [[Y, Y + I/sqrt(m-1)], [Y - I/sqrt(m-1), -Y]].
/// The result is validated; a failure throws InternalError.
Generator doubled(const Generator& g);

/// Iterated doubling from y2(). m must be a power of two >= 2; anything else
/// throws SizeError.
Generator build_generator(std::size_t m);

}  // namespace mhd
