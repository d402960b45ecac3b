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
#include <initializer_list>
#include <span>
#include <vector>

namespace mhd {

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kRootTol = 1e-9;
inline constexpr std::size_t kMaxPermanentSize = 20;

/// Dense square real matrix, row-major. Entries are always finite.
class Mat {
 public:
  explicit Mat(std::size_t n);
  Mat(std::size_t n, std::vector<double> entries);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(std::size_t n);
  static Mat zeros(std::size_t n) { return Mat(n); }

  std::size_t size() const { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * n_, n_};
  }
  std::span<const double> entries() const { return data_; }

  Mat transpose() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(double s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

  bool operator==(const Mat&) const = default;

 private:
  void check_finite() const;

  std::size_t n_;
  std::vector<double> data_;
};

/// Largest |a(i,j) - b(i,j)|. Sizes must match.
double max_abs_diff(const Mat& a, const Mat& b);

/// perm(A) = sum over permutations s of prod_i A(i, s(i)).
/// Explicit expansion up to 3x3, Ryser's inclusion-exclusion formula with a
/// Gray-code walk above that. Throws SizeError past kMaxPermanentSize.
double permanent(const Mat& sub);

bool is_orthogonal(const Mat& m, double tol = kAlgebraicTol);

/// Truncated Taylor series sum_{k < terms} M^k / k!. Oracle only.
Mat matexp_series(const Mat& m, int terms);

}  // namespace mhd
