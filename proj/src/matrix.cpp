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

#include "mhd/matrix.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "mhd/errors.hpp"

namespace mhd {

Mat::Mat(std::size_t n) : n_(n), data_(n * n, 0.0) {
  if (n == 0) {
    throw SizeError("matrix dimension must be at least 1");
  }
}

Mat::Mat(std::size_t n, std::vector<double> entries)
    : n_(n), data_(std::move(entries)) {
  if (n == 0) {
    throw SizeError("matrix dimension must be at least 1");
  }
  if (data_.size() != n * n) {
    throw SizeError("expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(data_.size()));
  }
  check_finite();
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  if (n_ == 0) {
    throw SizeError("matrix dimension must be at least 1");
  }
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) {
      throw SizeError("matrix is not square");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  check_finite();
}

Mat Mat::identity(std::size_t n) {
  Mat out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

void Mat::check_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

Mat Mat::transpose() const {
  Mat out(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Mat& Mat::operator+=(const Mat& other) {
  if (other.n_ != n_) throw SizeError("matrix size mismatch in addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  if (other.n_ != n_) throw SizeError("matrix size mismatch in subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Mat& Mat::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.n_ != b.n_) throw SizeError("matrix size mismatch in product");
  const std::size_t n = a.n_;
  Mat out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) throw SizeError("matrix size mismatch");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    worst = std::max(worst, std::abs(ea[k] - eb[k]));
  }
  return worst;
}

namespace {

double ryser(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<double> row_sums(n, 0.0);
  double total = 0.0;
  std::uint64_t gray = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    // Flip exactly one column in or out of the subset.
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t changed = next ^ gray;
    const auto col = static_cast<std::size_t>(std::countr_zero(changed));
    const double sign = (next & changed) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i) row_sums[i] += sign * a(i, col);
    gray = next;

    double prod = 1.0;
    for (double s : row_sums) prod *= s;
    total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

}  // namespace

double permanent(const Mat& sub) {
  const std::size_t n = sub.size();
  if (n > kMaxPermanentSize) {
    throw SizeError("permanent limited to " + std::to_string(kMaxPermanentSize) +
                    "x" + std::to_string(kMaxPermanentSize) + " matrices, got " +
                    std::to_string(n));
  }
  switch (n) {
    case 1:
      return sub(0, 0);
    case 2:
      return sub(0, 0) * sub(1, 1) + sub(0, 1) * sub(1, 0);
    case 3:
      return sub(0, 0) * (sub(1, 1) * sub(2, 2) + sub(1, 2) * sub(2, 1)) +
             sub(0, 1) * (sub(1, 0) * sub(2, 2) + sub(1, 2) * sub(2, 0)) +
             sub(0, 2) * (sub(1, 0) * sub(2, 1) + sub(1, 1) * sub(2, 0));
    default:
      return ryser(sub);
  }
}

bool is_orthogonal(const Mat& m, double tol) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double dot = 0.0;
      auto ri = m.row(i);
      auto rj = m.row(j);
      for (std::size_t k = 0; k < n; ++k) dot += ri[k] * rj[k];
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - expected) > tol) return false;
    }
  }
  return true;
}

Mat matexp_series(const Mat& m, int terms) {
  if (terms < 1) throw std::invalid_argument("series needs at least one term");
  const std::size_t n = m.size();
  Mat sum = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (int k = 1; k < terms; ++k) {
    term = term * m;
    term *= 1.0 / k;
    sum += term;
  }
  return sum;
}

}  // namespace mhd
