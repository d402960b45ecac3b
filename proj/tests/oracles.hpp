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

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mhd/matrix.hpp"

namespace mhd::oracle {

/// Permanent by explicit sum over all n! permutations.
inline double permutation_sum_permanent(const Mat& a) {
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  double sum = 0.0;
  do {
    double prod = 1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) prod *= a(i, perm[i]);
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// The 4-mode generator written out by hand.
inline Mat y4_literal() {
  const double k = 1.0 / std::sqrt(3.0);
  return Mat{{0, k, k, k}, {-k, 0, -k, k}, {-k, k, 0, -k}, {-k, -k, k, 0}};
}

/// cos(t) I + sin(t) Y assembled entry by entry.
inline Mat rotation_of(const Mat& y, double t) {
  Mat out(y.size());
  for (std::size_t r = 0; r < y.size(); ++r)
    for (std::size_t c = 0; c < y.size(); ++c)
      out(r, c) = (r == c ? std::cos(t) : 0.0) + std::sin(t) * y(r, c);
  return out;
}

/// |perm of the 2x2 block|^2 (halved for a == b), straight from the entries.
inline double two_photon_probability(const Mat& d, std::size_t a, std::size_t b,
                                     std::size_t i, std::size_t j) {
  const Mat sub{{d(a, i), d(a, j)}, {d(b, i), d(b, j)}};
  const double perm = permutation_sum_permanent(sub);
  return (a == b ? 0.5 : 1.0) * perm * perm;
}

inline double central_difference(const std::function<double(double)>& f, double x,
                                 double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline Mat random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = u(rng);
  return out;
}

}  // namespace mhd::oracle
