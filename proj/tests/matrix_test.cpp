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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "mhd/errors.hpp"
#include "mhd/generator.hpp"
#include "oracles.hpp"

using namespace mhd;

TEST(Mat, rejects_bad_shapes_and_values) {
  EXPECT_THROW(Mat(0), SizeError);
  EXPECT_THROW(Mat(2, {1.0, 2.0, 3.0}), SizeError);
  EXPECT_THROW((Mat{{1.0, 2.0}, {3.0}}), SizeError);
  EXPECT_THROW((Mat{{1.0, std::numeric_limits<double>::infinity()}, {0.0, 1.0}}),
               std::invalid_argument);
  EXPECT_THROW((Mat{{std::nan(""), 0.0}, {0.0, 1.0}}), std::invalid_argument);
}

TEST(Mat, product_and_transpose) {
  const Mat a{{1, 2}, {3, 4}};
  const Mat b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Mat{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (Mat{{1, 3}, {2, 4}}));
  EXPECT_EQ(a * Mat::identity(2), a);
  EXPECT_THROW(a * Mat::identity(3), SizeError);
}

TEST(Permanent, worked_values) {
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(permanent(Mat{{h, h}, {-h, h}}), 0.0, 1e-15);
  EXPECT_EQ(permanent(Mat::identity(2)), 1.0);
  EXPECT_EQ(permanent(Mat{{1, 2}, {3, 4}}), 10.0);
}

TEST(Permanent, all_ones_is_factorial) {
  double factorial = 1.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    factorial *= static_cast<double>(n);
    Mat ones(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ones(r, c) = 1.0;
    EXPECT_NEAR(permanent(ones), factorial, 1e-9 * factorial) << n;
  }
}

TEST(Permanent, ryser_matches_permutation_sum) {
  std::mt19937_64 rng(1234);
  for (std::size_t n : {3, 4, 5, 6}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Mat a = oracle::random_matrix(n, rng);
      EXPECT_NEAR(permanent(a), oracle::permutation_sum_permanent(a), 1e-10);
    }
  }
}

TEST(Permanent, row_order_invariant) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 5;
    Mat a = oracle::random_matrix(n, rng);
    // Duplicate a row, then shuffle rows; the permanent must not move.
    for (std::size_t c = 0; c < n; ++c) a(n - 1, c) = a(0, c);
    const double before = permanent(a);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Mat shuffled(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) shuffled(r, c) = a(order[r], c);
    EXPECT_NEAR(permanent(shuffled), before, 1e-12);
  }
}

TEST(Permanent, size_guard) {
  EXPECT_NO_THROW(permanent(Mat::identity(20)));
  EXPECT_THROW(permanent(Mat::identity(21)), SizeError);
}

TEST(IsOrthogonal, examples) {
  EXPECT_TRUE(is_orthogonal(Mat{{0, 1}, {-1, 0}}, 1e-12));
  for (std::size_t n : {1, 3, 7}) {
    EXPECT_TRUE(is_orthogonal(Mat::identity(n), 0.0));
  }
  EXPECT_FALSE(is_orthogonal(Mat{{1, 1}, {0, 1}}, 1e-12));
}

TEST(MatexpSeries, zero_gives_identity) {
  for (int terms : {1, 5, 40}) {
    EXPECT_EQ(matexp_series(Mat::zeros(3), terms), Mat::identity(3));
  }
  EXPECT_THROW(matexp_series(Mat::zeros(2), 0), std::invalid_argument);
}

TEST(MatexpSeries, two_mode_rotation) {
  const double t = std::numbers::pi / 4.0;
  const Mat got = matexp_series(Mat{{0, 1}, {-1, 0}} * t, 30);
  const Mat want{{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}};
  EXPECT_LE(max_abs_diff(got, want), 1e-12);
}

TEST(MatexpSeries, four_mode_closed_form) {
  const double t = std::numbers::pi / 3.0;
  const Mat y = oracle::y4_literal();
  const Mat want = Mat::identity(4) * std::cos(t) + y * std::sin(t);
  EXPECT_LE(max_abs_diff(matexp_series(y * t, 40), want), 1e-12);
}

TEST(MatexpSeries, exp_of_generator_is_orthogonal) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t m : {2, 4, 8, 16}) {
    const Generator g = build_generator(m);
    for (int trial = 0; trial < 10; ++trial) {
      EXPECT_TRUE(is_orthogonal(matexp_series(g.matrix() * angle(rng), 40), 1e-10));
    }
  }
}
