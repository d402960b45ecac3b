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

#include "mhd/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mhd/analysis.hpp"
#include "mhd/decomposition.hpp"
#include "mhd/generator.hpp"
#include "mhd/network.hpp"
#include "mhd/scattershot.hpp"
#include "mhd/two_photon.hpp"

namespace mhd {

namespace {

constexpr std::size_t kSizes[] = {2, 4, 8, 16};

class Recorder {
 public:
  // Passes when observed <= threshold.
  void at_most(std::string module, std::string invariant, double observed,
               double threshold) {
    checks_.push_back({std::move(module), std::move(invariant),
                       observed <= threshold, observed, threshold});
  }
  // Boolean property; observed counts violations.
  void holds(std::string module, std::string invariant, std::size_t violations) {
    at_most(std::move(module), std::move(invariant),
            static_cast<double>(violations), 0.0);
  }
  std::vector<SelfTestCheck> take() { return std::move(checks_); }

 private:
  std::vector<SelfTestCheck> checks_;
};

double naive_permanent(const Mat& a) {
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

Mat random_matrix(std::size_t n, Rng& rng) {
  Mat out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = 2.0 * uniform_open_closed(rng) - 1.0;
  return out;
}

double uniform_in(double lo, double hi, Rng& rng) {
  return lo + (hi - lo) * uniform_open_closed(rng);
}

void check_matrix_core(Recorder& rec, Rng& rng) {
  double worst = 0.0;
  std::size_t swap_violations = 0;
  for (std::size_t n : {4, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      Mat a = random_matrix(n, rng);
      worst = std::max(worst, std::abs(permanent(a) - naive_permanent(a)));
      Mat swapped = a;
      for (std::size_t c = 0; c < n; ++c) std::swap(swapped(0, c), swapped(n - 1, c));
      if (std::abs(permanent(swapped) - permanent(a)) > 1e-12) ++swap_violations;
    }
  }
  rec.at_most("matrix_core", "ryser_matches_permutation_sum", worst, 1e-10);
  rec.holds("matrix_core", "permanent_row_order_invariant", swap_violations);

  std::size_t not_orthogonal = 0;
  for (std::size_t m : kSizes) {
    const Generator g = build_generator(m);
    for (int trial = 0; trial < 5; ++trial) {
      const double theta = uniform_in(-std::numbers::pi, std::numbers::pi, rng);
      if (!is_orthogonal(matexp_series(g.matrix() * theta, 40), 1e-10)) ++not_orthogonal;
    }
  }
  rec.holds("matrix_core", "series_exp_of_generator_orthogonal", not_orthogonal);
}

void check_generator(Recorder& rec) {
  std::size_t invalid = 0;
  double row_norm_gap = 0.0;
  for (std::size_t m : {2, 4, 8, 16, 32}) {
    const Generator g = build_generator(m);
    if (!validate(g.matrix()).all()) ++invalid;
    for (std::size_t r = 0; r < m; ++r) {
      double sq = 0.0;
      for (double v : g.matrix().row(r)) sq += v * v;
      row_norm_gap = std::max(row_norm_gap, std::abs(std::sqrt(sq) - 1.0));
    }
  }
  rec.holds("generator", "built_generators_satisfy_A1_A2_A3", invalid);
  rec.at_most("generator", "rows_have_unit_norm", row_norm_gap, kAlgebraicTol);

  std::size_t accepted = 0;
  const double mag = 1.0 / std::sqrt(2.0);
  for (int pattern = 0; pattern < 8; ++pattern) {
    Mat y(3);
    const std::size_t upper[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int k = 0; k < 3; ++k) {
      const double v = (pattern >> k & 1) ? mag : -mag;
      y(upper[k][0], upper[k][1]) = v;
      y(upper[k][1], upper[k][0]) = -v;
    }
    if (validate(y).all()) ++accepted;
  }
  rec.holds("generator", "no_valid_3x3_sign_pattern", accepted);
}

void check_network(Recorder& rec, Rng& rng) {
  double series_gap = 0.0;
  std::size_t not_orthogonal = 0;
  std::size_t not_hadamard = 0;
  for (std::size_t m : kSizes) {
    const Generator g = build_generator(m);
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = uniform_in(-std::numbers::pi, std::numbers::pi, rng);
      const MHDNetwork net(g, theta);
      if (!is_orthogonal(net.matrix())) ++not_orthogonal;
      series_gap = std::max(
          series_gap, max_abs_diff(net.matrix(), matexp_series(g.matrix() * theta, 40)));
    }
    if (!hadamard_check(MHDNetwork(g, theta_dip(m)))) ++not_hadamard;
  }
  rec.holds("network", "closed_form_orthogonal", not_orthogonal);
  rec.at_most("network", "closed_form_matches_series", series_gap, 1e-10);
  rec.holds("network", "skew_hadamard_at_dip", not_hadamard);
}

void check_two_photon(Recorder& rec) {
  double norm_gap = 0.0;
  double invariance_gap = 0.0;
  double closed_gap = 0.0;
  double symmetry_gap = 0.0;
  double cross_zero = 0.0;
  for (std::size_t m : kSizes) {
    const Generator g = build_generator(m);
    const GroupingTable groups(g);
    const double dip = theta_dip(m);
    for (int k = 0; k < 25; ++k) {
      const double theta = dip * k / 24.0;
      const MHDNetwork net(g, theta);
      const double closed = closed_form_pAB(m, theta);
      std::optional<double> first;
      for (const InputPair& in : groups.inputs()) {
        const TwoPhotonDistribution dist(net, in);
        norm_gap = std::max(norm_gap, std::abs(dist.total() - 1.0));
        const GroupStatistics s = group_statistics(dist, groups.at(in));
        if (!first) first = s.p_ab;
        invariance_gap = std::max(invariance_gap, std::abs(s.p_ab - *first));
        closed_gap = std::max(closed_gap, std::abs(s.p_ab - closed));
        symmetry_gap = std::max(symmetry_gap, std::abs(s.p_a2 - s.p_b2));
      }
    }
    const MHDNetwork at_dip(g, dip);
    for (const InputPair& in : groups.inputs()) {
      const DetectorGrouping& grp = groups.at(in);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
          if (grp[a] != grp[b])
            cross_zero = std::max(cross_zero,
                                  outcome_probability(at_dip, in, OutputOutcome(a, b)));
    }
  }
  rec.at_most("two_photon_stats", "normalization", norm_gap, kAlgebraicTol);
  rec.at_most("two_photon_stats", "input_invariance", invariance_gap, kAlgebraicTol);
  rec.at_most("two_photon_stats", "brute_force_matches_closed_form", closed_gap,
              kAlgebraicTol);
  rec.at_most("two_photon_stats", "group_symmetry", symmetry_gap, kAlgebraicTol);
  rec.at_most("two_photon_stats", "cross_group_zeros_at_dip", cross_zero, kAlgebraicTol);

  double bunching_gap = 0.0;
  std::size_t not_decreasing = 0;
  double round_trip = 0.0;
  for (std::size_t m : kSizes) {
    const double dip = theta_dip(m);
    for (int k = 0; k <= 100; ++k) {
      const double theta = dip * k / 100.0;
      bunching_gap = std::max(bunching_gap,
                              std::abs(closed_form_pA2_appendix(m, theta) -
                                       (1.0 - closed_form_pAB(m, theta)) / 2.0));
    }
    for (int k = 1; k <= 50; ++k) {
      const double theta = dip * k / 51.0;
      if (!(pAB_derivative(m, theta) < 0.0)) ++not_decreasing;
      round_trip = std::max(
          round_trip, std::abs(map_phi_to_theta(m, map_theta_to_phi(m, theta)) - theta));
    }
  }
  rec.at_most("two_photon_stats", "pA2_closed_form_matches_complement", bunching_gap,
              kAlgebraicTol);
  rec.holds("two_photon_stats", "strictly_decreasing_on_window", not_decreasing);
  rec.at_most("two_photon_stats", "theta_phi_round_trip", round_trip, 1e-8);
}

void check_scattershot(Recorder& rec) {
  double ratio_gap = 0.0;
  for (std::size_t n = 2; n <= 40; n += 2) {
    for (double chi : {0.1, 0.3, 0.5, 0.8}) {
      const SourceParams p(n, chi);
      ratio_gap = std::max(ratio_gap, std::abs(success_D(p) / success_L(p) -
                                               static_cast<double>(n - 1)));
    }
  }
  rec.at_most("scattershot", "D_over_L_is_n_minus_1", ratio_gap, kAlgebraicTol);

  std::size_t bad_crossings = 0;
  for (double chi : {0.3, 0.5, 0.8}) {
    const std::size_t first_above =
        static_cast<std::size_t>(std::floor(crossover_n(chi))) + 1;
    const auto hi = static_cast<std::size_t>(4.0 / (chi * chi)) + 2;
    for (std::size_t n = 2; n <= std::max(hi, first_above + 1); ++n) {
      const SourceParams p(n, chi);
      const double d = success_D(p);
      const double lp = success_Lprime(p);
      const bool d_wins = d > lp * (1.0 + 1e-12);
      if (d_wins != (n >= first_above)) ++bad_crossings;
    }
  }
  rec.holds("scattershot", "single_crossover_above_2_over_chi2_plus_1", bad_crossings);

  const SourceParams p(4, 0.3);
  Rng rng(20260101);
  const std::uint64_t trials = 1'000'000;
  std::uint64_t heralds = 0;
  for (std::uint64_t t = 0; t < trials; ++t)
    if (sample_input(p, rng)) ++heralds;
  const double expected = success_D(p);
  const double rate = static_cast<double>(heralds) / static_cast<double>(trials);
  rec.at_most("scattershot", "herald_rate_relative_error", std::abs(rate / expected - 1.0),
              0.05);

  const Generator g = build_generator(4);
  const auto first = run_experiment(g, 0.4, p, 20'000, 42, 2);
  const auto second = run_experiment(g, 0.4, p, 20'000, 42, 2);
  rec.holds("scattershot", "experiment_reproducible_for_seed", first == second ? 0 : 1);
}

void check_decomposition(Recorder& rec, Rng& rng) {
  double round_trip = 0.0;
  std::size_t too_many_steps = 0;
  double det_gap = 0.0;
  for (std::size_t m : kSizes) {
    const Generator g = build_generator(m);
    for (int trial = 0; trial < 10; ++trial) {
      const MHDNetwork net(g, uniform_in(-std::numbers::pi, std::numbers::pi, rng));
      const CircuitPlan plan = decompose(net);
      round_trip = std::max(round_trip, max_abs_diff(recompose(plan), net.matrix()));
      if (plan.steps.size() > m * (m - 1) / 2) ++too_many_steps;
      for (const TwoLevelStep& s : plan.steps) {
        const Mat b = beam_splitter_block(s.eta);
        det_gap = std::max(det_gap, std::abs(b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0) + 1.0));
      }
    }
  }
  rec.at_most("decomposition", "recompose_round_trip", round_trip, 1e-10);
  rec.holds("decomposition", "step_count_bound", too_many_steps);
  rec.at_most("decomposition", "beam_splitter_det_minus_one", det_gap, kAlgebraicTol);

  std::size_t eta_out_of_range = 0;
  std::size_t reference_failures = 0;
  const double dip = theta_dip(4);
  for (int k = 0; k <= 100; ++k) {
    for (double eta : d4_reference_etas(dip * k / 100.0))
      if (eta < 0.0 || eta > 1.0) ++eta_out_of_range;
  }
  for (int k = 0; k <= 20; ++k)
    if (!verify_d4_reference(dip * k / 20.0)) ++reference_failures;
  rec.holds("decomposition", "reference_etas_in_unit_interval", eta_out_of_range);
  rec.holds("decomposition", "pinned_d4_layout_reproduces_network", reference_failures);
}

void check_cli_tables(Recorder& rec) {
  double sum_gap = 0.0;
  for (std::size_t m : {2, 4, 8}) {
    for (const ProfileRow& row : compute_profile(m, parse_theta_grid("0:dip:11", m)))
      sum_gap = std::max(sum_gap, std::abs(row.p_ab + row.p_a2 + row.p_b2 - 1.0));
  }
  rec.at_most("cli", "profile_rows_sum_to_one", sum_gap, kAlgebraicTol);
}

}  // namespace

std::vector<SelfTestCheck> run_selftest() {
  Recorder rec;
  Rng rng(7);
  check_matrix_core(rec, rng);
  check_generator(rec);
  check_network(rec, rng);
  check_two_photon(rec);
  check_scattershot(rec);
  check_decomposition(rec, rng);
  check_cli_tables(rec);
  return rec.take();
}

}  // namespace mhd
