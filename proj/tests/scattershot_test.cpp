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

#include "mhd/scattershot.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mhd/errors.hpp"

using namespace mhd;

namespace {

constexpr double kPi = std::numbers::pi;

// Chi-squared critical value, 5 degrees of freedom, p = 0.001.
constexpr double kChi2Crit5 = 20.515;

}  // namespace

TEST(SourceParams, validation) {
  EXPECT_NO_THROW(SourceParams(1, 0.0));
  EXPECT_THROW(SourceParams(0, 0.3), ConfigurationError);
  EXPECT_THROW(SourceParams(4, 1.0), DomainError);
  EXPECT_THROW(SourceParams(4, -0.1), DomainError);
  EXPECT_THROW(SourceParams(4, std::nan("")), DomainError);
}

TEST(HeraldProbability, formula_and_errors) {
  const SourceParams p(4, 0.3);
  const double want = std::pow(1.0 - 0.09, 4) * std::pow(0.3, 4);
  EXPECT_NEAR(herald_two_probability(p, 0, 1), want, 1e-17);
  EXPECT_EQ(herald_two_probability(p, 0, 1), herald_two_probability(p, 3, 2));
  EXPECT_THROW(herald_two_probability(p, 2, 2), ConfigurationError);
  EXPECT_THROW(herald_two_probability(p, 0, 4), ConfigurationError);
}

TEST(SuccessProbabilities, worked_values) {
  const SourceParams p(4, 0.3);
  const double w = std::pow(0.91, 4);
  EXPECT_NEAR(success_D(p), w * 0.0081 * 6.0, 1e-16);
  EXPECT_NEAR(success_L(p), w * 0.0081 * 2.0, 1e-16);
  EXPECT_NEAR(success_Lprime(p), w * 0.09 * 4.0, 1e-16);
  EXPECT_NEAR(success_D(p), 6.0 * herald_two_probability(p, 0, 1), 1e-16);
  for (double chi : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(success_D(SourceParams(2, chi)), success_L(SourceParams(2, chi)), 1e-16);
  }
  EXPECT_EQ(success_D(SourceParams(8, 0.0)), 0.0);
}

TEST(SuccessProbabilities, d_over_l_is_n_minus_one) {
  for (std::size_t n = 2; n <= 64; n += 2) {
    for (double chi : {0.05, 0.3, 0.7}) {
      const SourceParams p(n, chi);
      EXPECT_NEAR(success_D(p) / success_L(p), static_cast<double>(n - 1), 1e-12 * n);
    }
  }
}

TEST(SuccessProbabilities, domain) {
  EXPECT_THROW(success_D(SourceParams(1, 0.3)), ConfigurationError);
  EXPECT_THROW(success_L(SourceParams(1, 0.3)), ConfigurationError);
  EXPECT_THROW(success_L(SourceParams(5, 0.3)), ConfigurationError);
  EXPECT_NO_THROW(success_Lprime(SourceParams(1, 0.3)));
}

TEST(Crossover, values) {
  EXPECT_DOUBLE_EQ(crossover_n(0.5), 9.0);
  EXPECT_DOUBLE_EQ(crossover_n(1.0), 3.0);
  EXPECT_NEAR(crossover_n(0.1), 201.0, 1e-9);
  EXPECT_THROW(crossover_n(0.0), DomainError);
  EXPECT_THROW(crossover_n(1.5), DomainError);
  EXPECT_THROW(crossover_n(-0.2), DomainError);
}

TEST(Crossover, single_sign_change) {
  for (double chi : {0.1, 0.3, 0.5, 0.8}) {
    const double x = crossover_n(chi);
    int changes = 0;
    double prev = 0.0;
    for (std::size_t n = 2; n <= 400; ++n) {
      const SourceParams p(n, chi);
      const double diff = success_D(p) - success_Lprime(p);
      const double scale = success_Lprime(p);
      const double nd = static_cast<double>(n);
      if (std::abs(nd - x) < 1e-9) {
        EXPECT_NEAR(diff / scale, 0.0, 1e-12);
        continue;
      }
      EXPECT_EQ(diff > 0.0, nd > x) << chi << " " << n;
      if (n > 2 && (diff > 0.0) != (prev > 0.0)) ++changes;
      prev = diff;
    }
    EXPECT_EQ(changes, 1) << chi;
  }
}

TEST(Sampling, uniform_open_closed_range) {
  Rng rng(7);
  double lo = 1.0;
  for (int k = 0; k < 100000; ++k) {
    const double u = uniform_open_closed(rng);
    ASSERT_GT(u, 0.0);
    ASSERT_LE(u, 1.0);
    lo = std::min(lo, u);
  }
  EXPECT_LT(lo, 1e-3);
}

TEST(Sampling, pair_number_is_geometric) {
  Rng rng(11);
  const double chi = 0.5;
  const int n = 400000;
  std::vector<int> hist(4, 0);
  double mean = 0.0;
  for (int k = 0; k < n; ++k) {
    const std::size_t p = sample_pair_number(chi, rng);
    mean += static_cast<double>(p);
    if (p < hist.size()) ++hist[p];
  }
  mean /= n;
  const double chi2 = chi * chi;
  EXPECT_NEAR(mean, chi2 / (1.0 - chi2), 0.01);
  for (std::size_t p = 0; p < hist.size(); ++p) {
    const double want = (1.0 - chi2) * std::pow(chi2, static_cast<double>(p));
    const double sigma = std::sqrt(want * (1.0 - want) / n);
    EXPECT_NEAR(hist[p] / static_cast<double>(n), want, 4.0 * sigma) << p;
  }
  Rng zero(3);
  for (int k = 0; k < 1000; ++k) ASSERT_EQ(sample_pair_number(0.0, zero), 0u);
}

TEST(Sampling, herald_rate_matches_success_D) {
  const SourceParams p(4, 0.3);
  Rng rng(42);
  const int n = 1000000;
  int heralds = 0;
  for (int k = 0; k < n; ++k) heralds += sample_input(p, rng).has_value();
  const double want = success_D(p);
  const double sigma = std::sqrt(want * (1.0 - want) / n);
  EXPECT_NEAR(heralds / static_cast<double>(n), want, 3.0 * sigma);
}

TEST(Sampling, no_heralds_without_squeezing) {
  const SourceParams p(8, 0.0);
  Rng rng(1);
  for (int k = 0; k < 10000; ++k) {
    const PulseResult r = sample_pulse(p, rng);
    ASSERT_EQ(r.kind, PulseKind::kVacuum);
    ASSERT_FALSE(r.input.has_value());
  }
}

TEST(Sampling, pulse_kinds_consistent) {
  const SourceParams p(4, 0.6);
  Rng rng(5);
  int multi = 0;
  for (int k = 0; k < 20000; ++k) {
    const PulseResult r = sample_pulse(p, rng);
    ASSERT_EQ(r.input.has_value(), r.kind == PulseKind::kHerald);
    if (r.input) ASSERT_LT(r.input->second, 4u);
    multi += r.kind == PulseKind::kMultiPhoton;
  }
  EXPECT_GT(multi, 0);
}

TEST(Sampling, heralded_inputs_uniform) {
  const SourceParams p(4, 0.3);
  const auto inputs = all_inputs(4);
  std::vector<double> counts(inputs.size(), 0.0);
  Rng rng(2024);
  double total = 0.0;
  for (int k = 0; k < 1000000; ++k) {
    const auto in = sample_input(p, rng);
    if (!in) continue;
    const auto it = std::find(inputs.begin(), inputs.end(), *in);
    ASSERT_NE(it, inputs.end());
    counts[static_cast<std::size_t>(it - inputs.begin())] += 1.0;
    total += 1.0;
  }
  const double expected = total / static_cast<double>(inputs.size());
  double stat = 0.0;
  for (double c : counts) stat += (c - expected) * (c - expected) / expected;
  EXPECT_LT(stat, kChi2Crit5);
}

TEST(Experiment, rejects_bad_configuration) {
  const Generator g = build_generator(4);
  EXPECT_THROW(run_experiment(g, 0.1, SourceParams(8, 0.3), 10, 1), ConfigurationError);
  EXPECT_THROW(run_experiment(g, 0.1, SourceParams(4, 0.3), 0, 1), ConfigurationError);
  EXPECT_THROW(run_experiment(g, 0.1, SourceParams(4, 0.3), 10, 1, 0), ConfigurationError);
}

TEST(Experiment, no_cross_group_counts_at_dip) {
  for (std::size_t m : {4, 8}) {
    const ExperimentRecord r =
        run_experiment(build_generator(m), theta_dip(m), SourceParams(m, 0.3), 200000, 42);
    EXPECT_GT(r.herald_successes, 1000u);
    EXPECT_EQ(r.total_coincidences(), 0u);
    EXPECT_EQ(r.total_bunched_a() + r.total_bunched_b(), r.herald_successes);
  }
}

TEST(Experiment, all_coincident_at_zero) {
  const ExperimentRecord r =
      run_experiment(build_generator(4), 0.0, SourceParams(4, 0.3), 200000, 7);
  EXPECT_GT(r.herald_successes, 0u);
  EXPECT_EQ(r.total_coincidences(), r.herald_successes);
}

TEST(Experiment, coincidence_rate_within_three_sigma) {
  const Generator g = build_generator(4);
  const double t = kPi / 6.0;
  const ExperimentRecord r = run_experiment(g, t, SourceParams(4, 0.3), 1000000, 42, 4);
  const double n = static_cast<double>(r.herald_successes);
  const double want = closed_form_pAB(4, t);
  const double sigma = std::sqrt(want * (1.0 - want) / n);
  EXPECT_NEAR(r.total_coincidences() / n, want, 3.0 * sigma);
  const double rate_sigma = std::sqrt(success_D(SourceParams(4, 0.3)) / 1e6);
  EXPECT_NEAR(n / 1e6, success_D(SourceParams(4, 0.3)), 3.0 * rate_sigma);
}

TEST(Experiment, tallies_are_consistent) {
  const ExperimentRecord r =
      run_experiment(build_generator(8), 0.4, SourceParams(8, 0.4), 100000, 9, 3);
  EXPECT_EQ(r.tallies.size(), 28u);
  std::uint64_t heralds = 0;
  for (const InputTally& t : r.tallies) {
    std::uint64_t sum = 0;
    for (std::uint64_t c : t.outcome_counts) sum += c;
    EXPECT_EQ(sum, t.heralds);
    EXPECT_EQ(t.coincidences + t.bunched_a + t.bunched_b, t.heralds);
    heralds += t.heralds;
  }
  EXPECT_EQ(heralds, r.herald_successes);
  EXPECT_LE(r.herald_successes + r.rejected_multiphoton, r.trials);
  EXPECT_EQ(r.trials, 100000u);
  EXPECT_EQ(r.workers, 3u);
}

TEST(Experiment, deterministic_for_seed_and_workers) {
  const Generator g = build_generator(4);
  const SourceParams p(4, 0.3);
  for (std::size_t w : {1, 2, 5}) {
    EXPECT_EQ(run_experiment(g, 0.3, p, 50001, 42, w), run_experiment(g, 0.3, p, 50001, 42, w));
  }
  EXPECT_NE(run_experiment(g, 0.3, p, 50000, 42), run_experiment(g, 0.3, p, 50000, 43));
}
