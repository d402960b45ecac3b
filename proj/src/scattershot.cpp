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

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "mhd/errors.hpp"

namespace mhd {

SourceParams::SourceParams(std::size_t n_in, double chi_in) : n(n_in), chi(chi_in) {
  if (n < 1) throw ConfigurationError("source needs at least one crystal");
  if (!(chi >= 0.0 && chi < 1.0)) {
    throw DomainError("squeezing chi must lie in [0, 1), got " + std::to_string(chi));
  }
}

namespace {

double vacuum_weight(const SourceParams& p) {
  return std::pow(1.0 - p.chi * p.chi, static_cast<double>(p.n));
}

void require_at_least_two(const SourceParams& p) {
  if (p.n < 2) {
    throw ConfigurationError("two-photon input needs at least two crystals");
  }
}

}  // namespace

double herald_two_probability(const SourceParams& params, std::size_t i,
                              std::size_t j) {
  if (i == j) throw ConfigurationError("heralded photons must sit in distinct crystals");
  if (i >= params.n || j >= params.n) {
    throw ConfigurationError("crystal index out of range for " +
                             std::to_string(params.n) + " crystals");
  }
  const double chi2 = params.chi * params.chi;
  return vacuum_weight(params) * chi2 * chi2;
}

double success_D(const SourceParams& params) {
  require_at_least_two(params);
  const double chi2 = params.chi * params.chi;
  const double n = static_cast<double>(params.n);
  return vacuum_weight(params) * chi2 * chi2 * n * (n - 1.0) / 2.0;
}

double success_L(const SourceParams& params) {
  require_at_least_two(params);
  if (params.n % 2 != 0) {
    throw ConfigurationError("a beam-splitter array needs an even crystal count");
  }
  const double chi2 = params.chi * params.chi;
  return vacuum_weight(params) * chi2 * chi2 * static_cast<double>(params.n) / 2.0;
}

double success_Lprime(const SourceParams& params) {
  const double chi2 = params.chi * params.chi;
  return vacuum_weight(params) * chi2 * static_cast<double>(params.n);
}

double crossover_n(double chi) {
  if (!(chi > 0.0 && chi <= 1.0)) {
    throw DomainError("crossover diverges unless 0 < chi <= 1");
  }
  return 2.0 / (chi * chi) + 1.0;
}

double uniform_open_closed(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::size_t sample_pair_number(double chi, Rng& rng) {
  const double u = uniform_open_closed(rng);
  if (chi == 0.0) return 0;
  // P(p >= k) = chi^(2k), so p = floor(log u / log chi^2).
  return static_cast<std::size_t>(std::floor(std::log(u) / std::log(chi * chi)));
}

PulseResult sample_pulse(const SourceParams& params, Rng& rng) {
  std::size_t total = 0;
  std::size_t fired = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  bool doubled_crystal = false;
  for (std::size_t q = 0; q < params.n; ++q) {
    const std::size_t pairs = sample_pair_number(params.chi, rng);
    if (pairs == 0) continue;
    total += pairs;
    if (pairs > 1) doubled_crystal = true;
    if (fired == 0) first = q;
    if (fired == 1) second = q;
    ++fired;
  }
  if (total == 0) return {PulseKind::kVacuum, std::nullopt};
  if (total == 1) return {PulseKind::kSingle, std::nullopt};
  if (total == 2 && !doubled_crystal) {
    return {PulseKind::kHerald, InputPair(first, second)};
  }
  return {PulseKind::kMultiPhoton, std::nullopt};
}

std::optional<InputPair> sample_input(const SourceParams& params, Rng& rng) {
  return sample_pulse(params, rng).input;
}

std::uint64_t ExperimentRecord::total_coincidences() const {
  std::uint64_t sum = 0;
  for (const auto& t : tallies) sum += t.coincidences;
  return sum;
}

std::uint64_t ExperimentRecord::total_bunched_a() const {
  std::uint64_t sum = 0;
  for (const auto& t : tallies) sum += t.bunched_a;
  return sum;
}

std::uint64_t ExperimentRecord::total_bunched_b() const {
  std::uint64_t sum = 0;
  for (const auto& t : tallies) sum += t.bunched_b;
  return sum;
}

namespace {

// Cumulative table over outcomes. Probabilities at or below the null
// threshold are dropped so interference zeros are never drawn.
struct OutcomeSampler {
  std::vector<double> cdf;

  explicit OutcomeSampler(const TwoPhotonDistribution& dist) {
    double acc = 0.0;
    cdf.reserve(dist.probabilities().size());
    for (double p : dist.probabilities()) {
      if (p > kAlgebraicTol) acc += p;
      cdf.push_back(acc);
    }
  }

  std::size_t draw(Rng& rng) const {
    const double target = (1.0 - uniform_open_closed(rng)) * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
    return static_cast<std::size_t>(it - cdf.begin());
  }
};

struct WorkerTally {
  std::uint64_t heralds = 0;
  std::uint64_t rejected = 0;
  std::vector<std::vector<std::uint64_t>> counts;  // [input][outcome]
};

Rng worker_rng(std::uint64_t seed, std::size_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker)};
  return Rng(seq);
}

std::size_t input_slot(const InputPair& in, std::size_t m) {
  // Lexicographic position among pairs i < j.
  return in.first * m - in.first * (in.first + 1) / 2 + (in.second - in.first - 1);
}

}  // namespace

ExperimentRecord run_experiment(const Generator& g, double theta,
                                const SourceParams& params, std::uint64_t trials,
                                std::uint64_t seed, std::size_t workers) {
  const std::size_t m = g.modes();
  if (params.n != m) {
    throw ConfigurationError("source has " + std::to_string(params.n) +
                             " crystals but the network has " + std::to_string(m) +
                             " modes");
  }
  if (trials < 1) throw ConfigurationError("experiment needs at least one trial");
  if (workers < 1) throw ConfigurationError("experiment needs at least one worker");

  const MHDNetwork net(g, theta);
  const GroupingTable groups(g);
  const std::vector<InputPair>& inputs = groups.inputs();
  std::vector<OutcomeSampler> samplers;
  samplers.reserve(inputs.size());
  for (const InputPair& in : inputs) {
    samplers.emplace_back(TwoPhotonDistribution(net, in));
  }

  std::vector<WorkerTally> partial(workers);
  auto run_worker = [&](std::size_t w) {
    const std::uint64_t share =
        trials / workers + (w < trials % workers ? 1 : 0);
    Rng rng = worker_rng(seed, w);
    WorkerTally& tally = partial[w];
    tally.counts.assign(inputs.size(), std::vector<std::uint64_t>(outcome_count(m), 0));
    for (std::uint64_t t = 0; t < share; ++t) {
      const PulseResult pulse = sample_pulse(params, rng);
      if (pulse.kind == PulseKind::kMultiPhoton) ++tally.rejected;
      if (pulse.kind != PulseKind::kHerald) continue;
      ++tally.heralds;
      const std::size_t slot = input_slot(*pulse.input, m);
      ++tally.counts[slot][samplers[slot].draw(rng)];
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
  }

  ExperimentRecord record;
  record.seed = seed;
  record.workers = workers;
  record.n = params.n;
  record.chi = params.chi;
  record.theta = theta;
  record.trials = trials;
  for (const InputPair& in : inputs) {
    InputTally tally{in, 0, std::vector<std::uint64_t>(outcome_count(m), 0), 0, 0, 0};
    record.tallies.push_back(std::move(tally));
  }
  for (const WorkerTally& w : partial) {
    record.herald_successes += w.heralds;
    record.rejected_multiphoton += w.rejected;
    for (std::size_t s = 0; s < inputs.size(); ++s)
      for (std::size_t k = 0; k < w.counts[s].size(); ++k)
        record.tallies[s].outcome_counts[k] += w.counts[s][k];
  }
  for (InputTally& t : record.tallies) {
    const DetectorGrouping& grp = groups.at(t.input);
    for (std::size_t k = 0; k < t.outcome_counts.size(); ++k) {
      const std::uint64_t c = t.outcome_counts[k];
      const OutputOutcome out = outcome_at(k, m);
      t.heralds += c;
      if (grp[out.a] != grp[out.b]) {
        t.coincidences += c;
      } else if (grp[out.a] == Group::A) {
        t.bunched_a += c;
      } else {
        t.bunched_b += c;
      }
    }
  }
  return record;
}

}  // namespace mhd
