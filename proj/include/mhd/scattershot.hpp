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
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mhd/generator.hpp"
#include "mhd/network.hpp"
#include "mhd/two_photon.hpp"

namespace mhd {

/// n squeezer crystals sharing squeezing chi in [0, 1).
struct SourceParams {
  std::size_t n;
  double chi;

  SourceParams(std::size_t n, double chi);
};

/// Probability of heralding exactly one pair in crystals i and j and nothing
/// elsewhere: (1 - chi^2)^n chi^4. Requires i != j, both < n.
double herald_two_probability(const SourceParams& params, std::size_t i,
                              std::size_t j);

/// Heralded two-photon input accepted anywhere among the n modes of D_n:
/// (1 - chi^2)^n chi^4 n(n-1)/2.
double success_D(const SourceParams& params);

/// n/2 separate beam splitters, each needing its own two ports:
/// (1 - chi^2)^n chi^4 n/2. n must be even.
double success_L(const SourceParams& params);

/// Both arms of each crystal feed one beam splitter (unheralded):
/// (1 - chi^2)^n chi^2 n.
double success_Lprime(const SourceParams& params);

/// 2/chi^2 + 1. Above this many crystals success_D beats success_Lprime.
double crossover_n(double chi);

using Rng = std::mt19937_64;

/// Uniform double in (0, 1], built from the top 53 bits of one draw.
double uniform_open_closed(Rng& rng);

/// Pair count emitted by one crystal: P(p) = (1 - chi^2) chi^(2p),
/// sampled by inverting the geometric CDF.
std::size_t sample_pair_number(double chi, Rng& rng);

enum class PulseKind : std::uint8_t {
  kVacuum,       // no crystal fired
  kSingle,       // one pair in total
  kHerald,       // one pair in each of two distinct crystals
  kMultiPhoton,  // more than two heralds, or two pairs from one crystal
};

struct PulseResult {
  PulseKind kind;
  std::optional<InputPair> input;
};

/// One pump pulse across all n crystals.
PulseResult sample_pulse(const SourceParams& params, Rng& rng);

/// The accepted input pair, or nullopt when the pulse is not a clean
/// two-photon herald.
std::optional<InputPair> sample_input(const SourceParams& params, Rng& rng);

struct InputTally {
  InputPair input;
  std::uint64_t heralds = 0;
  std::vector<std::uint64_t> outcome_counts;  // dense, outcome_index order
  std::uint64_t coincidences = 0;             // one photon in A, one in B
  std::uint64_t bunched_a = 0;
  std::uint64_t bunched_b = 0;

  bool operator==(const InputTally&) const = default;
};

struct ExperimentRecord {
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t n = 0;
  double chi = 0.0;
  double theta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t herald_successes = 0;
  std::uint64_t rejected_multiphoton = 0;
  std::vector<InputTally> tallies;  // one per input pair, lexicographic

  std::uint64_t total_coincidences() const;
  std::uint64_t total_bunched_a() const;
  std::uint64_t total_bunched_b() const;
  bool operator==(const ExperimentRecord&) const = default;
};

/// Pulses the source `trials` times; every clean herald is pushed through
/// D(theta) by sampling the exact two-photon distribution. Trials are split
/// across `workers` threads, each with its own stream seeded from
/// (seed, worker index), so (seed, workers) fixes the record bit for bit.
ExperimentRecord run_experiment(const Generator& g, double theta,
                                const SourceParams& params, std::uint64_t trials,
                                std::uint64_t seed, std::size_t workers = 1);

}  // namespace mhd
