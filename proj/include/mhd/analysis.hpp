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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhd/network.hpp"

namespace mhd {

/// Parses "start:end:count" where start and end are radians or the token
/// "dip" (theta_dip(m)). Points are evenly spaced, endpoints included
/// exactly. Throws std::invalid_argument on malformed input.
std::vector<double> parse_theta_grid(std::string_view spec, std::size_t m);

/// One theta of the A/B number statistics. phi_equivalent is the matching
/// beam-splitter angle, NaN outside [0, theta_dip].
struct ProfileRow {
  double theta;
  double p_ab;
  double p_a2;
  double p_b2;
  double phi_equivalent;
};

/// Brute-force statistics for `input`, or, without one, for every input
/// pair after checking they agree to 1e-10 (InternalError otherwise).
std::vector<ProfileRow> compute_profile(std::size_t m, const std::vector<double>& thetas,
                                        std::optional<InputPair> input = std::nullopt);

struct ResourceRow {
  std::size_t n;
  double chi;
  double p_d;
  double p_l;  // NaN for odd n
  double p_lprime;
  std::string best;  // "D", "L" or "Lprime"
};

/// Success probabilities for n in [n_lo, n_hi]. Ties (relative 1e-12) go to
/// D, then L.
std::vector<ResourceRow> compute_resources(std::size_t n_lo, std::size_t n_hi,
                                           double chi);

}  // namespace mhd
