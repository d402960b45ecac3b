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

#include <array>
#include <cstddef>
#include <vector>

#include "mhd/matrix.hpp"
#include "mhd/network.hpp"

namespace mhd {

/// Beam splitter on modes p < q with transmission ratio eta, block
///   [[sqrt(1-eta), sqrt(eta)], [sqrt(eta), -sqrt(1-eta)]]
/// followed, when phase_pi is set, by a pi phase shift on mode q.
struct TwoLevelStep {
  std::size_t p;
  std::size_t q;
  double eta;
  bool phase_pi;

  bool operator==(const TwoLevelStep&) const = default;
};

/// D = T_1 T_2 ... T_k diag(residual_phases), with T_s the m x m embedding of
/// step s. Steps are listed in elimination order.
struct CircuitPlan {
  std::size_t m = 0;
  double theta = 0.0;
  std::vector<TwoLevelStep> steps;
  std::vector<int> residual_phases;  // each +1 or -1
};

/// The 2x2 beam-splitter block of a step, without its phase.
Mat beam_splitter_block(double eta);

/// The 2x2 block of a step including the pi phase.
Mat step_block(const TwoLevelStep& step);

/// Column-by-column two-level elimination: column 0 rows 1..m-1 top to
/// bottom, then column 1, and so on, always pivoting on the diagonal row.
/// Entries with |x| <= 1e-13 still get an explicit identity step (eta = 0
/// with the pi phase), so every plan has exactly m(m-1)/2 steps.
/// Throws ConfigurationError for a non-orthogonal matrix.
CircuitPlan decompose(const Mat& u, double theta = 0.0);
CircuitPlan decompose(const MHDNetwork& net);

/// Multiplies the embedded steps and residual phases back together.
/// Throws IndexError for steps outside the m modes.
Mat recompose(const CircuitPlan& plan);

/// (eta_1, eta_2, eta_3) = (sin^2/(2 + cos 2t), 2 sin^2/(5 + cos 2t), sin^2/3).
std::array<double, 3> d4_reference_etas(double theta);

/// Hard-coded D_4 circuit that uses only the three reference ratios:
///
///   pair   (1,2)  (1,3)  (1,4)  (2,3)  (2,4)  (3,4)    [1-based modes]
///   eta    eta_1  eta_2  eta_3  eta_3  eta_2  eta_1
///   pi     yes    yes    yes    no     yes    yes
///
/// with residual phases (+1, +1, -1, +1). It coincides with decompose() of
/// the 4-mode network for theta in (0, theta_dip(4)].
CircuitPlan d4_reference_plan(double theta);

/// recompose(d4_reference_plan(theta)) equals D_4(theta) within 1e-9.
bool verify_d4_reference(double theta);

}  // namespace mhd
