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
#include <map>
#include <vector>

#include "mhd/generator.hpp"
#include "mhd/network.hpp"

namespace mhd {

/// Detected output modes a <= b; a == b means both photons in one mode.
struct OutputOutcome {
  std::size_t a;
  std::size_t b;

  /// Throws std::invalid_argument unless a <= b.
  OutputOutcome(std::size_t a, std::size_t b);

  bool operator==(const OutputOutcome&) const = default;
  auto operator<=>(const OutputOutcome&) const = default;
};

/// Number of two-photon outcomes on m modes, m(m+1)/2.
constexpr std::size_t outcome_count(std::size_t m) { return m * (m + 1) / 2; }

/// Position of an outcome in the dense (a, b) lexicographic order.
std::size_t outcome_index(const OutputOutcome& out, std::size_t m);
OutputOutcome outcome_at(std::size_t index, std::size_t m);

/// |perm(rows (a,b), cols (i,j))|^2, halved when a == b.
double outcome_probability(const MHDNetwork& net, const InputPair& input,
                           const OutputOutcome& out);

/// Dense distribution over all m(m+1)/2 outcomes for one input.
class TwoPhotonDistribution {
 public:
  TwoPhotonDistribution(const MHDNetwork& net, const InputPair& input);

  std::size_t modes() const { return m_; }
  const InputPair& input() const { return input_; }
  double theta() const { return theta_; }
  const std::vector<double>& probabilities() const { return probs_; }
  double operator[](const OutputOutcome& out) const {
    return probs_[outcome_index(out, m_)];
  }
  double total() const;

 private:
  std::size_t m_;
  InputPair input_;
  double theta_;
  std::vector<double> probs_;
};

enum class Group : std::uint8_t { A, B };

/// Split of output detectors into two equal groups for one input pair.
/// Construction enforces m/2 labels per group and that the two input
/// modes land in different groups.
class DetectorGrouping {
 public:
  DetectorGrouping(InputPair input, std::vector<Group> labels);

  const InputPair& input() const { return input_; }
  const std::vector<Group>& labels() const { return labels_; }
  Group operator[](std::size_t mode) const { return labels_[mode]; }
  std::size_t modes() const { return labels_.size(); }

 private:
  InputPair input_;
  std::vector<Group> labels_;
};

/// sign(c_i * c_j) over the columns of D(theta_dip): +1 -> A, -1 -> B.
/// The same grouping is used at every theta.
DetectorGrouping grouping(const Generator& g, const InputPair& input);

/// Groupings for every input pair of one generator, computed once up front
/// and read-only afterwards.
class GroupingTable {
 public:
  explicit GroupingTable(const Generator& g);

  const DetectorGrouping& at(const InputPair& input) const;
  const std::vector<InputPair>& inputs() const { return inputs_; }

 private:
  std::vector<InputPair> inputs_;
  std::map<InputPair, DetectorGrouping> table_;
};

/// All input pairs (i < j) on m modes, in lexicographic order.
std::vector<InputPair> all_inputs(std::size_t m);

/// Sum over the (m/2)^2 cross-group outcomes.
double coincidence_probability(const MHDNetwork& net, const InputPair& input,
                               const DetectorGrouping& grp);

/// Sum over all outcomes with both photons inside `group`, bunched
/// outcomes included with their 1/2 factor.
double bunching_probability(const MHDNetwork& net, const InputPair& input,
                            const DetectorGrouping& grp, Group group);

struct GroupStatistics {
  double p_ab = 0.0;
  double p_a2 = 0.0;
  double p_b2 = 0.0;
};

/// P(AB), P(A^2), P(B^2) from one pass over a distribution.
GroupStatistics group_statistics(const TwoPhotonDistribution& dist,
                                 const DetectorGrouping& grp);

/// (m-2)(cos sin/sqrt(m-1) - sin^2/(m-1))^2 + (cos^2 - sin^2/(m-1))^2,
/// the same for every input pair.
double closed_form_pAB(std::size_t m, double theta);

/// Direct bunching sum: (m-2)/(2(m-1)) sin^4 + (m-2)/(m-1)^{3/2} cos sin^3
/// + (m+2)/(2(m-1)) cos^2 sin^2. Equals (1 - P(AB))/2.
double closed_form_pA2_appendix(std::size_t m, double theta);

/// d/dtheta of closed_form_pAB, differentiated by hand.
double pAB_derivative(std::size_t m, double theta);

/// Beam-splitter angle phi in [0, pi/4] with cos^2(2 phi) = P_m(AB; theta).
/// Bisection; theta must lie in [0, theta_dip(m)], else DomainError.
double map_theta_to_phi(std::size_t m, double theta);

/// Inverse of map_theta_to_phi: theta in [0, theta_dip(m)] for phi in [0, pi/4].
double map_phi_to_theta(std::size_t m, double phi);

/// Output pairs p < q whose permanent vanishes (|perm| <= 1e-12) at theta_dip.
std::size_t zero_permanent_count(const Generator& g, const InputPair& input);

}  // namespace mhd
