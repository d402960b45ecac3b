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

#include "mhd/two_photon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mhd/errors.hpp"

namespace mhd {

OutputOutcome::OutputOutcome(std::size_t a_in, std::size_t b_in) : a(a_in), b(b_in) {
  if (a > b) {
    throw std::invalid_argument("output outcome needs a <= b, got (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

std::size_t outcome_index(const OutputOutcome& out, std::size_t m) {
  if (out.b >= m) throw IndexError("output mode out of range");
  // Row a of the upper triangle starts after sum_{r<a} (m - r) entries.
  const std::size_t row_start = out.a * m - (out.a * (out.a + 1)) / 2 + out.a;
  return row_start + (out.b - out.a);
}

OutputOutcome outcome_at(std::size_t index, std::size_t m) {
  if (index >= outcome_count(m)) throw IndexError("outcome index out of range");
  std::size_t a = 0;
  while (index >= m - a) {
    index -= m - a;
    ++a;
  }
  return OutputOutcome(a, a + index);
}

namespace {

void check_input(const InputPair& input, std::size_t m) {
  if (input.second >= m) {
    throw IndexError("input mode " + std::to_string(input.second) +
                     " out of range for " + std::to_string(m) + "-mode network");
  }
}

void check_grouping(const InputPair& input, const DetectorGrouping& grp,
                    std::size_t m) {
  if (!(grp.input() == input) || grp.modes() != m) {
    throw ConfigurationError("detector grouping was derived for a different "
                             "input pair or network size");
  }
}

double amplitude(const Mat& d, std::size_t a, std::size_t b, const InputPair& in) {
  return d(a, in.first) * d(b, in.second) + d(a, in.second) * d(b, in.first);
}

}  // namespace

double outcome_probability(const MHDNetwork& net, const InputPair& input,
                           const OutputOutcome& out) {
  const std::size_t m = net.modes();
  check_input(input, m);
  const double amp =
      permanent(submatrix(net, out.a, out.b, input.first, input.second));
  const double p = amp * amp;
  return out.a == out.b ? 0.5 * p : p;
}

TwoPhotonDistribution::TwoPhotonDistribution(const MHDNetwork& net,
                                             const InputPair& input)
    : m_(net.modes()), input_(input), theta_(net.theta()) {
  check_input(input, m_);
  probs_.reserve(outcome_count(m_));
  const Mat& d = net.matrix();
  for (std::size_t a = 0; a < m_; ++a) {
    for (std::size_t b = a; b < m_; ++b) {
      const double amp = amplitude(d, a, b, input);
      probs_.push_back(a == b ? 0.5 * amp * amp : amp * amp);
    }
  }
}

double TwoPhotonDistribution::total() const {
  double sum = 0.0;
  for (double p : probs_) sum += p;
  return sum;
}

DetectorGrouping::DetectorGrouping(InputPair input, std::vector<Group> labels)
    : input_(input), labels_(std::move(labels)) {
  const std::size_t m = labels_.size();
  if (m < 2 || m % 2 != 0) {
    throw ConfigurationError("detector grouping needs an even mode count");
  }
  if (input_.second >= m) throw IndexError("grouping input mode out of range");
  std::size_t in_a = 0;
  for (Group g : labels_) in_a += (g == Group::A) ? 1 : 0;
  if (in_a != m / 2) {
    throw ConfigurationError("degenerate grouping: " + std::to_string(in_a) +
                             " of " + std::to_string(m) + " detectors in group A");
  }
  if (labels_[input_.first] == labels_[input_.second]) {
    throw ConfigurationError("degenerate grouping: input modes share a group");
  }
}

DetectorGrouping grouping(const Generator& g, const InputPair& input) {
  const std::size_t m = g.modes();
  check_input(input, m);
  const MHDNetwork dip(g, theta_dip(m));
  const Mat& d = dip.matrix();
  std::vector<Group> labels;
  labels.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    const double prod = d(r, input.first) * d(r, input.second);
    if (std::abs(prod) <= kAlgebraicTol) {
      throw ConfigurationError("degenerate grouping: zero product in output mode " +
                               std::to_string(r));
    }
    labels.push_back(prod > 0.0 ? Group::A : Group::B);
  }
  return DetectorGrouping(input, std::move(labels));
}

std::vector<InputPair> all_inputs(std::size_t m) {
  std::vector<InputPair> out;
  out.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) out.emplace_back(i, j);
  return out;
}

GroupingTable::GroupingTable(const Generator& g) : inputs_(all_inputs(g.modes())) {
  for (const InputPair& in : inputs_) table_.emplace(in, grouping(g, in));
}

const DetectorGrouping& GroupingTable::at(const InputPair& input) const {
  auto it = table_.find(input);
  if (it == table_.end()) throw IndexError("no grouping for requested input");
  return it->second;
}

double coincidence_probability(const MHDNetwork& net, const InputPair& input,
                               const DetectorGrouping& grp) {
  const std::size_t m = net.modes();
  check_input(input, m);
  check_grouping(input, grp, m);
  double sum = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    if (grp[a] != Group::A) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (grp[b] != Group::B) continue;
      sum += outcome_probability(net, input, OutputOutcome(std::min(a, b), std::max(a, b)));
    }
  }
  return sum;
}

double bunching_probability(const MHDNetwork& net, const InputPair& input,
                            const DetectorGrouping& grp, Group group) {
  const std::size_t m = net.modes();
  check_input(input, m);
  check_grouping(input, grp, m);
  double sum = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    if (grp[a] != group) continue;
    for (std::size_t b = a; b < m; ++b) {
      if (grp[b] != group) continue;
      sum += outcome_probability(net, input, OutputOutcome(a, b));
    }
  }
  return sum;
}

GroupStatistics group_statistics(const TwoPhotonDistribution& dist,
                                 const DetectorGrouping& grp) {
  const std::size_t m = dist.modes();
  check_grouping(dist.input(), grp, m);
  GroupStatistics stats;
  const auto& probs = dist.probabilities();
  std::size_t k = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b, ++k) {
      if (grp[a] != grp[b]) {
        stats.p_ab += probs[k];
      } else if (grp[a] == Group::A) {
        stats.p_a2 += probs[k];
      } else {
        stats.p_b2 += probs[k];
      }
    }
  }
  return stats;
}

namespace {

void check_modes(std::size_t m) {
  if (m < 2) throw SizeError("closed forms need m >= 2");
}

}  // namespace

double closed_form_pAB(std::size_t m, double theta) {
  check_modes(m);
  const double k = static_cast<double>(m - 1);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cross = c * s / std::sqrt(k) - s * s / k;
  const double direct = c * c - s * s / k;
  return static_cast<double>(m - 2) * cross * cross + direct * direct;
}

double closed_form_pA2_appendix(std::size_t m, double theta) {
  check_modes(m);
  const double md = static_cast<double>(m);
  const double k = md - 1.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double s2 = s * s;
  return (md - 2.0) / (2.0 * k) * s2 * s2 +
         (md - 2.0) / (k * std::sqrt(k)) * c * s * s2 +
         (md + 2.0) / (2.0 * k) * c * c * s2;
}

double pAB_derivative(std::size_t m, double theta) {
  check_modes(m);
  const double k = static_cast<double>(m - 1);
  const double rk = std::sqrt(k);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cross = c * s / rk - s * s / k;
  const double direct = c * c - s * s / k;
  const double d_cross = std::cos(2.0 * theta) / rk - std::sin(2.0 * theta) / k;
  const double d_direct = -std::sin(2.0 * theta) * (1.0 + 1.0 / k);
  return 2.0 * static_cast<double>(m - 2) * cross * d_cross +
         2.0 * direct * d_direct;
}

namespace {

constexpr int kBisectionIterations = 200;

// Coincidence level and its complement; bisection compares whichever is
// below 1/2.
struct Level {
  double coincidence;  // P(AB)
  double complement;   // 1 - P(AB)
};

Level mhd_level(std::size_t m, double theta) {
  return {closed_form_pAB(m, theta), 2.0 * closed_form_pA2_appendix(m, theta)};
}

Level beam_splitter_level(double phi) {
  const double c = std::cos(2.0 * phi);
  const double s = std::sin(2.0 * phi);
  return {c * c, s * s};
}

// True when `probe` has a larger coincidence level than `target`.
bool above(const Level& probe, const Level& target) {
  if (target.coincidence <= 0.5) return probe.coincidence > target.coincidence;
  return probe.complement < target.complement;
}

// Both profiles decrease monotonically in their argument.
template <typename Profile>
double bisect(Profile profile, const Level& target, double lo, double hi) {
  for (int it = 0; it < kBisectionIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (above(profile(mid), target)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double map_theta_to_phi(std::size_t m, double theta) {
  const double dip = theta_dip(m);
  if (!(theta >= 0.0 && theta <= dip)) {
    throw DomainError("theta must lie in [0, theta_dip(" + std::to_string(m) +
                      ")] = [0, " + std::to_string(dip) + "]");
  }
  if (theta == 0.0) return 0.0;
  if (theta == dip) return std::numbers::pi / 4.0;
  return bisect(beam_splitter_level, mhd_level(m, theta), 0.0, std::numbers::pi / 4.0);
}

double map_phi_to_theta(std::size_t m, double phi) {
  const double dip = theta_dip(m);
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 4.0)) {
    throw DomainError("phi must lie in [0, pi/4]");
  }
  if (phi == 0.0) return 0.0;
  if (phi == std::numbers::pi / 4.0) return dip;
  return bisect([m](double t) { return mhd_level(m, t); }, beam_splitter_level(phi),
                0.0, dip);
}

std::size_t zero_permanent_count(const Generator& g, const InputPair& input) {
  const std::size_t m = g.modes();
  check_input(input, m);
  const MHDNetwork dip(g, theta_dip(m));
  std::size_t zeros = 0;
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p + 1; q < m; ++q) {
      const double perm = permanent(submatrix(dip, p, q, input.first, input.second));
      if (std::abs(perm) <= kAlgebraicTol) ++zeros;
    }
  }
  return zeros;
}

}  // namespace mhd
