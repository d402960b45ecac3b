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

#include "mhd/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mhd/errors.hpp"
#include "mhd/generator.hpp"
#include "mhd/scattershot.hpp"
#include "mhd/two_photon.hpp"

namespace mhd {

namespace {

constexpr double kInvarianceTol = 1e-10;
constexpr double kTieTol = 1e-12;

double parse_angle(std::string_view token, std::size_t m) {
  if (token == "dip") return theta_dip(m);
  std::string s(token);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad angle '" + s + "' in theta grid");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad angle '" + s + "' in theta grid");
  }
  return v;
}

}  // namespace

std::vector<double> parse_theta_grid(std::string_view spec, std::size_t m) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
      spec.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument("theta grid must look like start:end:count");
  }
  const double start = parse_angle(spec.substr(0, c1), m);
  const double end = parse_angle(spec.substr(c1 + 1, c2 - c1 - 1), m);
  const std::string count_text(spec.substr(c2 + 1));
  std::size_t used = 0;
  long long count = 0;
  try {
    count = std::stoll(count_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != count_text.size() || count < 1) {
    throw std::invalid_argument("theta grid count must be a positive integer");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = count == 1 ? start
                        : start + (end - start) * static_cast<double>(k) /
                                      static_cast<double>(count - 1);
  }
  if (count > 1) out.back() = end;
  return out;
}

std::vector<ProfileRow> compute_profile(std::size_t m, const std::vector<double>& thetas,
                                        std::optional<InputPair> input) {
  const Generator g = build_generator(m);
  const GroupingTable groups(g);
  const double dip = theta_dip(m);
  std::vector<InputPair> inputs =
      input ? std::vector<InputPair>{*input} : groups.inputs();
  if (input && input->second >= m) {
    throw IndexError("input mode out of range for " + std::to_string(m) + " modes");
  }

  std::vector<ProfileRow> rows;
  rows.reserve(thetas.size());
  for (double theta : thetas) {
    const MHDNetwork net(g, theta);
    std::optional<GroupStatistics> first;
    for (const InputPair& in : inputs) {
      const GroupStatistics stats =
          group_statistics(TwoPhotonDistribution(net, in), groups.at(in));
      if (!first) {
        first = stats;
        continue;
      }
      const double gap = std::max({std::abs(stats.p_ab - first->p_ab),
                                   std::abs(stats.p_a2 - first->p_a2),
                                   std::abs(stats.p_b2 - first->p_b2)});
      if (gap > kInvarianceTol) {
        throw InternalError("input invariance violated at theta = " +
                            std::to_string(theta) + ": gap " + std::to_string(gap));
      }
    }
    const double phi = (theta >= 0.0 && theta <= dip)
                           ? map_theta_to_phi(m, theta)
                           : std::numeric_limits<double>::quiet_NaN();
    rows.push_back({theta, first->p_ab, first->p_a2, first->p_b2, phi});
  }
  return rows;
}

std::vector<ResourceRow> compute_resources(std::size_t n_lo, std::size_t n_hi,
                                           double chi) {
  if (!(chi > 0.0 && chi < 1.0)) throw DomainError("chi must lie in (0, 1)");
  if (n_lo < 2 || n_hi < n_lo) {
    throw std::invalid_argument("crystal range must satisfy 2 <= lo <= hi");
  }
  std::vector<ResourceRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const SourceParams params(n, chi);
    ResourceRow row{n, chi, success_D(params),
                    n % 2 == 0 ? success_L(params)
                               : std::numeric_limits<double>::quiet_NaN(),
                    success_Lprime(params), "D"};
    const auto beats = [](double challenger, double holder) {
      return challenger > holder * (1.0 + kTieTol);
    };
    double best = row.p_d;
    if (!std::isnan(row.p_l) && beats(row.p_l, best)) {
      best = row.p_l;
      row.best = "L";
    }
    if (beats(row.p_lprime, best)) row.best = "Lprime";
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mhd
