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

#include "mhd/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mhd/errors.hpp"
#include "mhd/generator.hpp"

namespace mhd {

namespace {

constexpr double kEliminationZero = 1e-13;
constexpr double kOrthogonalityTol = 1e-10;
constexpr double kReferenceTol = 1e-9;

}  // namespace

Mat beam_splitter_block(double eta) {
  const double t = std::sqrt(1.0 - eta);
  const double r = std::sqrt(eta);
  return Mat{{t, r}, {r, -t}};
}

Mat step_block(const TwoLevelStep& step) {
  Mat block = beam_splitter_block(step.eta);
  if (step.phase_pi) {
    block(1, 0) = -block(1, 0);
    block(1, 1) = -block(1, 1);
  }
  return block;
}

CircuitPlan decompose(const Mat& u, double theta) {
  const std::size_t m = u.size();
  if (!is_orthogonal(u, kOrthogonalityTol)) {
    throw ConfigurationError("decomposition needs an orthogonal matrix");
  }
  CircuitPlan plan;
  plan.m = m;
  plan.theta = theta;
  Mat work = u;
  for (std::size_t c = 0; c + 1 < m; ++c) {
    for (std::size_t r = c + 1; r < m; ++r) {
      const double a = work(c, c);
      const double b = work(r, c);
      if (std::abs(b) <= kEliminationZero) {
        plan.steps.push_back({c, r, 0.0, true});
        continue;
      }
      // Flip row r first when needed so the ratio stays in [0, 1] and the
      // pivot keeps the sign of a.
      const bool flip = (a == 0.0) ? (b < 0.0) : (a * b < 0.0);
      const double eta = std::clamp(b * b / (a * a + b * b), 0.0, 1.0);
      const double t = std::sqrt(1.0 - eta);
      const double s = std::sqrt(eta);
      for (std::size_t k = 0; k < m; ++k) {
        const double x = work(c, k);
        const double y = flip ? -work(r, k) : work(r, k);
        work(c, k) = t * x + s * y;
        work(r, k) = s * x - t * y;
      }
      work(r, c) = 0.0;
      plan.steps.push_back({c, r, eta, flip});
    }
  }
  plan.residual_phases.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    plan.residual_phases[i] = work(i, i) < 0.0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) {
      const double expected = (i == j) ? plan.residual_phases[i] : 0.0;
      if (std::abs(work(i, j) - expected) > kOrthogonalityTol) {
        throw ConfigurationError("elimination left a non-diagonal remainder");
      }
    }
  }
  return plan;
}

CircuitPlan decompose(const MHDNetwork& net) {
  return decompose(net.matrix(), net.theta());
}

Mat recompose(const CircuitPlan& plan) {
  const std::size_t m = plan.m;
  if (plan.residual_phases.size() != m) {
    throw SizeError("plan needs one residual phase per mode");
  }
  Mat out = Mat::identity(m);
  for (const TwoLevelStep& step : plan.steps) {
    if (step.p >= step.q || step.q >= m) {
      throw IndexError("step modes (" + std::to_string(step.p) + ", " +
                       std::to_string(step.q) + ") invalid for " +
                       std::to_string(m) + " modes");
    }
    if (!(step.eta >= 0.0 && step.eta <= 1.0)) {
      throw std::invalid_argument("step transmission ratio outside [0, 1]");
    }
    // Right-multiply by the embedded block: only columns p and q change.
    const Mat block = step_block(step);
    for (std::size_t r = 0; r < m; ++r) {
      const double x = out(r, step.p);
      const double y = out(r, step.q);
      out(r, step.p) = x * block(0, 0) + y * block(1, 0);
      out(r, step.q) = x * block(0, 1) + y * block(1, 1);
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    const int phase = plan.residual_phases[c];
    if (phase != 1 && phase != -1) {
      throw std::invalid_argument("residual phases must be +1 or -1");
    }
    if (phase == -1)
      for (std::size_t r = 0; r < m; ++r) out(r, c) = -out(r, c);
  }
  return out;
}

std::array<double, 3> d4_reference_etas(double theta) {
  const double s2 = std::sin(theta) * std::sin(theta);
  const double c2t = std::cos(2.0 * theta);
  return {s2 / (2.0 + c2t), 2.0 * s2 / (5.0 + c2t), s2 / 3.0};
}

CircuitPlan d4_reference_plan(double theta) {
  const auto [eta1, eta2, eta3] = d4_reference_etas(theta);
  CircuitPlan plan;
  plan.m = 4;
  plan.theta = theta;
  plan.steps = {
      {0, 1, eta1, true},  {0, 2, eta2, true}, {0, 3, eta3, true},
      {1, 2, eta3, false}, {1, 3, eta2, true}, {2, 3, eta1, true},
  };
  plan.residual_phases = {1, 1, -1, 1};
  return plan;
}

bool verify_d4_reference(double theta) {
  const MHDNetwork net(build_generator(4), theta);
  return max_abs_diff(recompose(d4_reference_plan(theta)), net.matrix()) <=
         kReferenceTol;
}

}  // namespace mhd
