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

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mhd/analysis.hpp"
#include "mhd/decomposition.hpp"
#include "mhd/generator.hpp"
#include "mhd/matrix.hpp"
#include "mhd/scattershot.hpp"

// File formats shared by the CLI. Mode indices written to or read from these
// files are 1-based; everything inside the library is 0-based.

namespace mhd::io {

using nlohmann::json;

/// {"m": int, "rows": [[real, ...], ...]}
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

/// {"A1": bool, "A2": bool, "A3": bool, "square_is_minus_identity": bool}
json report_to_json(const ValidationReport& r);
ValidationReport report_from_json(const json& j);

/// {"m", "theta", "steps": [{"p", "q", "eta", "phase_pi"}, ...],
///  "residual_phases": [+-1, ...], "recompose_error": real}
/// recompose_error is the max-abs gap between recompose(plan) and `target`.
json plan_to_json(const CircuitPlan& plan, const Mat& target);
CircuitPlan plan_from_json(const json& j);

/// Every ExperimentRecord field plus "analytic" and "empirical" blocks with
/// the closed-form herald rate and A/B probabilities for comparison.
json record_to_json(const ExperimentRecord& record);
ExperimentRecord record_from_json(const json& j);

/// Shortest decimal text that parses back to the same double ("%.17g").
std::string format_real(double v);

void write_profile_csv(std::ostream& os, const std::vector<ProfileRow>& rows);
std::vector<ProfileRow> read_profile_csv(std::istream& is);

void write_resources_csv(std::ostream& os, const std::vector<ResourceRow>& rows);
std::vector<ResourceRow> read_resources_csv(std::istream& is);

}  // namespace mhd::io
