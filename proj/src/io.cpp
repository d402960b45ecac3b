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

#include "mhd/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mhd/errors.hpp"
#include "mhd/two_photon.hpp"

namespace mhd::io {

namespace {

std::size_t to_zero_based(const json& j) {
  const auto v = j.get<long long>();
  if (v < 1) throw std::invalid_argument("mode indices in files are 1-based");
  return static_cast<std::size_t>(v - 1);
}

double parse_real(const std::string& field) {
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw std::invalid_argument("bad number '" + field + "'");
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    auto row = m.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return {{"m", m.size()}, {"rows", rows}};
}

Mat matrix_from_json(const json& j) {
  const auto n = j.at("m").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != n) {
    throw SizeError("matrix JSON: expected " + std::to_string(n) + " rows");
  }
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw SizeError("matrix JSON: every row needs " + std::to_string(n) + " entries");
    }
    for (const auto& v : row) entries.push_back(v.get<double>());
  }
  return Mat(n, std::move(entries));
}

json report_to_json(const ValidationReport& r) {
  return {{"A1", r.skew_symmetric},
          {"A2", r.equal_magnitude},
          {"A3", r.orthogonal},
          {"square_is_minus_identity", r.square_is_minus_identity}};
}

ValidationReport report_from_json(const json& j) {
  ValidationReport r;
  r.skew_symmetric = j.at("A1").get<bool>();
  r.equal_magnitude = j.at("A2").get<bool>();
  r.orthogonal = j.at("A3").get<bool>();
  r.square_is_minus_identity = j.at("square_is_minus_identity").get<bool>();
  return r;
}

json plan_to_json(const CircuitPlan& plan, const Mat& target) {
  json steps = json::array();
  for (const TwoLevelStep& s : plan.steps) {
    steps.push_back(
        {{"p", s.p + 1}, {"q", s.q + 1}, {"eta", s.eta}, {"phase_pi", s.phase_pi}});
  }
  const double error = max_abs_diff(recompose(plan), target);
  return {{"m", plan.m},
          {"theta", plan.theta},
          {"steps", steps},
          {"residual_phases", plan.residual_phases},
          {"recompose_error", error}};
}

CircuitPlan plan_from_json(const json& j) {
  CircuitPlan plan;
  plan.m = j.at("m").get<std::size_t>();
  plan.theta = j.at("theta").get<double>();
  for (const auto& s : j.at("steps")) {
    plan.steps.push_back({to_zero_based(s.at("p")), to_zero_based(s.at("q")),
                          s.at("eta").get<double>(), s.at("phase_pi").get<bool>()});
  }
  plan.residual_phases = j.at("residual_phases").get<std::vector<int>>();
  return plan;
}

json record_to_json(const ExperimentRecord& record) {
  const std::size_t m = record.n;
  json tallies = json::array();
  for (const InputTally& t : record.tallies) {
    json counts = json::array();
    for (std::size_t k = 0; k < t.outcome_counts.size(); ++k) {
      if (t.outcome_counts[k] == 0) continue;
      const OutputOutcome out = outcome_at(k, m);
      counts.push_back({{"outcome", {out.a + 1, out.b + 1}},
                        {"count", t.outcome_counts[k]}});
    }
    tallies.push_back({{"input", {t.input.first + 1, t.input.second + 1}},
                       {"heralds", t.heralds},
                       {"coincidences", t.coincidences},
                       {"bunched_A", t.bunched_a},
                       {"bunched_B", t.bunched_b},
                       {"outcome_counts", counts}});
  }

  const SourceParams params(record.n, record.chi);
  const double p_ab = closed_form_pAB(m, record.theta);
  json analytic = {{"herald_rate", success_D(params)},
                   {"p_AB", p_ab},
                   {"p_A2", (1.0 - p_ab) / 2.0},
                   {"p_B2", (1.0 - p_ab) / 2.0}};
  const double heralds = static_cast<double>(record.herald_successes);
  const auto frac = [&](std::uint64_t c) {
    return heralds > 0 ? static_cast<double>(c) / heralds : std::nan("");
  };
  json empirical = {
      {"herald_rate", heralds / static_cast<double>(record.trials)},
      {"p_AB", frac(record.total_coincidences())},
      {"p_A2", frac(record.total_bunched_a())},
      {"p_B2", frac(record.total_bunched_b())}};

  return {{"seed", record.seed},
          {"workers", record.workers},
          {"params", {{"n", record.n}, {"chi", record.chi}}},
          {"theta", record.theta},
          {"trials", record.trials},
          {"herald_successes", record.herald_successes},
          {"rejected_multiphoton", record.rejected_multiphoton},
          {"tallies", tallies},
          {"analytic", analytic},
          {"empirical", empirical}};
}

ExperimentRecord record_from_json(const json& j) {
  ExperimentRecord r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.workers = j.at("workers").get<std::size_t>();
  r.n = j.at("params").at("n").get<std::size_t>();
  r.chi = j.at("params").at("chi").get<double>();
  r.theta = j.at("theta").get<double>();
  r.trials = j.at("trials").get<std::uint64_t>();
  r.herald_successes = j.at("herald_successes").get<std::uint64_t>();
  r.rejected_multiphoton = j.at("rejected_multiphoton").get<std::uint64_t>();
  const std::size_t m = r.n;
  for (const auto& t : j.at("tallies")) {
    const auto& in = t.at("input");
    InputTally tally{InputPair(to_zero_based(in.at(0)), to_zero_based(in.at(1))),
                     t.at("heralds").get<std::uint64_t>(),
                     std::vector<std::uint64_t>(outcome_count(m), 0),
                     t.at("coincidences").get<std::uint64_t>(),
                     t.at("bunched_A").get<std::uint64_t>(),
                     t.at("bunched_B").get<std::uint64_t>()};
    for (const auto& c : t.at("outcome_counts")) {
      const auto& out = c.at("outcome");
      const OutputOutcome o(to_zero_based(out.at(0)), to_zero_based(out.at(1)));
      tally.outcome_counts[outcome_index(o, m)] = c.at("count").get<std::uint64_t>();
    }
    r.tallies.push_back(std::move(tally));
  }
  return r;
}

void write_profile_csv(std::ostream& os, const std::vector<ProfileRow>& rows) {
  os << "theta,p_AB,p_A2,p_B2,phi_equivalent\n";
  for (const ProfileRow& r : rows) {
    os << format_real(r.theta) << ',' << format_real(r.p_ab) << ','
       << format_real(r.p_a2) << ',' << format_real(r.p_b2) << ','
       << format_real(r.phi_equivalent) << '\n';
  }
}

std::vector<ProfileRow> read_profile_csv(std::istream& is) {
  std::vector<ProfileRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 5) throw std::invalid_argument("profile row needs 5 fields");
    rows.push_back({parse_real(f[0]), parse_real(f[1]), parse_real(f[2]),
                    parse_real(f[3]), parse_real(f[4])});
  }
  return rows;
}

void write_resources_csv(std::ostream& os, const std::vector<ResourceRow>& rows) {
  if (!rows.empty()) {
    os << "# crossover_n = " << format_real(crossover_n(rows.front().chi)) << '\n';
  }
  os << "n,chi,p_D,p_L,p_Lprime,best_architecture\n";
  for (const ResourceRow& r : rows) {
    os << r.n << ',' << format_real(r.chi) << ',' << format_real(r.p_d) << ','
       << format_real(r.p_l) << ',' << format_real(r.p_lprime) << ',' << r.best
       << '\n';
  }
}

std::vector<ResourceRow> read_resources_csv(std::istream& is) {
  std::vector<ResourceRow> rows;
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split_csv(line);
    if (f.size() != 6) throw std::invalid_argument("resource row needs 6 fields");
    rows.push_back({static_cast<std::size_t>(std::stoull(f[0])), parse_real(f[1]),
                    parse_real(f[2]), parse_real(f[3]), parse_real(f[4]), f[5]});
  }
  return rows;
}

}  // namespace mhd::io
