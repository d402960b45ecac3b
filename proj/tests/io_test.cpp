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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "mhd/errors.hpp"
#include "mhd/two_photon.hpp"

using namespace mhd;
using mhd::io::json;

TEST(FormatReal, round_trips_bits) {
  for (double v : {0.0, -0.0, 1.0 / 3.0, 1e-300, 6.02214076e23, std::numbers::pi}) {
    EXPECT_EQ(std::stod(io::format_real(v)), v);
  }
}

TEST(MatrixJson, round_trip) {
  const Mat d = MHDNetwork(build_generator(4), 0.7).matrix();
  const json j = io::matrix_to_json(d);
  EXPECT_EQ(j.at("m"), 4);
  EXPECT_EQ(j.at("rows").size(), 4u);
  EXPECT_EQ(io::matrix_from_json(json::parse(j.dump())), d);
}

TEST(MatrixJson, rejects_bad_shapes) {
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"m":2,"rows":[[1,0]]})")), SizeError);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"({"m":2,"rows":[[1,0],[0]]})")),
               SizeError);
  EXPECT_ANY_THROW(io::matrix_from_json(json::parse(R"({"rows":[[1]]})")));
}

TEST(ReportJson, round_trip) {
  const ValidationReport r{true, false, true, false};
  const json j = io::report_to_json(r);
  EXPECT_EQ(j.at("A1"), true);
  EXPECT_EQ(j.at("A2"), false);
  const ValidationReport back = io::report_from_json(j);
  EXPECT_EQ(back.skew_symmetric, r.skew_symmetric);
  EXPECT_EQ(back.equal_magnitude, r.equal_magnitude);
  EXPECT_EQ(back.orthogonal, r.orthogonal);
  EXPECT_EQ(back.square_is_minus_identity, r.square_is_minus_identity);
}

TEST(PlanJson, one_based_round_trip) {
  const CircuitPlan plan = d4_reference_plan(0.9);
  const Mat target = MHDNetwork(build_generator(4), 0.9).matrix();
  const json j = io::plan_to_json(plan, target);
  EXPECT_EQ(j.at("steps").at(0).at("p"), 1);
  EXPECT_EQ(j.at("steps").at(5).at("q"), 4);
  EXPECT_LE(j.at("recompose_error").get<double>(), 1e-9);
  const CircuitPlan back = io::plan_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.m, plan.m);
  EXPECT_EQ(back.theta, plan.theta);
  EXPECT_EQ(back.steps, plan.steps);
  EXPECT_EQ(back.residual_phases, plan.residual_phases);
}

TEST(PlanJson, zero_mode_index_rejected) {
  json j = io::plan_to_json(d4_reference_plan(0.9), Mat::identity(4));
  j["steps"][0]["p"] = 0;
  EXPECT_THROW(io::plan_from_json(j), std::invalid_argument);
}

TEST(RecordJson, round_trip) {
  const ExperimentRecord r =
      run_experiment(build_generator(4), 0.5, SourceParams(4, 0.4), 50000, 42, 2);
  const json j = io::record_to_json(r);
  EXPECT_EQ(j.at("seed"), 42);
  EXPECT_TRUE(j.contains("analytic"));
  EXPECT_TRUE(j.contains("empirical"));
  EXPECT_NEAR(j.at("analytic").at("p_AB").get<double>(), closed_form_pAB(4, 0.5), 1e-15);
  const auto& first = j.at("tallies").at(0);
  EXPECT_EQ(first.at("input"), json::array({1, 2}));
  for (const auto& c : first.at("outcome_counts")) {
    EXPECT_GE(c.at("outcome").at(0).get<int>(), 1);
    EXPECT_GT(c.at("count").get<int>(), 0);
  }
  EXPECT_EQ(io::record_from_json(json::parse(j.dump())), r);
}

TEST(ProfileCsv, round_trip_with_nan) {
  const std::vector<ProfileRow> rows{{0.0, 1.0, 0.0, 0.0, 0.0},
                                     {0.3, 0.6, 0.2, 0.2, 0.25},
                                     {1.2, 0.1, 0.45, 0.45, std::nan("")}};
  std::stringstream ss;
  io::write_profile_csv(ss, rows);
  EXPECT_EQ(ss.str().substr(0, 35), "theta,p_AB,p_A2,p_B2,phi_equivalent");
  const auto back = io::read_profile_csv(ss);
  ASSERT_EQ(back.size(), 3u);
  EXPECT_EQ(back[1].p_a2, 0.2);
  EXPECT_EQ(back[1].phi_equivalent, 0.25);
  EXPECT_TRUE(std::isnan(back[2].phi_equivalent));
  std::stringstream bad("theta,p_AB,p_A2,p_B2,phi_equivalent\n1,2,3\n");
  EXPECT_THROW(io::read_profile_csv(bad), std::invalid_argument);
}

TEST(ResourcesCsv, round_trip) {
  const auto rows = compute_resources(2, 11, 0.5);
  std::stringstream ss;
  io::write_resources_csv(ss, rows);
  std::string first;
  std::getline(ss, first);
  EXPECT_EQ(first, "# crossover_n = 9");
  ss.seekg(0);
  const auto back = io::read_resources_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(back[k].n, rows[k].n);
    EXPECT_EQ(back[k].p_d, rows[k].p_d);
    EXPECT_EQ(std::isnan(back[k].p_l), std::isnan(rows[k].p_l));
    EXPECT_EQ(back[k].best, rows[k].best);
  }
}
