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

// mhd: command-line front end for building multimode HOM networks and
// reproducing their two-photon statistics.
//
// Mode indices on the command line and in emitted files are 1-based.
// Exit codes: 0 success, 1 user error, 2 internal invariant failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mhd/analysis.hpp"
#include "mhd/decomposition.hpp"
#include "mhd/errors.hpp"
#include "mhd/generator.hpp"
#include "mhd/io.hpp"
#include "mhd/network.hpp"
#include "mhd/scattershot.hpp"
#include "mhd/selftest.hpp"
#include "mhd/two_photon.hpp"

namespace {

constexpr int kUserError = 1;
constexpr int kInternalError = 2;

struct GlobalOptions {
  std::string out;
  std::uint64_t seed = 42;
  double tol = mhd::kAlgebraicTol;
};

void emit(const GlobalOptions& opts, const std::string& text) {
  if (opts.out.empty() || opts.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out);
  if (!file) throw std::invalid_argument("cannot open '" + opts.out + "' for writing");
  file << text;
}

double parse_theta(const std::string& text, std::size_t m) {
  if (text == "dip") return mhd::theta_dip(m);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("theta must be a number of radians or 'dip'");
  }
  return v;
}

mhd::InputPair parse_input(const std::string& text, std::size_t m) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--input expects i,j");
  const long i = std::stol(text.substr(0, comma));
  const long j = std::stol(text.substr(comma + 1));
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > m ||
      static_cast<std::size_t>(j) > m || i == j) {
    throw std::invalid_argument("--input needs two distinct modes in 1.." +
                                std::to_string(m));
  }
  return mhd::InputPair(static_cast<std::size_t>(std::min(i, j) - 1),
                        static_cast<std::size_t>(std::max(i, j) - 1));
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto n = std::stoul(text);
    return {n, n};
  }
  return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::string dump(const mhd::io::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multimode HOM device simulator (mode indices are 1-based)"};
  app.require_subcommand(1);
  GlobalOptions opts;
  app.add_option("--out", opts.out, "Output file (default: stdout)");
  app.add_option("--seed", opts.seed, "RNG seed for experiments");
  app.add_option("--tol", opts.tol, "Tolerance for validation checks");

  std::size_t m = 4;
  std::string theta_text = "dip";
  std::string in_path;
  std::string input_text;
  std::string grid_text = "0:dip:101";
  double chi = 0.3;
  std::uint64_t trials = 1'000'000;
  std::size_t workers = 1;
  std::string n_range = "2:12";

  auto* gen = app.add_subcommand("gen", "Write the generator Y_m as matrix JSON");
  gen->add_option("--m", m, "Mode count (power of two >= 2)")->required();

  auto* val = app.add_subcommand("validate", "Check a matrix JSON against A1-A3");
  val->add_option("--in", in_path, "Matrix JSON file")->required();

  auto* net = app.add_subcommand("net", "Write D_m(theta) as matrix JSON");
  net->add_option("--m", m, "Mode count (power of two >= 2)")->required();
  net->add_option("--theta", theta_text, "Radians, or 'dip'");

  auto* stats = app.add_subcommand(
      "stats", "CSV profile: theta, p_AB, p_A2, p_B2, phi_equivalent");
  stats->add_option("--m", m, "Mode count (power of two >= 2)")->required();
  stats->add_option("--input", input_text,
                    "Input modes i,j (1-based); omit to check every pair");
  stats->add_option("--theta-grid", grid_text, "start:end:count, 'dip' allowed");

  auto* exp = app.add_subcommand("experiment", "Seeded scattershot Monte Carlo run");
  exp->add_option("--m", m, "Mode count = crystal count")->required();
  exp->add_option("--theta", theta_text, "Radians, or 'dip'");
  exp->add_option("--chi", chi, "Squeezing parameter in [0, 1)");
  exp->add_option("--trials", trials, "Pump pulses");
  exp->add_option("--workers", workers, "Worker threads (part of the seed contract)");

  auto* res = app.add_subcommand("resources", "CSV of source success probabilities");
  res->add_option("--n", n_range, "Crystal range lo:hi");
  res->add_option("--chi", chi, "Squeezing parameter in (0, 1)")->required();

  auto* dec = app.add_subcommand("decompose", "Two-level beam-splitter plan as JSON");
  dec->add_option("--m", m, "Mode count (power of two >= 2)")->required();
  dec->add_option("--theta", theta_text, "Radians, or 'dip'");

  auto* self = app.add_subcommand("selftest", "Run every invariant check");

  for (auto* sub : {gen, val, net, stats, exp, res, dec, self}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUserError;
  }

  try {
    if (*gen) {
      emit(opts, dump(mhd::io::matrix_to_json(mhd::build_generator(m).matrix())));
    } else if (*val) {
      const auto j = mhd::io::json::parse(read_file(in_path));
      emit(opts, dump(mhd::io::report_to_json(
                     mhd::validate(mhd::io::matrix_from_json(j), opts.tol))));
    } else if (*net) {
      const mhd::MHDNetwork network(mhd::build_generator(m), parse_theta(theta_text, m));
      emit(opts, dump(mhd::io::matrix_to_json(network.matrix())));
    } else if (*stats) {
      std::optional<mhd::InputPair> input;
      if (!input_text.empty()) input = parse_input(input_text, m);
      const auto rows =
          mhd::compute_profile(m, mhd::parse_theta_grid(grid_text, m), input);
      std::ostringstream os;
      mhd::io::write_profile_csv(os, rows);
      emit(opts, os.str());
    } else if (*exp) {
      const auto record =
          mhd::run_experiment(mhd::build_generator(m), parse_theta(theta_text, m),
                              mhd::SourceParams(m, chi), trials, opts.seed, workers);
      emit(opts, dump(mhd::io::record_to_json(record)));
    } else if (*res) {
      const auto [lo, hi] = parse_range(n_range);
      std::ostringstream os;
      mhd::io::write_resources_csv(os, mhd::compute_resources(lo, hi, chi));
      emit(opts, os.str());
    } else if (*dec) {
      const mhd::MHDNetwork network(mhd::build_generator(m), parse_theta(theta_text, m));
      emit(opts, dump(mhd::io::plan_to_json(mhd::decompose(network), network.matrix())));
    } else if (*self) {
      std::ostringstream os;
      bool ok = true;
      for (const auto& c : mhd::run_selftest()) {
        ok = ok && c.passed;
        os << (c.passed ? "PASS " : "FAIL ") << c.module << '/' << c.invariant
           << " observed=" << mhd::io::format_real(c.observed)
           << " bound=" << mhd::io::format_real(c.threshold) << '\n';
      }
      os << (ok ? "selftest: all checks passed\n" : "selftest: FAILED\n");
      emit(opts, os.str());
      return ok ? 0 : kInternalError;
    }
  } catch (const mhd::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUserError;
  }
  return 0;
}
