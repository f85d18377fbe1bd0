/*
   Copyright 2026 The opcons Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// CLI invocations whose JSON output is pinned under tests/golden/.
// Set OPCONS_UPDATE_GOLDEN=1 to rewrite the files from the current build.

#ifndef OPCONS_TESTS_GOLDEN_CASES_HPP
#define OPCONS_TESTS_GOLDEN_CASES_HPP

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace opcons::testing {

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"classify_momentum.json", {"classify", "--expr", "-i*hbar*D1", "--json"}},
      {"classify_master.json", {"classify", "--expr", "A - i*B*D1 + B*D2", "--json"}},
      {"reduce_high_order.json", {"reduce", "--expr", "A + i*B*D3 - B*D4 + 2*E(1)*D5", "--json"}},
      {"expect_numeric.json",
       {"expect", "--expr", "A - i*E(1)*D1 + E(1)*D2", "--numeric", "--bind", "A=3/2", "--json"}},
      {"expect_oscillating.json", {"expect", "--expr", "E(3)", "--json"}},
      {"probe_delta.json",
       {"probe", "--expr", "A", "--delta", "D1", "--numeric", "--bind", "A=1/2", "--json"}},
      {"probe_family.json",
       {"probe", "--expr", "A*D2", "--trials", "25", "--seed", "7", "--family-only", "--bind", "A=2", "--json"}},
      {"solve_case_2_pointwise.json", {"solve-case", "--k", "2", "--mode", "pointwise", "--json"}},
      {"solve_case_3_integral.json", {"solve-case", "--k", "3", "--mode", "integral", "--json"}},
      {"solve_case_6_integral.json", {"solve-case", "--k", "6", "--mode", "integral", "--json"}},
      {"phys_beta.json", {"phys", "--expr", "-i*hbar*D1", "--var", "x", "--const", "hbar", "--json"}},
      {"phys_gamma.json", {"phys", "--expr", "A*D2", "--json"}},
  };
  return cases;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

inline std::string golden_path(const std::string& file) { return std::string(OPCONS_GOLDEN_DIR) + "/" + file; }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

inline bool update_golden() {
  const char* v = std::getenv("OPCONS_UPDATE_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace opcons::testing

#endif  // OPCONS_TESTS_GOLDEN_CASES_HPP
