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

#ifndef OPCONS_TOOLS_CLI_HPP
#define OPCONS_TOOLS_CLI_HPP

#include "opcons/numlab.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace opcons::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kBinding = 3,
  kDomain = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the operator is read from `in` when --expr is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// "NAME=p/q" or "NAME=p". Throws ParseError on malformed input.
std::pair<std::string, Rational> parse_binding(std::string_view text);

/// Built-in operators exercised by the verify command.
struct CorpusEntry {
  std::string name;
  std::string expr;
  std::string expected_kind;
  std::string expected_constant;
};

const std::vector<CorpusEntry>& verify_corpus();

}  // namespace opcons::cli

#endif  // OPCONS_TOOLS_CLI_HPP
