// Copyright 2026 The sally-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SALLYLAB_TOOLS_CLI_HPP_
#define SALLYLAB_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sallylab/ambient.hpp"
#include "sallylab/ideal.hpp"
#include "sallylab/sally.hpp"

namespace sallylab::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitStrictInequality = 1,
  kExitParseError = 2,
  kExitHypothesisFailure = 3,
  kExitInternalInconsistency = 4,
};

struct InputDocument {
  AmbientAlgebra ambient = AmbientAlgebra::Polynomial(2);
  std::vector<Monomial> ideal;
  std::optional<std::vector<Monomial>> reduction;
  bool assume_integrally_closed = false;
  bool assume_rr_closed = false;
  std::optional<int> n;
  std::optional<int> cap;
  bool json = false;
};

// Throws Error(kParseError) naming the offending field, e.g. "ideal[2][1]".
InputDocument ParseInputDocument(const nlohmann::json& doc);

struct Invocation {
  std::string command;
  std::string target;  // theorem id for `verify`, example for `paper-examples`
  std::optional<std::string> in_file;
  bool json = false;
  std::optional<int> n;
  std::optional<int> cap;
  bool expect_equality = false;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<int> m;
  std::optional<int> d;
  std::optional<std::string> fixture;
  bool assume_integrally_closed = false;
  bool assume_rr_closed = false;
};

nlohmann::json ToJson(const Monomial& m);
nlohmann::json ToJson(const std::vector<Monomial>& ms);
nlohmann::json ToJson(const VerifierReport& report);
nlohmann::json ToJson(const DepthInterval& depth);

// Runs one command. `input` is read when the command needs an input document
// and no --in file is given. Output goes to `out`, diagnostics to `err`.
int Run(const Invocation& invocation, std::istream& input, std::ostream& out,
        std::ostream& err);

// argv front end: parses flags with CLI11 and calls Run.
int Main(int argc, char** argv, std::istream& input, std::ostream& out,
         std::ostream& err);

}  // namespace sallylab::cli

#endif  // SALLYLAB_TOOLS_CLI_HPP_
