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

#ifndef SALLYLAB_TOOLS_PAPER_EXAMPLES_HPP_
#define SALLYLAB_TOOLS_PAPER_EXAMPLES_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sallylab/ideal.hpp"

namespace sallylab::cli {

struct ExamplePair {
  MonomialIdeal ideal;
  MonomialIdeal reduction;
};

// I = (X^7, X^6Y, X^5Y^2, X^2Y^5, XY^6, Y^7) with Q = (X^7, Y^7) in K[X, Y].
ExamplePair GapIdealExample();

// A = K[XY^i | 0 <= i <= 2s+1], I = (X, XY, ..., XY^s, XY^{2s+1}),
// Q = (X, XY^{2s+1}); exponents are (deg_X, deg_Y).
ExamplePair NormalDomainExample(int s);

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Builds the named example (ex2.7, ex3.7, ex3.8, lemma3.6, final) and
// compares it against its recorded constants.
std::vector<GoldenCheck> RunGoldenChecks(const Invocation& invocation);

// Prints the checks; exits kExitInternalInconsistency on any mismatch.
int RunPaperExamples(const Invocation& invocation, std::ostream& out,
                     std::ostream& err);

}  // namespace sallylab::cli

#endif  // SALLYLAB_TOOLS_PAPER_EXAMPLES_HPP_
