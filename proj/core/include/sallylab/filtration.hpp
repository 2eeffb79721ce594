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

#ifndef SALLYLAB_FILTRATION_HPP_
#define SALLYLAB_FILTRATION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sallylab/ideal.hpp"
#include "sallylab/sally.hpp"

namespace sallylab {

// One exact sequence 0 -> (R/p)(-t) -> M^{i-1} -> M^i -> 0 of a graded
// filtration, seen through the length tables of M^{i-1} and M^i.
struct FiltrationStep {
  int index = 0;
  int t = 0;
  std::string multiplier;
  std::vector<Length> before;
  std::vector<Length> after;

  // before[n] - after[n] == binom(n - t + d - 1, d - 1) for every n.
  bool StripsOneShiftedCopy(int d) const;
};

// R = A[X_1..X_d] with A = K[u]/(u^m), filtered by f_i = u^{m-i}. Lengths of
// R^i_n are counted from the standard monomials u^a X^b with a < m - i.
std::vector<FiltrationStep> ChainFiltrationDemo(int m, int d, int max_n);

// M = R^2 / <(X, Y)^T> over K[X, Y]: checks l(M_n) = l(R_n) + l((R/(X))_n)
// for 0 <= n <= max_n, with l(M_n) obtained from the rank of the degree-n
// block of the presentation matrix.
bool Example26aCheck(int max_n);

// l(M_n) computed from the rank of the degree-n presentation block.
Length Example26aModuleLength(int n);

// The submodule generated in degree `degree` agrees with the module from that
// degree on; below it the table is zero.
std::vector<Length> GeneratedTail(std::span<const Length> lengths, int degree);

// Checks e_0(M) = i0 e_0(R/p) and e_1(M) <= t e_0(M) + i0 e_1(R/p) for a module
// generated in degree t, from its length table. When R/p is a polynomial ring
// ((e0_rp, e1_rp) = (1, 0)) the equality case is matched against the
// filtration certificate; otherwise only the inequality is checked.
VerifierReport Thm11aCheck(std::span<const Length> lengths, int t, int d,
                           std::int64_t i0, std::int64_t e0_rp = 1,
                           std::int64_t e1_rp = 0);

}  // namespace sallylab

#endif  // SALLYLAB_FILTRATION_HPP_
