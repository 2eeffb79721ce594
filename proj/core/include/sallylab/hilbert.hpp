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

#ifndef SALLYLAB_HILBERT_HPP_
#define SALLYLAB_HILBERT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sallylab/ideal.hpp"

namespace sallylab {

// binom(n + top_shift, k), taken to be 0 whenever n + top_shift < k or k < 0.
// This is the Hilbert function of a shifted polynomial ring, so graded pieces
// in too-low degree vanish.
std::int64_t BinomBasis(std::int64_t n, std::int64_t top_shift, std::int64_t k);

// n -> l(A/I^{n+1}) for n = 0..N.
struct HilbertTable {
  std::vector<Length> values;

  // l(A/I^{n+1}) - l(A/I^n) = l(G(I)_n), with l(A/I^0) = 0.
  std::vector<Length> FirstDiffs() const;
};

// Coefficients of a polynomial written in the binomial basis
//   P(n) = sum_{i=0}^{degree} (-1)^i e_i binom(n + degree - i, degree - i).
// For an ideal, degree = d and these are the Hilbert coefficients; for a
// graded module of dimension d, degree = d - 1.
struct HilbertCoefficients {
  int degree = 0;
  std::vector<std::int64_t> e;
  // Least n0 such that P(n) equals the table for every tabulated n >= n0.
  int postulation = 0;

  std::int64_t Evaluate(std::int64_t n) const;
  std::int64_t Coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(e.size()) ? e[i] : 0;
  }
};

HilbertTable HsTable(const MonomialIdeal& ideal, int max_n);

inline constexpr int kVerificationPoints = 3;

// Fits the last degree+1 values exactly and checks the fit against the
// preceding kVerificationPoints values. Throws kWindowTooShort if the table
// is too short or has not stabilized, kNonIntegerCoefficient if the fitted
// coefficients are not integers.
HilbertCoefficients FitPolynomial(std::span<const std::int64_t> values, int degree);

// Hilbert coefficients e_0..e_d of an ideal table; requires at least
// 2(d+1)+3 entries and e_0 >= 1.
HilbertCoefficients FitCoefficients(const HilbertTable& table, int d);

// Default table size for an ideal with (possibly unknown, < 0) reduction
// number r in dimension d.
int DefaultTableSize(int r, int d);
inline constexpr int kMaxTableSize = 64;

// Computes the table and fits it, doubling the table size on
// kWindowTooShort up to kMaxTableSize.
struct HilbertFit {
  HilbertTable table;
  HilbertCoefficients coefficients;
};
HilbertFit ComputeHilbertFit(const MonomialIdeal& ideal, int initial_n,
                             int max_n = kMaxTableSize);

}  // namespace sallylab

#endif  // SALLYLAB_HILBERT_HPP_
