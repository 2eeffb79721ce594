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

#include "sallylab/hilbert.hpp"

#include <algorithm>
#include <string>

#include "sallylab/error.hpp"
#include "sallylab/linalg.hpp"

namespace sallylab {

std::int64_t BinomBasis(std::int64_t n, std::int64_t top_shift, std::int64_t k) {
  const std::int64_t top = n + top_shift;
  if (k < 0 || top < k) return 0;
  k = std::min(k, top - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // out * (top - k + i) is divisible by i after the previous steps.
    out = detail::Mul(out, top - k + i) / i;
  }
  return out;
}

std::vector<Length> HilbertTable::FirstDiffs() const {
  std::vector<Length> out;
  out.reserve(values.size());
  Length prev = 0;
  for (Length v : values) {
    out.push_back(v - prev);
    prev = v;
  }
  return out;
}

std::int64_t HilbertCoefficients::Evaluate(std::int64_t n) const {
  std::int64_t out = 0;
  for (int i = 0; i <= degree; ++i) {
    const std::int64_t term = detail::Mul(Coefficient(i), BinomBasis(n, degree - i, degree - i));
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

HilbertTable HsTable(const MonomialIdeal& ideal, int max_n) {
  if (max_n < 0) throw Error(ErrorKind::kInvalidArgument, "negative table size");
  HilbertTable table;
  MonomialIdeal power = ideal;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) power = Product(power, ideal);
    table.values.push_back(power.Colength());
  }
  return table;
}

HilbertCoefficients FitPolynomial(std::span<const std::int64_t> values, int degree) {
  if (degree < 0) throw Error(ErrorKind::kInvalidArgument, "negative degree");
  const int unknowns = degree + 1;
  const int size = static_cast<int>(values.size());
  if (size < unknowns + kVerificationPoints) {
    throw Error(ErrorKind::kWindowTooShort,
                "need " + std::to_string(unknowns + kVerificationPoints) +
                    " values, have " + std::to_string(size));
  }
  const int first = size - unknowns;
  Matrix<Integer> a;
  std::vector<Integer> b;
  for (int n = first; n < size; ++n) {
    std::vector<Integer> row;
    for (int i = 0; i <= degree; ++i) {
      const std::int64_t basis = BinomBasis(n, degree - i, degree - i);
      row.emplace_back(i % 2 == 0 ? basis : -basis);
    }
    a.push_back(std::move(row));
    b.emplace_back(values[n]);
  }
  const auto solution = SolveExact(a, b);
  if (!solution) {
    throw Error(ErrorKind::kInternalInconsistency, "binomial basis system is singular");
  }
  HilbertCoefficients out;
  out.degree = degree;
  for (int i = 0; i <= degree; ++i) {
    const Rational& x = (*solution)[i];
    if (boost::multiprecision::denominator(x) != 1) {
      throw Error(ErrorKind::kNonIntegerCoefficient,
                  "e_" + std::to_string(i) + " = " + ToString(x));
    }
    out.e.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(x)));
  }
  for (int n = first - kVerificationPoints; n < first; ++n) {
    if (out.Evaluate(n) != values[n]) {
      throw Error(ErrorKind::kWindowTooShort,
                  "table has not stabilized at n = " + std::to_string(n));
    }
  }
  int postulation = first - kVerificationPoints;
  while (postulation > 0 && out.Evaluate(postulation - 1) == values[postulation - 1]) {
    --postulation;
  }
  out.postulation = postulation;
  return out;
}

HilbertCoefficients FitCoefficients(const HilbertTable& table, int d) {
  const int needed = 2 * (d + 1) + kVerificationPoints;
  if (static_cast<int>(table.values.size()) < needed) {
    throw Error(ErrorKind::kWindowTooShort,
                "Hilbert table needs " + std::to_string(needed) + " entries");
  }
  HilbertCoefficients out = FitPolynomial(table.values, d);
  if (out.e.front() < 1) {
    throw Error(ErrorKind::kInternalInconsistency, "fitted multiplicity below 1");
  }
  return out;
}

int DefaultTableSize(int r, int d) {
  return r >= 0 ? std::max(r + d + 3, 8) : 8;
}

HilbertFit ComputeHilbertFit(const MonomialIdeal& ideal, int initial_n, int max_n) {
  const int d = ideal.ambient().dim();
  int n = std::max(initial_n, 2 * (d + 1) + kVerificationPoints - 1);
  while (true) {
    HilbertTable table = HsTable(ideal, n);
    try {
      HilbertCoefficients coeffs = FitCoefficients(table, d);
      return {std::move(table), std::move(coeffs)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kWindowTooShort || n >= max_n) throw;
      n = std::min(2 * n, max_n);
    }
  }
}

}  // namespace sallylab
