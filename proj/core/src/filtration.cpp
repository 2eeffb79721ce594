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

#include "sallylab/filtration.hpp"

#include <map>

#include "sallylab/ambient.hpp"
#include "sallylab/error.hpp"
#include "sallylab/hilbert.hpp"
#include "sallylab/linalg.hpp"

namespace sallylab {
namespace {

// Number of monomials of each total degree 0..max_n in d variables.
std::vector<Length> MonomialCounts(int d, int max_n) {
  std::vector<Length> counts(max_n + 1, 0);
  for (const auto& v : AmbientAlgebra::Polynomial(d).EnumerateUpTo(max_n)) {
    ++counts[v.TotalDegree()];
  }
  return counts;
}

}  // namespace

bool FiltrationStep::StripsOneShiftedCopy(int d) const {
  if (before.size() != after.size()) return false;
  for (std::size_t n = 0; n < before.size(); ++n) {
    if (before[n] - after[n] !=
        BinomBasis(static_cast<std::int64_t>(n), -t + d - 1, d - 1)) {
      return false;
    }
  }
  return true;
}

std::vector<FiltrationStep> ChainFiltrationDemo(int m, int d, int max_n) {
  if (m < 1 || d < 2 || max_n < 0) {
    throw Error(ErrorKind::kInvalidArgument, "chain demo needs m >= 1, d >= 2, N >= 0");
  }
  const std::vector<Length> counts = MonomialCounts(d, max_n);
  auto table = [&](int i) {
    // Standard monomials of R/(u^{m-i}): u^a X^b with 0 <= a < m - i.
    std::vector<Length> out(max_n + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
      for (int a = 0; a < m; ++a) {
        if (a < m - i) out[n] += counts[n];
      }
    }
    return out;
  };
  std::vector<FiltrationStep> steps;
  for (int i = 1; i <= m; ++i) {
    FiltrationStep step;
    step.index = i;
    step.t = 0;
    step.multiplier = m - i == 0 ? "1" : "u^" + std::to_string(m - i);
    step.before = table(i - 1);
    step.after = table(i);
    steps.push_back(std::move(step));
  }
  return steps;
}

Length Example26aModuleLength(int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative degree");
  // Rows: basis X^a Y^{n-a} of the first copy of R_n, then of the second.
  // Columns: basis X^b Y^{n-1-b} of R_{n-1}, mapped to (X f, Y f).
  const int rows = 2 * (n + 1);
  const int cols = n;
  Matrix<Integer> block(rows, std::vector<Integer>(cols, 0));
  for (int b = 0; b < cols; ++b) {
    block[b + 1][b] = 1;          // X * X^b Y^{n-1-b} = X^{b+1} Y^{n-1-b}
    block[(n + 1) + b][b] = 1;    // Y * X^b Y^{n-1-b} = X^b Y^{n-b}
  }
  const auto rank = cols == 0 ? 0 : BareissRank(std::move(block));
  return rows - static_cast<Length>(rank);
}

bool Example26aCheck(int max_n) {
  const std::vector<Length> counts = MonomialCounts(2, max_n);
  for (int n = 0; n <= max_n; ++n) {
    // (R/(X))_n is spanned by the monomials free of X: only Y^n.
    Length quotient = 0;
    for (const auto& v : AmbientAlgebra::Polynomial(2).EnumerateUpTo(n)) {
      if (v.TotalDegree() == n && v[0] == 0) ++quotient;
    }
    if (Example26aModuleLength(n) != counts[n] + quotient) return false;
  }
  return true;
}

std::vector<Length> GeneratedTail(std::span<const Length> lengths, int degree) {
  std::vector<Length> out(lengths.begin(), lengths.end());
  for (int n = 0; n < degree && n < static_cast<int>(out.size()); ++n) out[n] = 0;
  return out;
}

VerifierReport Thm11aCheck(std::span<const Length> lengths, int t, int d,
                           std::int64_t i0, std::int64_t e0_rp,
                           std::int64_t e1_rp) {
  if (d < 2) throw Error(ErrorKind::kInvalidArgument, "thm11a needs d >= 2");
  VerifierReport report;
  report.theorem = TheoremId::kThm11a;
  report.depth_lower = 0;
  report.depth_upper = d;
  const HilbertCoefficients fit = FitPolynomial(lengths, d - 1);
  const std::int64_t e0 = fit.Coefficient(0);
  const std::int64_t e1 = fit.Coefficient(1);
  report.hypotheses.push_back({"e0(M) = i0 e0(R/p)", e0 == i0 * e0_rp});
  const Rational lhs = Rational(t) * e0 + Rational(i0) * e1_rp;
  report.lhs = lhs;
  report.rhs = e1;
  report.slack = lhs - e1;
  report.equality = report.slack == 0;
  report.justifications.push_back("thm11a: fitted e0(M) = " + std::to_string(e0) +
                                  ", e1(M) = " + std::to_string(e1));
  const bool polynomial_rp = e0_rp == 1 && e1_rp == 0;
  if (polynomial_rp && i0 >= 0) {
    report.certificate = FiltrationCertificate(lengths, t, d, i0);
  } else {
    report.justifications.push_back(
        "thm11a: R/p not a polynomial ring, one-directional check only");
  }
  if (!report.HypothesesHold()) return report;
  if (report.slack < 0) {
    throw Error(ErrorKind::kInternalInconsistency,
                "thm11a: e1(M) exceeds t e0(M) + i0 e1(R/p)");
  }
  if (report.certificate && *report.certificate != report.equality) {
    throw Error(ErrorKind::kInternalInconsistency,
                "thm11a: equality and filtration certificate disagree");
  }
  if (report.certificate && *report.certificate) {
    report.justifications.push_back("thm11a: filtration by i0 shifted copies of R/p");
  }
  return report;
}

}  // namespace sallylab
