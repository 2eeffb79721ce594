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

#ifndef SALLYLAB_SALLY_HPP_
#define SALLYLAB_SALLY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sallylab/hilbert.hpp"
#include "sallylab/ideal.hpp"
#include "sallylab/linalg.hpp"

namespace sallylab {

// I together with a parameter-shaped reduction Q and r = red_Q(I).
struct ReductionData {
  MonomialIdeal ideal;
  MonomialIdeal reduction;
  int r = 0;
};

// Pure powers x_i^{a_i}, one per variable (polynomial ambient), or exactly d
// generators of rank d (semigroup ambient).
bool IsParameterShaped(const MonomialIdeal& q);

inline constexpr int kDefaultReductionCap = 20;

// Least n <= cap with I^{n+1} = Q I^n. Throws kQNotContained,
// kQNotParameterShaped, or kNotAReduction.
ReductionData ReductionNumber(const MonomialIdeal& ideal,
                              const MonomialIdeal& reduction,
                              int cap = kDefaultReductionCap);

// Length tables indexed by n = 0..N:
//   s[n] = l(S_n) = l(A/Q^n I) - l(A/I^{n+1})         (n >= 1, s[0] = 0)
//   c[n] = l(C_n) = l(A/Q^{n-1} I^2) - l(A/I^{n+1})   (n >= 2, else 0)
//   l[n] = l(L_n) = s[n] - c[n]
struct SallyLengths {
  std::vector<Length> s;
  std::vector<Length> c;
  std::vector<Length> l;
};

SallyLengths ComputeSallyLengths(const ReductionData& rd, int max_n);

// I^n ∩ Q == Q I^{n-1}.
bool VvCheck(const ReductionData& rd, int n);
// VvCheck for 1 <= n <= r; larger n follow from I^n = Q I^{n-1}.
bool VvFull(const ReductionData& rd);
// Q ∩ I^2 == QI.
bool ItohCheck(const ReductionData& rd);

// lengths[n] == i0 * binom(n - t + d - 1, d - 1) for every tabulated n, the
// Hilbert function of i0 copies of a polynomial ring in d variables shifted
// to start in degree t.
bool FiltrationCertificate(std::span<const Length> lengths, int t, int d,
                           std::int64_t i0);

struct IdentityRow {
  std::int64_t n = 0;
  Rational lhs;
  Rational rhs;
};

// l(A/I^{n+1}) = e0 binom(n+d,d) - (e0 - l(A/I)) binom(n+d-1,d-1) - l(S_n)
// for 0 <= n <= max_n, with e0 = l(A/Q). Rows are appended when requested.
bool Prop31IdentityCheck(const ReductionData& rd, const SallyLengths& sl,
                         int max_n, std::vector<IdentityRow>* rows = nullptr);

// The four-term identity with l(I^2/QI) and l(C_n), valid when
// Q ∩ I^2 = QI; throws kHypothesisFailed otherwise.
bool Prop39IdentityCheck(const ReductionData& rd, const SallyLengths& sl,
                         int max_n, std::vector<IdentityRow>* rows = nullptr);

enum class TheoremId {
  kNorthcott,
  kProp31,
  kProp32,
  kThm33,
  kProp39,
  kProp310,
  kThm310,
  kLemma35,
  kLemma36,
  kThm11a,
};

std::string_view TheoremIdName(TheoremId id);
std::optional<TheoremId> ParseTheoremId(std::string_view name);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

// Outcome of one theorem check. slack = lhs - rhs; for inequalities the
// theorem asserts slack >= 0 whenever every hypothesis holds.
struct VerifierReport {
  TheoremId theorem = TheoremId::kNorthcott;
  std::vector<Hypothesis> hypotheses;
  Rational lhs;
  Rational rhs;
  Rational slack;
  bool equality = false;
  std::optional<bool> certificate;
  int depth_lower = 0;
  int depth_upper = 0;
  std::vector<std::string> justifications;
  std::vector<IdentityRow> rows;

  bool HypothesesHold() const;
};

// Numeric data the inequality verifiers consume. Built from live ideals by
// Analyze, or supplied as a fixture for rings outside the monomial world.
struct IdealInvariants {
  int d = 2;
  int r = 0;
  bool cm = true;
  Length colength = 0;    // l(A/I)
  Length i2_over_qi = 0;  // l(I^2/QI)
  std::vector<std::int64_t> e;  // e_0..e_d
  bool integrally_closed = false;
  bool integrally_closed_assumed = false;
  bool rr_closed_assumed = false;
  std::optional<HilbertTable> table;
  std::optional<SallyLengths> sally;
  std::optional<bool> itoh;  // Q ∩ I^2 = QI
  std::optional<bool> vv2;   // I^2 ∩ Q = QI
  std::optional<bool> vv_full;
  std::string source = "live";

  std::int64_t E(int i) const {
    return i >= 0 && i < static_cast<int>(e.size()) ? e[i] : 0;
  }
};

struct AnalysisOptions {
  // Largest n tabulated; <= 0 selects DefaultTableSize(r, d).
  int table_size = 0;
  int cap = kDefaultReductionCap;
  bool assume_integrally_closed = false;
  bool assume_rr_closed = false;
};

struct Analysis {
  ReductionData rd;
  HilbertFit fit;
  SallyLengths sally;
  IdealInvariants invariants;
};

// Computes r, the Hilbert table and coefficients, the Sally/C/L tables and
// the intersection checks. With a CM ambient, the fitted e_0 must equal
// l(A/Q); a mismatch throws kInternalInconsistency.
Analysis Analyze(const MonomialIdeal& ideal, const MonomialIdeal& reduction,
                 const AnalysisOptions& options = {});

// The constants of the non-monomial ring D/a with m^4 = Q m^3 (m > 0, d >= 2):
// e_0 = m+2d+1, e_1 = m+3d+1, e_2 = d+1, e_i = 0 for 3 <= i <= d,
// l(m^2/Qm) = d, l(A/m) = 1, r = 3.
IdealInvariants FinalExampleFixture(int m, int d);

VerifierReport VerifyNorthcott(const IdealInvariants& inv);
VerifierReport VerifyProp32(const IdealInvariants& inv);
VerifierReport VerifyThm33(const IdealInvariants& inv);
VerifierReport VerifyProp310(const IdealInvariants& inv);
VerifierReport VerifyThm310(const IdealInvariants& inv);
VerifierReport VerifyProp31(const Analysis& analysis);
VerifierReport VerifyProp39(const Analysis& analysis);
VerifierReport VerifyLemma35(const MonomialIdeal& ideal,
                             const MonomialIdeal& reduction);
VerifierReport VerifyLemma36(int t, const std::vector<Monomial>& generators);

struct DepthInterval {
  int lower = 0;
  int upper = 0;
  std::vector<std::string> justifications;
};

// Bounds on depth G(I) assembled from the equivalences above; the depth is
// never computed from a presentation.
DepthInterval DepthBounds(const IdealInvariants& inv);

}  // namespace sallylab

#endif  // SALLYLAB_SALLY_HPP_
