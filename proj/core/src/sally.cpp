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

#include "sallylab/sally.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>

#include "sallylab/closure.hpp"
#include "sallylab/error.hpp"

namespace sallylab {
namespace {

Rational Binom(std::int64_t n, std::int64_t shift, std::int64_t k) {
  return Rational(BinomBasis(n, shift, k));
}

void Fail(const std::string& message) {
  throw Error(ErrorKind::kInternalInconsistency, message);
}

VerifierReport NewReport(TheoremId id, int d) {
  VerifierReport report;
  report.theorem = id;
  report.depth_lower = 0;
  report.depth_upper = d;
  return report;
}

void SetSides(VerifierReport& report, Rational lhs, Rational rhs) {
  report.slack = lhs - rhs;
  report.equality = report.slack == 0;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
}

std::string Name(const VerifierReport& report) {
  return std::string(TheoremIdName(report.theorem));
}

void RequireNonNegativeSlack(const VerifierReport& report) {
  if (report.HypothesesHold() && report.slack < 0) {
    Fail(Name(report) + ": negative slack " + ToString(report.slack) +
         " with all hypotheses satisfied");
  }
}

// Applies "equality <=> depth G(I) >= d-1" to the report's depth fields.
void ApplyDepthEquivalence(VerifierReport& report, int d) {
  const std::string who = Name(report);
  if (report.equality) {
    report.depth_lower = std::max(report.depth_lower, d - 1);
    report.justifications.push_back(who + ": equality, so depth G(I) >= d-1");
  } else {
    report.depth_upper = std::min(report.depth_upper, d - 2);
    report.justifications.push_back(who + ": strict inequality, so depth G(I) <= d-2");
  }
}

// values[n] == sum_i (-1)^i e_i binom(n+d-i, d-i) over i = 0..top, n >= from.
bool TruncatedPolynomialMatches(const HilbertTable& table,
                                const IdealInvariants& inv, int top, int from) {
  for (int n = from; n < static_cast<int>(table.values.size()); ++n) {
    Rational value = 0;
    for (int i = 0; i <= top; ++i) {
      const Rational term = inv.E(i) * Binom(n, inv.d - i, inv.d - i);
      value += (i % 2 == 0) ? term : Rational(-term);
    }
    if (value != table.values[n]) return false;
  }
  return true;
}

}  // namespace

bool IsParameterShaped(const MonomialIdeal& q) {
  const AmbientAlgebra& ambient = q.ambient();
  const auto& gens = q.generators();
  if (static_cast<int>(gens.size()) != ambient.dim()) return false;
  if (ambient.is_polynomial()) {
    std::set<std::size_t> variables;
    for (const auto& g : gens) {
      std::size_t nonzero = 0;
      std::size_t index = 0;
      for (std::size_t i = 0; i < g.arity(); ++i) {
        if (g[i] != 0) {
          ++nonzero;
          index = i;
        }
      }
      if (nonzero != 1) return false;
      variables.insert(index);
    }
    return static_cast<int>(variables.size()) == ambient.dim();
  }
  Matrix<Integer> rows;
  for (const auto& g : gens) {
    std::vector<Integer> row;
    for (auto e : g.exponents()) row.emplace_back(e);
    rows.push_back(std::move(row));
  }
  return static_cast<int>(BareissRank(std::move(rows))) == ambient.dim();
}

ReductionData ReductionNumber(const MonomialIdeal& ideal,
                              const MonomialIdeal& reduction, int cap) {
  if (!(ideal.ambient() == reduction.ambient())) {
    throw Error(ErrorKind::kAmbientMismatch, "I and Q live in different ambients");
  }
  if (!ideal.ContainsIdeal(reduction)) {
    throw Error(ErrorKind::kQNotContained, "Q is not contained in I");
  }
  if (!IsParameterShaped(reduction)) {
    throw Error(ErrorKind::kQNotParameterShaped,
                "Q must be generated by d pure powers (or d independent semigroup elements)");
  }
  MonomialIdeal power = MonomialIdeal::Unit(ideal.ambient());
  for (int n = 0; n <= cap; ++n) {
    MonomialIdeal next = Product(power, ideal);
    if (next == Product(reduction, power)) {
      return ReductionData{ideal, reduction, n};
    }
    power = std::move(next);
  }
  throw Error(ErrorKind::kNotAReduction,
              "I^{n+1} != Q I^n for every n <= " + std::to_string(cap));
}

SallyLengths ComputeSallyLengths(const ReductionData& rd, int max_n) {
  if (max_n < 0) throw Error(ErrorKind::kInvalidArgument, "negative table size");
  const MonomialIdeal& i1 = rd.ideal;
  const MonomialIdeal& q = rd.reduction;
  std::vector<Length> colength_ipow;  // l(A/I^k), k = 0..max_n+1
  MonomialIdeal power = MonomialIdeal::Unit(i1.ambient());
  for (int k = 0; k <= max_n + 1; ++k) {
    if (k > 0) power = Product(power, i1);
    colength_ipow.push_back(power.Colength());
  }
  const MonomialIdeal i2 = Product(i1, i1);

  SallyLengths out;
  out.s.assign(max_n + 1, 0);
  out.c.assign(max_n + 1, 0);
  out.l.assign(max_n + 1, 0);
  MonomialIdeal q_prev = MonomialIdeal::Unit(i1.ambient());  // Q^{n-1}
  for (int n = 1; n <= max_n; ++n) {
    const MonomialIdeal q_n = Product(q_prev, q);
    out.s[n] = Product(q_n, i1).Colength() - colength_ipow[n + 1];
    if (n >= 2) out.c[n] = Product(q_prev, i2).Colength() - colength_ipow[n + 1];
    out.l[n] = out.s[n] - out.c[n];
    if (out.s[n] < 0 || out.c[n] < 0 || out.l[n] < 0) {
      Fail("negative Sally-module length at n = " + std::to_string(n));
    }
    q_prev = q_n;
  }
  return out;
}

bool VvCheck(const ReductionData& rd, int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "VvCheck needs n >= 1");
  const MonomialIdeal lhs = Intersect(Power(rd.ideal, n), rd.reduction);
  return lhs == Product(rd.reduction, Power(rd.ideal, n - 1));
}

bool VvFull(const ReductionData& rd) {
  for (int n = 1; n <= rd.r; ++n) {
    if (!VvCheck(rd, n)) return false;
  }
  return true;
}

bool ItohCheck(const ReductionData& rd) {
  return Intersect(rd.reduction, Product(rd.ideal, rd.ideal)) ==
         Product(rd.reduction, rd.ideal);
}

bool FiltrationCertificate(std::span<const Length> lengths, int t, int d,
                           std::int64_t i0) {
  if (i0 < 0) throw Error(ErrorKind::kInvalidArgument, "negative i0");
  for (std::size_t n = 0; n < lengths.size(); ++n) {
    const std::int64_t expected =
        detail::Mul(i0, BinomBasis(static_cast<std::int64_t>(n), -t + d - 1, d - 1));
    if (lengths[n] != expected) return false;
  }
  return true;
}

bool Prop31IdentityCheck(const ReductionData& rd, const SallyLengths& sl,
                         int max_n, std::vector<IdentityRow>* rows) {
  if (static_cast<int>(sl.s.size()) <= max_n) {
    throw Error(ErrorKind::kInvalidArgument, "Sally table shorter than max_n");
  }
  const int d = rd.ideal.ambient().dim();
  const Rational e0 = rd.reduction.Colength();
  const Rational colength = rd.ideal.Colength();
  bool holds = true;
  MonomialIdeal power = rd.ideal;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) power = Product(power, rd.ideal);
    const Rational lhs = power.Colength();
    const Rational rhs = e0 * Binom(n, d, d) -
                         (e0 - colength) * Binom(n, d - 1, d - 1) - sl.s[n];
    holds = holds && lhs == rhs;
    if (rows) rows->push_back({n, lhs, rhs});
  }
  return holds;
}

bool Prop39IdentityCheck(const ReductionData& rd, const SallyLengths& sl,
                         int max_n, std::vector<IdentityRow>* rows) {
  if (!ItohCheck(rd)) {
    throw Error(ErrorKind::kHypothesisFailed, "Q ∩ I^2 != QI");
  }
  if (static_cast<int>(sl.c.size()) <= max_n) {
    throw Error(ErrorKind::kInvalidArgument, "C table shorter than max_n");
  }
  const int d = rd.ideal.ambient().dim();
  const Rational e0 = rd.reduction.Colength();
  const Rational colength = rd.ideal.Colength();
  const Rational lambda = QuotientLength(Product(rd.ideal, rd.ideal),
                                         Product(rd.reduction, rd.ideal));
  bool holds = true;
  MonomialIdeal power = rd.ideal;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) power = Product(power, rd.ideal);
    const Rational lhs = power.Colength();
    const Rational rhs = e0 * Binom(n, d, d) -
                         (e0 - colength + lambda) * Binom(n, d - 1, d - 1) +
                         lambda * Binom(n, d - 2, d - 2) - sl.c[n];
    holds = holds && lhs == rhs;
    if (rows) rows->push_back({n, lhs, rhs});
  }
  return holds;
}

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 10> kTheoremNames{{
    {TheoremId::kNorthcott, "northcott"},
    {TheoremId::kProp31, "prop31"},
    {TheoremId::kProp32, "prop32"},
    {TheoremId::kThm33, "thm33"},
    {TheoremId::kProp39, "prop39"},
    {TheoremId::kProp310, "prop310"},
    {TheoremId::kThm310, "thm310"},
    {TheoremId::kLemma35, "lemma35"},
    {TheoremId::kLemma36, "lemma36"},
    {TheoremId::kThm11a, "thm11a"},
}};

}  // namespace

std::string_view TheoremIdName(TheoremId id) {
  for (const auto& [key, name] : kTheoremNames) {
    if (key == id) return name;
  }
  return "unknown";
}

std::optional<TheoremId> ParseTheoremId(std::string_view name) {
  for (const auto& [key, text] : kTheoremNames) {
    if (text == name) return key;
  }
  return std::nullopt;
}

bool VerifierReport::HypothesesHold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.holds; });
}

Analysis Analyze(const MonomialIdeal& ideal, const MonomialIdeal& reduction,
                 const AnalysisOptions& options) {
  ReductionData rd = ReductionNumber(ideal, reduction, options.cap);
  const AmbientAlgebra& ambient = ideal.ambient();
  const int d = ambient.dim();
  const int initial_n =
      options.table_size > 0 ? options.table_size : DefaultTableSize(rd.r, d);
  HilbertFit fit = ComputeHilbertFit(ideal, initial_n);
  if (ambient.cm_flag() && fit.coefficients.e.front() != reduction.Colength()) {
    Fail("fitted e_0 = " + std::to_string(fit.coefficients.e.front()) +
         " differs from l(A/Q) = " + std::to_string(reduction.Colength()));
  }
  const int max_n = static_cast<int>(fit.table.values.size()) - 1;
  SallyLengths sally = ComputeSallyLengths(rd, max_n);

  IdealInvariants inv;
  inv.d = d;
  inv.r = rd.r;
  inv.cm = ambient.cm_flag();
  inv.colength = ideal.Colength();
  inv.i2_over_qi = QuotientLength(Product(ideal, ideal), Product(reduction, ideal));
  inv.e = fit.coefficients.e;
  if (ambient.is_polynomial()) {
    inv.integrally_closed = IsIntegrallyClosed(ideal);
  } else {
    inv.integrally_closed = options.assume_integrally_closed;
    inv.integrally_closed_assumed = options.assume_integrally_closed;
  }
  inv.rr_closed_assumed = options.assume_rr_closed;
  inv.table = fit.table;
  inv.sally = sally;
  inv.itoh = ItohCheck(rd);
  inv.vv2 = VvCheck(rd, 2);
  inv.vv_full = VvFull(rd);
  return Analysis{std::move(rd), std::move(fit), std::move(sally), std::move(inv)};
}

IdealInvariants FinalExampleFixture(int m, int d) {
  if (m <= 0 || d < 2) {
    throw Error(ErrorKind::kInvalidArgument, "final-example fixture needs m > 0, d >= 2");
  }
  IdealInvariants inv;
  inv.d = d;
  inv.r = 3;
  inv.cm = true;
  inv.colength = 1;
  inv.i2_over_qi = d;
  inv.e.assign(d + 1, 0);
  inv.e[0] = m + 2 * d + 1;
  inv.e[1] = m + 3 * d + 1;
  inv.e[2] = d + 1;
  // The maximal ideal is integrally closed, hence Q ∩ m^2 = Qm.
  inv.integrally_closed = true;
  inv.itoh = true;
  inv.source = "fixture:final-example(m=" + std::to_string(m) +
               ",d=" + std::to_string(d) + ")";
  return inv;
}

VerifierReport VerifyNorthcott(const IdealInvariants& inv) {
  VerifierReport report = NewReport(TheoremId::kNorthcott, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  SetSides(report, Rational(inv.colength), Rational(inv.E(0) - inv.E(1)));
  RequireNonNegativeSlack(report);
  if (report.HypothesesHold()) {
    if (report.equality != (inv.r <= 1)) {
      Fail("northcott: equality flag " + std::to_string(report.equality) +
           " disagrees with r = " + std::to_string(inv.r));
    }
    if (inv.r <= 1) {
      report.depth_lower = report.depth_upper = inv.d;
      report.justifications.push_back("northcott: I^2 = QI, so G(I) is Cohen-Macaulay");
    } else {
      report.justifications.push_back("northcott: strict, I^2 != QI");
    }
  }
  return report;
}

VerifierReport VerifyProp32(const IdealInvariants& inv) {
  VerifierReport report = NewReport(TheoremId::kProp32, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  report.hypotheses.push_back({"r >= 2", inv.r >= 2});
  const int divisor = std::max(inv.r - 1, 1);
  SetSides(report, Rational(inv.colength),
           Rational(inv.E(0) - inv.E(1)) + Rational(inv.E(2), divisor));
  RequireNonNegativeSlack(report);
  if (report.HypothesesHold() && report.equality) {
    if (inv.r != 2) Fail("prop32: equality with r = " + std::to_string(inv.r));
    report.justifications.push_back("prop32: equality forces r = 2");
  }
  return report;
}

VerifierReport VerifyThm33(const IdealInvariants& inv) {
  VerifierReport report = NewReport(TheoremId::kThm33, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  report.hypotheses.push_back({"I^3 = QI^2", inv.r <= 2});
  SetSides(report, Rational(inv.colength),
           Rational(inv.E(0) - inv.E(1) + inv.E(2)));
  if (inv.sally && inv.sally->s.size() > 1) {
    const auto& s = inv.sally->s;
    report.certificate = FiltrationCertificate(s, 1, inv.d, s[1]);
  }
  if (inv.integrally_closed_assumed) {
    report.hypotheses.push_back(
        {"integrally closed (assumed) consistent with slack 0", report.slack == 0});
  }
  if (inv.rr_closed_assumed && inv.d == 2) {
    report.hypotheses.push_back(
        {"Ratliff-Rush closed (assumed) consistent with slack 0", report.slack == 0});
  }
  RequireNonNegativeSlack(report);
  if (!report.HypothesesHold()) return report;

  if (report.certificate && *report.certificate != report.equality) {
    Fail("thm33: equality and Sally filtration certificate disagree");
  }
  if (report.certificate) {
    report.justifications.push_back(
        std::string("thm33: Sally module ") +
        (*report.certificate ? "has" : "has no") + " filtration by shifted copies");
  }
  if (inv.integrally_closed && !inv.integrally_closed_assumed) {
    if (report.slack != 0) Fail("thm33: integrally closed I with nonzero slack");
    report.justifications.push_back("thm33: integrally closed, converse inequality gives equality");
  }
  if (report.equality && inv.table) {
    if (!TruncatedPolynomialMatches(*inv.table, inv, 2, 0)) {
      Fail("thm33: equality but l(A/I^{n+1}) is not the degree-2 truncation for all n >= 0");
    }
    report.justifications.push_back("thm33: Hilbert function is the e0,e1,e2 polynomial for all n >= 0");
  }
  ApplyDepthEquivalence(report, inv.d);
  return report;
}

VerifierReport VerifyProp310(const IdealInvariants& inv) {
  VerifierReport report = NewReport(TheoremId::kProp310, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  report.hypotheses.push_back({"I integrally closed", inv.integrally_closed});
  report.hypotheses.push_back({"r >= 3", inv.r >= 3});
  const int divisor = std::max(inv.r - 1, 1);
  SetSides(report, Rational(inv.colength),
           Rational(inv.E(0) - inv.E(1)) +
               Rational((inv.r - 2) * inv.i2_over_qi + inv.E(2), divisor));
  RequireNonNegativeSlack(report);
  if (report.HypothesesHold() && report.equality) {
    if (inv.r != 3) Fail("prop310: equality with r = " + std::to_string(inv.r));
    report.justifications.push_back("prop310: equality forces r = 3");
  }
  return report;
}

VerifierReport VerifyThm310(const IdealInvariants& inv) {
  VerifierReport report = NewReport(TheoremId::kThm310, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  report.hypotheses.push_back({"I integrally closed", inv.integrally_closed});
  report.hypotheses.push_back({"I^4 = QI^3", inv.r <= 3});
  SetSides(report, Rational(inv.colength),
           Rational(inv.E(0) - inv.E(1)) + Rational(inv.i2_over_qi + inv.E(2), 2));
  if (inv.sally && inv.sally->c.size() > 2) {
    const auto& c = inv.sally->c;
    report.certificate = FiltrationCertificate(c, 2, inv.d, c[2]);
  }
  RequireNonNegativeSlack(report);
  if (!report.HypothesesHold()) return report;

  if (report.certificate && *report.certificate != report.equality) {
    Fail("thm310: equality and C-module filtration certificate disagree");
  }
  if (report.equality && inv.table) {
    if (!TruncatedPolynomialMatches(*inv.table, inv, 3, 1)) {
      Fail("thm310: equality but l(A/I^{n+1}) is not the degree-3 truncation for n >= 1");
    }
    report.justifications.push_back("thm310: Hilbert function is the e0..e3 polynomial for all n >= 1");
  }
  if (inv.r <= 2) {
    report.justifications.push_back("thm310: r <= 2, so C = 0");
  }
  ApplyDepthEquivalence(report, inv.d);
  return report;
}

VerifierReport VerifyProp31(const Analysis& analysis) {
  const IdealInvariants& inv = analysis.invariants;
  VerifierReport report = NewReport(TheoremId::kProp31, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  const int max_n = static_cast<int>(analysis.sally.s.size()) - 1;
  const bool holds =
      Prop31IdentityCheck(analysis.rd, analysis.sally, max_n, &report.rows);
  Rational lhs = 0;
  Rational rhs = 0;
  for (const auto& row : report.rows) {
    lhs += row.lhs;
    rhs += row.rhs;
  }
  SetSides(report, lhs, rhs);
  report.equality = holds;
  if (report.HypothesesHold() && !holds) Fail("prop31: identity fails");
  if (analysis.rd.r <= 1) {
    report.justifications.push_back("prop31: S = 0 since I^2 = QI");
  }
  return report;
}

VerifierReport VerifyProp39(const Analysis& analysis) {
  const IdealInvariants& inv = analysis.invariants;
  VerifierReport report = NewReport(TheoremId::kProp39, inv.d);
  report.hypotheses.push_back({"ambient Cohen-Macaulay", inv.cm});
  const bool itoh = ItohCheck(analysis.rd);
  report.hypotheses.push_back({"Q ∩ I^2 = QI", itoh});
  if (!itoh) return report;
  const int max_n = static_cast<int>(analysis.sally.c.size()) - 1;
  const bool holds =
      Prop39IdentityCheck(analysis.rd, analysis.sally, max_n, &report.rows);
  Rational lhs = 0;
  Rational rhs = 0;
  for (const auto& row : report.rows) {
    lhs += row.lhs;
    rhs += row.rhs;
  }
  SetSides(report, lhs, rhs);
  report.equality = holds;
  if (report.HypothesesHold() && !holds) Fail("prop39: identity fails");
  return report;
}

VerifierReport VerifyLemma35(const MonomialIdeal& ideal,
                             const MonomialIdeal& reduction) {
  const int d = ideal.ambient().dim();
  VerifierReport report = NewReport(TheoremId::kLemma35, d);
  const MonomialIdeal closure = NewtonClosure(ideal);
  const MonomialIdeal i2 = Product(ideal, ideal);
  const MonomialIdeal closure2 = Product(closure, closure);
  report.hypotheses.push_back({"Q ⊆ I", ideal.ContainsIdeal(reduction)});
  report.hypotheses.push_back({"I^2 = closure(I)^2", i2 == closure2});
  report.hypotheses.push_back(
      {"closure(I)^2 = Q closure(I)", closure2 == Product(reduction, closure)});
  if (!report.HypothesesHold()) return report;

  const MonomialIdeal qi = Product(reduction, ideal);
  SetSides(report, Rational(QuotientLength(i2, qi)),
           Rational(d * (ideal.Colength() - closure.Colength())));
  if (!report.equality) Fail("lemma35: l(I^2/QI) != d l(closure(I)/I)");
  if (!(Product(ideal, i2) == Product(reduction, i2))) Fail("lemma35: I^3 != QI^2");
  report.justifications.push_back("lemma35: I^3 = QI^2");
  if (!(closure == ideal)) {
    const ReductionData rd = ReductionNumber(ideal, reduction, 2);
    if (rd.r != 2) Fail("lemma35: I != closure(I) but r != 2");
    report.justifications.push_back("lemma35: I != closure(I), r = 2");
  }
  return report;
}

VerifierReport VerifyLemma36(int t, const std::vector<Monomial>& generators) {
  if (t < 1) throw Error(ErrorKind::kInvalidArgument, "lemma36 needs t >= 1");
  const AmbientAlgebra plane = AmbientAlgebra::Polynomial(2);
  VerifierReport report = NewReport(TheoremId::kLemma36, 2);
  const bool single_degree =
      !generators.empty() &&
      std::all_of(generators.begin(), generators.end(), [&](const Monomial& g) {
        return g.arity() == 2 && g.IsNonNegative() && g.TotalDegree() == t;
      });
  report.hypotheses.push_back({"I0 generated in degree t", single_degree});
  if (!single_degree) return report;
  const MonomialIdeal q0 = MonomialIdeal::Normalize(plane, {{t, 0}, {0, t}});
  const MonomialIdeal i0 = [&] {
    std::vector<Monomial> with_q0 = generators;
    // Without X^t, Y^t the ideal may not be m-primary; membership of Q0 is
    // then reported as a failed hypothesis.
    with_q0.push_back({t, 0});
    with_q0.push_back({0, t});
    return MonomialIdeal::Normalize(plane, std::move(with_q0));
  }();
  const bool contains_q0 = std::count(generators.begin(), generators.end(), Monomial{t, 0}) &&
                           std::count(generators.begin(), generators.end(), Monomial{0, t});
  report.hypotheses.push_back({"(X^t, Y^t) ⊆ I0", contains_q0});
  if (!report.HypothesesHold()) return report;

  const MonomialIdeal mt = MonomialIdeal::MaximalPower(plane, t);
  const MonomialIdeal closure_q0 = NewtonClosure(q0);
  const MonomialIdeal closure_i0 = NewtonClosure(i0);
  if (!(closure_q0 == mt)) Fail("lemma36: closure(Q0) != m^t");
  if (!(closure_i0 == mt)) Fail("lemma36: closure(I0) != m^t");
  report.justifications.push_back("lemma36: closure(Q0) = closure(I0) = m^t");
  if (!(Product(closure_i0, closure_i0) == Product(q0, closure_i0))) {
    Fail("lemma36: closure(I0)^2 != Q0 closure(I0)");
  }
  const ReductionData closure_rd = ReductionNumber(closure_i0, q0, 2);
  // For t = 1 the closure is Q0 itself and the reduction number is 0.
  const int expected = t == 1 ? 0 : 1;
  if (closure_rd.r != expected) {
    Fail("lemma36: red of closure(I0) is " + std::to_string(closure_rd.r));
  }
  SetSides(report, Rational(closure_rd.r), Rational(expected));
  report.justifications.push_back("lemma36: red_{Q0} closure(I0) = " +
                                  std::to_string(closure_rd.r));

  const bool part_b = !(i0 == q0) && !(i0 == mt) &&
                      Product(i0, i0) == MonomialIdeal::MaximalPower(plane, 2 * t);
  if (part_b) {
    const ReductionData rd = ReductionNumber(i0, q0, 3);
    if (rd.r != 2) Fail("lemma36: Q0 < I0 < m^t, I0^2 = m^2t but r != 2");
    report.justifications.push_back("lemma36: Q0 < I0 < m^t and I0^2 = m^2t, so r = 2");
  }
  return report;
}

DepthInterval DepthBounds(const IdealInvariants& inv) {
  DepthInterval out{0, inv.d, {}};
  auto raise = [&](int lower, std::string why) {
    out.lower = std::max(out.lower, lower);
    out.justifications.push_back(std::move(why));
  };
  auto cap = [&](int upper, std::string why) {
    out.upper = std::min(out.upper, upper);
    out.justifications.push_back(std::move(why));
  };
  if (!inv.cm) {
    out.justifications.push_back("ambient not asserted Cohen-Macaulay; no bounds derived");
    return out;
  }
  if (inv.r <= 1) {
    raise(inv.d, "northcott: I^2 = QI, G(I) Cohen-Macaulay");
    cap(inv.d, "northcott: depth <= d");
  }
  if (inv.vv_full && *inv.vv_full) {
    raise(inv.d, "vv: I^n ∩ Q = QI^{n-1} for all n, G(I) Cohen-Macaulay");
  }
  if (inv.vv2 && !*inv.vv2) {
    cap(inv.d - 1, "vv: I^2 ∩ Q != QI, G(I) not Cohen-Macaulay");
  }
  if (inv.r <= 2) {
    const VerifierReport thm33 = VerifyThm33(inv);
    if (thm33.HypothesesHold()) {
      if (thm33.equality) {
        raise(inv.d - 1, "thm33: equality, depth >= d-1");
      } else {
        cap(inv.d - 2, "thm33: strict inequality, depth <= d-2");
      }
    }
  }
  if (inv.integrally_closed && inv.r <= 3) {
    const VerifierReport thm310 = VerifyThm310(inv);
    if (thm310.HypothesesHold()) {
      if (thm310.equality) {
        raise(inv.d - 1, "thm310: equality, depth >= d-1");
      } else {
        cap(inv.d - 2, "thm310: strict inequality, depth <= d-2");
      }
    }
  }
  if (out.lower > out.upper) {
    Fail("depth interval [" + std::to_string(out.lower) + ", " +
         std::to_string(out.upper) + "] is empty");
  }
  return out;
}

}  // namespace sallylab
