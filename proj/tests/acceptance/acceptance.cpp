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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paper_examples.hpp"
#include "random_ideals.hpp"
#include "sallylab/closure.hpp"
#include "sallylab/filtration.hpp"
#include "sallylab/hilbert.hpp"
#include "sallylab/sally.hpp"

namespace sallylab {
namespace {

using cli::ExamplePair;

// Collects failed expectations for one criterion.
class Checker {
 public:
  template <typename A, typename B>
  void Equal(const std::string& what, const A& expected, const B& actual) {
    if (expected == actual) return;
    std::ostringstream os;
    os << what << ": expected " << expected << ", got " << actual;
    failures_.push_back(os.str());
  }
  void True(const std::string& what, bool value) {
    if (!value) failures_.push_back(what);
  }
  void Note(std::string note) { notes_.push_back(std::move(note)); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::ostream& operator<<(std::ostream& os, const std::vector<std::int64_t>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

void GapIdealReproduction(Checker& c) {
  const ExamplePair ex = cli::GapIdealExample();
  const AmbientAlgebra& plane = ex.ideal.ambient();
  c.Equal("colength(I)", Length{31}, ex.ideal.Colength());
  c.True("I^2 = (X,Y)^14", Power(ex.ideal, 2) == MonomialIdeal::MaximalPower(plane, 14));
  const Analysis a = Analyze(ex.ideal, ex.reduction);
  c.Equal("red_Q I", 2, a.rd.r);
  c.Equal("e", std::vector<std::int64_t>{49, 21, 0}, a.invariants.e);
  c.Equal("postulation", 1, a.fit.coefficients.postulation);
  c.Equal("northcott slack", Rational(3), VerifyNorthcott(a.invariants).slack);
  c.Equal("thm33 slack", Rational(3), VerifyThm33(a.invariants).slack);
  const DepthInterval depth = DepthBounds(a.invariants);
  c.Equal("depth lower", 0, depth.lower);
  c.Equal("depth upper", 0, depth.upper);
}

void NormalDomainReproduction(Checker& c) {
  for (int s = 1; s <= 3; ++s) {
    const auto start = std::chrono::steady_clock::now();
    const std::string tag = "s=" + std::to_string(s) + " ";
    const ExamplePair ex = cli::NormalDomainExample(s);
    const MonomialIdeal i2 = Power(ex.ideal, 2);
    c.Equal(tag + "l(I^2/QI)", Length{s}, QuotientLength(i2, Product(ex.reduction, ex.ideal)));
    c.True(tag + "I^3 = QI^2", Power(ex.ideal, 3) == Product(ex.reduction, i2));
    const Analysis a = Analyze(ex.ideal, ex.reduction);
    c.Equal(tag + "e", std::vector<std::int64_t>{2 * s + 1, 2 * s, s}, a.invariants.e);
    c.Equal(tag + "postulation", 0, a.fit.coefficients.postulation);
    const VerifierReport thm33 = VerifyThm33(a.invariants);
    c.True(tag + "thm33 equality", thm33.equality);
    c.True(tag + "Sally certificate with i0 = s", FiltrationCertificate(a.sally.s, 1, 2, s));
    c.True(tag + "vv_check(2) false", !VvCheck(a.rd, 2));
    const DepthInterval depth = DepthBounds(a.invariants);
    c.Equal(tag + "depth lower", 1, depth.lower);
    c.Equal(tag + "depth upper", 1, depth.upper);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.True(tag + "runtime under 10 s", secs < 10.0);
  }
}

void MiddleMonomialSweep(Checker& c) {
  const AmbientAlgebra plane = AmbientAlgebra::Polynomial(2);
  int ideals = 0;
  for (int t = 1; t <= 6; ++t) {
    const MonomialIdeal mt = MonomialIdeal::MaximalPower(plane, t);
    const MonomialIdeal q0 = MonomialIdeal::Normalize(plane, {{t, 0}, {0, t}});
    const MonomialIdeal closure_q0 = NewtonClosure(q0);
    c.True("closure(Q0) = m^t, t=" + std::to_string(t), closure_q0 == mt);
    // The LP oracle sees exactly binom(t+1, 2) lattice points outside the
    // Newton polyhedron of Q0.
    const auto outside = oracle::BoxComplement({t + 1, t + 1}, [&](const oracle::Point& p) {
      return oracle::InNewtonPolyhedronLp({{t, 0}, {0, t}}, p);
    });
    c.Equal("LP complement of Q0, t=" + std::to_string(t),
            static_cast<std::size_t>(t * (t + 1) / 2), outside.size());
    for (unsigned mask = 0; mask < (1u << (t - 1)); ++mask) {
      std::vector<Monomial> gens{{t, 0}, {0, t}};
      for (int k = 1; k < t; ++k) {
        if (mask & (1u << (k - 1))) gens.push_back({t - k, k});
      }
      const MonomialIdeal i0 = MonomialIdeal::Normalize(plane, gens);
      const MonomialIdeal closure = NewtonClosure(i0);
      const std::string tag = "t=" + std::to_string(t) + " mask=" + std::to_string(mask);
      c.True(tag + " closure(I0) = m^t", closure == mt);
      const int r = ReductionNumber(closure, q0).r;
      // For t = 1 the closure is Q0 itself, whose reduction number is 0.
      c.Equal(tag + " red_{Q0} closure(I0)", t == 1 ? 0 : 1, r);
      ++ideals;
    }
  }
  c.Note(std::to_string(ideals) + " ideals");
}

void FinalFixture(Checker& c) {
  const VerifierReport r = VerifyThm310(FinalExampleFixture(1, 2));
  c.True("hypotheses hold", r.HypothesesHold());
  c.Equal("slack", Rational(1, 2), r.slack);
  c.Equal("depth upper", 0, r.depth_upper);
}

void RandomPropertySuite(Checker& c) {
  std::mt19937 rng(20261016);
  constexpr int kInstances = 240;
  int with_cubic = 0;
  int closed = 0;
  for (int k = 0; k < kInstances; ++k) {
    testing::RandomPair p = testing::RandomAboveSegment(rng, 7, 5);
    if (k % 6 == 5) p.ideal = NewtonClosure(p.ideal);
    const std::string tag = "instance " + std::to_string(k);
    const ReductionData rd = ReductionNumber(p.ideal, p.reduction);
    AnalysisOptions options;
    options.table_size = std::max(DefaultTableSize(rd.r, 2), rd.r + 5);
    const Analysis a = Analyze(p.ideal, p.reduction, options);
    const IdealInvariants& inv = a.invariants;

    c.True(tag + " prop31 identity n <= r+5", Prop31IdentityCheck(a.rd, a.sally, rd.r + 5));
    // Independent path for the first table entries: brute-force membership.
    const auto gens = testing::ToPoints(p.ideal.generators());
    for (int n = 0; n <= 2; ++n) {
      const std::vector<oracle::Generators> factors(n + 1, gens);
      c.Equal(tag + " l(A/I^" + std::to_string(n + 1) + ") vs oracle",
              oracle::PolynomialCostaircase(factors, 2).size(),
              static_cast<std::size_t>(a.fit.table.values.at(n)));
    }
    const VerifierReport northcott = VerifyNorthcott(inv);
    c.True(tag + " northcott slack >= 0", northcott.slack >= 0);
    c.Equal(tag + " northcott equality iff r <= 1", a.rd.r <= 1, northcott.equality);
    c.Equal(tag + " e0 = colength(Q)", std::int64_t{p.reduction.Colength()}, inv.E(0));
    for (std::size_t n = 0; n < a.sally.s.size(); ++n) {
      c.True(tag + " s = l + c", a.sally.s[n] == a.sally.l[n] + a.sally.c[n]);
      c.True(tag + " l, c >= 0", a.sally.l[n] >= 0 && a.sally.c[n] >= 0);
    }
    if (a.rd.r <= 2) {
      ++with_cubic;
      const VerifierReport thm33 = VerifyThm33(inv);
      const bool certificate = FiltrationCertificate(a.sally.s, 1, 2, a.sally.s.at(1));
      c.Equal(tag + " thm33 equality iff certificate", certificate, thm33.equality);
    }
    if (IsIntegrallyClosed(p.ideal)) {
      ++closed;
      c.True(tag + " integrally closed => itoh", ItohCheck(a.rd));
      if (a.rd.r <= 2) c.Equal(tag + " integrally closed => thm33 slack 0", Rational(0),
                               VerifyThm33(inv).slack);
    }
  }
  c.True("at least one integrally closed instance", closed > 0);
  c.Note(std::to_string(kInstances) + " instances, " + std::to_string(with_cubic) +
         " with I^3 = QI^2, " + std::to_string(closed) + " integrally closed");
}

void FiltrationDemos(Checker& c) {
  for (int m = 1; m <= 4; ++m) {
    for (int d = 2; d <= 3; ++d) {
      const auto steps = ChainFiltrationDemo(m, d, 6);
      c.Equal("chain length m=" + std::to_string(m), static_cast<std::size_t>(m), steps.size());
      for (const auto& step : steps) {
        for (int n = 0; n <= 6; ++n) {
          c.Equal("step delta", BinomBasis(n, d - 1, d - 1), step.before[n] - step.after[n]);
        }
      }
    }
  }
  c.True("example26a_check(6)", Example26aCheck(6));
  std::mt19937 rng(26);
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + k % 2;
    const int t = std::uniform_int_distribution<int>(0, 3)(rng);
    const int i0 = std::uniform_int_distribution<int>(1, 5)(rng);
    const int bump = k % 5 == 0 ? 0 : std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<Length> table;
    for (int n = 0; n < 16; ++n) {
      table.push_back(i0 * BinomBasis(n, -t + d - 1, d - 1) +
                      (n >= t ? bump * BinomBasis(n, -t + d - 2, d - 2) : 0));
    }
    const VerifierReport r = Thm11aCheck(table, t, d, i0);
    const std::string tag = "synthetic table " + std::to_string(k);
    c.True(tag + " hypotheses", r.HypothesesHold());
    c.Equal(tag + " equality iff unperturbed", bump == 0, r.equality);
    c.True(tag + " certificate agrees", r.certificate == std::optional<bool>(r.equality));
    c.True(tag + " slack >= 0", r.slack >= 0);
  }
}

void OracleEquivalences(Checker& c) {
  std::mt19937 rng(77);
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + k % 2;
    const AmbientAlgebra amb = AmbientAlgebra::Polynomial(d);
    const auto ga = testing::RandomPrimaryGenerators(rng, d, 6, 4);
    const auto gb = testing::RandomPrimaryGenerators(rng, d, 6, 4);
    const MonomialIdeal meet = Intersect(MonomialIdeal::Normalize(amb, testing::ToMonomials(ga)),
                                         MonomialIdeal::Normalize(amb, testing::ToMonomials(gb)));
    oracle::ProductMembership in_a({ga});
    oracle::ProductMembership in_b({gb});
    const oracle::Point box = oracle::ComplementBox({ga}, d);
    oracle::Point big(d);
    const oracle::Point box_b = oracle::ComplementBox({gb}, d);
    for (int i = 0; i < d; ++i) big[i] = std::max(box[i], box_b[i]);
    const auto expected = oracle::BoxComplement(
        big, [&](const oracle::Point& p) { return in_a.Contains(p) && in_b.Contains(p); });
    c.Equal("intersection pair " + std::to_string(k), expected.size(),
            testing::ToPointSet(meet.costaircase()).size());
    c.True("intersection pair " + std::to_string(k) + " same points",
           expected == testing::ToPointSet(meet.costaircase()));
  }
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + k % 2;
    const AmbientAlgebra amb = AmbientAlgebra::Polynomial(d);
    const auto gens = testing::RandomPrimaryGenerators(rng, d, 6, 5);
    const MonomialIdeal closure = NewtonClosure(MonomialIdeal::Normalize(amb, testing::ToMonomials(gens)));
    const auto expected = oracle::BoxComplement(oracle::ComplementBox({gens}, d),
                                                [&](const oracle::Point& p) {
                                                  return oracle::InNewtonPolyhedronLp(gens, p);
                                                });
    c.True("newton closure " + std::to_string(k) + " (d=" + std::to_string(d) + ")",
           expected == testing::ToPointSet(closure.costaircase()));
  }
}

int RunAll() {
  const std::vector<Criterion> criteria{
      {1, "gap ideal: colength 31, r=2, e=(49,21,0), slack 3, depth [0,0]", 5.0,
       GapIdealReproduction},
      {2, "normal domain family s=1..3: e=(2s+1,2s,s), equality, depth [1,1]", 30.0,
       NormalDomainReproduction},
      {3, "middle-monomial sweep t<=6: closure m^t, red of closure 1", 60.0,
       MiddleMonomialSweep},
      {4, "non-monomial fixture (m,d)=(1,2): slack 1/2, depth_upper 0", 1.0, FinalFixture},
      {5, "random d=2 property suite", 120.0, RandomPropertySuite},
      {6, "filtration demos and synthetic e1 tables", 60.0, FiltrationDemos},
      {7, "oracle equivalences: intersection and Newton closure", 60.0, OracleEquivalences},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(checker);
    } catch (const std::exception& e) {
      checker.True(std::string("exception: ") + e.what(), false);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= criterion.budget_seconds) {
      checker.True("runtime " + std::to_string(secs) + " s exceeds budget", false);
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2f s", secs);
    std::cout << (checker.ok() ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.name << " (" << timing;
    for (const auto& note : checker.notes()) std::cout << "; " << note;
    std::cout << ")\n";
    for (std::size_t i = 0; i < checker.failures().size() && i < 10; ++i) {
      std::cout << "      " << checker.failures()[i] << '\n';
    }
    if (!checker.ok()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace sallylab

int main() { return sallylab::RunAll(); }
