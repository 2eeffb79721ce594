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

#include "sallylab/ideal.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_ideals.hpp"
#include "sallylab/error.hpp"

namespace sallylab {
namespace {

const AmbientAlgebra kPlane = AmbientAlgebra::Polynomial(2);

MonomialIdeal Plane(std::vector<Monomial> gens) {
  return MonomialIdeal::Normalize(kPlane, std::move(gens));
}

MonomialIdeal GapIdeal() {
  return Plane({{7, 0}, {6, 1}, {5, 2}, {2, 5}, {1, 6}, {0, 7}});
}

AmbientAlgebra Veronese(int s) {
  std::vector<Monomial> gens;
  for (int i = 0; i <= 2 * s + 1; ++i) gens.push_back({1, i});
  return AmbientAlgebra::Semigroup(gens, true);
}

TEST(Normalize, ExtractsMinimalGenerators) {
  const MonomialIdeal j = Plane({{2, 0}, {1, 1}, {0, 3}, {2, 1}});
  EXPECT_EQ(j.generators(), (std::vector<Monomial>{{0, 3}, {1, 1}, {2, 0}}));
  EXPECT_EQ(j.Colength(), 4);
  EXPECT_EQ(j, Plane(j.generators()));
}

TEST(Normalize, MaximalIdealHasColengthOne) {
  EXPECT_EQ(Plane({{1, 0}, {0, 1}}).Colength(), 1);
}

TEST(Normalize, RejectsNonPrimaryIdeals) {
  try {
    Plane({{1, 0}});
    FAIL() << "expected NotMPrimary";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotMPrimary);
  }
}

TEST(Normalize, RejectsGeneratorsOutsideSemigroup) {
  try {
    MonomialIdeal::Normalize(Veronese(1), {{1, 4}});
    FAIL() << "expected NotInSemigroup";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotInSemigroup);
  }
}

TEST(Colength, GapIdeal) { EXPECT_EQ(GapIdeal().Colength(), 31); }

TEST(Colength, NormalDomainIdeal) {
  for (int s = 1; s <= 3; ++s) {
    std::vector<Monomial> gens;
    for (int i = 0; i <= s; ++i) gens.push_back({1, i});
    gens.push_back({1, 2 * s + 1});
    const MonomialIdeal i = MonomialIdeal::Normalize(Veronese(s), gens);
    EXPECT_EQ(i.Colength(), s + 1);
    std::vector<Monomial> expected{{0, 0}};
    for (int j = s + 1; j <= 2 * s; ++j) expected.push_back({1, j});
    EXPECT_EQ(i.costaircase(), expected);
  }
}

TEST(Colength, MaximalIdealPowersAreTriangular) {
  for (int t = 1; t <= 10; ++t) {
    EXPECT_EQ(MonomialIdeal::MaximalPower(kPlane, t).Colength(), t * (t + 1) / 2);
  }
}

TEST(Product, BasicIdentities) {
  const MonomialIdeal m = MonomialIdeal::MaximalPower(kPlane, 1);
  EXPECT_EQ(Product(m, m), Plane({{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(Power(GapIdeal(), 1), GapIdeal());
  EXPECT_TRUE(Power(GapIdeal(), 0).IsUnit());
  EXPECT_EQ(Power(GapIdeal(), 2), MonomialIdeal::MaximalPower(kPlane, 14));
}

TEST(Product, CubeOfGapIdealIsReducedByPurePowers) {
  const MonomialIdeal i = GapIdeal();
  const MonomialIdeal q = Plane({{7, 0}, {0, 7}});
  EXPECT_EQ(Power(i, 3), Product(q, Power(i, 2)));
  EXPECT_EQ(QuotientLength(Power(i, 2), Product(q, i)), 6);
}

TEST(Product, AmbientMismatchIsReported) {
  const MonomialIdeal space = MonomialIdeal::MaximalPower(AmbientAlgebra::Polynomial(3), 1);
  try {
    Product(GapIdeal(), space);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAmbientMismatch);
  }
}

TEST(Intersect, Examples) {
  const MonomialIdeal j = GapIdeal();
  EXPECT_EQ(Intersect(j, MonomialIdeal::Unit(kPlane)), j);
  EXPECT_EQ(Intersect(Plane({{2, 0}, {0, 1}}), Plane({{1, 0}, {0, 2}})),
            Plane({{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Intersect, SquareMeetsReductionInTheSquare) {
  const AmbientAlgebra a = Veronese(1);
  const MonomialIdeal i = MonomialIdeal::Normalize(a, {{1, 0}, {1, 1}, {1, 3}});
  const MonomialIdeal q = MonomialIdeal::Normalize(a, {{1, 0}, {1, 3}});
  const MonomialIdeal i2 = Power(i, 2);
  EXPECT_EQ(Intersect(i2, q), i2);
  EXPECT_FALSE(i2 == Product(q, i));
  EXPECT_EQ(QuotientLength(i2, Product(q, i)), 1);
}

TEST(Containment, Examples) {
  const MonomialIdeal m = MonomialIdeal::MaximalPower(kPlane, 1);
  EXPECT_TRUE(m.ContainsIdeal(Power(m, 2)));
  EXPECT_FALSE(Power(m, 2).ContainsIdeal(m));
  EXPECT_EQ(QuotientLength(GapIdeal(), GapIdeal()), 0);
  try {
    QuotientLength(Power(m, 2), m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotContained);
  }
}

TEST(FromCostaircase, RejectsSetsThatAreNotOrderIdeals) {
  EXPECT_THROW(MonomialIdeal::FromCostaircase(kPlane, {{1, 0}}), Error);
  EXPECT_EQ(MonomialIdeal::FromCostaircase(kPlane, {{0, 0}}), MonomialIdeal::MaximalPower(kPlane, 1));
}

class RandomIdeals : public ::testing::TestWithParam<int> {};

TEST_P(RandomIdeals, ProductsAgreeWithMembershipOracle) {
  std::mt19937 rng(GetParam());
  const int d = 2 + GetParam() % 2;
  const AmbientAlgebra amb = AmbientAlgebra::Polynomial(d);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testing::RandomPrimaryGenerators(rng, d, 5, 4);
    const auto b = testing::RandomPrimaryGenerators(rng, d, 5, 4);
    const MonomialIdeal ia = MonomialIdeal::Normalize(amb, testing::ToMonomials(a));
    const MonomialIdeal ib = MonomialIdeal::Normalize(amb, testing::ToMonomials(b));
    EXPECT_EQ(testing::ToPointSet(ia.costaircase()), oracle::PolynomialCostaircase({a}, d));
    EXPECT_EQ(testing::ToPointSet(Product(ia, ib).costaircase()),
              oracle::PolynomialCostaircase({a, b}, d));
    EXPECT_EQ(testing::ToPointSet(Power(ia, 3).costaircase()),
              oracle::PolynomialCostaircase({a, a, a}, d));
    const MonomialIdeal meet = Intersect(ia, ib);
    EXPECT_TRUE(meet.ContainsIdeal(Product(ia, ib)));
    EXPECT_TRUE(ia.ContainsIdeal(meet));
    EXPECT_GE(meet.Colength(), ia.Colength());
  }
}

TEST_P(RandomIdeals, GeneratorMembershipAgreesWithCostaircase) {
  std::mt19937 rng(100 + GetParam());
  const MonomialIdeal j =
      MonomialIdeal::Normalize(kPlane, testing::ToMonomials(testing::RandomPrimaryGenerators(rng, 2, 6, 5)));
  for (const auto& v : kPlane.EnumerateUpTo(2 * j.MaxGeneratorGrade())) {
    bool by_generator = false;
    for (const auto& g : j.generators()) by_generator = by_generator || (v - g).IsNonNegative();
    EXPECT_EQ(j.Contains(v), by_generator) << v;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomIdeals, ::testing::Range(1, 9));

TEST(SemigroupIdeals, PowersAgreeWithMembershipOracle) {
  for (int s = 1; s <= 2; ++s) {
    const AmbientAlgebra a = Veronese(s);
    oracle::Generators ring;
    for (int i = 0; i <= 2 * s + 1; ++i) ring.push_back({1, i});
    oracle::Generators gens;
    for (int i = 0; i <= s; ++i) gens.push_back({1, i});
    gens.push_back({1, 2 * s + 1});
    const MonomialIdeal i = MonomialIdeal::Normalize(a, testing::ToMonomials(gens));
    for (int n = 1; n <= 3; ++n) {
      const std::vector<oracle::Generators> factors(n, gens);
      EXPECT_EQ(testing::ToPointSet(Power(i, n).costaircase()),
                oracle::SemigroupCostaircase(factors, ring))
          << "s=" << s << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace sallylab
