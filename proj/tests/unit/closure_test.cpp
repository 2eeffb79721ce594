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

#include "sallylab/closure.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_ideals.hpp"
#include "sallylab/error.hpp"
#include "sallylab/sally.hpp"

namespace sallylab {
namespace {

const AmbientAlgebra kPlane = AmbientAlgebra::Polynomial(2);

MonomialIdeal Plane(std::vector<Monomial> gens) {
  return MonomialIdeal::Normalize(kPlane, std::move(gens));
}

TEST(NewtonClosure, PurePowersCloseToMaximalPower) {
  EXPECT_EQ(NewtonClosure(Plane({{7, 0}, {0, 7}})), MonomialIdeal::MaximalPower(kPlane, 7));
}

TEST(NewtonClosure, MaximalPowersAreClosed) {
  for (int t = 1; t <= 6; ++t) {
    EXPECT_TRUE(IsIntegrallyClosed(MonomialIdeal::MaximalPower(kPlane, t)));
  }
  EXPECT_TRUE(IsIntegrallyClosed(Plane({{2, 0}, {1, 1}, {0, 2}})));
}

TEST(NewtonClosure, GapIdealIsNotClosed) {
  const MonomialIdeal i = Plane({{7, 0}, {6, 1}, {5, 2}, {2, 5}, {1, 6}, {0, 7}});
  EXPECT_FALSE(IsIntegrallyClosed(i));
  EXPECT_EQ(NewtonClosure(i), MonomialIdeal::MaximalPower(kPlane, 7));
}

TEST(NewtonClosure, AgreesWithLpOracleOnExample) {
  const oracle::Generators gens{{4, 0}, {1, 1}, {0, 3}};
  const MonomialIdeal closure = NewtonClosure(Plane(testing::ToMonomials(gens)));
  const auto expected = oracle::BoxComplement(
      {4, 3}, [&](const oracle::Point& p) { return oracle::InNewtonPolyhedronLp(gens, p); });
  EXPECT_EQ(testing::ToPointSet(closure.costaircase()), expected);
}

TEST(NewtonClosure, SemigroupAmbientIsUnsupported) {
  const auto a = AmbientAlgebra::Semigroup({{1, 0}, {1, 1}, {1, 2}, {1, 3}}, true);
  try {
    NewtonClosure(MonomialIdeal::MaximalPower(a, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSemigroupAmbientUnsupported);
  }
}

TEST(NewtonPolyhedron, MembershipMatchesLpPointwise) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 2;
    const auto gens = testing::RandomPrimaryGenerators(rng, d, 5, 5);
    const NewtonPolyhedron poly(testing::ToMonomials(gens));
    oracle::Point box(d, 6);
    oracle::BoxComplement(box, [&](const oracle::Point& p) {
      EXPECT_EQ(poly.Contains(Monomial(p)), oracle::InNewtonPolyhedronLp(gens, p));
      return true;
    });
  }
}

class ClosureProperties : public ::testing::TestWithParam<int> {};

TEST_P(ClosureProperties, ExtensiveIdempotentMonotone) {
  std::mt19937 rng(GetParam());
  const int d = 2 + GetParam() % 2;
  const auto amb = AmbientAlgebra::Polynomial(d);
  for (int trial = 0; trial < 5; ++trial) {
    const MonomialIdeal i =
        MonomialIdeal::Normalize(amb, testing::ToMonomials(testing::RandomPrimaryGenerators(rng, d, 6, 4)));
    const MonomialIdeal c = NewtonClosure(i);
    EXPECT_TRUE(c.ContainsIdeal(i));
    EXPECT_EQ(NewtonClosure(c), c);
    std::vector<Monomial> gens = i.generators();
    gens.push_back(Monomial::Unit(d, 0) + Monomial::Unit(d, d - 1));
    const MonomialIdeal bigger = MonomialIdeal::Normalize(amb, gens);
    EXPECT_TRUE(NewtonClosure(bigger).ContainsIdeal(c));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ClosureProperties, ::testing::Range(1, 7));

TEST(MiddleMonomialFamily, ClosureIsMaximalPowerWithReductionOne) {
  for (int t = 1; t <= 8; ++t) {
    const MonomialIdeal q0 = Plane({{t, 0}, {0, t}});
    const MonomialIdeal mt = MonomialIdeal::MaximalPower(kPlane, t);
    for (unsigned mask = 0; mask < (1u << (t - 1)); ++mask) {
      std::vector<Monomial> gens{{t, 0}, {0, t}};
      for (int k = 1; k < t; ++k) {
        if (mask & (1u << (k - 1))) gens.push_back({t - k, k});
      }
      const MonomialIdeal i0 = Plane(gens);
      ASSERT_EQ(NewtonClosure(i0), mt) << "t=" << t << " mask=" << mask;
    }
    EXPECT_EQ(NewtonClosure(q0), mt);
    EXPECT_EQ(ReductionNumber(mt, q0).r, t == 1 ? 0 : 1);
  }
}

}  // namespace
}  // namespace sallylab
