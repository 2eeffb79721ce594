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

#include "sallylab/monomial.hpp"

#include <sstream>
#include <unordered_set>

#include <gtest/gtest.h>

namespace sallylab {
namespace {

TEST(Monomial, Arithmetic) {
  const Monomial a{2, 1};
  const Monomial b{1, 3};
  EXPECT_EQ(a + b, (Monomial{3, 4}));
  EXPECT_EQ(b - a, (Monomial{-1, 2}));
  EXPECT_FALSE((b - a).IsNonNegative());
  EXPECT_EQ(a.Scaled(3), (Monomial{6, 3}));
  EXPECT_EQ(a.TotalDegree(), 3);
  EXPECT_TRUE(Monomial::Zero(3).IsZero());
  EXPECT_EQ(Monomial::Unit(3, 1), (Monomial{0, 1, 0}));
}

TEST(Monomial, DivisibilityIsComponentwise) {
  EXPECT_TRUE((Monomial{1, 2}).DividesComponentwise(Monomial{1, 5}));
  EXPECT_FALSE((Monomial{2, 0}).DividesComponentwise(Monomial{1, 5}));
}

TEST(Monomial, LexicographicOrder) {
  EXPECT_LT((Monomial{0, 7}), (Monomial{1, 0}));
  EXPECT_LT((Monomial{1, 0}), (Monomial{1, 1}));
}

TEST(Monomial, PrintsAsTuple) {
  std::ostringstream os;
  os << Monomial{3, 0, 2};
  EXPECT_EQ(os.str(), "(3,0,2)");
}

TEST(Monomial, HashDistinguishesValues) {
  std::unordered_set<Monomial, MonomialHash> set{{1, 2}, {2, 1}, {1, 2}};
  EXPECT_EQ(set.size(), 2u);
}

}  // namespace
}  // namespace sallylab
