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

#ifndef SALLYLAB_IDEAL_HPP_
#define SALLYLAB_IDEAL_HPP_

#include <cstdint>
#include <vector>

#include "sallylab/ambient.hpp"
#include "sallylab/monomial.hpp"

namespace sallylab {

// A length l_A(.) of a finite-length module: a count of standard monomials.
using Length = std::int64_t;

// An m-primary monomial ideal J of an ambient algebra A, held as its minimal
// generators together with its co-staircase (the finite set of monomials of A
// outside J). Both are computed once at construction.
class MonomialIdeal {
 public:
  static constexpr std::int64_t kDefaultGradeCap = 512;

  // Extracts the minimal generators of the ideal generated by `raw` and
  // computes its co-staircase. Throws kNotInSemigroup for a generator outside
  // the ambient, kNotMPrimary when the ideal has infinite colength (detected
  // exactly, or by exceeding `grade_cap`).
  static MonomialIdeal Normalize(const AmbientAlgebra& ambient,
                                 std::vector<Monomial> raw,
                                 std::int64_t grade_cap = kDefaultGradeCap);

  static MonomialIdeal Unit(const AmbientAlgebra& ambient);

  // m^t.
  static MonomialIdeal MaximalPower(const AmbientAlgebra& ambient, int t);

  // The ideal whose co-staircase is `costaircase`, which must be a finite
  // order ideal of the monoid (closed under taking summands).
  static MonomialIdeal FromCostaircase(const AmbientAlgebra& ambient,
                                       std::vector<Monomial> costaircase);

  const AmbientAlgebra& ambient() const { return ambient_; }
  // Minimal generators in lexicographic order.
  const std::vector<Monomial>& generators() const { return generators_; }
  // Standard monomials in lexicographic order.
  const std::vector<Monomial>& costaircase() const { return costaircase_; }

  // l_A(A/J).
  Length Colength() const { return static_cast<Length>(costaircase_.size()); }

  bool IsUnit() const { return costaircase_.empty(); }
  bool Contains(const Monomial& v) const;
  // other ⊆ *this.
  bool ContainsIdeal(const MonomialIdeal& other) const;
  std::int64_t MaxGeneratorGrade() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  MonomialIdeal(AmbientAlgebra ambient, std::vector<Monomial> generators,
                std::vector<Monomial> costaircase)
      : ambient_(std::move(ambient)),
        generators_(std::move(generators)),
        costaircase_(std::move(costaircase)) {}

  AmbientAlgebra ambient_;
  std::vector<Monomial> generators_;
  std::vector<Monomial> costaircase_;
};

MonomialIdeal Product(const MonomialIdeal& a, const MonomialIdeal& b);
// power(J, 0) is the unit ideal.
MonomialIdeal Power(const MonomialIdeal& j, int n);
MonomialIdeal Intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// l_A(big/small); throws kNotContained unless small ⊆ big.
Length QuotientLength(const MonomialIdeal& big, const MonomialIdeal& small);

}  // namespace sallylab

#endif  // SALLYLAB_IDEAL_HPP_
