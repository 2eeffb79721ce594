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

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>

#include "sallylab/error.hpp"

namespace sallylab {
namespace {

void CheckSameAmbient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ambient() == b.ambient())) {
    throw Error(ErrorKind::kAmbientMismatch, "ideals live in different ambients");
  }
}

std::string Describe(const Monomial& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

// Tests v ∈ (gens) inside one computation, sharing a semigroup memo.
class GeneratorMembership {
 public:
  GeneratorMembership(const AmbientAlgebra& ambient,
                      const std::vector<Monomial>& gens)
      : ambient_(ambient), gens_(gens), cache_(ambient) {}

  bool InIdeal(const Monomial& v) {
    for (const auto& g : gens_) {
      if (Divides(g, v)) return true;
    }
    return false;
  }

  // v - g lies in the monoid.
  bool Divides(const Monomial& g, const Monomial& v) {
    if (ambient_.is_polynomial()) return g.DividesComponentwise(v);
    if (g[0] > v[0]) return false;
    return cache_.Contains(v - g);
  }

 private:
  const AmbientAlgebra& ambient_;
  const std::vector<Monomial>& gens_;
  MembershipCache cache_;
};

std::vector<Monomial> MinimalElements(const AmbientAlgebra& ambient,
                                      std::vector<Monomial> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [&](const Monomial& a, const Monomial& b) {
              const auto ga = ambient.Grade(a);
              const auto gb = ambient.Grade(b);
              return ga != gb ? ga < gb : a < b;
            });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<Monomial> kept;
  GeneratorMembership divides(ambient, kept);
  for (auto& c : candidates) {
    // Divisors have smaller grade (or are equal), so they were seen already.
    if (!divides.InIdeal(c)) kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal MonomialIdeal::Normalize(const AmbientAlgebra& ambient,
                                       std::vector<Monomial> raw,
                                       std::int64_t grade_cap) {
  {
    MembershipCache cache(ambient);
    for (const auto& g : raw) {
      if (g.arity() != ambient.arity()) {
        throw Error(ErrorKind::kArityMismatch,
                    "generator " + Describe(g) + " has wrong arity");
      }
      if (!cache.Contains(g)) {
        throw Error(ErrorKind::kNotInSemigroup,
                    "generator " + Describe(g) + " is not a monomial of the ambient");
      }
    }
  }
  std::vector<Monomial> gens = MinimalElements(ambient, std::move(raw));
  GeneratorMembership membership(ambient, gens);

  // m-primary iff every generator of the maximal ideal has a power in J.
  for (const auto& s : ambient.generators()) {
    bool found = false;
    const std::int64_t grade = ambient.Grade(s);
    for (std::int64_t n = 1; n * grade <= grade_cap; ++n) {
      if (membership.InIdeal(s.Scaled(n))) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::kNotMPrimary,
                  "no power of the monoid generator " + Describe(s) +
                      " up to grade " + std::to_string(grade_cap) +
                      " lies in the ideal");
    }
  }

  // The complement of J is closed under taking summands, so it is reached
  // from 0 by adding monoid generators through non-members only.
  std::vector<Monomial> costaircase;
  const Monomial zero = Monomial::Zero(ambient.arity());
  if (!membership.InIdeal(zero)) {
    std::unordered_set<Monomial, MonomialHash> seen{zero};
    std::deque<Monomial> frontier{zero};
    while (!frontier.empty()) {
      Monomial v = std::move(frontier.front());
      frontier.pop_front();
      for (const auto& s : ambient.generators()) {
        Monomial w = v + s;
        if (!seen.insert(w).second) continue;
        if (membership.InIdeal(w)) continue;
        if (ambient.Grade(w) > grade_cap) {
          throw Error(ErrorKind::kNotMPrimary,
                      "co-staircase exceeds grade cap " + std::to_string(grade_cap));
        }
        frontier.push_back(std::move(w));
      }
      costaircase.push_back(std::move(v));
    }
    std::sort(costaircase.begin(), costaircase.end());
  }
  return MonomialIdeal(ambient, std::move(gens), std::move(costaircase));
}

MonomialIdeal MonomialIdeal::Unit(const AmbientAlgebra& ambient) {
  return MonomialIdeal(ambient, {Monomial::Zero(ambient.arity())}, {});
}

MonomialIdeal MonomialIdeal::MaximalPower(const AmbientAlgebra& ambient, int t) {
  return Normalize(ambient, ambient.MaximalIdealPowerGenerators(t));
}

MonomialIdeal MonomialIdeal::FromCostaircase(const AmbientAlgebra& ambient,
                                             std::vector<Monomial> costaircase) {
  if (costaircase.empty()) return Unit(ambient);
  std::sort(costaircase.begin(), costaircase.end());
  costaircase.erase(std::unique(costaircase.begin(), costaircase.end()),
                    costaircase.end());
  // Every minimal generator is c + s for a standard monomial c and a monoid
  // generator s.
  std::vector<Monomial> border;
  for (const auto& c : costaircase) {
    for (const auto& s : ambient.generators()) {
      Monomial w = c + s;
      if (!std::binary_search(costaircase.begin(), costaircase.end(), w)) {
        border.push_back(std::move(w));
      }
    }
  }
  MonomialIdeal out = Normalize(ambient, std::move(border));
  if (out.costaircase_ != costaircase) {
    throw Error(ErrorKind::kInvalidArgument,
                "co-staircase is not closed under taking summands");
  }
  return out;
}

bool MonomialIdeal::Contains(const Monomial& v) const {
  if (!ambient_.Contains(v)) return false;
  return !std::binary_search(costaircase_.begin(), costaircase_.end(), v);
}

bool MonomialIdeal::ContainsIdeal(const MonomialIdeal& other) const {
  CheckSameAmbient(*this, other);
  return std::includes(other.costaircase_.begin(), other.costaircase_.end(),
                       costaircase_.begin(), costaircase_.end());
}

std::int64_t MonomialIdeal::MaxGeneratorGrade() const {
  std::int64_t out = 0;
  for (const auto& g : generators_) out = std::max(out, ambient_.Grade(g));
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.ambient_ == b.ambient_ && a.costaircase_ == b.costaircase_;
}

MonomialIdeal Product(const MonomialIdeal& a, const MonomialIdeal& b) {
  CheckSameAmbient(a, b);
  std::vector<Monomial> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) sums.push_back(g + h);
  }
  return MonomialIdeal::Normalize(a.ambient(), std::move(sums));
}

MonomialIdeal Power(const MonomialIdeal& j, int n) {
  if (n < 0) throw Error(ErrorKind::kInvalidArgument, "negative ideal power");
  MonomialIdeal out = MonomialIdeal::Unit(j.ambient());
  for (int i = 0; i < n; ++i) out = Product(out, j);
  return out;
}

MonomialIdeal Intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  CheckSameAmbient(a, b);
  std::vector<Monomial> joined;
  std::set_union(a.costaircase().begin(), a.costaircase().end(),
                 b.costaircase().begin(), b.costaircase().end(),
                 std::back_inserter(joined));
  return MonomialIdeal::FromCostaircase(a.ambient(), std::move(joined));
}

Length QuotientLength(const MonomialIdeal& big, const MonomialIdeal& small) {
  if (!big.ContainsIdeal(small)) {
    throw Error(ErrorKind::kNotContained,
                "quotient length needs the second ideal inside the first");
  }
  return small.Colength() - big.Colength();
}

}  // namespace sallylab
