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

#include "sallylab/ambient.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "sallylab/error.hpp"
#include "sallylab/linalg.hpp"

namespace sallylab {
namespace {

void CheckArity(const AmbientAlgebra& ambient, const Monomial& v) {
  if (v.arity() != ambient.arity()) {
    throw Error(ErrorKind::kArityMismatch,
                "expected " + std::to_string(ambient.arity()) +
                    " coordinates, got " + std::to_string(v.arity()));
  }
}

}  // namespace

AmbientAlgebra AmbientAlgebra::Polynomial(int d) {
  if (d < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "polynomial ambient needs d >= 2, got " + std::to_string(d));
  }
  std::vector<Monomial> gens;
  for (int i = 0; i < d; ++i) {
    gens.push_back(Monomial::Unit(static_cast<std::size_t>(d),
                                  static_cast<std::size_t>(i)));
  }
  std::sort(gens.begin(), gens.end());
  return AmbientAlgebra(std::make_shared<const Impl>(
      Impl{AmbientKind::kPolynomial, d, static_cast<std::size_t>(d), true,
           std::move(gens), 1}));
}

AmbientAlgebra AmbientAlgebra::Semigroup(std::vector<Monomial> generators,
                                         bool cohen_macaulay) {
  if (generators.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "semigroup needs generators");
  }
  const std::size_t k = generators.front().arity();
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "empty generator vector");
  std::int64_t max_grade = 0;
  for (const auto& g : generators) {
    if (g.arity() != k) {
      throw Error(ErrorKind::kArityMismatch, "semigroup generators differ in length");
    }
    if (!g.IsNonNegative()) {
      throw Error(ErrorKind::kInvalidArgument, "semigroup generators must lie in N^k");
    }
    if (g[0] <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "semigroup generators need positive first coordinate");
    }
    max_grade = std::max(max_grade, g[0]);
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  Matrix<Integer> rows;
  for (const auto& g : generators) {
    std::vector<Integer> row;
    for (auto e : g.exponents()) row.emplace_back(e);
    rows.push_back(std::move(row));
  }
  const int rank = static_cast<int>(BareissRank(std::move(rows)));
  return AmbientAlgebra(std::make_shared<const Impl>(
      Impl{AmbientKind::kSemigroup, rank, k, cohen_macaulay,
           std::move(generators), max_grade}));
}

std::int64_t AmbientAlgebra::Grade(const Monomial& v) const {
  CheckArity(*this, v);
  return is_polynomial() ? v.TotalDegree() : v[0];
}

bool AmbientAlgebra::Contains(const Monomial& v) const {
  MembershipCache cache(*this);
  return cache.Contains(v);
}

std::vector<Monomial> AmbientAlgebra::EnumerateUpTo(std::int64_t bound) const {
  std::set<Monomial> seen;
  if (bound < 0) return {};
  std::deque<Monomial> frontier{Monomial::Zero(arity())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Monomial v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators()) {
      Monomial w = v + g;
      if (Grade(w) > bound) continue;
      if (seen.insert(w).second) frontier.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Monomial> AmbientAlgebra::MaximalIdealPowerGenerators(int t) const {
  if (t < 0) throw Error(ErrorKind::kInvalidArgument, "negative power");
  std::set<Monomial> layer{Monomial::Zero(arity())};
  for (int step = 0; step < t; ++step) {
    std::set<Monomial> next;
    for (const auto& v : layer) {
      for (const auto& g : generators()) next.insert(v + g);
    }
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

bool operator==(const AmbientAlgebra& a, const AmbientAlgebra& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->arity == b.impl_->arity &&
         a.impl_->cm_flag == b.impl_->cm_flag &&
         a.impl_->generators == b.impl_->generators;
}

bool MembershipCache::Contains(const Monomial& v) {
  CheckArity(ambient_, v);
  if (!v.IsNonNegative()) return false;
  if (ambient_.is_polynomial()) return true;
  return ContainsRec(v);
}

bool MembershipCache::ContainsRec(const Monomial& v) {
  if (v.IsZero()) return true;
  if (!v.IsNonNegative() || v[0] <= 0) return false;
  if (auto it = memo_.find(v); it != memo_.end()) return it->second;
  bool found = false;
  for (const auto& g : ambient_.generators()) {
    if (g[0] <= v[0] && ContainsRec(v - g)) {
      found = true;
      break;
    }
  }
  memo_.emplace(v, found);
  return found;
}

}  // namespace sallylab
