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

#include <algorithm>
#include <cstdint>

#include "sallylab/error.hpp"
#include "sallylab/linalg.hpp"

namespace sallylab {
namespace {

void RequirePolynomial(const MonomialIdeal& ideal) {
  if (!ideal.ambient().is_polynomial()) {
    throw Error(ErrorKind::kSemigroupAmbientUnsupported,
                "integral closure is only implemented over polynomial ambients");
  }
}

bool IsNonNegativeSolution(const FractionFreeSolution<std::int64_t>& s) {
  const bool positive_den = s.denominator > 0;
  return std::all_of(s.numerators.begin(), s.numerators.end(),
                     [&](std::int64_t x) { return positive_den ? x >= 0 : x <= 0; });
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(std::vector<Monomial> generators)
    : generators_(std::move(generators)),
      dim_(generators_.empty() ? 0 : generators_.front().arity()) {
  if (generators_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "Newton polyhedron of an empty set");
  }
}

bool NewtonPolyhedron::Contains(const Monomial& p) const {
  if (p.arity() != dim_) {
    throw Error(ErrorKind::kArityMismatch, "point arity differs from polyhedron");
  }
  for (const auto& g : generators_) {
    if (g.DividesComponentwise(p)) return true;
  }
  // Columns: generators first, then the d slack directions.
  const std::size_t gens = generators_.size();
  const std::size_t columns = gens + dim_;
  const std::size_t basis_size = dim_ + 1;
  auto column_entry = [&](std::size_t col, std::size_t row) -> std::int64_t {
    if (col < gens) return row < dim_ ? generators_[col][row] : 1;
    return row < dim_ && row == col - gens ? 1 : 0;
  };
  std::vector<std::int64_t> rhs(basis_size, 1);
  for (std::size_t row = 0; row < dim_; ++row) rhs[row] = p[row];

  std::vector<std::size_t> pick(basis_size);
  for (std::size_t i = 0; i < basis_size; ++i) pick[i] = i;
  if (columns < basis_size) return false;
  while (true) {
    // A basis without any generator column cannot satisfy sum lambda = 1.
    if (pick.front() < gens) {
      Matrix<std::int64_t> a(basis_size, std::vector<std::int64_t>(basis_size));
      for (std::size_t row = 0; row < basis_size; ++row) {
        for (std::size_t c = 0; c < basis_size; ++c) {
          a[row][c] = column_entry(pick[c], row);
        }
      }
      if (auto sol = BareissSolve<std::int64_t>(std::move(a), rhs);
          sol && IsNonNegativeSolution(*sol)) {
        return true;
      }
    }
    // Next combination in lexicographic order.
    std::size_t i = basis_size;
    while (i > 0 && pick[i - 1] == columns - basis_size + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < basis_size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return false;
}

MonomialIdeal NewtonClosure(const MonomialIdeal& ideal) {
  RequirePolynomial(ideal);
  const NewtonPolyhedron polyhedron(ideal.generators());
  std::vector<Monomial> outside;
  for (const auto& p : ideal.costaircase()) {
    if (!polyhedron.Contains(p)) outside.push_back(p);
  }
  return MonomialIdeal::FromCostaircase(ideal.ambient(), std::move(outside));
}

bool IsIntegrallyClosed(const MonomialIdeal& ideal) {
  return NewtonClosure(ideal) == ideal;
}

}  // namespace sallylab
