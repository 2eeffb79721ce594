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

#include <algorithm>
#include <numeric>
#include <ostream>

#include "sallylab/error.hpp"

namespace sallylab {
namespace {

void CheckArity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorKind::kArityMismatch, "exponent vectors of different length");
  }
}

}  // namespace

bool Monomial::IsZero() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::int64_t e) { return e == 0; });
}

bool Monomial::IsNonNegative() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](std::int64_t e) { return e >= 0; });
}

std::int64_t Monomial::TotalDegree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::int64_t{0});
}

bool Monomial::DividesComponentwise(const Monomial& other) const {
  CheckArity(*this, other);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator+(const Monomial& other) const {
  CheckArity(*this, other);
  std::vector<std::int64_t> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = exponents_[i] + other.exponents_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::operator-(const Monomial& other) const {
  CheckArity(*this, other);
  std::vector<std::int64_t> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = exponents_[i] - other.exponents_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::Scaled(std::int64_t factor) const {
  std::vector<std::int64_t> out(exponents_);
  for (auto& e : out) e *= factor;
  return Monomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  os << '(';
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (i) os << ',';
    os << m[i];
  }
  return os << ')';
}

}  // namespace sallylab
