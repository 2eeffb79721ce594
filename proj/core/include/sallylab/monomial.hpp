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

#ifndef SALLYLAB_MONOMIAL_HPP_
#define SALLYLAB_MONOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace sallylab {

// An exponent vector. In a polynomial ambient it is the monomial
// x_1^{v_1}...x_d^{v_d}; in a semigroup ambient it is the coordinate vector of
// a semigroup element. Ordered lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int64_t> exponents)
      : exponents_(std::move(exponents)) {}
  Monomial(std::initializer_list<std::int64_t> exponents)
      : exponents_(exponents) {}

  static Monomial Zero(std::size_t arity) {
    return Monomial(std::vector<std::int64_t>(arity, 0));
  }
  static Monomial Unit(std::size_t arity, std::size_t index) {
    Monomial m = Zero(arity);
    m.exponents_[index] = 1;
    return m;
  }

  std::size_t arity() const { return exponents_.size(); }
  std::int64_t operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const std::int64_t> exponents() const { return exponents_; }

  bool IsZero() const;
  bool IsNonNegative() const;
  std::int64_t TotalDegree() const;

  // Componentwise order; this is divisibility in a polynomial ambient.
  bool DividesComponentwise(const Monomial& other) const;

  Monomial operator+(const Monomial& other) const;
  Monomial operator-(const Monomial& other) const;
  Monomial Scaled(std::int64_t factor) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::int64_t> exponents_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int64_t e : m.exponents()) {
      h ^= std::hash<std::int64_t>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace sallylab

#endif  // SALLYLAB_MONOMIAL_HPP_
