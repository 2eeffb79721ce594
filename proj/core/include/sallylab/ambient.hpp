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

#ifndef SALLYLAB_AMBIENT_HPP_
#define SALLYLAB_AMBIENT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "sallylab/monomial.hpp"

namespace sallylab {

enum class AmbientKind { kPolynomial, kSemigroup };

// The monomial coefficient world: a polynomial (or power series) ring in d
// variables, or the affine semigroup ring K[[S]] of a positively graded
// semigroup S in N^k. Cheap to copy; immutable.
class AmbientAlgebra {
 public:
  // K[[x_1..x_d]], d >= 2.
  static AmbientAlgebra Polynomial(int d);

  // K[[S]] with S generated by `generators`. Every generator must be a
  // nonzero vector in N^k with strictly positive first coordinate. The
  // Cohen-Macaulay property is an assertion of the caller and is not checked.
  static AmbientAlgebra Semigroup(std::vector<Monomial> generators,
                                  bool cohen_macaulay);

  AmbientKind kind() const { return impl_->kind; }
  bool is_polynomial() const { return impl_->kind == AmbientKind::kPolynomial; }
  // Krull dimension.
  int dim() const { return impl_->dim; }
  // Length of exponent vectors.
  std::size_t arity() const { return impl_->arity; }
  bool cm_flag() const { return impl_->cm_flag; }

  // Generators of the monoid; their sum-closure is the monomial basis and
  // they generate the maximal ideal. Unit vectors in the polynomial case.
  const std::vector<Monomial>& generators() const { return impl_->generators; }

  // Coordinate sum (polynomial) or first coordinate (semigroup).
  std::int64_t Grade(const Monomial& v) const;
  std::int64_t MaxGeneratorGrade() const { return impl_->max_generator_grade; }

  bool Contains(const Monomial& v) const;

  // All elements of grade <= bound, in lexicographic order.
  std::vector<Monomial> EnumerateUpTo(std::int64_t bound) const;

  // m^t: the ideal of all elements that are sums of t monoid generators,
  // returned as its (not necessarily minimal) generating set.
  std::vector<Monomial> MaximalIdealPowerGenerators(int t) const;

  friend bool operator==(const AmbientAlgebra& a, const AmbientAlgebra& b);

 private:
  struct Impl {
    AmbientKind kind;
    int dim;
    std::size_t arity;
    bool cm_flag;
    std::vector<Monomial> generators;
    std::int64_t max_generator_grade;
  };
  explicit AmbientAlgebra(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Memoizing semigroup membership for a single computation. Not thread-safe;
// create one per task.
class MembershipCache {
 public:
  explicit MembershipCache(const AmbientAlgebra& ambient) : ambient_(ambient) {}
  bool Contains(const Monomial& v);

 private:
  bool ContainsRec(const Monomial& v);

  const AmbientAlgebra& ambient_;
  std::unordered_map<Monomial, bool, MonomialHash> memo_;
};

}  // namespace sallylab

#endif  // SALLYLAB_AMBIENT_HPP_
