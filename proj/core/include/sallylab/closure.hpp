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

#ifndef SALLYLAB_CLOSURE_HPP_
#define SALLYLAB_CLOSURE_HPP_

#include <span>
#include <vector>

#include "sallylab/ideal.hpp"
#include "sallylab/monomial.hpp"

namespace sallylab {

// conv(generators) + R^d_{>=0}.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(std::vector<Monomial> generators);

  // p lies in the polyhedron iff there are lambda >= 0 with sum lambda_i = 1
  // and sum lambda_i g_i <= p. Decided exactly by trying every basis of
  // size d+1 drawn from the generator columns (g_i; 1) and the slack columns
  // (e_j; 0), following Caratheodory.
  bool Contains(const Monomial& p) const;

  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& generators() const { return generators_; }

 private:
  std::vector<Monomial> generators_;
  std::size_t dim_;
};

// The integral closure of a monomial ideal in a polynomial ambient: all
// monomials in the Newton polyhedron. Throws kSemigroupAmbientUnsupported.
MonomialIdeal NewtonClosure(const MonomialIdeal& ideal);

bool IsIntegrallyClosed(const MonomialIdeal& ideal);

}  // namespace sallylab

#endif  // SALLYLAB_CLOSURE_HPP_
