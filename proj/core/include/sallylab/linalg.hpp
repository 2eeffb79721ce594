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

#ifndef SALLYLAB_LINALG_HPP_
#define SALLYLAB_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sallylab/error.hpp"

namespace sallylab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
using Matrix = std::vector<std::vector<T>>;

// "p/q" with q > 0, or "p" when the value is integral.
std::string ToString(const Rational& value);

// Parses the format produced by ToString.
Rational ParseRational(const std::string& text);

namespace detail {

inline std::int64_t Mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kInternalInconsistency, "int64 overflow in elimination");
  }
  return out;
}
inline std::int64_t Sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorKind::kInternalInconsistency, "int64 overflow in elimination");
  }
  return out;
}
inline Integer Mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer Sub(const Integer& a, const Integer& b) { return a - b; }

}  // namespace detail

// Solution of a square system in fraction-free form: x_i = numerators[i] /
// denominator, denominator != 0 (the sign is not normalized).
template <class T>
struct FractionFreeSolution {
  std::vector<T> numerators;
  T denominator;
};

// Bareiss elimination on [a | b]. Returns nullopt when `a` is singular.
template <class T>
std::optional<FractionFreeSolution<T>> BareissSolve(Matrix<T> a,
                                                    std::vector<T> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) {
      throw Error(ErrorKind::kInvalidArgument, "BareissSolve: matrix not square");
    }
    a[i].push_back(std::move(b.at(i)));
  }
  T prev = T(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return std::nullopt;
      std::swap(a[k], a[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        a[i][j] = T(detail::Sub(detail::Mul(a[i][j], a[k][k]),
                                detail::Mul(a[i][k], a[k][j])) /
                    prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // prev is now the determinant of the row-permuted matrix; back-substitute
  // y_i = det * x_i, which is integral by Cramer's rule.
  const T det = prev;
  std::vector<T> y(n, T(0));
  for (std::size_t ii = n; ii-- > 0;) {
    T acc = detail::Mul(det, a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) {
      acc = detail::Sub(acc, detail::Mul(a[ii][j], y[j]));
    }
    y[ii] = T(acc / a[ii][ii]);
  }
  return FractionFreeSolution<T>{std::move(y), det};
}

// Rank of an integer matrix by fraction-free row echelon reduction.
template <class T>
std::size_t BareissRank(Matrix<T> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  T prev = T(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = T(detail::Sub(detail::Mul(m[i][j], m[rank][c]),
                                detail::Mul(m[i][c], m[rank][j])) /
                    prev);
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

// Exact rational solution of a nonsingular integer system.
std::optional<std::vector<Rational>> SolveExact(const Matrix<Integer>& a,
                                                const std::vector<Integer>& b);

}  // namespace sallylab

#endif  // SALLYLAB_LINALG_HPP_
