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

#include "sallylab/linalg.hpp"

#include <cctype>

namespace sallylab {

std::string ToString(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (part.size() == start) {
      throw Error(ErrorKind::kParseError, "empty integer in '" + text + "'");
    }
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw Error(ErrorKind::kParseError, "bad rational '" + text + "'");
      }
    }
    return Integer(part);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorKind::kParseError, "bad denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::optional<std::vector<Rational>> SolveExact(const Matrix<Integer>& a,
                                                const std::vector<Integer>& b) {
  auto ff = BareissSolve<Integer>(a, b);
  if (!ff) return std::nullopt;
  // cpp_rational rejects negative denominators, so move the sign up.
  const int sign = ff->denominator < 0 ? -1 : 1;
  const Integer den = sign * ff->denominator;
  std::vector<Rational> x;
  x.reserve(ff->numerators.size());
  for (const auto& num : ff->numerators) {
    x.emplace_back(sign * num, den);
  }
  return x;
}

}  // namespace sallylab
