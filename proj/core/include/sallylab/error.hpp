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

#ifndef SALLYLAB_ERROR_HPP_
#define SALLYLAB_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sallylab {

enum class ErrorKind {
  kArityMismatch,
  kInvalidArgument,
  kNotInSemigroup,
  kNotMPrimary,
  kAmbientMismatch,
  kNotContained,
  kWindowTooShort,
  kNonIntegerCoefficient,
  kSemigroupAmbientUnsupported,
  kNotAReduction,
  kQNotContained,
  kQNotParameterShaped,
  kHypothesisFailed,
  kInternalInconsistency,
  kGoldenMismatch,
  kParseError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// command-line front end can map it onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sallylab

#endif  // SALLYLAB_ERROR_HPP_
