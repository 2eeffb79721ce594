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

#include "sallylab/error.hpp"

namespace sallylab {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kArityMismatch: return "ArityMismatch";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotInSemigroup: return "NotInSemigroup";
    case ErrorKind::kNotMPrimary: return "NotMPrimary";
    case ErrorKind::kAmbientMismatch: return "AmbientMismatch";
    case ErrorKind::kNotContained: return "NotContained";
    case ErrorKind::kWindowTooShort: return "WindowTooShort";
    case ErrorKind::kNonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorKind::kSemigroupAmbientUnsupported:
      return "SemigroupAmbientUnsupported";
    case ErrorKind::kNotAReduction: return "NotAReduction";
    case ErrorKind::kQNotContained: return "QNotContained";
    case ErrorKind::kQNotParameterShaped: return "QNotParameterShaped";
    case ErrorKind::kHypothesisFailed: return "HypothesisFailed";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
    case ErrorKind::kGoldenMismatch: return "GoldenMismatch";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sallylab
