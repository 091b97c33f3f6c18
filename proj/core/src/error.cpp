// Copyright 2026 The sfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfi/error.hpp"

namespace sfi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoPrimitivePolynomial: return "NoPrimitivePolynomial";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotASemifield: return "NotASemifield";
    case ErrorCode::kNotBilinear: return "NotBilinear";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kNotASubfield: return "NotASubfield";
    case ErrorCode::kSingularMap: return "SingularMap";
    case ErrorCode::kBudgetInvalid: return "BudgetInvalid";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kNoValidC: return "NoValidC";
    case ErrorCode::kInvalidC: return "InvalidC";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDegenerateU: return "DegenerateU";
    case ErrorCode::kDegenerateW: return "DegenerateW";
    case ErrorCode::kTooManySpreadElements: return "TooManySpreadElements";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorCode::kParseError,
            line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace sfi
