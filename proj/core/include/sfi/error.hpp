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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sfi {

enum class ErrorCode {
  kNonPrime,
  kTooLarge,
  kNoPrimitivePolynomial,
  kInvalidModulus,
  kDivisionByZero,
  kNotABasis,
  kNoSolution,
  kDimensionMismatch,
  kNotASemifield,
  kNotBilinear,
  kSizeMismatch,
  kNotASubfield,
  kSingularMap,
  kBudgetInvalid,
  kSearchSpaceTooLarge,
  kNoValidC,
  kInvalidC,
  kInvalidArgument,
  kDegenerateU,
  kDegenerateW,
  kTooManySpreadElements,
  kParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in one of the text formats; `line` is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sfi
