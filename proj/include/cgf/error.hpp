// Copyright 2026 The cgf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace cgf {

enum class ErrorCode {
  kNotAUnit,
  kNotPrime,
  kZeroElement,
  kEmptySet,
  kInvalidOrder,
  kInvalidFunction,
  kNotSubadditive,
  kIdenticallyZero,
  kOriginNotZero,
  kDimensionCap,
  kNotNondecreasing,
  kNotMinimal,
  kOutOfRange,
  kZeroCoordinate,
  kGridMismatch,
  kRhsMismatch,
  kNotInClassG,
  kParse,
  kValidation,
  kInternal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kInvalidOrder: return "InvalidOrder";
    case ErrorCode::kInvalidFunction: return "InvalidFunction";
    case ErrorCode::kNotSubadditive: return "NotSubadditive";
    case ErrorCode::kIdenticallyZero: return "IdenticallyZero";
    case ErrorCode::kOriginNotZero: return "OriginNotZero";
    case ErrorCode::kDimensionCap: return "DimensionCap";
    case ErrorCode::kNotNondecreasing: return "NotNondecreasing";
    case ErrorCode::kNotMinimal: return "NotMinimal";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kRhsMismatch: return "RhsMismatch";
    case ErrorCode::kNotInClassG: return "NotInClassG";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kValidation: return "Validation";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

// All library failures are reported through this exception; `code()` is the
// stable, machine-checkable part and `what()` carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cgf
