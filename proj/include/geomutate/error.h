// Copyright 2026 The Geomutate Authors
//
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

#ifndef GEOMUTATE_ERROR_H_
#define GEOMUTATE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace geomutate {

enum class ErrorCode {
  // Geometry.
  kUnknownPredicate,
  kRingNotClosed,
  kTooFewCoordinates,
  kNonFiniteCoordinate,
  kUnknownCrs,
  // Interception.
  kUnknownSut,
  kUnknownOperation,
  kArgumentKindMismatch,
  kAlreadyWoven,
  kNoMatchingTarget,
  kStaleHandle,
  kMutantRuntimeError,
  // Operators and mutants.
  kInapplicableArguments,
  kUnknownOperator,
  kUnknownTargetName,
  kNotActive,
  // Corpus.
  kUnknownParcel,
  kDifferentOwner,
  kNotAdjacent,
  kNotRectilinear,
  kInvalidGeofence,
  // Harness and I/O.
  kBaselineRed,
  kNoMutants,
  kMalformedDocument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every domain failure in the library is reported as an Error carrying a
// stable code. Tests and the CLI dispatch on the code, never on the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        cause_(code) {}

  ErrorCode code() const { return code_; }

  // For kMutantRuntimeError, the code of the failure raised under advice.
  // Equal to code() otherwise.
  ErrorCode cause() const { return cause_; }

  // Wraps a failure that escaped an advised invocation.
  static Error MutantRuntime(const std::string& what, ErrorCode cause) {
    Error e(ErrorCode::kMutantRuntimeError, what);
    e.cause_ = cause;
    return e;
  }

 private:
  ErrorCode code_;
  ErrorCode cause_;
};

}  // namespace geomutate

#endif  // GEOMUTATE_ERROR_H_
