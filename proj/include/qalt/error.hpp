// Copyright 2026 The qalt Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qalt {

enum class ErrorCode {
  // numeric / semantic
  DimensionMismatch,
  TraceConditionViolated,
  SignatureMismatch,
  NonBlockDiagonalResult,
  BranchCountMismatch,
  EmptySet,
  InvalidArgument,
  UnsupportedArity,
  // language front end
  SyntaxError,
  ControlCapture,
  BranchContextMismatch,
  UnknownName,
  KindError,
  DuplicateName,
  ArityMismatch,
  NonExhaustiveCase,
  NonConstantBound,
  NonUnitaryBranch,
  NotElaborated,
};

std::string_view to_string(ErrorCode code);

/// True for errors raised by the parser, typechecker or elaborator.
bool is_language_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// Message without the leading "<Code>: " tag.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace qalt
