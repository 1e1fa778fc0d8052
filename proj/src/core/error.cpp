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

#include "qalt/error.hpp"

namespace qalt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TraceConditionViolated: return "TraceConditionViolated";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NonBlockDiagonalResult: return "NonBlockDiagonalResult";
    case ErrorCode::BranchCountMismatch: return "BranchCountMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ControlCapture: return "ControlCapture";
    case ErrorCode::BranchContextMismatch: return "BranchContextMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::KindError: return "KindError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonExhaustiveCase: return "NonExhaustiveCase";
    case ErrorCode::NonConstantBound: return "NonConstantBound";
    case ErrorCode::NonUnitaryBranch: return "NonUnitaryBranch";
    case ErrorCode::NotElaborated: return "NotElaborated";
  }
  return "Unknown";
}

bool is_language_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ControlCapture:
    case ErrorCode::BranchContextMismatch:
    case ErrorCode::UnknownName:
    case ErrorCode::KindError:
    case ErrorCode::DuplicateName:
    case ErrorCode::ArityMismatch:
    case ErrorCode::NonExhaustiveCase:
    case ErrorCode::NonConstantBound:
    case ErrorCode::NonUnitaryBranch:
    case ErrorCode::NotElaborated:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace qalt
