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

#include <ostream>
#include <string>
#include <vector>

namespace qalt::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kLanguageError = 1,
  kSemanticError = 2,
  kIoError = 3,
  /// equiv / order ran but the verdict is false.
  kVerdictFalse = 4,
  kUsageError = 64,
};

/// Runs `qalt <args...>` (args exclude the program name), writing the
/// result document to out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalt::cli
