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

#include <vector>

#include "qalt/lang/ast.hpp"
#include "qalt/lang/context.hpp"

namespace qalt::lang {

struct TypecheckOptions {
  /// Reject allocation, discarding and measurement inside the branches of a
  /// quantum if / case (closed-system alternation only).
  bool require_unitary_branches = false;
};

struct StmtTyping {
  Context input;
  Context output;
};

struct TypedProgram {
  Program program;
  Context input;
  Context output;
  /// One entry per top-level statement.
  std::vector<StmtTyping> statements;
};

/// Checks declaration-before-use, kinds, that the branches of a quantum if
/// or case never mention their controls, and that both branches of every
/// conditional end in the same context. Loops are checked by unrolling.
///
/// Errors: ControlCapture, BranchContextMismatch, UnknownName, KindError,
/// DuplicateName, ArityMismatch, NonExhaustiveCase, NonConstantBound,
/// NonUnitaryBranch.
TypedProgram typecheck(const Program& program, const Context& initial,
                       const TypecheckOptions& options = {});

/// Context after one statement. Throws as typecheck.
Context check_stmt(const Stmt& stmt, const Context& ctx,
                   const TypecheckOptions& options = {});

/// Unrolls loops, folds indices into names, resolves Rk arguments and
/// oracles (to matrix literals) and expands case arms to the 2^n labels in
/// ascending order. Throws NonConstantBound.
Program elaborate(const TypedProgram& typed);

/// True when the program contains no loops, indexed names, binder or
/// default arms, oracles or symbolic Rk arguments.
bool is_core(const Program& program);

}  // namespace qalt::lang
