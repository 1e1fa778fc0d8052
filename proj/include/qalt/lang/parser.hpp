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

#include <string>
#include <string_view>

#include "qalt/lang/ast.hpp"

namespace qalt::lang {

/// Parses program text. Throws Error(SyntaxError) at the first problem,
/// with its line and column in the message.
///
///   program := stmt*
///   stmt    := "skip"
///            | "new" ("qbit" | "bit") name ("," name)*
///            | name ("," name)* "*=" gate
///            | "discard" name
///            | "measure" name "then" block "else" block
///            | "if" name "then" block "else" block
///            | "case" "(" name ("," name)* ")" "of" arm+
///            | "for" IDENT "=" index "to" index block
///   arm     := "|" (BITSTRING | IDENT | "_") ">" "->" block
///   block   := "{" stmt* "}"
///   name    := IDENT ("[" index "]")?
///   gate    := I | X | Y | Z | H | S | T | "Rk" "(" index ")"
///            | "Phase" "(" real ")" | "Uf" "(" BITSTRING "," index ")"
///            | "[" row ("," row)* "]"
///
/// `new qbit a, b` allocates so that a ends up as the leading factor,
/// i.e. it reads as `new qbit b; new qbit a`. An empty block `{ }` parses
/// as `{ skip }`. Statements may be separated by `;`; `//` starts a comment.
Program parse(std::string_view text);

/// Canonical source text; parse(print(p)) == p.
std::string print(const Program& program);
std::string print(const Block& block, int indent = 0);
std::string print(const IndexExpr& expr);
std::string print(const GateExpr& gate);

}  // namespace qalt::lang
