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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qalt/linalg.hpp"
#include "qalt/truth_table.hpp"

namespace qalt::lang {

/// Position of a construct in its source text (1-based). Locations never
/// take part in AST equality.
struct SourceLoc {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

std::string describe(const SourceLoc& loc);

/// Meta-level integer expression over loop variables and case binders.
struct IndexExpr {
  enum class Op { Literal, Var, Add, Sub, Mul, Neg };

  Op op = Op::Literal;
  long long value = 0;
  std::string var;
  std::vector<IndexExpr> args;

  static IndexExpr literal(long long v);
  static IndexExpr variable(std::string name);
  static IndexExpr binary(Op op, IndexExpr lhs, IndexExpr rhs);
  static IndexExpr negate(IndexExpr e);

  bool is_literal() const { return op == Op::Literal; }

  friend bool operator==(const IndexExpr&, const IndexExpr&) = default;
};

/// A variable reference: `q` or `q[expr]`. After elaboration the index is
/// folded into the name (`q[2]` becomes `q2`).
struct NameRef {
  std::string base;
  std::optional<IndexExpr> index;
  SourceLoc loc;

  friend bool operator==(const NameRef&, const NameRef&) = default;
};

struct GateExpr {
  enum class Kind { Named, Rk, Phase, Matrix, Oracle };

  Kind kind = Kind::Named;
  std::string name;       // Named: I X Y Z H S T
  IndexExpr arg;          // Rk: k; Oracle: evaluation point
  double theta = 0.0;     // Phase
  Matrix matrix;          // Matrix literal
  std::optional<TruthTable> table;  // Oracle

  static GateExpr named(std::string name);
  static GateExpr rk(IndexExpr k);
  static GateExpr phase(double theta);
  static GateExpr literal(Matrix m);
  static GateExpr oracle(TruthTable f, IndexExpr point);

  friend bool operator==(const GateExpr& a, const GateExpr& b);
};

struct Stmt;
using Block = std::vector<Stmt>;

struct Skip {
  friend bool operator==(const Skip&, const Skip&) = default;
};
struct NewQbit {
  NameRef name;
  friend bool operator==(const NewQbit&, const NewQbit&) = default;
};
struct NewBit {
  NameRef name;
  friend bool operator==(const NewBit&, const NewBit&) = default;
};
struct ApplyGate {
  std::vector<NameRef> targets;
  GateExpr gate;
  friend bool operator==(const ApplyGate&, const ApplyGate&) = default;
};
struct Discard {
  NameRef name;
  friend bool operator==(const Discard&, const Discard&) = default;
};
struct MeasureThenElse {
  NameRef control;
  Block then_block;
  Block else_block;
  friend bool operator==(const MeasureThenElse&, const MeasureThenElse&);
};
struct QIf {
  NameRef control;
  Block then_block;
  Block else_block;
  friend bool operator==(const QIf&, const QIf&);
};

struct CaseArm {
  /// Bits: `|0110>`; Binder: `|x>` binds x to each uncovered label;
  /// Default: `|_>` covers the uncovered labels.
  enum class Label { Bits, Binder, Default };

  Label kind = Label::Bits;
  std::string label;
  Block body;
  SourceLoc loc;

  friend bool operator==(const CaseArm&, const CaseArm&);
};

struct QCase {
  std::vector<NameRef> controls;
  std::vector<CaseArm> arms;
  friend bool operator==(const QCase&, const QCase&);
};

/// Meta-level iteration, unrolled before any semantics is assigned.
struct ForLoop {
  std::string var;
  IndexExpr lo;
  IndexExpr hi;
  Block body;
  friend bool operator==(const ForLoop&, const ForLoop&);
};

struct Stmt {
  using Node = std::variant<Skip, NewQbit, NewBit, ApplyGate, Discard,
                            MeasureThenElse, QIf, QCase, ForLoop>;
  Node node;
  SourceLoc loc;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }

  friend bool operator==(const Stmt&, const Stmt&) = default;
};

struct Program {
  Block body;
  friend bool operator==(const Program&, const Program&) = default;
};

/// Matrix of a gate with a literal argument acting on `qubits` qubits.
/// Throws ArityMismatch or NotElaborated (unresolved Rk / oracle argument).
Matrix gate_matrix(const GateExpr& gate, int qubits);

/// Number of qubits the gate acts on, or nullopt when any arity fits.
std::optional<int> gate_arity(const GateExpr& gate);

/// U_x: the permutation of C^(2^qubits) transposing |0> and |f(x)>.
Matrix oracle_matrix(bool fx, int qubits);

}  // namespace qalt::lang
