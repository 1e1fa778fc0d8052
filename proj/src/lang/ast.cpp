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

#include "qalt/lang/ast.hpp"

#include <cmath>
#include <numbers>

#include "qalt/error.hpp"

namespace qalt::lang {

std::string describe(const SourceLoc& loc) {
  return "line " + std::to_string(loc.line) + ", column " +
         std::to_string(loc.column);
}

IndexExpr IndexExpr::literal(long long v) {
  IndexExpr e;
  e.value = v;
  return e;
}

IndexExpr IndexExpr::variable(std::string name) {
  IndexExpr e;
  e.op = Op::Var;
  e.var = std::move(name);
  return e;
}

IndexExpr IndexExpr::binary(Op op, IndexExpr lhs, IndexExpr rhs) {
  IndexExpr e;
  e.op = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

IndexExpr IndexExpr::negate(IndexExpr inner) {
  IndexExpr e;
  e.op = Op::Neg;
  e.args.push_back(std::move(inner));
  return e;
}

GateExpr GateExpr::named(std::string name) {
  GateExpr g;
  g.name = std::move(name);
  return g;
}

GateExpr GateExpr::rk(IndexExpr k) {
  GateExpr g;
  g.kind = Kind::Rk;
  g.arg = std::move(k);
  return g;
}

GateExpr GateExpr::phase(double theta) {
  GateExpr g;
  g.kind = Kind::Phase;
  g.theta = theta;
  return g;
}

GateExpr GateExpr::literal(Matrix m) {
  GateExpr g;
  g.kind = Kind::Matrix;
  g.matrix = std::move(m);
  return g;
}

GateExpr GateExpr::oracle(TruthTable f, IndexExpr point) {
  GateExpr g;
  g.kind = Kind::Oracle;
  g.table = std::move(f);
  g.arg = std::move(point);
  return g;
}

bool operator==(const GateExpr& a, const GateExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case GateExpr::Kind::Named: return a.name == b.name;
    case GateExpr::Kind::Rk: return a.arg == b.arg;
    case GateExpr::Kind::Phase: return a.theta == b.theta;
    case GateExpr::Kind::Matrix:
      return a.matrix.rows() == b.matrix.rows() &&
             a.matrix.cols() == b.matrix.cols() && a.matrix == b.matrix;
    case GateExpr::Kind::Oracle: return a.table == b.table && a.arg == b.arg;
  }
  return false;
}

bool operator==(const MeasureThenElse& a, const MeasureThenElse& b) {
  return a.control == b.control && a.then_block == b.then_block &&
         a.else_block == b.else_block;
}

bool operator==(const QIf& a, const QIf& b) {
  return a.control == b.control && a.then_block == b.then_block &&
         a.else_block == b.else_block;
}

bool operator==(const CaseArm& a, const CaseArm& b) {
  return a.kind == b.kind && a.label == b.label && a.body == b.body;
}

bool operator==(const QCase& a, const QCase& b) {
  return a.controls == b.controls && a.arms == b.arms;
}

bool operator==(const ForLoop& a, const ForLoop& b) {
  return a.var == b.var && a.lo == b.lo && a.hi == b.hi && a.body == b.body;
}

Matrix oracle_matrix(bool fx, int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Matrix u = identity(dim);
  if (fx) {
    u(0, 0) = 0.0;
    u(1, 1) = 0.0;
    u(0, 1) = 1.0;
    u(1, 0) = 1.0;
  }
  return u;
}

std::optional<int> gate_arity(const GateExpr& gate) {
  switch (gate.kind) {
    case GateExpr::Kind::Named:
    case GateExpr::Kind::Rk:
      return 1;
    case GateExpr::Kind::Matrix: {
      int k = 0;
      while ((Eigen::Index{1} << k) < gate.matrix.rows()) ++k;
      return k;
    }
    case GateExpr::Kind::Phase:
    case GateExpr::Kind::Oracle:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

Matrix named_gate(const std::string& name) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::sqrt(2.0);
  Matrix m(2, 2);
  if (name == "I") {
    m << 1.0, 0.0, 0.0, 1.0;
  } else if (name == "X") {
    m << 0.0, 1.0, 1.0, 0.0;
  } else if (name == "Y") {
    m << 0.0, -1i, 1i, 0.0;
  } else if (name == "Z") {
    m << 1.0, 0.0, 0.0, -1.0;
  } else if (name == "H") {
    m << r, r, r, -r;
  } else if (name == "S") {
    m << 1.0, 0.0, 0.0, 1i;
  } else if (name == "T") {
    m << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4);
  } else {
    throw Error(ErrorCode::KindError, "unknown gate '" + name + "'");
  }
  return m;
}

}  // namespace

Matrix gate_matrix(const GateExpr& gate, int qubits) {
  if (auto arity = gate_arity(gate); arity && *arity != qubits) {
    throw Error(ErrorCode::ArityMismatch,
                "gate acts on " + std::to_string(*arity) + " qubit(s), given " +
                    std::to_string(qubits));
  }
  switch (gate.kind) {
    case GateExpr::Kind::Named:
      return named_gate(gate.name);
    case GateExpr::Kind::Rk: {
      if (!gate.arg.is_literal()) {
        throw Error(ErrorCode::NotElaborated, "Rk argument is not a literal");
      }
      const double theta = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(gate.arg.value));
      Matrix m = identity(2);
      m(1, 1) = std::polar(1.0, theta);
      return m;
    }
    case GateExpr::Kind::Phase:
      return std::polar(1.0, gate.theta) * identity(Eigen::Index{1} << qubits);
    case GateExpr::Kind::Matrix:
      return gate.matrix;
    case GateExpr::Kind::Oracle: {
      if (!gate.arg.is_literal()) {
        throw Error(ErrorCode::NotElaborated, "oracle point is not a literal");
      }
      return oracle_matrix((*gate.table)(static_cast<std::uint64_t>(gate.arg.value)), qubits);
    }
  }
  return {};
}

}  // namespace qalt::lang
