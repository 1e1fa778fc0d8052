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

#include <cstdio>

#include "qalt/lang/parser.hpp"

namespace qalt::lang {

namespace {

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int precedence(const IndexExpr& e) {
  switch (e.op) {
    case IndexExpr::Op::Add:
    case IndexExpr::Op::Sub:
      return 1;
    case IndexExpr::Op::Mul:
      return 2;
    default:
      return 3;
  }
}

std::string print_index(const IndexExpr& e, int min_prec) {
  std::string out;
  switch (e.op) {
    case IndexExpr::Op::Literal:
      out = std::to_string(e.value);
      break;
    case IndexExpr::Op::Var:
      out = e.var;
      break;
    case IndexExpr::Op::Neg:
      out = "-" + print_index(e.args[0], 3);
      break;
    case IndexExpr::Op::Add:
    case IndexExpr::Op::Sub:
    case IndexExpr::Op::Mul: {
      const int p = precedence(e);
      const char* sym = e.op == IndexExpr::Op::Add ? " + "
                        : e.op == IndexExpr::Op::Sub ? " - "
                                                     : " * ";
      out = print_index(e.args[0], p) + sym + print_index(e.args[1], p + 1);
      break;
    }
  }
  return precedence(e) < min_prec ? "(" + out + ")" : out;
}

std::string print_name(const NameRef& n) {
  return n.index ? n.base + "[" + print(*n.index) + "]" : n.base;
}

std::string print_names(const std::vector<NameRef>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += print_name(names[i]);
  }
  return out;
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

void print_stmt(const Stmt& stmt, int indent, std::string& out);

std::string braced(const Block& block, int indent) {
  std::string out = "{\n";
  for (const Stmt& s : block) print_stmt(s, indent + 2, out);
  return out + pad(indent) + "}";
}

void print_stmt(const Stmt& stmt, int indent, std::string& out) {
  out += pad(indent);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Skip>) {
          out += "skip";
        } else if constexpr (std::is_same_v<T, NewQbit>) {
          out += "new qbit " + print_name(node.name);
        } else if constexpr (std::is_same_v<T, NewBit>) {
          out += "new bit " + print_name(node.name);
        } else if constexpr (std::is_same_v<T, ApplyGate>) {
          out += print_names(node.targets) + " *= " + print(node.gate);
        } else if constexpr (std::is_same_v<T, Discard>) {
          out += "discard " + print_name(node.name);
        } else if constexpr (std::is_same_v<T, MeasureThenElse> || std::is_same_v<T, QIf>) {
          out += std::is_same_v<T, QIf> ? "if " : "measure ";
          out += print_name(node.control) + " then " + braced(node.then_block, indent) +
                 " else " + braced(node.else_block, indent);
        } else if constexpr (std::is_same_v<T, QCase>) {
          out += "case (" + print_names(node.controls) + ") of";
          for (const CaseArm& arm : node.arms) {
            out += "\n" + pad(indent + 2) + "|" + arm.label + "> -> " +
                   braced(arm.body, indent + 2);
          }
        } else if constexpr (std::is_same_v<T, ForLoop>) {
          out += "for " + node.var + " = " + print(node.lo) + " to " + print(node.hi) +
                 " " + braced(node.body, indent);
        }
      },
      stmt.node);
  out += "\n";
}

}  // namespace

std::string print(const IndexExpr& expr) { return print_index(expr, 0); }

std::string print(const GateExpr& gate) {
  switch (gate.kind) {
    case GateExpr::Kind::Named:
      return gate.name;
    case GateExpr::Kind::Rk:
      return "Rk(" + print(gate.arg) + ")";
    case GateExpr::Kind::Phase:
      return "Phase(" + real(gate.theta) + ")";
    case GateExpr::Kind::Oracle:
      return "Uf(" + gate.table->to_bits() + ", " + print(gate.arg) + ")";
    case GateExpr::Kind::Matrix: {
      std::string out = "[";
      for (Eigen::Index r = 0; r < gate.matrix.rows(); ++r) {
        out += r ? ", [" : "[";
        for (Eigen::Index c = 0; c < gate.matrix.cols(); ++c) {
          if (c) out += ", ";
          const Complex z = gate.matrix(r, c);
          out += "[" + real(z.real()) + ", " + real(z.imag()) + "]";
        }
        out += "]";
      }
      return out + "]";
    }
  }
  return {};
}

std::string print(const Block& block, int indent) {
  std::string out;
  for (const Stmt& s : block) print_stmt(s, indent, out);
  return out;
}

std::string print(const Program& program) { return print(program.body, 0); }

}  // namespace qalt::lang
