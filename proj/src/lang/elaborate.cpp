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

#include "meta_env.hpp"
#include "qalt/lang/typecheck.hpp"

namespace qalt::lang {

namespace {

class Elaborator {
 public:
  Block block(const Block& body) {
    Block out;
    for (const Stmt& s : body) stmt(s, out);
    return out;
  }

 private:
  NameRef name(const NameRef& ref) const { return NameRef{env_.resolve(ref), std::nullopt, ref.loc}; }

  std::vector<NameRef> names(const std::vector<NameRef>& refs) const {
    std::vector<NameRef> out;
    for (const NameRef& r : refs) out.push_back(name(r));
    return out;
  }

  GateExpr gate(const GateExpr& g, int targets, const SourceLoc& loc) const {
    switch (g.kind) {
      case GateExpr::Kind::Rk:
        return GateExpr::rk(IndexExpr::literal(env_.eval(g.arg, loc)));
      case GateExpr::Kind::Oracle: {
        const long long x = env_.eval(g.arg, loc);
        return GateExpr::literal(oracle_matrix((*g.table)(static_cast<std::uint64_t>(x)), targets));
      }
      default:
        return g;
    }
  }

  void stmt(const Stmt& s, Block& out) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Skip>) {
            out.push_back(s);
          } else if constexpr (std::is_same_v<T, NewQbit>) {
            out.push_back({NewQbit{name(node.name)}, s.loc});
          } else if constexpr (std::is_same_v<T, NewBit>) {
            out.push_back({NewBit{name(node.name)}, s.loc});
          } else if constexpr (std::is_same_v<T, Discard>) {
            out.push_back({Discard{name(node.name)}, s.loc});
          } else if constexpr (std::is_same_v<T, ApplyGate>) {
            const int count = static_cast<int>(node.targets.size());
            out.push_back({ApplyGate{names(node.targets), gate(node.gate, count, s.loc)}, s.loc});
          } else if constexpr (std::is_same_v<T, MeasureThenElse>) {
            out.push_back({MeasureThenElse{name(node.control), block(node.then_block),
                                           block(node.else_block)},
                           s.loc});
          } else if constexpr (std::is_same_v<T, QIf>) {
            out.push_back(
                {QIf{name(node.control), block(node.then_block), block(node.else_block)}, s.loc});
          } else if constexpr (std::is_same_v<T, QCase>) {
            out.push_back({expand(node), s.loc});
          } else if constexpr (std::is_same_v<T, ForLoop>) {
            const long long lo = env_.eval(node.lo, s.loc);
            const long long hi = env_.eval(node.hi, s.loc);
            for (long long v = lo; v <= hi; ++v) {
              env_.push(node.var, v);
              for (const Stmt& inner : node.body) stmt(inner, out);
              env_.pop();
            }
          }
        },
        s.node);
  }

  QCase expand(const QCase& q) {
    const std::size_t n = q.controls.size();
    QCase result{names(q.controls), {}};
    const CaseArm* catch_all =
        q.arms.back().kind != CaseArm::Label::Bits ? &q.arms.back() : nullptr;
    for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
      const std::string bits = detail::label_bits(v, n);
      const CaseArm* explicit_arm = nullptr;
      for (const CaseArm& arm : q.arms) {
        if (arm.kind == CaseArm::Label::Bits && arm.label == bits) explicit_arm = &arm;
      }
      CaseArm arm{CaseArm::Label::Bits, bits, {}, {}};
      if (explicit_arm) {
        arm.loc = explicit_arm->loc;
        arm.body = block(explicit_arm->body);
      } else if (catch_all) {
        arm.loc = catch_all->loc;
        if (catch_all->kind == CaseArm::Label::Binder) {
          env_.push(catch_all->label, static_cast<long long>(v));
          arm.body = block(catch_all->body);
          env_.pop();
        } else {
          arm.body = block(catch_all->body);
        }
      } else {
        throw Error(ErrorCode::NonExhaustiveCase, "case has no arm for |" + bits + ">");
      }
      result.arms.push_back(std::move(arm));
    }
    return result;
  }

  detail::MetaEnv env_;
};

bool core_block(const Block& body);

bool core_name(const NameRef& r) { return !r.index.has_value(); }

bool core_stmt(const Stmt& s) {
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Skip>) {
          return true;
        } else if constexpr (std::is_same_v<T, NewQbit> || std::is_same_v<T, NewBit> ||
                             std::is_same_v<T, Discard>) {
          return core_name(node.name);
        } else if constexpr (std::is_same_v<T, ApplyGate>) {
          for (const NameRef& t : node.targets) {
            if (!core_name(t)) return false;
          }
          if (node.gate.kind == GateExpr::Kind::Oracle) return false;
          return node.gate.kind != GateExpr::Kind::Rk || node.gate.arg.is_literal();
        } else if constexpr (std::is_same_v<T, MeasureThenElse> || std::is_same_v<T, QIf>) {
          return core_name(node.control) && core_block(node.then_block) &&
                 core_block(node.else_block);
        } else if constexpr (std::is_same_v<T, QCase>) {
          for (const NameRef& c : node.controls) {
            if (!core_name(c)) return false;
          }
          if (node.arms.size() != (std::size_t{1} << node.controls.size())) return false;
          for (std::size_t v = 0; v < node.arms.size(); ++v) {
            const CaseArm& arm = node.arms[v];
            if (arm.kind != CaseArm::Label::Bits ||
                arm.label != detail::label_bits(v, node.controls.size()) || !core_block(arm.body)) {
              return false;
            }
          }
          return true;
        } else {
          return false;
        }
      },
      s.node);
}

bool core_block(const Block& body) {
  for (const Stmt& s : body) {
    if (!core_stmt(s)) return false;
  }
  return true;
}

}  // namespace

Program elaborate(const TypedProgram& typed) {
  return Program{Elaborator().block(typed.program.body)};
}

bool is_core(const Program& program) { return core_block(program.body); }

}  // namespace qalt::lang
