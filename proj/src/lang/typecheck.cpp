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

#include <algorithm>
#include <set>

#include "meta_env.hpp"
#include "qalt/lang/typecheck.hpp"

namespace qalt::lang {

namespace {

std::string at(const SourceLoc& loc) { return " (" + describe(loc) + ")"; }

std::string names_list(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + ")";
}

std::string gate_label(const GateExpr& g) {
  switch (g.kind) {
    case GateExpr::Kind::Named: return "gate " + g.name;
    case GateExpr::Kind::Rk: return "gate Rk";
    case GateExpr::Kind::Phase: return "gate Phase";
    case GateExpr::Kind::Matrix: return "matrix gate";
    case GateExpr::Kind::Oracle: return "oracle Uf";
  }
  return "gate";
}

class Checker {
 public:
  explicit Checker(const TypecheckOptions& options) : options_(options) {}

  Context block(const Block& body, Context ctx) {
    for (const Stmt& s : body) ctx = stmt(s, ctx);
    return ctx;
  }

  Context stmt(const Stmt& s, const Context& ctx) {
    return std::visit([&](const auto& node) { return check(node, s.loc, ctx); },
                      s.node);
  }

 private:
  struct Guard {
    std::string name;
    std::string construct;
  };

  std::string resolve(const NameRef& ref) {
    std::string name = env_.resolve(ref);
    for (const Guard& g : guards_) {
      if (g.name == name) {
        throw Error(ErrorCode::ControlCapture,
                    "'" + name + "' is the control of an enclosing " + g.construct +
                        " and cannot be used in its branches" + at(ref.loc));
      }
    }
    return name;
  }

  std::string declared(const NameRef& ref, const Context& ctx) {
    std::string name = resolve(ref);
    if (!ctx.contains(name)) {
      throw Error(ErrorCode::UnknownName, "'" + name + "' is not declared" + at(ref.loc));
    }
    return name;
  }

  std::string qubit(const NameRef& ref, const Context& ctx, const std::string& construct) {
    std::string name = declared(ref, ctx);
    if (ctx.kind_of(name) != VarKind::Qbit) {
      throw Error(ErrorCode::KindError,
                  "'" + name + "' is a bit but " + construct + " needs a qbit" + at(ref.loc));
    }
    return name;
  }

  void forbid_in_branch(const std::string& what, const SourceLoc& loc) {
    if (options_.require_unitary_branches && branch_depth_ > 0) {
      throw Error(ErrorCode::NonUnitaryBranch,
                  what + " inside a quantum alternation branch is not unitary" + at(loc));
    }
  }

  void same_outputs(const Context& a, const Context& b, const std::string& construct,
                    const SourceLoc& loc) {
    if (!(a == b)) {
      throw Error(ErrorCode::BranchContextMismatch,
                  "branches of " + construct + " end in different contexts: " +
                      a.to_string() + " vs " + b.to_string() + at(loc));
    }
  }

  Context check(const Skip&, const SourceLoc&, const Context& ctx) { return ctx; }

  Context declare(const NameRef& ref, VarKind kind, const SourceLoc& loc, const Context& ctx) {
    forbid_in_branch(kind == VarKind::Qbit ? "new qbit" : "new bit", loc);
    std::string name = resolve(ref);
    if (ctx.contains(name)) {
      throw Error(ErrorCode::DuplicateName, "'" + name + "' is already declared" + at(ref.loc));
    }
    return ctx.prepend({name, kind});
  }

  Context check(const NewQbit& n, const SourceLoc& loc, const Context& ctx) {
    return declare(n.name, VarKind::Qbit, loc, ctx);
  }

  Context check(const NewBit& n, const SourceLoc& loc, const Context& ctx) {
    return declare(n.name, VarKind::Bit, loc, ctx);
  }

  Context check(const ApplyGate& g, const SourceLoc& loc, const Context& ctx) {
    std::set<std::string> seen;
    for (const NameRef& t : g.targets) {
      const std::string name = qubit(t, ctx, "a gate");
      if (!seen.insert(name).second) {
        throw Error(ErrorCode::DuplicateName,
                    "'" + name + "' appears twice in one gate application" + at(t.loc));
      }
    }
    const int count = static_cast<int>(g.targets.size());
    if (auto arity = gate_arity(g.gate); arity && *arity != count) {
      throw Error(ErrorCode::ArityMismatch,
                  gate_label(g.gate) + " acts on " + std::to_string(*arity) +
                      " qubit(s) but " + std::to_string(count) + " target(s) given" + at(loc));
    }
    if (g.gate.kind == GateExpr::Kind::Rk) {
      const long long k = env_.eval(g.gate.arg, loc);
      if (k < 0) {
        throw Error(ErrorCode::ArityMismatch, "Rk needs k >= 0, got " + std::to_string(k) + at(loc));
      }
    }
    if (g.gate.kind == GateExpr::Kind::Oracle) {
      const long long x = env_.eval(g.gate.arg, loc);
      if (x < 0 || static_cast<std::size_t>(x) >= g.gate.table->size()) {
        throw Error(ErrorCode::ArityMismatch,
                    "oracle point " + std::to_string(x) + " outside its truth table" + at(loc));
      }
    }
    return ctx;
  }

  Context check(const Discard& d, const SourceLoc& loc, const Context& ctx) {
    forbid_in_branch("discard", loc);
    return ctx.remove(declared(d.name, ctx));
  }

  Context check(const MeasureThenElse& m, const SourceLoc& loc, const Context& ctx) {
    forbid_in_branch("measure", loc);
    const std::string c = qubit(m.control, ctx, "measure");
    const Context a = block(m.then_block, ctx);
    const Context b = block(m.else_block, ctx);
    same_outputs(a, b, "measure on '" + c + "'", loc);
    return a;
  }

  Context check(const QIf& q, const SourceLoc& loc, const Context& ctx) {
    const std::string c = qubit(q.control, ctx, "quantum if");
    const std::size_t index = ctx.index_of(c);
    const Context inner = ctx.remove(c);
    guards_.push_back({c, "quantum if"});
    ++branch_depth_;
    const Context a = block(q.then_block, inner);
    const Context b = block(q.else_block, inner);
    --branch_depth_;
    guards_.pop_back();
    same_outputs(a, b, "quantum if on '" + c + "'", loc);
    return a.insert(index, {c, VarKind::Qbit});
  }

  Context check(const QCase& q, const SourceLoc& loc, const Context& ctx) {
    std::vector<std::string> controls;
    for (const NameRef& ref : q.controls) {
      const std::string c = qubit(ref, ctx, "quantum case");
      if (std::find(controls.begin(), controls.end(), c) != controls.end()) {
        throw Error(ErrorCode::DuplicateName,
                    "'" + c + "' appears twice among case controls" + at(ref.loc));
      }
      controls.push_back(c);
    }
    std::vector<std::pair<std::size_t, std::string>> positions;
    Context inner = ctx;
    for (const std::string& c : controls) {
      positions.emplace_back(ctx.index_of(c), c);
      inner = inner.remove(c);
    }
    std::sort(positions.begin(), positions.end());

    const std::size_t n = controls.size();
    const std::size_t labels = std::size_t{1} << n;
    std::set<std::string> covered;
    for (const CaseArm& arm : q.arms) {
      if (arm.kind == CaseArm::Label::Bits) covered.insert(arm.label);
    }
    const bool catch_all = !q.arms.empty() && q.arms.back().kind != CaseArm::Label::Bits;
    if (!catch_all) {
      for (std::size_t v = 0; v < labels; ++v) {
        const std::string bits = detail::label_bits(v, n);
        if (!covered.count(bits)) {
          throw Error(ErrorCode::NonExhaustiveCase,
                      "quantum case on " + names_list(controls) + " has no arm for |" +
                          bits + ">" + at(loc));
        }
      }
    }

    const std::string construct = "quantum case on " + names_list(controls);
    for (const std::string& c : controls) guards_.push_back({c, "quantum case"});
    ++branch_depth_;
    std::optional<Context> result;
    auto record = [&](const Context& out, const SourceLoc& arm_loc) {
      if (!result) {
        result = out;
      } else {
        same_outputs(*result, out, construct, arm_loc);
      }
    };
    for (const CaseArm& arm : q.arms) {
      switch (arm.kind) {
        case CaseArm::Label::Bits:
        case CaseArm::Label::Default:
          record(block(arm.body, inner), arm.loc);
          break;
        case CaseArm::Label::Binder:
          for (std::size_t v = 0; v < labels; ++v) {
            if (covered.count(detail::label_bits(v, n))) continue;
            env_.push(arm.label, static_cast<long long>(v));
            record(block(arm.body, inner), arm.loc);
            env_.pop();
          }
          break;
      }
    }
    --branch_depth_;
    for (std::size_t i = 0; i < n; ++i) guards_.pop_back();

    Context out = result ? *result : inner;
    for (const auto& [index, name] : positions) out = out.insert(index, {name, VarKind::Qbit});
    return out;
  }

  Context check(const ForLoop& f, const SourceLoc& loc, const Context& ctx) {
    const long long lo = env_.eval(f.lo, loc);
    const long long hi = env_.eval(f.hi, loc);
    Context cur = ctx;
    for (long long v = lo; v <= hi; ++v) {
      env_.push(f.var, v);
      cur = block(f.body, cur);
      env_.pop();
    }
    return cur;
  }

  TypecheckOptions options_;
  detail::MetaEnv env_;
  std::vector<Guard> guards_;
  int branch_depth_ = 0;
};

}  // namespace

Context check_stmt(const Stmt& stmt, const Context& ctx, const TypecheckOptions& options) {
  return Checker(options).stmt(stmt, ctx);
}

TypedProgram typecheck(const Program& program, const Context& initial,
                       const TypecheckOptions& options) {
  Checker checker(options);
  TypedProgram typed{program, initial, initial, {}};
  Context ctx = initial;
  for (const Stmt& s : program.body) {
    Context next = checker.stmt(s, ctx);
    typed.statements.push_back({ctx, next});
    ctx = std::move(next);
  }
  typed.output = ctx;
  return typed;
}

}  // namespace qalt::lang
