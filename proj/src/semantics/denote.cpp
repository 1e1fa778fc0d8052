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

#include "qalt/semantics.hpp"

namespace qalt::semantics {

namespace {

using namespace qalt::lang;

[[noreturn]] void not_core(const std::string& what, const SourceLoc& loc) {
  throw Error(ErrorCode::NotElaborated, what + " must be elaborated first (" + describe(loc) + ")");
}

const std::string& core_name(const NameRef& ref, const SourceLoc& loc) {
  if (ref.index) not_core("indexed name '" + ref.base + "'", loc);
  return ref.base;
}

int position(const std::vector<std::string>& layout, const std::string& name) {
  return static_cast<int>(std::find(layout.begin(), layout.end(), name) - layout.begin());
}

// pout * S * pin, re-sorted into canonical order.
KrausSet relayout(const KrausSet& s, const Matrix& pout, const Matrix& pin,
                  const Signature& in, const Signature& out) {
  std::vector<Matrix> ops;
  for (const Matrix& e : s.ops()) ops.push_back(pout * e * pin);
  return KrausSet::make(in, out, std::move(ops));
}

KrausSet denote_node(const Skip&, const SourceLoc&, const Context& ctx, const Context&) {
  return table_skip(ctx.signature());
}

KrausSet denote_node(const NewQbit& n, const SourceLoc& loc, const Context& ctx, const Context&) {
  core_name(n.name, loc);
  // The new qubit is prepended, which is exactly the leading qubit of
  // qbit (x) sig(ctx).
  return table_new_qbit(ctx.signature());
}

KrausSet denote_node(const NewBit& n, const SourceLoc& loc, const Context& ctx, const Context&) {
  core_name(n.name, loc);
  return table_new_bit(ctx.signature());
}

KrausSet denote_node(const Discard& d, const SourceLoc& loc, const Context& ctx,
                     const Context& out) {
  const std::string& x = core_name(d.name, loc);
  const bool is_bit = ctx.kind_of(x) == VarKind::Bit;
  const std::vector<std::string> leading =
      is_bit ? [&] {
        std::vector<std::string> l{x};
        for (auto& f : out.factors()) l.push_back(f);
        return l;
      }()
             : leading_layout(out, {x});
  const Matrix pin = reorder(ctx.factors(), leading);
  const KrausSet base = is_bit ? table_merge(out.signature()) : table_discard(out.signature());
  return relayout(base, identity(out.signature().dim()), pin, ctx.signature(), out.signature());
}

KrausSet denote_node(const ApplyGate& g, const SourceLoc& loc, const Context& ctx,
                     const Context&) {
  if (g.gate.kind == GateExpr::Kind::Oracle) not_core("oracle gate", loc);
  const std::vector<std::string> layout = ctx.factors();
  std::vector<int> targets;
  for (const NameRef& t : g.targets) targets.push_back(position(layout, core_name(t, loc)));
  const Matrix u = gate_matrix(g.gate, static_cast<int>(targets.size()));
  return table_unitary(embed_gate(u, targets, static_cast<int>(layout.size())), ctx.signature());
}

KrausSet denote_node(const MeasureThenElse& m, const SourceLoc& loc, const Context& ctx,
                     const Context& out) {
  const std::string& c = core_name(m.control, loc);
  const Context rest = ctx.remove(c);
  const Signature sigma = ctx.signature();
  const Matrix pin = reorder(ctx.factors(), leading_layout(rest, {c}));
  // Measure with c leading, then move it back inside each classical branch.
  const KrausSet measure =
      relayout(table_measure(rest.signature()), tensor(identity(2), pin.adjoint()), pin, sigma,
               dsum(sigma, sigma));
  const KrausSet then_k = denote(m.then_block, ctx).kraus;
  const KrausSet else_k = denote(m.else_block, ctx).kraus;
  return compose(table_merge(out.signature()), compose(branch_sum(then_k, else_k), measure));
}

KrausSet denote_node(const QIf& q, const SourceLoc& loc, const Context& ctx, const Context& out) {
  const std::string& c = core_name(q.control, loc);
  const Context inner = ctx.remove(c);
  const Denotation p = denote(q.then_block, inner);
  const Denotation r = denote(q.else_block, inner);
  const KrausSet alt = alternate(p.kraus, r.kraus);
  const Matrix pin = reorder(ctx.factors(), leading_layout(inner, {c}));
  const Matrix pout = reorder(leading_layout(p.output_ctx, {c}), out.factors());
  return relayout(alt, pout, pin, ctx.signature(), out.signature());
}

KrausSet denote_node(const QCase& q, const SourceLoc& loc, const Context& ctx,
                     const Context& out) {
  std::vector<std::string> controls;
  Context inner = ctx;
  for (const NameRef& ref : q.controls) {
    controls.push_back(core_name(ref, loc));
    inner = inner.remove(controls.back());
  }
  const std::size_t n = controls.size();
  if (q.arms.size() != (std::size_t{1} << n)) not_core("case with catch-all arms", loc);
  std::vector<KrausSet> branches;
  std::optional<Context> branch_out;
  for (std::size_t v = 0; v < q.arms.size(); ++v) {
    const CaseArm& arm = q.arms[v];
    if (arm.kind != CaseArm::Label::Bits) not_core("case with catch-all arms", arm.loc);
    std::size_t label = 0;
    for (char bit : arm.label) label = (label << 1) | (bit == '1' ? 1u : 0u);
    if (label != v) not_core("case arms out of label order", arm.loc);
    Denotation d = denote(arm.body, inner);
    branch_out = d.output_ctx;
    branches.push_back(std::move(d.kraus));
  }
  const KrausSet alt = alternate_case(branches, static_cast<int>(n));
  const Matrix pin = reorder(ctx.factors(), leading_layout(inner, controls));
  const Matrix pout = reorder(leading_layout(*branch_out, controls), out.factors());
  return relayout(alt, pout, pin, ctx.signature(), out.signature());
}

KrausSet denote_node(const ForLoop&, const SourceLoc& loc, const Context&, const Context&) {
  not_core("for loop", loc);
}

}  // namespace

Denotation denote(const lang::Stmt& stmt, const Context& ctx) {
  const Context out = check_stmt(stmt, ctx);
  KrausSet k = std::visit(
      [&](const auto& node) { return denote_node(node, stmt.loc, ctx, out); }, stmt.node);
  return {std::move(k), ctx, out};
}

Denotation denote(const lang::Block& block, const Context& ctx) {
  Denotation acc{KrausSet::identity(ctx.signature()), ctx, ctx};
  for (const lang::Stmt& s : block) {
    Denotation d = denote(s, acc.output_ctx);
    acc.kraus = compose(d.kraus, acc.kraus);
    acc.output_ctx = std::move(d.output_ctx);
  }
  return acc;
}

Denotation denote_program(const lang::Program& program, const Context& initial,
                          const lang::TypecheckOptions& options) {
  const lang::TypedProgram typed = lang::typecheck(program, initial, options);
  return denote(lang::elaborate(typed).body, initial);
}

RunResult run(const lang::Program& program, const Context& initial, const DensityState& state,
              double tol) {
  if (!(state.signature() == initial.signature())) {
    throw Error(ErrorCode::SignatureMismatch,
                "initial state " + state.signature().to_string() + " does not fit context " +
                    initial.to_string());
  }
  const Denotation d = denote_program(program, initial);
  return {d.output_ctx, apply(d.kraus, state, tol)};
}

RunResult run(const lang::Program& program, double tol) {
  return run(program, Context{}, DensityState::unit(), tol);
}

}  // namespace qalt::semantics
