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
#include <cmath>

#include "qalt/semantics.hpp"

namespace qalt::semantics {

namespace {

using namespace qalt::lang;
using Layout = std::vector<std::string>;
using Ops = std::vector<Matrix>;

// Operators and states here are full matrices over a layout of named
// two-dimensional factors, first name most significant.

int find(const Layout& layout, const std::string& name) {
  const auto it = std::find(layout.begin(), layout.end(), name);
  if (it == layout.end()) {
    throw Error(ErrorCode::UnknownName, "'" + name + "' is not in the register");
  }
  return static_cast<int>(it - layout.begin());
}

int bit_at(std::size_t index, int pos, int width) {
  return static_cast<int>((index >> (width - 1 - pos)) & 1u);
}

// index_map[i] is the index in `to` of basis state i of `from`.
std::vector<std::size_t> index_map(const Layout& from, const Layout& to) {
  const int m = static_cast<int>(from.size());
  std::vector<int> where(m);
  for (int p = 0; p < m; ++p) where[p] = find(to, from[p]);
  std::vector<std::size_t> map(std::size_t{1} << m);
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::size_t j = 0;
    for (int p = 0; p < m; ++p) {
      if (bit_at(i, p, m)) j |= std::size_t{1} << (m - 1 - where[p]);
    }
    map[i] = j;
  }
  return map;
}

Matrix permute(const Matrix& a, const Layout& row_from, const Layout& row_to,
               const Layout& col_from, const Layout& col_to) {
  const auto rows = index_map(row_from, row_to);
  const auto cols = index_map(col_from, col_to);
  Matrix out = Matrix::Zero(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(rows[i], cols[j]) = a(i, j);
  }
  return out;
}

Matrix permute_state(const Matrix& rho, const Layout& from, const Layout& to) {
  return permute(rho, from, to, from, to);
}

// Index of `layout` with a bit b inserted at position pos, from an index of
// the layout without that factor.
std::size_t insert_bit(std::size_t index, int pos, int width_without, int b) {
  const int low = width_without - pos;
  const std::size_t high = (index >> low) << (low + 1);
  const std::size_t rest = index & ((std::size_t{1} << low) - 1);
  return high | (static_cast<std::size_t>(b) << low) | rest;
}

Matrix partial_trace(const Matrix& rho, int pos, int width) {
  const std::size_t n = std::size_t{1} << (width - 1);
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (int b = 0; b < 2; ++b) {
        out(i, j) += rho(insert_bit(i, pos, width - 1, b), insert_bit(j, pos, width - 1, b));
      }
    }
  }
  return out;
}

// Full operator of u acting on the factors at `targets`.
Matrix gate_operator(const Matrix& u, const std::vector<int>& targets, int width) {
  const std::size_t n = std::size_t{1} << width;
  const int r = static_cast<int>(targets.size());
  std::size_t mask = 0;
  for (int t : targets) mask |= std::size_t{1} << (width - 1 - t);
  auto sub = [&](std::size_t i) {
    std::size_t s = 0;
    for (int k = 0; k < r; ++k) s = (s << 1) | static_cast<std::size_t>(bit_at(i, targets[k], width));
    return s;
  };
  Matrix g = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((i & ~mask) == (j & ~mask)) g(i, j) = u(sub(i), sub(j));
    }
  }
  return g;
}

// Projector onto value b of the factor at pos.
Matrix factor_projector(int pos, int width, int b) {
  const std::size_t n = std::size_t{1} << width;
  Matrix p = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (bit_at(i, pos, width) == b) p(i, i) = 1.0;
  }
  return p;
}

bool same_op(const Matrix& a, const Matrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a - b).cwiseAbs().maxCoeff() <= kCoalesceTol;
}

Ops merge_copies(Ops raw) {
  Ops ops;
  for (Matrix& m : raw) {
    if (m.size() == 0 || m.cwiseAbs().maxCoeff() > kCoalesceTol) ops.push_back(std::move(m));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    Ops next;
    std::vector<bool> used(ops.size(), false);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (used[i]) continue;
      int copies = 1;
      for (std::size_t j = i + 1; j < ops.size(); ++j) {
        if (!used[j] && same_op(ops[i], ops[j])) {
          used[j] = true;
          ++copies;
        }
      }
      if (copies > 1) changed = true;
      next.push_back(std::sqrt(static_cast<double>(copies)) * ops[i]);
    }
    ops = std::move(next);
  }
  return ops;
}

Ops product(const Ops& after, const Ops& before) {
  Ops raw;
  for (const Matrix& a : after) {
    for (const Matrix& b : before) raw.push_back(a * b);
  }
  return merge_copies(std::move(raw));
}

struct Branch {
  Ops ops;
  Context out;
};

Branch block_ops(const Block& body, const Context& ctx);

// Alternation of 2^n branch operator lists; the controls lead the layout.
Ops alternation(const std::vector<Ops>& branches, int n, std::size_t in_dim,
                std::size_t out_dim) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::size_t> live;
  double total = 1.0;
  for (std::size_t k = 0; k < count; ++k) {
    if (!branches[k].empty()) {
      live.push_back(k);
      total *= static_cast<double>(branches[k].size());
    }
  }
  Ops ops;
  if (live.empty()) return ops;
  std::vector<std::size_t> pick(live.size(), 0);
  for (;;) {
    Matrix k_op = Matrix::Zero(count * out_dim, count * in_dim);
    for (std::size_t l = 0; l < live.size(); ++l) {
      const std::size_t k = live[l];
      const double scale = std::sqrt(static_cast<double>(branches[k].size()) / total);
      const Matrix& e = branches[k][pick[l]];
      for (std::size_t i = 0; i < out_dim; ++i) {
        for (std::size_t j = 0; j < in_dim; ++j) {
          k_op(k * out_dim + i, k * in_dim + j) = scale * e(i, j);
        }
      }
    }
    ops.push_back(std::move(k_op));
    std::size_t l = live.size();
    for (;;) {
      if (l == 0) return merge_copies(std::move(ops));
      --l;
      if (++pick[l] < branches[live[l]].size()) break;
      pick[l] = 0;
    }
  }
}

Ops controlled_ops(const std::vector<std::string>& controls, const std::vector<const Block*>& arms,
                   const Context& ctx, const Context& out) {
  Context inner = ctx;
  for (const std::string& c : controls) inner = inner.remove(c);
  std::vector<Ops> branches;
  Context inner_out = inner;
  for (const Block* arm : arms) {
    Branch b = block_ops(*arm, inner);
    inner_out = b.out;
    branches.push_back(std::move(b.ops));
  }
  const std::size_t in_dim = std::size_t{1} << inner.size();
  const std::size_t out_dim = std::size_t{1} << inner_out.size();
  Ops alt = alternation(branches, static_cast<int>(controls.size()), in_dim, out_dim);

  Layout in_layout = controls;
  for (const std::string& f : inner.factors()) in_layout.push_back(f);
  Layout out_layout = controls;
  for (const std::string& f : inner_out.factors()) out_layout.push_back(f);
  Ops result;
  for (const Matrix& k : alt) {
    result.push_back(permute(k, out_layout, out.factors(), in_layout, ctx.factors()));
  }
  return result;
}

std::vector<std::string> case_controls(const QCase& q) {
  std::vector<std::string> out;
  for (const NameRef& r : q.controls) out.push_back(r.base);
  return out;
}

std::vector<const Block*> case_arms(const QCase& q) {
  std::vector<const Block*> out;
  for (const CaseArm& arm : q.arms) out.push_back(&arm.body);
  return out;
}

Ops stmt_ops(const Stmt& s, const Context& ctx, const Context& out) {
  const Layout layout = ctx.factors();
  const int width = static_cast<int>(layout.size());
  const std::size_t dim = std::size_t{1} << width;
  return std::visit(
      [&](const auto& node) -> Ops {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Skip>) {
          return {Matrix::Identity(dim, dim)};
        } else if constexpr (std::is_same_v<T, NewQbit> || std::is_same_v<T, NewBit>) {
          // |0> on the fresh factor placed first, then moved into place.
          Matrix a = Matrix::Zero(2 * dim, dim);
          for (std::size_t i = 0; i < dim; ++i) a(i, i) = 1.0;
          Layout fresh{node.name.base};
          fresh.insert(fresh.end(), layout.begin(), layout.end());
          return {permute(a, fresh, out.factors(), layout, layout)};
        } else if constexpr (std::is_same_v<T, Discard>) {
          const int pos = find(layout, node.name.base);
          Layout rest = layout;
          rest.erase(rest.begin() + pos);
          Ops ops;
          for (int b = 0; b < 2; ++b) {
            Matrix a = Matrix::Zero(dim / 2, dim);
            for (std::size_t i = 0; i < dim / 2; ++i) a(i, insert_bit(i, pos, width - 1, b)) = 1.0;
            ops.push_back(permute(a, rest, out.factors(), layout, layout));
          }
          return ops;
        } else if constexpr (std::is_same_v<T, ApplyGate>) {
          std::vector<int> targets;
          for (const NameRef& t : node.targets) targets.push_back(find(layout, t.base));
          const Matrix u = gate_matrix(node.gate, static_cast<int>(targets.size()));
          return {gate_operator(u, targets, width)};
        } else if constexpr (std::is_same_v<T, MeasureThenElse>) {
          const int pos = find(layout, node.control.base);
          const Branch p = block_ops(node.then_block, ctx);
          const Branch q = block_ops(node.else_block, ctx);
          Ops raw = product(p.ops, {factor_projector(pos, width, 0)});
          for (Matrix& m : product(q.ops, {factor_projector(pos, width, 1)})) {
            raw.push_back(std::move(m));
          }
          Ops fixed;
          for (const Matrix& m : raw) {
            fixed.push_back(permute(m, p.out.factors(), out.factors(), layout, layout));
          }
          return merge_copies(std::move(fixed));
        } else if constexpr (std::is_same_v<T, QIf>) {
          return controlled_ops({node.control.base}, {&node.then_block, &node.else_block}, ctx,
                                out);
        } else if constexpr (std::is_same_v<T, QCase>) {
          return controlled_ops(case_controls(node), case_arms(node), ctx, out);
        } else {
          throw Error(ErrorCode::NotElaborated, "for loop must be elaborated first");
        }
      },
      s.node);
}

Branch block_ops(const Block& body, const Context& ctx) {
  const std::size_t dim = std::size_t{1} << ctx.size();
  Branch acc{{Matrix::Identity(dim, dim)}, ctx};
  for (const Stmt& s : body) {
    const Context next = check_stmt(s, acc.out);
    acc.ops = product(stmt_ops(s, acc.out, next), acc.ops);
    acc.out = next;
  }
  return acc;
}

Matrix apply_ops(const Ops& ops, const Matrix& rho, std::size_t out_dim) {
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (const Matrix& k : ops) out += k * rho * k.adjoint();
  return out;
}

struct Register {
  Context ctx;
  Matrix rho;
};

Register eval_block(const Block& body, Register reg);

Register eval_stmt(const Stmt& s, const Register& reg) {
  const Context out = check_stmt(s, reg.ctx);
  const Layout layout = reg.ctx.factors();
  const int width = static_cast<int>(layout.size());
  const std::size_t out_dim = std::size_t{1} << out.size();
  return std::visit(
      [&](const auto& node) -> Register {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Skip>) {
          return reg;
        } else if constexpr (std::is_same_v<T, NewQbit> || std::is_same_v<T, NewBit>) {
          const std::size_t dim = reg.rho.rows();
          Matrix grown = Matrix::Zero(2 * dim, 2 * dim);
          grown.topLeftCorner(dim, dim) = reg.rho;
          Layout fresh{node.name.base};
          fresh.insert(fresh.end(), layout.begin(), layout.end());
          return {out, permute_state(grown, fresh, out.factors())};
        } else if constexpr (std::is_same_v<T, Discard>) {
          const int pos = find(layout, node.name.base);
          Layout rest = layout;
          rest.erase(rest.begin() + pos);
          return {out, permute_state(partial_trace(reg.rho, pos, width), rest, out.factors())};
        } else if constexpr (std::is_same_v<T, ApplyGate>) {
          std::vector<int> targets;
          for (const NameRef& t : node.targets) targets.push_back(find(layout, t.base));
          const Matrix g =
              gate_operator(gate_matrix(node.gate, static_cast<int>(targets.size())), targets, width);
          return {out, g * reg.rho * g.adjoint()};
        } else if constexpr (std::is_same_v<T, MeasureThenElse>) {
          const int pos = find(layout, node.control.base);
          const Matrix p0 = factor_projector(pos, width, 0);
          const Matrix p1 = factor_projector(pos, width, 1);
          const Register a = eval_block(node.then_block, {reg.ctx, p0 * reg.rho * p0});
          const Register b = eval_block(node.else_block, {reg.ctx, p1 * reg.rho * p1});
          return {out, a.rho + permute_state(b.rho, b.ctx.factors(), a.ctx.factors())};
        } else {
          return {out, apply_ops(stmt_ops(s, reg.ctx, out), reg.rho, out_dim)};
        }
      },
      s.node);
}

Register eval_block(const Block& body, Register reg) {
  for (const Stmt& s : body) reg = eval_stmt(s, reg);
  return reg;
}

}  // namespace

RunResult eval_direct(const lang::Program& program, const Context& initial,
                      const DensityState& state, double tol) {
  if (!(state.signature() == initial.signature())) {
    throw Error(ErrorCode::SignatureMismatch,
                "initial state " + state.signature().to_string() + " does not fit context " +
                    initial.to_string());
  }
  const TypedProgram typed = typecheck(program, initial);
  const Program core = elaborate(typed);
  const Register done = eval_block(core.body, {initial, state.to_matrix()});
  const Signature sig = done.ctx.signature();
  return {done.ctx, DensityState(BlockElement::from_matrix(sig, done.rho, tol), tol)};
}

RunResult eval_direct(const lang::Program& program, double tol) {
  return eval_direct(program, Context{}, DensityState::unit(), tol);
}

}  // namespace qalt::semantics
