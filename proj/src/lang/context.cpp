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

#include "qalt/lang/context.hpp"

#include <algorithm>
#include <set>

#include "qalt/error.hpp"

namespace qalt::lang {

std::string_view to_string(VarKind kind) {
  return kind == VarKind::Qbit ? "qbit" : "bit";
}

Context::Context(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string_view> seen;
  for (const Variable& v : vars_) {
    if (!seen.insert(v.name).second) {
      throw Error(ErrorCode::DuplicateName, "'" + v.name + "' appears twice in context");
    }
  }
}

Context Context::of_qubits(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  for (const auto& n : names) vars.push_back({n, VarKind::Qbit});
  return Context(std::move(vars));
}

bool Context::contains(std::string_view name) const {
  return kind_of(name).has_value();
}

std::optional<VarKind> Context::kind_of(std::string_view name) const {
  for (const Variable& v : vars_) {
    if (v.name == name) return v.kind;
  }
  return std::nullopt;
}

std::size_t Context::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  throw Error(ErrorCode::UnknownName, "'" + std::string(name) + "' is not in context");
}

Context Context::prepend(Variable v) const { return insert(0, std::move(v)); }

Context Context::insert(std::size_t pos, Variable v) const {
  std::vector<Variable> vars = vars_;
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(std::min(pos, vars.size())),
              std::move(v));
  return Context(std::move(vars));
}

Context Context::remove(std::string_view name) const {
  std::vector<Variable> vars = vars_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(index_of(name)));
  return Context(std::move(vars));
}

std::vector<std::string> Context::bits() const {
  std::vector<std::string> out;
  for (const Variable& v : vars_) {
    if (v.kind == VarKind::Bit) out.push_back(v.name);
  }
  return out;
}

std::vector<std::string> Context::qubits() const {
  std::vector<std::string> out;
  for (const Variable& v : vars_) {
    if (v.kind == VarKind::Qbit) out.push_back(v.name);
  }
  return out;
}

std::vector<std::string> Context::factors() const {
  std::vector<std::string> out = bits();
  for (auto& q : qubits()) out.push_back(std::move(q));
  return out;
}

Signature Context::signature() const {
  const std::size_t blocks = std::size_t{1} << bits().size();
  const int block_dim = 1 << qubits().size();
  return Signature(std::vector<int>(blocks, block_dim));
}

std::string Context::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ", ";
    out += vars_[i].name + ": " + std::string(qalt::lang::to_string(vars_[i].kind));
  }
  return out + "}";
}

}  // namespace qalt::lang
