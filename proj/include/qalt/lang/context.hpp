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
#include <string_view>
#include <vector>

#include "qalt/signature.hpp"

namespace qalt::lang {

enum class VarKind { Qbit, Bit };

std::string_view to_string(VarKind kind);

struct Variable {
  std::string name;
  VarKind kind = VarKind::Qbit;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Ordered typing context. The order fixes the register layout: bits index
/// signature blocks in context order (first bit most significant) and
/// within a block the qubits are tensor factors in context order (first
/// qubit leading). A context with b bits and k qubits has signature
/// (2^k, ..., 2^k) with 2^b blocks.
class Context {
 public:
  Context() = default;
  /// Throws DuplicateName on a repeated name.
  explicit Context(std::vector<Variable> vars);

  static Context of_qubits(const std::vector<std::string>& names);

  const std::vector<Variable>& vars() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  bool empty() const noexcept { return vars_.empty(); }

  bool contains(std::string_view name) const;
  std::optional<VarKind> kind_of(std::string_view name) const;
  /// Position in the context order; throws UnknownName.
  std::size_t index_of(std::string_view name) const;

  Context prepend(Variable v) const;
  Context insert(std::size_t pos, Variable v) const;
  Context remove(std::string_view name) const;

  std::vector<std::string> bits() const;
  std::vector<std::string> qubits() const;
  /// Tensor factor order of the full register: bits, then qubits.
  std::vector<std::string> factors() const;

  Signature signature() const;

  /// "{q0: qbit, b: bit}".
  std::string to_string() const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Variable> vars_;
};

}  // namespace qalt::lang
