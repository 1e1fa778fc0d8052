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
#include <utility>
#include <vector>

#include "qalt/error.hpp"
#include "qalt/lang/ast.hpp"

namespace qalt::lang::detail {

/// Bindings of loop variables and case binders, innermost last.
class MetaEnv {
 public:
  void push(std::string name, long long value) {
    vars_.emplace_back(std::move(name), value);
  }
  void pop() { vars_.pop_back(); }

  long long eval(const IndexExpr& e, const SourceLoc& loc) const {
    switch (e.op) {
      case IndexExpr::Op::Literal:
        return e.value;
      case IndexExpr::Op::Var:
        for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
          if (it->first == e.var) return it->second;
        }
        throw Error(ErrorCode::NonConstantBound,
                    "'" + e.var + "' is not a bound loop variable (" +
                        describe(loc) + ")");
      case IndexExpr::Op::Neg:
        return -eval(e.args[0], loc);
      case IndexExpr::Op::Add:
        return eval(e.args[0], loc) + eval(e.args[1], loc);
      case IndexExpr::Op::Sub:
        return eval(e.args[0], loc) - eval(e.args[1], loc);
      case IndexExpr::Op::Mul:
        return eval(e.args[0], loc) * eval(e.args[1], loc);
    }
    return 0;
  }

  std::string resolve(const NameRef& ref) const {
    if (!ref.index) return ref.base;
    return ref.base + std::to_string(eval(*ref.index, ref.loc));
  }

 private:
  std::vector<std::pair<std::string, long long>> vars_;
};

inline std::string label_bits(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1) s[i] = '1';
  }
  return s;
}

}  // namespace qalt::lang::detail
