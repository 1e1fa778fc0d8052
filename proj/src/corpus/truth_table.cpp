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

#include "qalt/truth_table.hpp"

#include <algorithm>

#include "qalt/error.hpp"

namespace qalt {

TruthTable::TruthTable(std::vector<bool> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "truth table length " + std::to_string(n) +
                    " is not a power of two");
  }
  while ((std::size_t{1} << arity_) < n) ++arity_;
}

TruthTable TruthTable::from_bits(std::string_view bits) {
  std::vector<bool> values;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidArgument,
                  "truth table '" + std::string(bits) +
                      "' may only contain 0 and 1");
    }
    values.push_back(c == '1');
  }
  return TruthTable(std::move(values));
}

bool TruthTable::is_constant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](bool v) { return v == values_.front(); });
}

bool TruthTable::is_balanced() const {
  const auto ones = std::count(values_.begin(), values_.end(), true);
  return static_cast<std::size_t>(2 * ones) == values_.size();
}

std::string TruthTable::to_bits() const {
  std::string out;
  for (bool v : values_) out.push_back(v ? '1' : '0');
  return out;
}

}  // namespace qalt
