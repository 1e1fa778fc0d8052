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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qalt {

/// A Boolean function f : B^n -> B stored as its 2^n values, x = 0 .. 2^n-1.
/// Bit strings list f(0) first, so "0110" is XOR on two inputs.
class TruthTable {
 public:
  /// Throws InvalidArgument unless values has length 2^n, n >= 0.
  explicit TruthTable(std::vector<bool> values);
  static TruthTable from_bits(std::string_view bits);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool operator()(std::uint64_t x) const { return values_.at(x); }
  const std::vector<bool>& values() const noexcept { return values_; }

  bool is_constant() const;
  bool is_balanced() const;
  std::string to_bits() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::vector<bool> values_;
  int arity_ = 0;
};

}  // namespace qalt
