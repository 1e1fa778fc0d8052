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
#include <vector>

#include "qalt/linalg.hpp"

namespace qalt {

/// Shape of a mixed classical/quantum state space: a nonempty tuple of
/// block dimensions (n_1, ..., n_s). The Hilbert space H_sigma is the
/// direct sum of C^{n_i} in block order.
class Signature {
 public:
  /// Throws InvalidArgument on an empty tuple or a block below 1.
  explicit Signature(std::vector<int> blocks);

  static Signature unit() { return Signature({1}); }
  static Signature bit() { return Signature({1, 1}); }
  static Signature qbit() { return Signature({2}); }

  const std::vector<int>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  int block(std::size_t i) const { return blocks_.at(i); }
  /// Row offset of block i inside H_sigma.
  int offset(std::size_t i) const { return offsets_.at(i); }
  int dim() const noexcept { return dim_; }

  std::string to_string() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int dim_ = 0;
};

inline int dim(const Signature& s) { return s.dim(); }

/// Concatenation sigma (+) tau.
Signature dsum(const Signature& a, const Signature& b);
/// All products n_i * m_j, i major.
Signature tensor_sig(const Signature& a, const Signature& b);
/// (2) (x) sigma.
Signature qbit_tensor(const Signature& s);

/// dim(sigma (+) sigma) x dim(sigma) isometry onto block i (i in {0,1}).
Matrix injection(int i, const Signature& s);

/// Unitary taking C^d (x) H_sigma (the d-level factor leading) to the
/// block-ordered H_{(d) (x) sigma}. Identity when sigma has one block.
Matrix lift_permutation(int d, const Signature& s);

}  // namespace qalt
