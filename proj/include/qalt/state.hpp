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

#include <vector>

#include "qalt/signature.hpp"

namespace qalt {

/// An element of V_sigma: one square matrix per signature block. No
/// positivity requirement; matrix units of V_sigma are BlockElements.
class BlockElement {
 public:
  /// Throws DimensionMismatch when block shapes disagree with sig.
  BlockElement(Signature sig, std::vector<Matrix> blocks);

  static BlockElement zero(const Signature& sig);

  /// Reads the diagonal blocks of a dim(sig)-square matrix. Throws
  /// NonBlockDiagonalResult when any off-block entry exceeds tol.
  static BlockElement from_matrix(const Signature& sig, const Matrix& full,
                                  double tol);

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(std::size_t i) const { return blocks_.at(i); }

  /// Block-diagonal dim(sig)-square matrix.
  Matrix to_matrix() const;
  Complex trace() const;

 private:
  Signature sig_;
  std::vector<Matrix> blocks_;
};

/// The Sum n_i^2 matrix units e^{(i)}_{jk}, block-major then row-major.
std::vector<BlockElement> basis_elements(const Signature& sig);

/// Positive element of V_sigma with total trace at most 1.
class DensityState {
 public:
  /// Validates Hermitian / PSD blocks and trace in [0, 1 + tol].
  DensityState(BlockElement element, double tol = kDefaultTol);
  DensityState(Signature sig, std::vector<Matrix> blocks,
               double tol = kDefaultTol);

  /// The scalar 1 on signature (1).
  static DensityState unit();

  const Signature& signature() const noexcept { return element_.signature(); }
  const std::vector<Matrix>& blocks() const noexcept {
    return element_.blocks();
  }
  const BlockElement& element() const noexcept { return element_; }
  Matrix to_matrix() const { return element_.to_matrix(); }
  double trace() const { return element_.trace().real(); }

 private:
  BlockElement element_;
};

}  // namespace qalt
