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

#include "qalt/state.hpp"

#include <string>

#include "qalt/error.hpp"

namespace qalt {

BlockElement::BlockElement(Signature sig, std::vector<Matrix> blocks)
    : sig_(std::move(sig)), blocks_(std::move(blocks)) {
  if (blocks_.size() != sig_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(sig_.size()) +
                    " block(s) for signature " + sig_.to_string() + ", got " +
                    std::to_string(blocks_.size()));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const int n = sig_.block(i);
    if (blocks_[i].rows() != n || blocks_[i].cols() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "block " + std::to_string(i) + " must be " +
                      std::to_string(n) + "x" + std::to_string(n));
    }
    if (!all_finite(blocks_[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "block " + std::to_string(i) + " has non-finite entries");
    }
  }
}

BlockElement BlockElement::zero(const Signature& sig) {
  std::vector<Matrix> blocks;
  for (int n : sig.blocks()) blocks.push_back(zeros(n, n));
  return BlockElement(sig, std::move(blocks));
}

BlockElement BlockElement::from_matrix(const Signature& sig,
                                       const Matrix& full, double tol) {
  if (full.rows() != sig.dim() || full.cols() != sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix does not match signature " + sig.to_string());
  }
  Matrix rest = full;
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const int n = sig.block(i);
    const int off = sig.offset(i);
    blocks.push_back(full.block(off, off, n, n));
    rest.block(off, off, n, n).setZero();
  }
  if (!is_zero(rest, tol)) {
    throw Error(ErrorCode::NonBlockDiagonalResult,
                "result carries off-block mass " +
                    std::to_string(rest.cwiseAbs().maxCoeff()) +
                    " across classical blocks of " + sig.to_string());
  }
  return BlockElement(sig, std::move(blocks));
}

Matrix BlockElement::to_matrix() const {
  Matrix full = Matrix::Zero(sig_.dim(), sig_.dim());
  for (std::size_t i = 0; i < sig_.size(); ++i) {
    const int n = sig_.block(i);
    full.block(sig_.offset(i), sig_.offset(i), n, n) = blocks_[i];
  }
  return full;
}

Complex BlockElement::trace() const {
  Complex t{};
  for (const Matrix& b : blocks_) t += b.trace();
  return t;
}

std::vector<BlockElement> basis_elements(const Signature& sig) {
  std::vector<BlockElement> out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const int n = sig.block(i);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        BlockElement e = BlockElement::zero(sig);
        std::vector<Matrix> blocks = e.blocks();
        blocks[i](j, k) = 1.0;
        out.emplace_back(sig, std::move(blocks));
      }
    }
  }
  return out;
}

DensityState::DensityState(BlockElement element, double tol)
    : element_(std::move(element)) {
  for (std::size_t i = 0; i < element_.blocks().size(); ++i) {
    const Matrix& b = element_.block(i);
    if (!is_hermitian(b, tol)) {
      throw Error(ErrorCode::InvalidArgument,
                  "state block " + std::to_string(i) + " is not Hermitian");
    }
    if (!is_psd(b, tol)) {
      throw Error(ErrorCode::InvalidArgument,
                  "state block " + std::to_string(i) + " is not positive");
    }
  }
  const double tr = element_.trace().real();
  if (tr < -tol || tr > 1.0 + tol) {
    throw Error(ErrorCode::InvalidArgument,
                "state trace " + std::to_string(tr) + " outside [0, 1]");
  }
}

DensityState::DensityState(Signature sig, std::vector<Matrix> blocks,
                           double tol)
    : DensityState(BlockElement(std::move(sig), std::move(blocks)), tol) {}

DensityState DensityState::unit() {
  return DensityState(Signature::unit(), {identity(1)});
}

}  // namespace qalt
