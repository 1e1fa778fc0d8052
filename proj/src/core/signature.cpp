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

#include "qalt/signature.hpp"

#include "qalt/error.hpp"

namespace qalt {

Signature::Signature(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "signature must have a block");
  }
  offsets_.reserve(blocks_.size());
  for (int n : blocks_) {
    if (n < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "signature block dimension must be positive");
    }
    offsets_.push_back(dim_);
    dim_ += n;
  }
}

std::string Signature::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blocks_[i]);
  }
  return out + ")";
}

Signature dsum(const Signature& a, const Signature& b) {
  std::vector<int> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return Signature(std::move(blocks));
}

Signature tensor_sig(const Signature& a, const Signature& b) {
  std::vector<int> blocks;
  blocks.reserve(a.size() * b.size());
  for (int n : a.blocks()) {
    for (int m : b.blocks()) blocks.push_back(n * m);
  }
  return Signature(std::move(blocks));
}

Signature qbit_tensor(const Signature& s) {
  return tensor_sig(Signature::qbit(), s);
}

Matrix injection(int i, const Signature& s) {
  if (i != 0 && i != 1) {
    throw Error(ErrorCode::InvalidArgument, "injection index must be 0 or 1");
  }
  Matrix out = Matrix::Zero(2 * s.dim(), s.dim());
  out.block(i * s.dim(), 0, s.dim(), s.dim()) = identity(s.dim());
  return out;
}

Matrix lift_permutation(int d, const Signature& s) {
  const int n = s.dim();
  Matrix out = Matrix::Zero(d * n, d * n);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const int nj = s.block(j);
    const int off = s.offset(j);
    for (int a = 0; a < d; ++a) {
      for (int k = 0; k < nj; ++k) {
        const int source = a * n + off + k;
        const int target = d * off + a * nj + k;
        out(target, source) = 1.0;
      }
    }
  }
  return out;
}

}  // namespace qalt
