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

#include "qalt/semantics.hpp"

namespace qalt::semantics {

Matrix reorder(const std::vector<std::string>& from, const std::vector<std::string>& to) {
  if (from.size() != to.size()) {
    throw Error(ErrorCode::DimensionMismatch, "layouts differ in length");
  }
  std::vector<int> perm;
  perm.reserve(from.size());
  for (const std::string& name : from) {
    const auto it = std::find(to.begin(), to.end(), name);
    if (it == to.end()) {
      throw Error(ErrorCode::DimensionMismatch, "factor '" + name + "' missing from layout");
    }
    perm.push_back(static_cast<int>(it - to.begin()));
  }
  return qubit_permutation(perm, static_cast<int>(from.size()));
}

std::vector<std::string> leading_layout(const Context& rest,
                                        const std::vector<std::string>& leading) {
  std::vector<std::string> out = rest.bits();
  out.insert(out.end(), leading.begin(), leading.end());
  for (auto& q : rest.qubits()) out.push_back(std::move(q));
  return out;
}

KrausSet table_skip(const Signature& sigma) { return KrausSet::identity(sigma); }

KrausSet table_new_bit(const Signature& sigma) {
  return KrausSet::make(sigma, dsum(sigma, sigma), {injection(0, sigma)});
}

KrausSet table_new_qbit(const Signature& sigma) {
  const Matrix op = lift_permutation(2, sigma) * tensor(ket(0, 2), identity(sigma.dim()));
  return KrausSet::make(sigma, qbit_tensor(sigma), {op});
}

KrausSet table_discard(const Signature& sigma) {
  const Matrix unlift = lift_permutation(2, sigma).adjoint();
  std::vector<Matrix> ops;
  for (int i = 0; i < 2; ++i) {
    ops.push_back(tensor(ket(i, 2).adjoint(), identity(sigma.dim())) * unlift);
  }
  return KrausSet::make(qbit_tensor(sigma), sigma, std::move(ops));
}

KrausSet table_merge(const Signature& sigma) {
  return KrausSet::make(dsum(sigma, sigma), sigma,
                        {injection(0, sigma).adjoint(), injection(1, sigma).adjoint()});
}

KrausSet table_measure(const Signature& sigma) {
  const Signature q = qbit_tensor(sigma);
  const Matrix lift = lift_permutation(2, sigma);
  std::vector<Matrix> ops;
  for (int i = 0; i < 2; ++i) {
    const Matrix pi = lift * tensor(projector(i, 2), identity(sigma.dim())) * lift.adjoint();
    ops.push_back(injection(i, q) * pi);
  }
  return KrausSet::make(q, dsum(q, q), std::move(ops));
}

KrausSet table_unitary(const Matrix& u, const Signature& sigma) {
  return KrausSet::make(sigma, sigma, {u});
}

}  // namespace qalt::semantics
