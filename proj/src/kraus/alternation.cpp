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

#include <cmath>
#include <string>

#include "qalt/kraus.hpp"

namespace qalt {

namespace {

void require_same_type(const KrausSet& s, const KrausSet& t) {
  if (!(s.input_sig() == t.input_sig()) || !(s.output_sig() == t.output_sig())) {
    throw Error(ErrorCode::SignatureMismatch,
                "alternated branches must share their type: " +
                    s.input_sig().to_string() + " -> " +
                    s.output_sig().to_string() + " vs " +
                    t.input_sig().to_string() + " -> " +
                    t.output_sig().to_string());
  }
}

}  // namespace

KrausSet alternate(const KrausSet& s, const KrausSet& t) {
  require_same_type(s, t);
  const Signature in = qbit_tensor(s.input_sig());
  const Signature out = qbit_tensor(s.output_sig());
  const Matrix lift_in = lift_permutation(2, s.input_sig()).adjoint();
  const Matrix lift_out = lift_permutation(2, s.output_sig());
  const Matrix p0 = projector(0, 2);
  const Matrix p1 = projector(1, 2);

  std::vector<Matrix> ops;
  if (t.empty()) {
    for (const Matrix& e : s.ops()) ops.push_back(lift_out * tensor(p0, e) * lift_in);
  } else if (s.empty()) {
    for (const Matrix& f : t.ops()) ops.push_back(lift_out * tensor(p1, f) * lift_in);
  } else {
    const double norm_e = std::sqrt(static_cast<double>(t.size()));
    const double norm_f = std::sqrt(static_cast<double>(s.size()));
    for (const Matrix& e : s.ops()) {
      for (const Matrix& f : t.ops()) {
        const Matrix alt = tensor(p0, e / norm_e) + tensor(p1, f / norm_f);
        ops.push_back(lift_out * alt * lift_in);
      }
    }
  }
  return KrausSet::make(in, out, std::move(ops));
}

KrausSet alternate_case(std::span<const KrausSet> branches, int n) {
  if (n < 1) {
    throw Error(ErrorCode::InvalidArgument, "case needs at least one control");
  }
  const std::size_t count = std::size_t{1} << n;
  if (branches.size() != count) {
    throw Error(ErrorCode::BranchCountMismatch,
                "case over " + std::to_string(n) + " qubit(s) needs " +
                    std::to_string(count) + " branches, got " +
                    std::to_string(branches.size()));
  }
  for (const KrausSet& b : branches) require_same_type(branches[0], b);

  const Signature& sigma = branches[0].input_sig();
  const Signature& tau = branches[0].output_sig();
  const int d = static_cast<int>(count);
  const Signature in = tensor_sig(Signature({d}), sigma);
  const Signature out = tensor_sig(Signature({d}), tau);
  const Matrix lift_in = lift_permutation(d, sigma).adjoint();
  const Matrix lift_out = lift_permutation(d, tau);

  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < count; ++k) {
    if (!branches[k].empty()) live.push_back(k);
  }
  if (live.empty()) return KrausSet::empty(in, out);

  // Branch k is scaled by 1 / sqrt(prod_{j != k} |S_j|) over live branches.
  double total = 1.0;
  for (std::size_t k : live) total *= static_cast<double>(branches[k].size());
  std::vector<double> scale(count, 0.0);
  for (std::size_t k : live) {
    scale[k] = 1.0 / std::sqrt(total / static_cast<double>(branches[k].size()));
  }

  std::vector<Matrix> ops;
  std::vector<std::size_t> choice(live.size(), 0);
  while (true) {
    Matrix sum = Matrix::Zero(d * tau.dim(), d * sigma.dim());
    for (std::size_t i = 0; i < live.size(); ++i) {
      const std::size_t k = live[i];
      sum += tensor(projector(static_cast<Eigen::Index>(k), d),
                    scale[k] * branches[k].ops()[choice[i]]);
    }
    ops.push_back(lift_out * sum * lift_in);

    // Odometer over the product of live branches, last branch fastest.
    std::size_t pos = live.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < branches[live[pos]].size()) break;
      choice[pos] = 0;
      if (pos == 0) return KrausSet::make(in, out, std::move(ops));
    }
  }
}

}  // namespace qalt
