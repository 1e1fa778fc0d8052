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

namespace {

int qubit_position(const Context& ctx, std::string_view name) {
  const auto kind = ctx.kind_of(name);
  if (!kind) {
    throw Error(ErrorCode::UnknownName, "'" + std::string(name) + "' is not declared");
  }
  if (*kind != lang::VarKind::Qbit) {
    throw Error(ErrorCode::KindError, "'" + std::string(name) + "' is a bit, not a qbit");
  }
  const auto qubits = ctx.qubits();
  return static_cast<int>(std::find(qubits.begin(), qubits.end(), name) - qubits.begin());
}

}  // namespace

std::pair<double, double> measure_stats(const DensityState& rho, std::string_view qubit,
                                        const Context& ctx) {
  const double p0 = outcome_probability(rho, ctx, {std::string(qubit)}, "0");
  const double p1 = outcome_probability(rho, ctx, {std::string(qubit)}, "1");
  return {p0, p1};
}

double outcome_probability(const DensityState& rho, const Context& ctx,
                           const std::vector<std::string>& qubits, std::string_view bits) {
  if (qubits.size() != bits.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one outcome bit per qubit");
  }
  if (!(rho.signature() == ctx.signature())) {
    throw Error(ErrorCode::SignatureMismatch,
                "state " + rho.signature().to_string() + " does not fit context " +
                    ctx.to_string());
  }
  const int k = static_cast<int>(ctx.qubits().size());
  std::vector<std::pair<int, int>> wanted;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error(ErrorCode::InvalidArgument, "outcome must be a bitstring");
    }
    wanted.emplace_back(qubit_position(ctx, qubits[i]), bits[i] - '0');
  }
  double p = 0.0;
  for (const Matrix& block : rho.blocks()) {
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      bool match = true;
      for (const auto& [pos, b] : wanted) {
        if (((i >> (k - 1 - pos)) & 1) != b) match = false;
      }
      if (match) p += block(i, i).real();
    }
  }
  return p;
}

}  // namespace qalt::semantics
