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

#include <span>
#include <vector>

#include "qalt/core.hpp"

namespace qalt {

/// Tolerance for deciding that two Kraus operators are the same operator
/// (coalescing) or that an operator is zero.
inline constexpr double kCoalesceTol = 1e-12;

/// A finite set of nonzero operators H_in -> H_out with Sum E^dagger E <= I.
/// Members are pairwise distinct and kept in a canonical order, so every
/// derived object is deterministic.
class KrausSet {
 public:
  /// Drops zero operators, replaces l equal copies of K by sqrt(l) K until
  /// no two members coincide, sorts, and checks the trace condition.
  /// Throws DimensionMismatch or TraceConditionViolated.
  static KrausSet make(Signature input, Signature output,
                       std::vector<Matrix> raw, double tol = kDefaultTol);

  static KrausSet identity(const Signature& sig);
  /// The zero map.
  static KrausSet empty(Signature input, Signature output);

  const Signature& input_sig() const noexcept { return input_; }
  const Signature& output_sig() const noexcept { return output_; }
  const std::vector<Matrix>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

 private:
  KrausSet(Signature input, Signature output, std::vector<Matrix> ops);

  Signature input_;
  Signature output_;
  std::vector<Matrix> ops_;
};

inline KrausSet make_kraus(Signature input, Signature output,
                           std::vector<Matrix> raw, double tol = kDefaultTol) {
  return KrausSet::make(std::move(input), std::move(output), std::move(raw),
                        tol);
}

/// Drop-zero and sqrt(l) coalescing on a multiset, then canonical sort.
std::vector<Matrix> coalesce(std::vector<Matrix> raw);

/// Canonical order used for KrausSet members.
bool canonical_less(const Matrix& a, const Matrix& b);

/// Sum E^dagger E.
Matrix kraus_sum(const KrausSet& s);

/// s after t: the coalesced multiset {E F | E in s, F in t}.
KrausSet compose(const KrausSet& s, const KrausSet& t);

/// Quantum alternation s . t : qbit (x) sigma -> qbit (x) tau with elements
/// Pi_0 (x) E / sqrt|t| + Pi_1 (x) F / sqrt|s|. An empty branch contributes
/// no term and no normalisation; alternate(empty, empty) is empty.
KrausSet alternate(const KrausSet& s, const KrausSet& t);

/// n-qubit quantum case over 2^n branches; branch k is selected by the
/// classical state |k> of the controls (first control most significant).
KrausSet alternate_case(std::span<const KrausSet> branches, int n);

/// (rho_0, rho_1) |-> (s rho_0, t rho_1) on sigma (+) sigma.
KrausSet branch_sum(const KrausSet& s, const KrausSet& t);

/// Sum E rho E^dagger on full matrices of H_in.
Matrix apply_matrix(const KrausSet& s, const Matrix& rho);
/// Superoperator action on V_sigma. Throws SignatureMismatch, or
/// NonBlockDiagonalResult when the output leaks across blocks.
BlockElement apply(const KrausSet& s, const BlockElement& rho,
                   double tol = kDefaultTol);
DensityState apply(const KrausSet& s, const DensityState& rho,
                   double tol = kDefaultTol);

/// One Choi matrix per input block: block i collects
/// Sum_E vec(E J_i) vec(E J_i)^dagger with J_i the inclusion of block i.
using ChoiFamily = std::vector<Matrix>;
ChoiFamily to_choi(const KrausSet& s);

/// Largest entrywise distance between two Choi families of equal shape.
double choi_distance(const ChoiFamily& a, const ChoiFamily& b);

/// s and t define the same superoperator on V_sigma.
bool ext_equal(const KrausSet& s, const KrausSet& t, double tol = kDefaultTol);
/// t - s is completely positive on V_sigma.
bool lowner_leq(const KrausSet& s, const KrausSet& t, double tol = kDefaultTol);
/// Smallest eigenvalue over the members of to_choi(t) - to_choi(s).
double lowner_gap(const KrausSet& s, const KrausSet& t);

/// A single unitary member.
bool is_reversible(const KrausSet& s, double tol = kDefaultTol);

}  // namespace qalt
