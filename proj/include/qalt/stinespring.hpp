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

#include "qalt/kraus.hpp"

namespace qalt {

/// A pair (A, V) with V : K -> H (x) A realising rho |-> V^dagger (rho (x) I_A) V.
/// Rows of v are indexed h * ancilla_dim + a (input space leading).
struct StinespringRep {
  Signature input_sig;   // H
  Signature output_sig;  // K
  int ancilla_dim = 0;
  Matrix v;
};

/// V psi = Sum_E E^dagger psi (x) |E>, ancilla basis in canonical op order.
/// Throws EmptySet for the zero map.
StinespringRep to_stinespring(const KrausSet& s);

/// V^dagger (rho (x) I_A) V on a full matrix of H.
Matrix stinespring_action(const StinespringRep& rep, const Matrix& rho);

/// Compares the dilation with apply(s, .) on every matrix unit of V_sigma.
/// Throws DimensionMismatch for an inconsistent rep.
bool verify_stinespring(const KrausSet& s, const StinespringRep& rep,
                        double tol = kDefaultTol);

/// E_k^dagger = (I (x) <k|) V. Throws TraceConditionViolated when V^dagger V
/// is not bounded by the identity.
KrausSet from_stinespring(const StinespringRep& rep, double tol = kDefaultTol);

/// W psi = Sum_{E,F} Alt(E^, F^)^dagger psi (x) |F> (x) |E>; ancilla index
/// index(F) * |s| + index(E). Throws EmptySet if either side is empty.
StinespringRep alternation_stinespring(const KrausSet& s, const KrausSet& t);

}  // namespace qalt
