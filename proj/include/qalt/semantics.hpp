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
#include <string_view>
#include <utility>
#include <vector>

#include "qalt/kraus.hpp"
#include "qalt/lang/ast.hpp"
#include "qalt/lang/context.hpp"
#include "qalt/lang/typecheck.hpp"

namespace qalt::semantics {

using lang::Context;

// ---------------------------------------------------------------------------
// Register layout. Every variable is a two-dimensional tensor factor; the
// factor order of a context is Context::factors() (bits, then qubits).

/// Permutation unitary H_from -> H_to between two orderings of the same
/// named factors.
Matrix reorder(const std::vector<std::string>& from, const std::vector<std::string>& to);

/// Factor order of `rest` with `leading` inserted as its first qubits. This
/// is the block-ordered layout of (2^|leading|) (x) sig(rest).
std::vector<std::string> leading_layout(const Context& rest,
                                        const std::vector<std::string>& leading);

// ---------------------------------------------------------------------------
// Table entries. `sigma` is the untouched remainder of the state space.

KrausSet table_skip(const Signature& sigma);
/// {inj_0} : sigma -> sigma (+) sigma.
KrausSet table_new_bit(const Signature& sigma);
/// {|0> (x) -} : sigma -> qbit (x) sigma.
KrausSet table_new_qbit(const Signature& sigma);
/// {<0| (x) id, <1| (x) id} : qbit (x) sigma -> sigma.
KrausSet table_discard(const Signature& sigma);
/// {inj_0^dagger, inj_1^dagger} : sigma (+) sigma -> sigma.
KrausSet table_merge(const Signature& sigma);
/// {inj_0 Pi_0, inj_1 Pi_1} on the leading qubit of qbit (x) sigma.
KrausSet table_measure(const Signature& sigma);
/// {U} : sigma -> sigma.
KrausSet table_unitary(const Matrix& u, const Signature& sigma);

// ---------------------------------------------------------------------------

struct Denotation {
  KrausSet kraus;
  Context input_ctx;
  Context output_ctx;
};

/// Kraus semantics of one elaborated statement under ctx. Throws
/// NotElaborated for loops, indexed names or oracles, and the typechecker's
/// errors for ill-typed input.
Denotation denote(const lang::Stmt& stmt, const Context& ctx);
/// Sequencing: [[P ; Q]] = [[Q]] o [[P]].
Denotation denote(const lang::Block& block, const Context& ctx);
/// Typecheck, elaborate and denote a whole program.
Denotation denote_program(const lang::Program& program, const Context& initial,
                          const lang::TypecheckOptions& options = {});

struct RunResult {
  Context context;
  DensityState state;
};

/// apply([[p]], initial). The state must live on initial.signature().
RunResult run(const lang::Program& program, const Context& initial,
              const DensityState& state, double tol = kDefaultTol);
/// From the empty context and the scalar state 1.
RunResult run(const lang::Program& program, double tol = kDefaultTol);

/// Independent evaluator: updates the density matrix statement by
/// statement with index arithmetic, never building program-level Kraus
/// sets. Quantum if / case apply the alternation element by element from
/// the branches' own operator lists.
RunResult eval_direct(const lang::Program& program, const Context& initial,
                      const DensityState& state, double tol = kDefaultTol);
RunResult eval_direct(const lang::Program& program, double tol = kDefaultTol);

/// (Pr[q = 0], Pr[q = 1]) = tr((Pi_i on q) rho) summed over blocks.
/// Throws UnknownName or KindError.
std::pair<double, double> measure_stats(const DensityState& rho, std::string_view qubit,
                                        const Context& ctx);

/// Probability that the listed qubits read `bits` (first name first).
double outcome_probability(const DensityState& rho, const Context& ctx,
                           const std::vector<std::string>& qubits, std::string_view bits);

}  // namespace qalt::semantics
