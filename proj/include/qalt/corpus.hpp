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

#include "qalt/error.hpp"
#include "qalt/lang/ast.hpp"
#include "qalt/lang/context.hpp"
#include "qalt/truth_table.hpp"

namespace qalt::corpus {

/// A generated program, its source text and the context it starts from.
struct CorpusProgram {
  std::string name;
  std::string source;
  lang::Program program;
  lang::Context initial;
};

/// new qbit q0, q1; q0 *= H; q1 *= H o N; if q0 then U_0 else U_1; q0 *= H.
/// Throws InvalidArgument unless f has arity 1.
CorpusProgram gen_deutsch(const TruthTable& f);

/// Deutsch-Jozsa with controls x0 .. x(n-1) and target y, via a case with a
/// binder arm. Throws UnsupportedArity for n > 4 and InvalidArgument for
/// n = 0 or f neither constant nor balanced.
CorpusProgram gen_deutsch_jozsa(const TruthTable& f);

/// The loop program for the Fourier transform on q1 .. qn.
/// Throws UnsupportedArity outside 1 <= n <= 6.
CorpusProgram gen_qft(int n);

/// case (x0, .., x(n-1)) of |x0> -> y *= X | _ -> skip, on context
/// (x0, .., x(n-1), y). Throws UnsupportedArity outside 1 <= n <= 3 and
/// InvalidArgument for x0 >= 2^n.
CorpusProgram gen_grover_oracle(std::uint64_t x0, int n);

/// The U_f statement alone: case over x0 .. x(n-1) with y *= Uf(f, x).
/// Throws UnsupportedArity outside 1 <= n <= 3.
CorpusProgram gen_uf_case(const TruthTable& f);

/// if q0 then skip else q1 *= U, for U a named one-qubit gate.
CorpusProgram gen_controlled(const std::string& gate = "X");

/// Two nested ifs on (q0, q1, q2).
CorpusProgram gen_toffoli();

/// if q0 then skip else q1 *= Phase(theta).
CorpusProgram gen_controlled_phase(double theta);

/// Every constant or balanced function of arity n, in bitstring order.
std::vector<TruthTable> admissible_functions(int n);

/// Every generated program, plus a few using measurement, bits and
/// discarding, in a fixed order.
std::vector<CorpusProgram> full_corpus();

// Golden matrices. Qubit 0 is the most significant index bit.

Matrix cnot_matrix();
Matrix toffoli_matrix();
/// omega^{jk} / sqrt(N) with N = 2^n.
Matrix dft_matrix(int n);
/// Permutation |j> -> |reverse of the n bits of j>.
Matrix bit_reversal_matrix(int n);
/// |x, y> -> |x, y xor f(x)> with x on the leading n qubits.
Matrix uf_matrix(const TruthTable& f);
/// Permutation flipping y exactly when the controls read x0.
Matrix grover_oracle_matrix(std::uint64_t x0, int n);

}  // namespace qalt::corpus
