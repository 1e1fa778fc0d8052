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

#include "qalt/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qalt/lang/parser.hpp"

namespace qalt::corpus {

namespace {

using lang::Context;

std::string names(const std::string& base, int from, int to) {
  std::string out;
  for (int i = from; i <= to; ++i) {
    if (i > from) out += ", ";
    out += base + std::to_string(i);
  }
  return out;
}

std::vector<std::string> name_list(const std::string& base, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(base + std::to_string(i));
  return out;
}

CorpusProgram make(std::string name, std::string source, Context initial = {}) {
  lang::Program program = lang::parse(source);
  return {std::move(name), std::move(source), std::move(program), std::move(initial)};
}

void require_arity(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::UnsupportedArity, what + " supports n in [" + std::to_string(lo) +
                                                 ", " + std::to_string(hi) + "], got " +
                                                 std::to_string(n));
  }
}

}  // namespace

CorpusProgram gen_deutsch(const TruthTable& f) {
  if (f.arity() != 1) {
    throw Error(ErrorCode::InvalidArgument, "Deutsch's algorithm needs f : B -> B");
  }
  const std::string bits = f.to_bits();
  return make("deutsch-" + bits,
              "new qbit q0, q1\n"
              "q0 *= H\n"
              "q1 *= X\n"
              "q1 *= H\n"
              "if q0 then { q1 *= Uf(" + bits + ", 0) } else { q1 *= Uf(" + bits + ", 1) }\n"
              "q0 *= H\n");
}

CorpusProgram gen_deutsch_jozsa(const TruthTable& f) {
  const int n = f.arity();
  require_arity(n, 1, 4, "Deutsch-Jozsa");
  if (!f.is_constant() && !f.is_balanced()) {
    throw Error(ErrorCode::InvalidArgument, "f " + f.to_bits() + " is neither constant nor balanced");
  }
  const std::string last = std::to_string(n - 1);
  const std::string source =
      "new qbit " + names("x", 0, n - 1) + "\n" +
      "new qbit y\n"
      "for i = 0 to " + last + " { x[i] *= H }\n" +
      "y *= X\n"
      "y *= H\n"
      "case (" + names("x", 0, n - 1) + ") of\n"
      "  |v> -> { y *= Uf(" + f.to_bits() + ", v) }\n" +
      "for i = 0 to " + last + " { x[i] *= H }\n";
  return make("dj-" + f.to_bits(), source);
}

CorpusProgram gen_qft(int n) {
  require_arity(n, 1, 6, "the Fourier transform");
  const std::string source =
      "for i = 1 to " + std::to_string(n) + " {\n"
      "  q[i] *= H\n"
      "  for k = 2 to " + std::to_string(n) + " - i + 1 {\n"
      "    if q[k + i - 1] then { skip } else { q[i] *= Rk(k) }\n"
      "  }\n"
      "}\n";
  return make("qft-" + std::to_string(n), source, Context::of_qubits(name_list("q", 1, n)));
}

CorpusProgram gen_grover_oracle(std::uint64_t x0, int n) {
  require_arity(n, 1, 3, "the Grover oracle");
  if (x0 >= (std::uint64_t{1} << n)) {
    throw Error(ErrorCode::InvalidArgument, "x0 = " + std::to_string(x0) + " has more than " +
                                                std::to_string(n) + " bits");
  }
  std::string label;
  for (int b = n - 1; b >= 0; --b) label += ((x0 >> b) & 1u) ? '1' : '0';
  std::vector<std::string> ctx = name_list("x", 0, n - 1);
  ctx.push_back("y");
  return make("grover-" + label,
              "case (" + names("x", 0, n - 1) + ") of\n"
              "  |" + label + "> -> { y *= X }\n"
              "  |_> -> { skip }\n",
              Context::of_qubits(ctx));
}

CorpusProgram gen_uf_case(const TruthTable& f) {
  const int n = f.arity();
  require_arity(n, 1, 3, "the U_f case");
  std::vector<std::string> ctx = name_list("x", 0, n - 1);
  ctx.push_back("y");
  return make("uf-" + f.to_bits(),
              "case (" + names("x", 0, n - 1) + ") of\n"
              "  |v> -> { y *= Uf(" + f.to_bits() + ", v) }\n",
              Context::of_qubits(ctx));
}

CorpusProgram gen_controlled(const std::string& gate) {
  return make("controlled-" + gate, "if q0 then { skip } else { q1 *= " + gate + " }\n",
              Context::of_qubits({"q0", "q1"}));
}

CorpusProgram gen_toffoli() {
  return make("toffoli",
              "if q0 then { skip } else {\n"
              "  if q1 then { skip } else { q2 *= X }\n"
              "}\n",
              Context::of_qubits({"q0", "q1", "q2"}));
}

CorpusProgram gen_controlled_phase(double theta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return make(std::string("controlled-phase-") + buf,
              std::string("if q0 then { skip } else { q1 *= Phase(") + buf + ") }\n",
              Context::of_qubits({"q0", "q1"}));
}

std::vector<TruthTable> admissible_functions(int n) {
  require_arity(n, 1, 4, "admissible_functions");
  const std::size_t size = std::size_t{1} << n;
  std::vector<TruthTable> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << size); ++code) {
    std::vector<bool> values(size);
    for (std::size_t x = 0; x < size; ++x) values[x] = (code >> (size - 1 - x)) & 1u;
    TruthTable f(std::move(values));
    if (f.is_constant() || f.is_balanced()) out.push_back(std::move(f));
  }
  return out;
}

std::vector<CorpusProgram> full_corpus() {
  std::vector<CorpusProgram> out;
  for (const TruthTable& f : admissible_functions(1)) out.push_back(gen_deutsch(f));
  for (const char* bits : {"0000", "1111", "0011", "0110", "1001"}) {
    out.push_back(gen_deutsch_jozsa(TruthTable::from_bits(bits)));
  }
  for (const char* bits : {"00000000", "01101001", "00001111"}) {
    out.push_back(gen_deutsch_jozsa(TruthTable::from_bits(bits)));
  }
  for (int n = 1; n <= 4; ++n) out.push_back(gen_qft(n));
  out.push_back(gen_grover_oracle(1, 1));
  out.push_back(gen_grover_oracle(3, 2));
  out.push_back(gen_grover_oracle(5, 3));
  out.push_back(gen_uf_case(TruthTable::from_bits("0111")));
  out.push_back(gen_controlled("X"));
  out.push_back(gen_controlled("H"));
  out.push_back(gen_toffoli());
  out.push_back(gen_controlled_phase(std::numbers::pi / 4));
  out.push_back(make("dephase", "measure q then { skip } else { skip }\n",
                     Context::of_qubits({"q"})));
  out.push_back(make("coin", "new qbit c\nc *= H\nmeasure c then { skip } else { q *= X }\n",
                     Context::of_qubits({"q"})));
  out.push_back(make("record",
                     "new bit b\n"
                     "q *= H\n"
                     "measure q then { skip } else { q *= X }\n",
                     Context::of_qubits({"q"})));
  out.push_back(make("reset", "discard q\nnew qbit q\nq *= H\n", Context::of_qubits({"q", "r"})));
  out.push_back(make("if-measure",
                     "if q then { measure r then { skip } else { r *= X } } else { r *= H }\n",
                     Context::of_qubits({"q", "r"})));
  out.push_back(make("if-discard",
                     "if q then { discard r; new qbit r } else { r *= Y }\n",
                     Context::of_qubits({"q", "r", "s"})));
  out.push_back(make("case-mixed",
                     "case (a, b) of\n"
                     "  |00> -> { skip }\n"
                     "  |01> -> { c *= X }\n"
                     "  |10> -> { measure c then { skip } else { skip } }\n"
                     "  |11> -> { c *= Phase(1.25) }\n",
                     Context::of_qubits({"a", "b", "c"})));
  return out;
}

Matrix cnot_matrix() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Matrix toffoli_matrix() {
  Matrix m = Matrix::Identity(8, 8);
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return m;
}

Matrix dft_matrix(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) /
                           static_cast<double>(dim);
      m(j, k) = norm * std::polar(1.0, angle);
    }
  }
  return m;
}

Matrix bit_reversal_matrix(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::Index r = 0;
    for (int b = 0; b < n; ++b) r |= ((j >> b) & 1) << (n - 1 - b);
    m(r, j) = 1.0;
  }
  return m;
}

Matrix uf_matrix(const TruthTable& f) {
  const Eigen::Index dim = Eigen::Index{2} << f.arity();
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < (dim >> 1); ++x) {
    for (Eigen::Index y = 0; y < 2; ++y) {
      const Eigen::Index out = y ^ (f(static_cast<std::uint64_t>(x)) ? 1 : 0);
      m(2 * x + out, 2 * x + y) = 1.0;
    }
  }
  return m;
}

Matrix grover_oracle_matrix(std::uint64_t x0, int n) {
  std::vector<bool> values(std::size_t{1} << n, false);
  values.at(x0) = true;
  return uf_matrix(TruthTable(std::move(values)));
}

}  // namespace qalt::corpus
