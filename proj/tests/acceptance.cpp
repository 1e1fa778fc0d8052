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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "document.hpp"
#include "qalt/cli.hpp"
#include "qalt/corpus.hpp"
#include "qalt/lang/parser.hpp"
#include "qalt/semantics.hpp"
#include "qalt/stinespring.hpp"
#include "test_util.hpp"

namespace {

using namespace qalt;
using lang::Context;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <typename F>
Matrix basis_map(int n, F f) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) m(f(j), j) = 1.0;
  return m;
}

Matrix dft(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix f(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % dim) / static_cast<double>(dim);
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(dim)), angle);
    }
  }
  return f;
}

Matrix reversal(int n) {
  return basis_map(n, [n](Eigen::Index j) {
    Eigen::Index rev = 0;
    for (int b = 0; b < n; ++b) rev |= ((j >> b) & 1) << (n - 1 - b);
    return rev;
  });
}

/// The single operator of a program denotation, or an empty matrix.
Matrix unitary_of(const corpus::CorpusProgram& p) {
  const KrausSet k = semantics::denote_program(p.program, p.initial).kraus;
  return k.size() == 1 ? k.ops()[0] : Matrix{};
}

double deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return max_abs_diff(a, b);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<std::string> controls(int n) {
  std::vector<std::string> xs;
  for (int i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
  return xs;
}

Outcome controlled_u() {
  Outcome o;
  const double dev = deviation(unitary_of(corpus::gen_controlled("X")),
                               basis_map(2, [](Eigen::Index j) { return (j & 2) ? j ^ 1 : j; }));
  o.require(dev <= 1e-12, "deviation " + fmt(dev));
  o.detail = o.pass ? "max deviation " + fmt(dev) : o.detail;
  return o;
}

Outcome toffoli() {
  Outcome o;
  const double dev = deviation(unitary_of(corpus::gen_toffoli()),
                               basis_map(3, [](Eigen::Index j) { return (j & 6) == 6 ? j ^ 1 : j; }));
  o.require(dev <= 1e-12, "deviation " + fmt(dev));
  if (o.pass) o.detail = "max deviation " + fmt(dev);
  return o;
}

Outcome qft() {
  Outcome o;
  // Pin the side of the bit reversal at n = 2 first.
  const Matrix u2 = unitary_of(corpus::gen_qft(2));
  const bool after = deviation(u2, reversal(2) * dft(2)) <= 1e-12;
  const bool before = deviation(u2, dft(2) * reversal(2)) <= 1e-12;
  o.require(after && !before, "n = 2 does not single out R F");
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const double dev = deviation(unitary_of(corpus::gen_qft(n)), reversal(n) * dft(n));
    worst = std::max(worst, dev);
    o.require(dev <= 1e-10, "n = " + std::to_string(n) + " deviation " + fmt(dev));
  }
  if (o.pass) o.detail = "U = R F for n = 1..4, max deviation " + fmt(worst);
  return o;
}

Outcome deutsch() {
  Outcome o;
  for (const TruthTable& f : corpus::admissible_functions(1)) {
    const corpus::CorpusProgram p = corpus::gen_deutsch(f);
    const semantics::RunResult r = semantics::run(p.program);
    const double p0 = semantics::measure_stats(r.state, "q0", r.context).first;
    o.require(std::abs(p0 - (f.is_constant() ? 1.0 : 0.0)) <= 1e-9, "f = " + f.to_bits() + " gives " + fmt(p0));
  }
  if (o.pass) o.detail = "4 functions decided";
  return o;
}

Outcome deutsch_jozsa() {
  Outcome o;
  int constant = 0;
  int balanced = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const TruthTable& f : corpus::admissible_functions(n)) {
      const corpus::CorpusProgram p = corpus::gen_deutsch_jozsa(f);
      const semantics::RunResult r = semantics::run(p.program);
      const double pz = semantics::outcome_probability(r.state, r.context, controls(n), std::string(n, '0'));
      o.require(std::abs(pz - (f.is_constant() ? 1.0 : 0.0)) <= 1e-9, "f = " + f.to_bits() + " gives " + fmt(pz));
      ++(f.is_constant() ? constant : balanced);
    }
  }
  if (o.pass) o.detail = std::to_string(constant) + " constant, " + std::to_string(balanced) + " balanced";
  return o;
}

Outcome condition_two() {
  Outcome o;
  test::Rng rng(602);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig = test::random_signature(rng);
    const Signature tau = test::random_signature(rng);
    const KrausSet s = test::random_kraus(rng, sig, tau, test::uniform_int(rng, 1, 3), test::uniform(rng, 0.3, 1.0));
    const KrausSet t = test::random_kraus(rng, sig, tau, test::uniform_int(rng, 1, 3), test::uniform(rng, 0.3, 1.0));
    const DensityState rho = test::random_state(rng, sig);
    const KrausSet alt = alternate(s, t);
    for (int i = 0; i < 2; ++i) {
      std::vector<Matrix> in;
      for (const Matrix& b : rho.blocks()) in.push_back(tensor(projector(i, 2), b));
      const BlockElement out = apply(alt, BlockElement(qbit_tensor(sig), in));
      const DensityState local = apply(i == 0 ? s : t, rho);
      std::vector<Matrix> expected;
      for (const Matrix& b : local.blocks()) expected.push_back(tensor(projector(i, 2), b));
      const double dev = test::max_diff(out.blocks(), expected);
      o.require(dev <= 1e-9, "trial " + std::to_string(trial) + " deviation " + fmt(dev));
    }
  }
  if (o.pass) o.detail = "100 trials";
  return o;
}

Outcome condition_three() {
  Outcome o;
  test::Rng rng(703);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = test::uniform_int(rng, 1, 4);
    const Signature sig({static_cast<int>(d)});
    const KrausSet alt = alternate(make_kraus(sig, sig, {test::random_unitary(rng, d)}),
                                   make_kraus(sig, sig, {test::random_unitary(rng, d)}));
    o.require(alt.size() == 1, "trial " + std::to_string(trial) + " has " + std::to_string(alt.size()) + " members");
    if (alt.size() == 1) o.require(is_unitary(alt.ops()[0], 1e-10), "trial " + std::to_string(trial) + " not unitary");
  }
  if (o.pass) o.detail = "100 trials";
  return o;
}

Outcome closure() {
  Outcome o;
  test::Rng rng(804);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig = test::random_signature(rng);
    const Signature tau = test::random_signature(rng);
    const KrausSet s = test::random_kraus(rng, sig, tau, test::uniform_int(rng, 1, 3), test::uniform(rng, 0.3, 1.0));
    const KrausSet t = test::random_kraus(rng, sig, tau, test::uniform_int(rng, 1, 3), test::uniform(rng, 0.3, 1.0));
    const KrausSet r = test::random_kraus(rng, tau, sig, 2, test::uniform(rng, 0.3, 1.0));
    try {
      for (const KrausSet& k : {alternate(s, t), compose(r, s), branch_sum(s, t)}) {
        make_kraus(k.input_sig(), k.output_sig(), k.ops());
      }
    } catch (const Error& e) {
      o.require(false, "trial " + std::to_string(trial) + ": " + e.what());
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Signature sig = test::random_signature(rng);
    const Signature tau = test::random_signature(rng);
    const KrausSet alt = alternate(test::random_kraus(rng, sig, tau, test::uniform_int(rng, 1, 3)),
                                   test::random_kraus(rng, sig, tau, test::uniform_int(rng, 1, 3)));
    const double dev = max_abs_diff(kraus_sum(alt), identity(alt.input_sig().dim()));
    o.require(dev <= 1e-9, "trace preservation lost by " + fmt(dev));
  }
  if (o.pass) o.detail = "100 + 100 trials";
  return o;
}

Outcome phase_sensitivity() {
  Outcome o;
  const Signature q = Signature::qbit();
  const KrausSet id = KrausSet::identity(q);
  const KrausSet shifted = make_kraus(q, q, {std::polar(1.0, std::numbers::pi / 4) * identity(2)});
  o.require(ext_equal(id, shifted), "{I} and {e^{i pi/4} I} differ");
  o.require(!ext_equal(alternate(id, id), alternate(id, shifted)), "alternations coincide");
  test::Rng rng(905);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix u = test::random_unitary(rng, 2);
    const Matrix v = test::random_unitary(rng, 2);
    const Complex common = std::polar(1.0, test::uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const Complex relative = std::polar(1.0, test::uniform(rng, 0.3, 2.0 * std::numbers::pi - 0.3));
    const KrausSet a = alternate(make_kraus(q, q, {u}), make_kraus(q, q, {v}));
    const KrausSet b = alternate(make_kraus(q, q, {common * u}), make_kraus(q, q, {common * v}));
    const KrausSet c = alternate(make_kraus(q, q, {common * u}), make_kraus(q, q, {relative * common * v}));
    o.require(ext_equal(a, b), "trial " + std::to_string(trial) + ": shared phase not equal");
    o.require(!ext_equal(a, c), "trial " + std::to_string(trial) + ": relative phase equal");
  }
  if (o.pass) o.detail = "witness plus 50 trials";
  return o;
}

Outcome non_monotonicity() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run_cli({"demo", "nonmonotone", "--format", "json"}, out, err);
  o.require(code == 0, "demo exited with " + std::to_string(code));
  if (!o.pass) return o;
  const cli::Json r = cli::Json::parse(out.str())["result"];
  o.require(r["empty_leq_t"] == true, "empty set not below T");
  o.require(r["s_leq_s"] == true, "S not below S");
  o.require(r["alternation_monotone"] == false, "alternation reported monotone");
  const double eig = r["witness_min_eigenvalue"].get<double>();
  o.require(std::abs(eig - (1.0 - std::sqrt(5.0)) / 4.0) <= 1e-9, "witness eigenvalue " + fmt(eig));
  if (o.pass) o.detail = "witness eigenvalue " + std::to_string(eig);
  return o;
}

Outcome stinespring() {
  Outcome o;
  test::Rng rng(1106);
  for (int trial = 0; trial < 100; ++trial) {
    const KrausSet s = test::random_kraus(rng, test::random_signature(rng), test::random_signature(rng),
                                          test::uniform_int(rng, 1, 4), test::uniform(rng, 0.2, 1.0));
    const StinespringRep rep = to_stinespring(s);
    o.require(verify_stinespring(s, rep), "verification failed on trial " + std::to_string(trial));
    o.require(ext_equal(from_stinespring(rep), s, 1e-10), "round trip failed on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Signature in = test::random_signature(rng);
    const Signature out = test::random_signature(rng);
    const KrausSet s = test::random_kraus(rng, in, out, test::uniform_int(rng, 1, 3), test::uniform(rng, 0.2, 1.0));
    const KrausSet t = test::random_kraus(rng, in, out, test::uniform_int(rng, 1, 3), test::uniform(rng, 0.2, 1.0));
    const StinespringRep w = alternation_stinespring(s, t);
    o.require(verify_stinespring(alternate(s, t), w), "alternation trial " + std::to_string(trial));
    o.require(w.ancilla_dim == to_stinespring(t).ancilla_dim * to_stinespring(s).ancilla_dim,
              "ancilla product law on trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "100 round trips, 50 alternations";
  return o;
}

Outcome cross_evaluator() {
  Outcome o;
  test::Rng rng(1207);
  double worst = 0.0;
  int programs = 0;
  for (const corpus::CorpusProgram& c : corpus::full_corpus()) {
    ++programs;
    for (int trial = 0; trial < 20; ++trial) {
      const DensityState rho = test::random_state(rng, c.initial.signature(), test::uniform(rng, 0.2, 1.0));
      const semantics::RunResult a = semantics::run(c.program, c.initial, rho);
      const semantics::RunResult b = semantics::eval_direct(c.program, c.initial, rho);
      const double dev = test::max_diff(a.state.blocks(), b.state.blocks());
      worst = std::max(worst, dev);
      o.require(dev <= 1e-9, c.name + " deviation " + fmt(dev));
    }
  }
  if (o.pass) o.detail = std::to_string(programs) + " programs, max deviation " + fmt(worst);
  return o;
}

std::string error_of(const std::string& src, const Context& ctx) {
  try {
    lang::typecheck(lang::parse(src), ctx);
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

Outcome typing_rule() {
  Outcome o;
  const Context q01 = Context::of_qubits({"q0", "q1"});
  const std::string capture = error_of("if q0 then { q0 *= X } else { skip }", q01);
  o.require(capture ==
                "ControlCapture: 'q0' is the control of an enclosing quantum if and cannot be used in "
                "its branches (line 1, column 14)",
            capture);
  const std::string mismatch = error_of("if q0 then { discard q1 } else { skip }", q01);
  o.require(mismatch ==
                "BranchContextMismatch: branches of quantum if on 'q0' end in different contexts: {} "
                "vs {q1: qbit} (line 1, column 1)",
            mismatch);
  if (o.pass) o.detail = "golden messages match";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"controlled-U is CNOT", controlled_u},
      {"nested ifs give Toffoli", toffoli},
      {"QFT program vs DFT", qft},
      {"Deutsch", deutsch},
      {"Deutsch-Jozsa n = 2, 3", deutsch_jozsa},
      {"classical-state reduction", condition_two},
      {"alternation of unitaries is unitary", condition_three},
      {"closure of the trace condition", closure},
      {"phase sensitivity", phase_sensitivity},
      {"non-monotonicity", non_monotonicity},
      {"Stinespring representations", stinespring},
      {"run vs eval_direct", cross_evaluator},
      {"typing rule for alternation", typing_rule},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
