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

#include <catch_amalgamated.hpp>

#include "qalt/stinespring.hpp"
#include "test_util.hpp"

namespace qalt {
namespace {

Matrix pauli_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  return x;
}

Matrix pauli_z() {
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

KrausSet dephasing() {
  return make_kraus(Signature::qbit(), Signature::qbit(), {projector(0, 2), projector(1, 2)});
}

TEST_CASE("to_stinespring of a unitary is its adjoint") {
  test::Rng rng(1);
  const Matrix u = test::random_unitary(rng, 3);
  const StinespringRep rep = to_stinespring(make_kraus(Signature({3}), Signature({3}), {u}));
  CHECK(rep.ancilla_dim == 1);
  CHECK(max_abs_diff(rep.v, u.adjoint()) == 0.0);
}

TEST_CASE("to_stinespring of the dephasing channel") {
  const StinespringRep rep = to_stinespring(dephasing());
  REQUIRE(rep.ancilla_dim == 2);
  // V psi = Pi_0 psi (x) |0> + Pi_1 psi (x) |1>.
  const Matrix expected = tensor(projector(0, 2), ket(0, 2)) + tensor(projector(1, 2), ket(1, 2));
  CHECK(max_abs_diff(rep.v, expected) == 0.0);

  test::Rng rng(2);
  const Matrix rho = test::random_state(rng, Signature::qbit()).to_matrix();
  const Matrix out = stinespring_action(rep, rho);
  CHECK(max_abs_diff(out, projector(0, 2) * rho * projector(0, 2) +
                              projector(1, 2) * rho * projector(1, 2)) <= 1e-15);
  CHECK(verify_stinespring(dephasing(), rep));
}

TEST_CASE("to_stinespring of a Pauli mixture is an isometry") {
  const KrausSet s =
      make_kraus(Signature::qbit(), Signature::qbit(), {pauli_x() / std::sqrt(2.0), pauli_z() / std::sqrt(2.0)});
  const StinespringRep rep = to_stinespring(s);
  CHECK(rep.ancilla_dim == 2);
  CHECK(max_abs_diff(rep.v.adjoint() * rep.v, identity(2)) <= 1e-15);
}

TEST_CASE("to_stinespring rejects the zero map") {
  try {
    to_stinespring(KrausSet::empty(Signature::qbit(), Signature::qbit()));
    FAIL("expected EmptySet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySet);
  }
}

TEST_CASE("verify_stinespring detects the wrong channel") {
  const KrausSet id = KrausSet::identity(Signature::qbit());
  StinespringRep rep = to_stinespring(id);
  CHECK(verify_stinespring(id, rep));
  rep.v = pauli_x().adjoint();
  CHECK_FALSE(verify_stinespring(id, rep));

  StinespringRep broken = to_stinespring(id);
  broken.ancilla_dim = 3;
  CHECK_THROWS_AS(verify_stinespring(id, broken), Error);
}

TEST_CASE("from_stinespring reads the Kraus operators back") {
  const KrausSet h = make_kraus(Signature::qbit(), Signature::qbit(), {hadamard()});
  const KrausSet back = from_stinespring(to_stinespring(h));
  REQUIRE(back.size() == 1);
  CHECK(max_abs_diff(back.ops()[0], hadamard()) <= 1e-15);

  const KrausSet d = from_stinespring(to_stinespring(dephasing()));
  CHECK(ext_equal(d, dephasing()));
  CHECK(d.size() == 2);

  // V = U^dagger (x) |0> on a two-dimensional ancilla.
  test::Rng rng(3);
  const Matrix u = test::random_unitary(rng, 2);
  const StinespringRep rep{Signature::qbit(), Signature::qbit(), 2, tensor(u.adjoint(), ket(0, 2))};
  const KrausSet single = from_stinespring(rep);
  REQUIRE(single.size() == 1);
  CHECK(max_abs_diff(single.ops()[0], u) <= 1e-15);

  const StinespringRep too_big{Signature::qbit(), Signature::qbit(), 1, 2.0 * identity(2)};
  try {
    from_stinespring(too_big);
    FAIL("expected TraceConditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TraceConditionViolated);
  }
}

TEST_CASE("Stinespring round trip on random Kraus sets") {
  test::Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const Signature in = test::random_signature(rng);
    const Signature out = test::random_signature(rng);
    const KrausSet s = test::random_kraus(rng, in, out, test::uniform_int(rng, 1, 4),
                                          test::uniform(rng, 0.2, 1.0));
    const StinespringRep rep = to_stinespring(s);
    CHECK(rep.ancilla_dim == static_cast<int>(s.size()));
    CHECK(verify_stinespring(s, rep));
    CHECK(ext_equal(from_stinespring(rep), s, 1e-10));
  }
}

TEST_CASE("the environment of an alternation is the product of environments") {
  test::Rng rng(200);
  for (int trial = 0; trial < 50; ++trial) {
    const Signature in = test::random_signature(rng);
    const Signature out = test::random_signature(rng);
    const KrausSet s = test::random_kraus(rng, in, out, test::uniform_int(rng, 1, 3),
                                          test::uniform(rng, 0.2, 1.0));
    const KrausSet t = test::random_kraus(rng, in, out, test::uniform_int(rng, 1, 3),
                                          test::uniform(rng, 0.2, 1.0));
    const StinespringRep w = alternation_stinespring(s, t);
    CHECK(w.ancilla_dim == to_stinespring(t).ancilla_dim * to_stinespring(s).ancilla_dim);
    CHECK(w.input_sig == qbit_tensor(in));
    CHECK(w.output_sig == qbit_tensor(out));
    CHECK(verify_stinespring(alternate(s, t), w));
  }
}

TEST_CASE("alternation Stinespring of two unitaries") {
  const KrausSet id = KrausSet::identity(Signature::qbit());
  const KrausSet x = make_kraus(Signature::qbit(), Signature::qbit(), {pauli_x()});
  const StinespringRep w = alternation_stinespring(id, x);
  REQUIRE(w.ancilla_dim == 1);
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  CHECK(max_abs_diff(w.v, cnot.adjoint()) == 0.0);
  CHECK_THROWS_AS(alternation_stinespring(id, KrausSet::empty(Signature::qbit(), Signature::qbit())),
                  Error);
}

}  // namespace
}  // namespace qalt
