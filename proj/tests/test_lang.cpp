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

#include <functional>

#include "qalt/corpus.hpp"
#include "qalt/lang/parser.hpp"
#include "qalt/lang/typecheck.hpp"
#include "test_util.hpp"

namespace qalt::lang {
namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

std::string check_error(const std::string& src, const Context& ctx, TypecheckOptions opts = {}) {
  return error_of([&] { typecheck(parse(src), ctx, opts); });
}

const Context kQ01 = Context::of_qubits({"q0", "q1"});

NameRef ref(const std::string& name) { return NameRef{name, std::nullopt, {}}; }

Stmt stmt(Stmt::Node node) { return Stmt{std::move(node), {}}; }

struct Census {
  int h = 0;
  int qif = 0;
  int rk = 0;
  int loops = 0;
};

void count(const Block& block, Census& c) {
  for (const Stmt& s : block) {
    if (const auto* g = s.as<ApplyGate>()) {
      if (g->gate.kind == GateExpr::Kind::Named && g->gate.name == "H") ++c.h;
      if (g->gate.kind == GateExpr::Kind::Rk) ++c.rk;
    } else if (const auto* q = s.as<QIf>()) {
      ++c.qif;
      count(q->then_block, c);
      count(q->else_block, c);
    } else if (const auto* f = s.as<ForLoop>()) {
      ++c.loops;
      count(f->body, c);
    } else if (const auto* m = s.as<MeasureThenElse>()) {
      count(m->then_block, c);
      count(m->else_block, c);
    } else if (const auto* k = s.as<QCase>()) {
      for (const CaseArm& arm : k->arms) count(arm.body, c);
    }
  }
}

TEST_CASE("parse a controlled gate") {
  const Program p = parse("if q0 then { skip } else { q1 *= X }");
  REQUIRE(p.body.size() == 1);
  const Program expected{{stmt(QIf{ref("q0"), {stmt(Skip{})},
                                   {stmt(ApplyGate{{ref("q1")}, GateExpr::named("X")})}})}};
  CHECK(p == expected);
}

TEST_CASE("parse a meta-level loop") {
  const Program p = parse("for i = 2 to 4 { q *= Rk(i) }");
  const Program expected{{stmt(ForLoop{"i", IndexExpr::literal(2), IndexExpr::literal(4),
                                       {stmt(ApplyGate{{ref("q")}, GateExpr::rk(IndexExpr::variable("i"))})}})}};
  CHECK(p == expected);
}

TEST_CASE("parse reports the first syntax error with its position") {
  CHECK(error_of([] { parse("if q then { } else"); }) ==
        "SyntaxError: expected '{', found end of input (line 1, column 19)");
  CHECK(error_of([] { parse("q0 *= Foo"); }) == "SyntaxError: unknown gate 'Foo' (line 1, column 7)");
  CHECK(error_of([] { parse("q0 *= [[1, 0], [0, 2]]"); }) ==
        "SyntaxError: matrix literal is not unitary (line 1, column 7)");
  try {
    parse("skip\n  q *=");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 2"));
  }
}

TEST_CASE("parse accepts comments, separators and empty blocks") {
  const Program a = parse("// prepare\nq *= H; q *= X // flip\n");
  const Program b = parse("q *= H\nq *= X");
  CHECK(a == b);
  CHECK(parse("if q then { } else { skip }") == parse("if q then { skip } else { skip }"));
}

TEST_CASE("new with several names leaves the first one leading") {
  const TypedProgram t = typecheck(parse("new qbit a, b"), Context{});
  CHECK(t.output.to_string() == "{a: qbit, b: qbit}");
  CHECK(print(elaborate(t)) == "new qbit b\nnew qbit a\n");
}

TEST_CASE("typecheck rejects a branch that touches its control") {
  CHECK(check_error("if q0 then { q0 *= X } else { skip }", kQ01) ==
        "ControlCapture: 'q0' is the control of an enclosing quantum if and cannot be used in its "
        "branches (line 1, column 14)");
  CHECK_THROWS_AS(typecheck(parse("case (q0) of |0> -> { skip } |1> -> { discard q0; new qbit q0 }"), kQ01),
                  Error);
}

TEST_CASE("typecheck requires branches to agree on the output context") {
  CHECK(check_error("if q0 then { discard q1 } else { skip }", kQ01) ==
        "BranchContextMismatch: branches of quantum if on 'q0' end in different contexts: {} vs "
        "{q1: qbit} (line 1, column 1)");
  CHECK_NOTHROW(typecheck(parse("measure q1 then { discard q0; new qbit q0 } else { skip }"), kQ01));
}

TEST_CASE("typecheck reports unknown names, kinds and duplicates") {
  CHECK(check_error("q2 *= X", kQ01) == "UnknownName: 'q2' is not declared (line 1, column 1)");
  CHECK(check_error("new bit b; if b then { skip } else { skip }", Context{}) ==
        "KindError: 'b' is a bit but quantum if needs a qbit (line 1, column 15)");
  CHECK(check_error("new qbit q0", kQ01) == "DuplicateName: 'q0' is already declared (line 1, column 10)");
  CHECK(check_error("q0, q1 *= H", kQ01) ==
        "ArityMismatch: gate H acts on 1 qubit(s) but 2 target(s) given (line 1, column 1)");
  CHECK(check_error("case (q0) of |0> -> { skip }", kQ01) ==
        "NonExhaustiveCase: quantum case on (q0) has no arm for |1> (line 1, column 1)");
  CHECK(check_error("for i = 1 to n { skip }", kQ01) ==
        "NonConstantBound: 'n' is not a bound loop variable (line 1, column 1)");
}

TEST_CASE("the unitary-branch lint") {
  const std::string src = "if q0 then { new qbit r; discard r } else { skip }";
  CHECK_NOTHROW(typecheck(parse(src), kQ01));
  CHECK(check_error(src, kQ01, {true}) ==
        "NonUnitaryBranch: new qbit inside a quantum alternation branch is not unitary (line 1, "
        "column 23)");
  CHECK_NOTHROW(typecheck(parse("if q0 then { q1 *= H } else { q1 *= Z }"), kQ01, {true}));
}

TEST_CASE("the Deutsch program is well typed") {
  const corpus::CorpusProgram deutsch = corpus::gen_deutsch(TruthTable::from_bits("01"));
  const TypedProgram t = typecheck(deutsch.program, Context{});
  CHECK(t.output == kQ01);
  CHECK(t.statements.size() == deutsch.program.body.size());
  CHECK(t.statements.front().input == Context{});
}

TEST_CASE("elaborating the QFT gives n H gates and n(n-1)/2 controlled rotations") {
  for (int n = 1; n <= 6; ++n) {
    const corpus::CorpusProgram qft = corpus::gen_qft(n);
    Census before;
    count(qft.program.body, before);
    CHECK(before.loops > 0);
    const Program core = elaborate(typecheck(qft.program, qft.initial));
    CHECK(is_core(core));
    CHECK_FALSE(is_core(qft.program));
    Census after;
    count(core.body, after);
    CHECK(after.h == n);
    CHECK(after.qif == n * (n - 1) / 2);
    CHECK(after.rk == n * (n - 1) / 2);
    CHECK(after.loops == 0);
  }
}

TEST_CASE("a vacuous loop elaborates to nothing") {
  const Program core = elaborate(typecheck(parse("for i = 3 to 2 { q0 *= X }"), kQ01));
  CHECK(core.body.empty());
}

TEST_CASE("case arms expand to every label in ascending order") {
  const Context ctx = Context::of_qubits({"q0", "q1", "y"});
  const Program core =
      elaborate(typecheck(parse("case (q0, q1) of |x> -> { y *= Uf(0001, x) }"), ctx));
  REQUIRE(core.body.size() == 1);
  const QCase* k = core.body[0].as<QCase>();
  REQUIRE(k != nullptr);
  REQUIRE(k->arms.size() == 4);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  for (int label = 0; label < 4; ++label) {
    const CaseArm& arm = k->arms[label];
    CHECK(arm.kind == CaseArm::Label::Bits);
    CHECK(arm.label == std::string{char('0' + label / 2), char('0' + label % 2)});
    REQUIRE(arm.body.size() == 1);
    const ApplyGate* g = arm.body[0].as<ApplyGate>();
    REQUIRE(g != nullptr);
    CHECK(g->gate.kind == GateExpr::Kind::Matrix);
    CHECK(g->gate.matrix == (label == 3 ? x : identity(2)));
  }

  const Program with_default =
      elaborate(typecheck(parse("case (q0, q1) of |11> -> { y *= X } |_> -> { skip }"), ctx));
  const QCase* d = with_default.body[0].as<QCase>();
  REQUIRE(d != nullptr);
  REQUIRE(d->arms.size() == 4);
  CHECK(d->arms[3].body[0].as<ApplyGate>() != nullptr);
  CHECK(d->arms[0].body[0].as<Skip>() != nullptr);
}

TEST_CASE("oracle matrices transpose |0> and |f(x)>") {
  CHECK(oracle_matrix(false, 1) == identity(2));
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  CHECK(oracle_matrix(true, 1) == x);
  const Matrix two = oracle_matrix(true, 2);
  Matrix expected = identity(4);
  expected(0, 0) = expected(1, 1) = 0.0;
  expected(0, 1) = expected(1, 0) = 1.0;
  CHECK(two == expected);
}

TEST_CASE("gate matrices") {
  const double theta = 2.0 * std::numbers::pi / 8.0;
  Matrix r3 = identity(2);
  r3(1, 1) = std::polar(1.0, theta);
  CHECK(max_abs_diff(gate_matrix(GateExpr::rk(IndexExpr::literal(3)), 1), r3) <= 1e-15);
  CHECK(max_abs_diff(gate_matrix(GateExpr::phase(0.5), 2), std::polar(1.0, 0.5) * identity(4)) <= 1e-15);
  CHECK_FALSE(gate_arity(GateExpr::phase(0.5)).has_value());
  CHECK(gate_arity(GateExpr::named("H")) == 1);
  CHECK_THROWS_AS(gate_matrix(GateExpr::rk(IndexExpr::variable("k")), 1), Error);
  CHECK_THROWS_AS(gate_matrix(GateExpr::named("X"), 2), Error);
}

TEST_CASE("print then parse is the identity on the corpus") {
  for (const corpus::CorpusProgram& c : corpus::full_corpus()) {
    INFO(c.name);
    CHECK(parse(print(c.program)) == c.program);
    CHECK(parse(c.source) == c.program);
    const Program core = elaborate(typecheck(c.program, c.initial));
    CHECK(parse(print(core)) == core);
  }
}

TEST_CASE("elaboration preserves typing") {
  for (const corpus::CorpusProgram& c : corpus::full_corpus()) {
    INFO(c.name);
    const TypedProgram t = typecheck(c.program, c.initial);
    const TypedProgram again = typecheck(elaborate(t), c.initial);
    CHECK(again.input == t.input);
    CHECK(again.output == t.output);
  }
}

TEST_CASE("typecheck is deterministic and ignores unrelated declarations") {
  const Program p = parse("q0 *= H; if q0 then { skip } else { q1 *= X }");
  const TypedProgram a = typecheck(p, kQ01);
  const TypedProgram b = typecheck(p, kQ01);
  CHECK(a.output == b.output);
  const Context extended = kQ01.prepend({"z", VarKind::Qbit}).insert(2, {"c", VarKind::Bit});
  const TypedProgram c = typecheck(p, extended);
  CHECK(c.output == extended);
}

TEST_CASE("contexts lay out bits before qubits") {
  const Context ctx({{"q", VarKind::Qbit}, {"b", VarKind::Bit}, {"r", VarKind::Qbit}});
  CHECK(ctx.factors() == std::vector<std::string>{"b", "q", "r"});
  CHECK(ctx.signature() == Signature({4, 4}));
  CHECK(ctx.to_string() == "{q: qbit, b: bit, r: qbit}");
  CHECK(Context{}.signature() == Signature::unit());
  CHECK_THROWS_AS(Context({{"q", VarKind::Qbit}, {"q", VarKind::Bit}}), Error);
  CHECK(ctx.remove("b").signature() == Signature({4}));
}

}  // namespace
}  // namespace qalt::lang
