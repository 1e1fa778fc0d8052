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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "document.hpp"
#include "qalt/cli.hpp"

namespace qalt::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("qalt_cli_" + std::to_string(counter_++))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

Json parse_json(const Invocation& inv) {
  INFO(inv.err);
  return Json::parse(inv.out);
}

Complex entry(const Json& e) { return {e[0].get<double>(), e[1].get<double>()}; }

TEST_CASE("run prints the state of a new qubit") {
  Workspace ws;
  const std::string src = ws.write("new.q", "new qbit q\n");
  const Invocation text = call({"run", src});
  CHECK(text.code == kOk);
  CHECK(text.out ==
        "context {q: qbit}\n"
        "signature (2)\n"
        "block 0:\n"
        "  [1  0]\n"
        "  [0  0]\n"
        "trace 1\n");

  const Invocation json = call({"run", src, "--format", "json"});
  REQUIRE(json.code == kOk);
  const Json doc = parse_json(json);
  CHECK(doc["schema"] == "qalt/1");
  CHECK(doc["command"][0] == "run");
  CHECK(doc["tolerance"].get<double>() == 1e-9);
  const Json& result = doc["result"];
  CHECK(result["context"] == Json::array({"q"}));
  CHECK(result["signature"] == "(2)");
  CHECK(entry(result["blocks"][0][0][0]) == Complex(1.0));
  CHECK(entry(result["blocks"][0][1][1]) == Complex(0.0));
  CHECK(result["trace"].get<double>() == 1.0);
}

TEST_CASE("structured output is byte-identical across invocations") {
  Workspace ws;
  const std::string src = ws.write("mix.q", "new qbit q; q *= H; new qbit r; measure q then { r *= X } else { skip }\n");
  const Invocation a = call({"denote", src, "--format", "json", "--choi"});
  const Invocation b = call({"denote", src, "--format", "json", "--choi"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  const Invocation c = call({"run", src, "--format", "json"});
  CHECK(c.out == call({"run", src, "--format", "json"}).out);
}

TEST_CASE("run reports language errors with exit code 1") {
  Workspace ws;
  const std::string src = ws.write("capture.q", "new qbit q; if q then { q *= X } else { skip }\n");
  const Invocation inv = call({"run", src});
  CHECK(inv.code == kLanguageError);
  CHECK_THAT(inv.err, Catch::Matchers::ContainsSubstring("ControlCapture"));
  CHECK_THAT(inv.err, Catch::Matchers::ContainsSubstring("'q'"));
  CHECK(inv.out.empty());

  const std::string bad = ws.write("bad.q", "if q then { } else\n");
  CHECK(call({"run", bad}).code == kLanguageError);
}

TEST_CASE("exit codes for semantic, I/O and usage errors") {
  Workspace ws;
  const std::string src = ws.write("x.q", "q *= X\n");
  CHECK(call({"run", ws.write("none.q", "skip"), "--stats", "q"}).code == kLanguageError);
  const std::string heavy = ws.write("heavy.json", R"({"context": ["q"], "blocks": [[[2, 0], [0, 0]]]})");
  CHECK(call({"run", src, "--init", heavy}).code == kSemanticError);
  CHECK(call({"run", (fs::temp_directory_path() / "qalt_missing_file.q").string()}).code == kIoError);
  CHECK(call({"run", src, "--context", "q", "--init", ws.write("bad.json", "{not json")}).code == kIoError);
  CHECK(call({"frobnicate"}).code == kUsageError);
  CHECK(call({"run"}).code == kUsageError);
  CHECK(call({"run", src, "--format", "yaml"}).code == kUsageError);
  CHECK(call({"demo", "qft", "--n", "9"}).code == kUsageError);
  CHECK(call({"--help"}).code == kOk);

  // Denotations of different shapes cannot be compared.
  const std::string two = ws.write("two.q", "new qbit r\n");
  CHECK(call({"equiv", src, two, "--context", "q"}).code == kSemanticError);
}

TEST_CASE("run with a context, an initial state and statistics") {
  Workspace ws;
  const std::string deutsch = ws.write("deutsch.q",
                                       "new qbit q0, q1\n"
                                       "q0 *= H\nq1 *= X\nq1 *= H\n"
                                       "if q0 then { q1 *= Uf(00, 0) } else { q1 *= Uf(00, 1) }\n"
                                       "q0 *= H\n");
  const Invocation stats = call({"run", deutsch, "--stats", "q0"});
  CHECK(stats.code == kOk);
  CHECK_THAT(stats.out, Catch::Matchers::ContainsSubstring("Pr[q0 = 0] = 1, Pr[q0 = 1] = 0"));
  const Json doc = parse_json(call({"run", deutsch, "--stats", "q0", "--format", "json", "--direct"}));
  CHECK(std::abs(doc["result"]["stats"]["q0"]["p0"].get<double>() - 1.0) <= 1e-12);

  const std::string flip = ws.write("flip.q", "q *= X\n");
  const Invocation zero = call({"run", flip, "--context", "q"});
  CHECK_THAT(zero.out, Catch::Matchers::ContainsSubstring("  [0  0]\n  [0  1]\n"));

  const std::string init = ws.write("plus.json", R"({"context": ["bit:b", "q"], "blocks": [[[0.5, 0], [0, 0]], [[0, 0], [0, 0.5]]]})");
  const Json state = parse_json(call({"run", flip, "--init", init, "--format", "json"}));
  CHECK(state["result"]["context"] == Json::array({"bit:b", "q"}));
  CHECK(state["result"]["signature"] == "(2,2)");
  CHECK(entry(state["result"]["blocks"][0][1][1]) == Complex(0.5));
  CHECK(entry(state["result"]["blocks"][1][0][0]) == Complex(0.5));

  const std::string nonpsd = ws.write("neg.json", R"({"context": ["q"], "blocks": [[[0, 1], [1, 0]]]})");
  CHECK(call({"run", flip, "--init", nonpsd}).code == kSemanticError);
  CHECK(call({"run", flip, "--init", init, "--context", "q"}).code == kSemanticError);
}

TEST_CASE("denote prints the canonical Kraus operators") {
  Workspace ws;
  const Invocation cnot = call({"denote", ws.write("cx.q", "if q0 then { skip } else { q1 *= X }\n"),
                                "--context", "q0,q1"});
  CHECK(cnot.code == kOk);
  CHECK(cnot.out ==
        "Kraus set (4) -> (4), 1 operator(s)\n"
        "output context {q0: qbit, q1: qbit}\n"
        "E0:\n"
        "  [1  0  0  0]\n"
        "  [0  1  0  0]\n"
        "  [0  0  0  1]\n"
        "  [0  0  1  0]\n");

  const Json dephase =
      parse_json(call({"denote", ws.write("dephase.q", "measure q then { skip } else { skip }\n"), "--context", "q",
                       "--format", "json", "--choi"}));
  const Json& r = dephase["result"];
  CHECK(r["size"] == 2);
  CHECK(entry(r["operators"][0][0][0]) == Complex(1.0));
  CHECK(entry(r["operators"][1][1][1]) == Complex(1.0));
  CHECK(r["choi"].size() == 1);

  const Json empty = parse_json(call({"denote", ws.write("empty.q", ""), "--format", "json"}));
  CHECK(empty["result"]["input_signature"] == "(1)");
  CHECK(empty["result"]["size"] == 1);
  CHECK(entry(empty["result"]["operators"][0][0][0]) == Complex(1.0));
}

TEST_CASE("equiv and order verdicts") {
  Workspace ws;
  const std::string skip = ws.write("skip.q", "skip\n");
  const std::string phase = ws.write("phase.q", "q *= Phase(0.7853981633974483)\n");
  CHECK(call({"equiv", skip, phase, "--context", "q"}).code == kOk);
  CHECK(call({"equiv", skip, skip, "--context", "q"}).code == kOk);

  const std::string cphase = ws.write("cphase.q", "if q then { skip } else { r *= Phase(0.7853981633974483) }\n");
  const std::string cskip = ws.write("cskip.q", "if q then { skip } else { skip }\n");
  const Invocation differ = call({"equiv", cphase, cskip, "--context", "q,r", "--format", "json"});
  CHECK(differ.code == kVerdictFalse);
  CHECK(parse_json(differ)["result"]["equal"] == false);
  CHECK(parse_json(differ)["result"]["choi_distance"].get<double>() > 0.1);

  const std::string half = ws.write("half.q", "measure q then { skip } else { discard q; new qbit q }\n");
  const std::string drop = ws.write("drop.q", "new qbit z; discard z\n");
  CHECK(call({"order", skip, skip, "--context", "q"}).code == kOk);
  CHECK(call({"order", drop, half, "--context", "q"}).code == kVerdictFalse);
  const Invocation text = call({"order", skip, skip, "--context", "q"});
  CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring("leq: true"));
}

TEST_CASE("demos") {
  const Json nonmono = parse_json(call({"demo", "nonmonotone", "--format", "json"}))["result"];
  CHECK(nonmono["empty_leq_t"] == true);
  CHECK(nonmono["s_leq_s"] == true);
  CHECK(nonmono["alternation_monotone"] == false);
  CHECK(std::abs(nonmono["witness_min_eigenvalue"].get<double>() - (1.0 - std::sqrt(5.0)) / 4.0) <= 1e-12);

  const Json phase = parse_json(call({"demo", "phase", "--format", "json"}))["result"];
  CHECK(phase["branches_equal"] == true);
  CHECK(phase["alternations_equal"] == false);
  CHECK(phase["controlled_phase_equals_skip"] == false);

  const Json toffoli = parse_json(call({"demo", "toffoli", "--format", "json"}))["result"];
  CHECK(toffoli["exact_match"] == true);
  CHECK(toffoli["max_deviation"].get<double>() == 0.0);

  const Json qft = parse_json(call({"demo", "qft", "--n", "5", "--format", "json"}))["result"];
  CHECK(qft["results"].size() == 5);
  CHECK(qft["max_deviation"].get<double>() <= 1e-10);

  CHECK(parse_json(call({"demo", "deutsch", "--format", "json"}))["result"]["correct"] == true);
  const Json dj = parse_json(call({"demo", "dj", "--n", "3", "--format", "json"}))["result"];
  CHECK(dj["correct"] == true);
  CHECK(dj["functions"].size() == 72);

  const Invocation text = call({"demo", "toffoli"});
  CHECK(text.out == "demo: toffoli\noperators: 1\nmax_deviation: 0\nexact_match: true\n");
}

TEST_CASE("the tolerance comes from QALT_TOL unless given") {
  ::setenv("QALT_TOL", "1e-6", 1);
  CHECK(parse_json(call({"demo", "toffoli", "--format", "json"}))["tolerance"].get<double>() == 1e-6);
  CHECK(parse_json(call({"demo", "toffoli", "--format", "json", "--tol", "1e-3"}))["tolerance"].get<double>() == 1e-3);
  ::setenv("QALT_TOL", "abc", 1);
  CHECK(call({"demo", "toffoli"}).code == kUsageError);
  ::unsetenv("QALT_TOL");
}

TEST_CASE("contexts on the command line") {
  const lang::Context ctx = parse_context("q0, bit:b ,qbit:r");
  CHECK(ctx.to_string() == "{q0: qbit, b: bit, r: qbit}");
  CHECK_THROWS_AS(parse_context("q,,r"), Error);
  CHECK_THROWS_AS(parse_context("q,q"), Error);
}

}  // namespace
}  // namespace qalt::cli
