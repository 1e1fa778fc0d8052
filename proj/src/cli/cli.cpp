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

#include "qalt/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "qalt/corpus.hpp"
#include "qalt/lang/parser.hpp"
#include "qalt/semantics.hpp"

namespace qalt::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  double tol = kDefaultTol;
  std::string context;
  std::string init;
  std::vector<std::string> stats;
  bool choi = false;
  bool strict = false;
  bool direct = false;
  int n = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

lang::Program load_program(const std::string& path) { return lang::parse(read_file(path)); }

lang::Context option_context(const Options& o) {
  return o.context.empty() ? lang::Context{} : parse_context(o.context);
}

semantics::Denotation denote_file(const std::string& path, const Options& o) {
  return semantics::denote_program(load_program(path), option_context(o),
                                   lang::TypecheckOptions{o.strict});
}

// Generic "key: value" rendering for documents without matrices.
void render(const Json& value, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, item] : value.items()) {
    if (item.is_object()) {
      out << pad << key << ":\n";
      render(item, out, indent + 2);
    } else if (item.is_array() && !item.empty() && item.front().is_object()) {
      out << pad << key << ":\n";
      for (const Json& element : item) {
        out << pad << "  -\n";
        render(element, out, indent + 4);
      }
    } else if (item.is_number_float()) {
      out << pad << key << ": " << real_text(item.get<double>()) << "\n";
    } else if (item.is_string()) {
      out << pad << key << ": " << item.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << item.dump() << "\n";
    }
  }
}

void emit(const std::vector<std::string>& command, const Options& o, const Json& result,
          std::ostream& out) {
  if (o.format == "json") {
    out << envelope(command, o.tol, result).dump(2) << "\n";
  } else {
    render(result, out, 0);
  }
}

int cmd_run(const std::vector<std::string>& command, const std::string& path, const Options& o,
            std::ostream& out) {
  const lang::Program program = load_program(path);
  lang::Context ctx = option_context(o);
  std::optional<DensityState> state;
  if (!o.init.empty()) {
    Json doc;
    try {
      doc = Json::parse(read_file(o.init));
    } catch (const Json::parse_error& e) {
      throw IoError("'" + o.init + "' is not valid JSON: " + e.what());
    }
    InitialState init = parse_state(doc, o.tol);
    if (!o.context.empty() && !(init.context == ctx)) {
      throw Error(ErrorCode::InvalidArgument, "--context disagrees with the context in '" +
                                                  o.init + "'");
    }
    ctx = init.context;
    state = init.state;
  } else {
    state = zero_state(ctx);
  }
  lang::typecheck(program, ctx, lang::TypecheckOptions{o.strict});
  const semantics::RunResult r = o.direct ? semantics::eval_direct(program, ctx, *state, o.tol)
                                          : semantics::run(program, ctx, *state, o.tol);
  Json stats = Json::object();
  for (const std::string& q : o.stats) {
    const auto [p0, p1] = semantics::measure_stats(r.state, q, r.context);
    stats[q] = {{"p0", clean(p0)}, {"p1", clean(p1)}};
  }
  if (o.format == "json") {
    Json result = state_json(r.state, r.context);
    if (!o.stats.empty()) result["stats"] = stats;
    out << envelope(command, o.tol, std::move(result)).dump(2) << "\n";
    return kOk;
  }
  out << "context " << r.context.to_string() << "\n";
  out << "signature " << r.state.signature().to_string() << "\n";
  for (std::size_t i = 0; i < r.state.blocks().size(); ++i) {
    out << "block " << i << ":\n" << matrix_text(r.state.blocks()[i], 2);
  }
  out << "trace " << real_text(r.state.trace()) << "\n";
  for (const std::string& q : o.stats) {
    out << "Pr[" << q << " = 0] = " << real_text(stats[q]["p0"].get<double>()) << ", Pr[" << q
        << " = 1] = " << real_text(stats[q]["p1"].get<double>()) << "\n";
  }
  return kOk;
}

int cmd_denote(const std::vector<std::string>& command, const std::string& path,
               const Options& o, std::ostream& out) {
  const semantics::Denotation d = denote_file(path, o);
  if (o.format == "json") {
    Json result = kraus_json(d.kraus);
    result["output_context"] = d.output_ctx.to_string();
    if (o.choi) result["choi"] = choi_json(to_choi(d.kraus));
    out << envelope(command, o.tol, std::move(result)).dump(2) << "\n";
    return kOk;
  }
  out << "Kraus set " << d.kraus.input_sig().to_string() << " -> "
      << d.kraus.output_sig().to_string() << ", " << d.kraus.size() << " operator(s)\n";
  out << "output context " << d.output_ctx.to_string() << "\n";
  for (std::size_t k = 0; k < d.kraus.size(); ++k) {
    out << "E" << k << ":\n" << matrix_text(d.kraus.ops()[k], 2);
  }
  if (o.choi) {
    const ChoiFamily family = to_choi(d.kraus);
    for (std::size_t i = 0; i < family.size(); ++i) {
      out << "Choi block " << i << ":\n" << matrix_text(family[i], 2);
    }
  }
  return kOk;
}

int cmd_equiv(const std::vector<std::string>& command, const std::string& a,
              const std::string& b, const Options& o, std::ostream& out) {
  const KrausSet s = denote_file(a, o).kraus;
  const KrausSet t = denote_file(b, o).kraus;
  const bool equal = ext_equal(s, t, o.tol);
  Json result;
  result["equal"] = equal;
  result["choi_distance"] = clean(choi_distance(to_choi(s), to_choi(t)));
  emit(command, o, result, out);
  return equal ? kOk : kVerdictFalse;
}

int cmd_order(const std::vector<std::string>& command, const std::string& a,
              const std::string& b, const Options& o, std::ostream& out) {
  const KrausSet s = denote_file(a, o).kraus;
  const KrausSet t = denote_file(b, o).kraus;
  const bool leq = lowner_leq(s, t, o.tol);
  Json result;
  result["leq"] = leq;
  result["min_eigenvalue"] = clean(lowner_gap(s, t));
  emit(command, o, result, out);
  return leq ? kOk : kVerdictFalse;
}

// ---------------------------------------------------------------------------
// Demonstrations.

std::string function_class(const TruthTable& f) {
  return f.is_constant() ? "constant" : "balanced";
}

Json demo_deutsch() {
  Json rows = Json::array();
  bool correct = true;
  for (const TruthTable& f : corpus::admissible_functions(1)) {
    const corpus::CorpusProgram p = corpus::gen_deutsch(f);
    const semantics::RunResult r = semantics::run(p.program);
    const double p0 = semantics::measure_stats(r.state, "q0", r.context).first;
    correct = correct && std::abs(p0 - (f.is_constant() ? 1.0 : 0.0)) <= kDefaultTol;
    rows.push_back({{"f", f.to_bits()}, {"class", function_class(f)}, {"p0", clean(p0)}});
  }
  return {{"functions", rows}, {"correct", correct}};
}

Json demo_dj(int n) {
  Json rows = Json::array();
  bool correct = true;
  for (const TruthTable& f : corpus::admissible_functions(n)) {
    const corpus::CorpusProgram p = corpus::gen_deutsch_jozsa(f);
    const semantics::RunResult r = semantics::run(p.program);
    std::vector<std::string> xs;
    for (int i = 0; i < n; ++i) xs.push_back("x" + std::to_string(i));
    const double pz = semantics::outcome_probability(r.state, r.context, xs, std::string(n, '0'));
    correct = correct && std::abs(pz - (f.is_constant() ? 1.0 : 0.0)) <= kDefaultTol;
    rows.push_back({{"f", f.to_bits()}, {"class", function_class(f)}, {"p_all_zero", clean(pz)}});
  }
  return {{"n", n}, {"functions", rows}, {"correct", correct}};
}

Json demo_qft(int max_n) {
  Json rows = Json::array();
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const corpus::CorpusProgram p = corpus::gen_qft(n);
    const KrausSet k = semantics::denote_program(p.program, p.initial).kraus;
    const Matrix reference = corpus::bit_reversal_matrix(n) * corpus::dft_matrix(n);
    const double dev = k.size() == 1 ? max_abs_diff(k.ops()[0], reference) : INFINITY;
    worst = std::max(worst, dev);
    rows.push_back({{"n", n}, {"operators", k.size()}, {"max_deviation", clean(dev)}});
  }
  return {{"reference", "bit reversal after DFT"}, {"results", rows},
          {"max_deviation", clean(worst)}};
}

Json demo_toffoli() {
  const corpus::CorpusProgram p = corpus::gen_toffoli();
  const KrausSet k = semantics::denote_program(p.program, p.initial).kraus;
  const double dev =
      k.size() == 1 ? max_abs_diff(k.ops()[0], corpus::toffoli_matrix()) : INFINITY;
  return {{"operators", k.size()}, {"max_deviation", clean(dev)}, {"exact_match", dev <= 1e-12}};
}

Json demo_nonmonotone(double tol) {
  const Signature one = Signature::unit();
  const KrausSet s = KrausSet::identity(one);
  const KrausSet t = KrausSet::identity(one);
  const KrausSet none = KrausSet::empty(one, one);
  const KrausSet lower = alternate(s, none);
  const KrausSet upper = alternate(s, t);
  Matrix plus = Matrix::Constant(2, 2, 0.5);
  const Matrix diff = apply_matrix(upper, plus) - apply_matrix(lower, plus);
  return {{"empty_leq_t", lowner_leq(none, t, tol)},
          {"s_leq_s", lowner_leq(s, s, tol)},
          {"alternation_monotone", lowner_leq(lower, upper, tol)},
          {"witness_state", "|+><+|"},
          {"witness_min_eigenvalue", clean(min_hermitian_eigenvalue(diff))},
          {"expected", clean((1.0 - std::sqrt(5.0)) / 4.0)},
          {"choi_min_eigenvalue", clean(lowner_gap(lower, upper))}};
}

Json demo_phase(double tol) {
  const Signature qbit = Signature::qbit();
  const Complex phase = std::polar(1.0, std::numbers::pi / 4);
  const KrausSet id = KrausSet::identity(qbit);
  const KrausSet shifted = make_kraus(qbit, qbit, {phase * identity(2)});
  const KrausSet a = alternate(id, id);
  const KrausSet b = alternate(id, shifted);
  const corpus::CorpusProgram prog = corpus::gen_controlled_phase(std::numbers::pi / 4);
  const KrausSet controlled = semantics::denote_program(prog.program, prog.initial).kraus;
  return {{"branches_equal", ext_equal(id, shifted, tol)},
          {"branch_distance", clean(choi_distance(to_choi(id), to_choi(shifted)))},
          {"alternations_equal", ext_equal(a, b, tol)},
          {"witness_distance", clean(choi_distance(to_choi(a), to_choi(b)))},
          {"controlled_phase_equals_skip",
           ext_equal(controlled, KrausSet::identity(controlled.input_sig()), tol)}};
}

int cmd_demo(const std::vector<std::string>& command, const std::string& name, const Options& o,
             std::ostream& out) {
  Json result;
  if (name == "deutsch") {
    result = demo_deutsch();
  } else if (name == "dj") {
    result = demo_dj(o.n ? o.n : 2);
  } else if (name == "qft") {
    result = demo_qft(o.n ? o.n : 4);
  } else if (name == "toffoli") {
    result = demo_toffoli();
  } else if (name == "nonmonotone") {
    result = demo_nonmonotone(o.tol);
  } else if (name == "phase") {
    result = demo_phase(o.tol);
  } else {
    throw CLI::ValidationError("demo", "unknown demo '" + name + "'");
  }
  Json doc{{"demo", name}};
  doc.update(result);
  emit(command, o, doc, out);
  return kOk;
}

double default_tolerance() {
  const char* env = std::getenv("QALT_TOL");
  if (!env || !*env) return kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (*end != '\0' || !(tol > 0) || !std::isfinite(tol)) {
    throw CLI::ValidationError("QALT_TOL", "must be a positive number, got '" + std::string(env) + "'");
  }
  return tol;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kraus semantics for a quantum language with alternation", "qalt"};
  app.require_subcommand(1);
  Options o;
  std::string file_a, file_b, demo;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--tol", o.tol, "Numeric tolerance (default 1e-9 or QALT_TOL)")
        ->check(CLI::PositiveNumber);
  };
  auto context = [&](CLI::App* sub) {
    sub->add_option("--context", o.context,
                    "Initial context, comma separated; bit:NAME declares a bit");
    sub->add_flag("--strict-alternation", o.strict,
                  "Reject measurement, allocation and discarding inside alternation branches");
  };

  CLI::App* run = app.add_subcommand("run", "Run a program and print the final state");
  run->add_option("source", file_a, "Program file")->required();
  run->add_option("--init", o.init, "Initial state as JSON {context, blocks}");
  run->add_option("--stats", o.stats, "Print Pr[q = 0], Pr[q = 1] for these qubits");
  run->add_flag("--direct", o.direct, "Use the direct density-matrix evaluator");
  common(run);
  context(run);

  CLI::App* den = app.add_subcommand("denote", "Print the Kraus operators of a program");
  den->add_option("source", file_a, "Program file")->required();
  den->add_flag("--choi", o.choi, "Also print the Choi family");
  common(den);
  context(den);

  CLI::App* eq = app.add_subcommand("equiv", "Test extensional equality of two programs");
  eq->add_option("a", file_a, "First program")->required();
  eq->add_option("b", file_b, "Second program")->required();
  common(eq);
  context(eq);

  CLI::App* ord = app.add_subcommand("order", "Test [[a]] below [[b]] in the Loewner order");
  ord->add_option("a", file_a, "First program")->required();
  ord->add_option("b", file_b, "Second program")->required();
  common(ord);
  context(ord);

  CLI::App* dem = app.add_subcommand("demo", "Reproduce a worked example");
  dem->add_option("name", demo, "deutsch, dj, qft, toffoli, nonmonotone or phase")
      ->required()
      ->check(CLI::IsMember({"deutsch", "dj", "qft", "toffoli", "nonmonotone", "phase"}));
  dem->add_option("--n", o.n, "Arity for dj (2..4) or largest size for qft (1..6)")
      ->check(CLI::Range(1, 6));
  common(dem);

  try {
    o.tol = default_tolerance();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (run->parsed()) return cmd_run(args, file_a, o, out);
    if (den->parsed()) return cmd_denote(args, file_a, o, out);
    if (eq->parsed()) return cmd_equiv(args, file_a, file_b, o, out);
    if (ord->parsed()) return cmd_order(args, file_a, file_b, o, out);
    return cmd_demo(args, demo, o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_language_error(e.code()) ? kLanguageError : kSemanticError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace qalt::cli
