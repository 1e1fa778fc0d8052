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

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

#include "qalt/error.hpp"
#include "qalt/lang/parser.hpp"

namespace qalt::lang {

namespace {

struct Token {
  enum class Kind { Ident, Number, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  SourceLoc loc;
};

const std::set<std::string, std::less<>> kKeywords = {
    "skip", "new", "qbit", "bit", "discard", "measure", "then",
    "else", "if",  "case", "of",  "for",     "to"};

[[noreturn]] void syntax_error(const SourceLoc& loc, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, what + " (" + describe(loc) + ")");
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };

  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const SourceLoc loc{line, column};
    if (c > 127) syntax_error(loc, "non-ASCII character in source");

    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      if (j < text.size() && static_cast<unsigned char>(text[j]) > 127) {
        syntax_error(SourceLoc{line, column + static_cast<int>(j - i)},
                     "non-ASCII character in identifier");
      }
      tokens.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < text.size() &&
                            std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      auto digits = [&] {
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      };
      digits();
      if (j < text.size() && text[j] == '.') {
        ++j;
        digits();
      }
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          j = k;
          digits();
        }
      }
      tokens.push_back({Token::Kind::Number, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    static const char* const kTwoChar[] = {"*=", "->"};
    bool matched = false;
    for (const char* sym : kTwoChar) {
      if (text.substr(i, 2) == sym) {
        tokens.push_back({Token::Kind::Symbol, sym, loc});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("{}()[],;*=|>-+/").find(static_cast<char>(c)) !=
        std::string_view::npos) {
      tokens.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), loc});
      advance(1);
      continue;
    }
    syntax_error(loc, std::string("unexpected character '") +
                          static_cast<char>(c) + "'");
  }
  tokens.push_back({Token::Kind::End, "", SourceLoc{line, column}});
  return tokens;
}

bool is_bitstring(const std::string& s) {
  return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program program() {
    Program p;
    skip_separators();
    while (!at_end()) {
      append_statement(p.body);
      skip_separators();
    }
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  Token take() {
    Token t = peek();
    if (!at_end()) ++pos_;
    return t;
  }

  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Symbol && peek(ahead).text == s;
  }
  bool is_keyword(std::string_view s) const {
    return peek().kind == Token::Kind::Ident && peek().text == s;
  }

  std::string shown(const Token& t) const {
    return t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  }

  [[noreturn]] void expected(const std::string& what) const {
    syntax_error(peek().loc, "expected " + what + ", found " + shown(peek()));
  }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) expected("'" + std::string(s) + "'");
    take();
  }
  void expect_keyword(std::string_view s) {
    if (!is_keyword(s)) expected("'" + std::string(s) + "'");
    take();
  }

  std::string identifier(const std::string& what) {
    if (peek().kind != Token::Kind::Ident || kKeywords.count(peek().text)) {
      expected(what);
    }
    return take().text;
  }

  void skip_separators() {
    while (is_symbol(";")) take();
  }

  NameRef name() {
    NameRef ref;
    ref.loc = peek().loc;
    ref.base = identifier("a variable name");
    if (is_symbol("[")) {
      take();
      ref.index = index_expr();
      expect_symbol("]");
    }
    return ref;
  }

  std::vector<NameRef> name_list() {
    std::vector<NameRef> names{name()};
    while (is_symbol(",")) {
      take();
      names.push_back(name());
    }
    return names;
  }

  // index := term (("+" | "-") term)*
  IndexExpr index_expr() {
    IndexExpr lhs = index_term();
    while (is_symbol("+") || is_symbol("-")) {
      const auto op = take().text == "+" ? IndexExpr::Op::Add : IndexExpr::Op::Sub;
      lhs = IndexExpr::binary(op, std::move(lhs), index_term());
    }
    return lhs;
  }

  IndexExpr index_term() {
    IndexExpr lhs = index_factor();
    while (is_symbol("*")) {
      take();
      lhs = IndexExpr::binary(IndexExpr::Op::Mul, std::move(lhs), index_factor());
    }
    return lhs;
  }

  IndexExpr index_factor() {
    if (is_symbol("-")) {
      take();
      return IndexExpr::negate(index_factor());
    }
    if (is_symbol("(")) {
      take();
      IndexExpr e = index_expr();
      expect_symbol(")");
      return e;
    }
    if (peek().kind == Token::Kind::Number) {
      const Token t = take();
      if (t.text.find_first_not_of("0123456789") != std::string::npos) {
        syntax_error(t.loc, "index expressions take integers, found '" + t.text + "'");
      }
      return IndexExpr::literal(std::stoll(t.text));
    }
    return IndexExpr::variable(identifier("an integer expression"));
  }

  // real := term (("+" | "-") term)*, evaluated on the spot.
  double real_expr() {
    double v = real_term();
    while (is_symbol("+") || is_symbol("-")) {
      const bool add = take().text == "+";
      const double rhs = real_term();
      v = add ? v + rhs : v - rhs;
    }
    return v;
  }

  double real_term() {
    double v = real_factor();
    while (is_symbol("*") || is_symbol("/")) {
      const bool mul = take().text == "*";
      const double rhs = real_factor();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double real_factor() {
    if (is_symbol("-")) {
      take();
      return -real_factor();
    }
    if (is_symbol("(")) {
      take();
      const double v = real_expr();
      expect_symbol(")");
      return v;
    }
    if (peek().kind == Token::Kind::Number) return std::strtod(take().text.c_str(), nullptr);
    if (is_keyword("pi")) {
      take();
      return std::numbers::pi;
    }
    if (is_keyword("sqrt")) {
      take();
      expect_symbol("(");
      const double v = real_expr();
      expect_symbol(")");
      return std::sqrt(v);
    }
    expected("a real number");
  }

  Complex matrix_entry() {
    if (is_symbol("[")) {
      take();
      const double re = real_expr();
      expect_symbol(",");
      const double im = real_expr();
      expect_symbol("]");
      return {re, im};
    }
    return {real_expr(), 0.0};
  }

  GateExpr matrix_literal() {
    const SourceLoc loc = peek().loc;
    expect_symbol("[");
    std::vector<std::vector<Complex>> rows;
    do {
      if (!rows.empty()) take();
      expect_symbol("[");
      std::vector<Complex> row{matrix_entry()};
      while (is_symbol(",")) {
        take();
        row.push_back(matrix_entry());
      }
      expect_symbol("]");
      rows.push_back(std::move(row));
    } while (is_symbol(","));
    expect_symbol("]");

    const std::size_t n = rows.size();
    for (const auto& row : rows) {
      if (row.size() != n) syntax_error(loc, "matrix literal must be square");
    }
    if (n < 2 || (n & (n - 1)) != 0) {
      syntax_error(loc, "matrix literal dimension must be a power of two");
    }
    Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
      }
    }
    if (!all_finite(m) || !is_unitary(m, 1e-9)) {
      syntax_error(loc, "matrix literal is not unitary");
    }
    return GateExpr::literal(std::move(m));
  }

  GateExpr gate() {
    if (is_symbol("[")) return matrix_literal();
    const Token t = peek();
    if (t.kind != Token::Kind::Ident) expected("a gate");
    take();
    static const std::set<std::string, std::less<>> kNamed = {"I", "X", "Y", "Z",
                                                              "H", "S", "T"};
    if (kNamed.count(t.text)) return GateExpr::named(t.text);
    if (t.text == "Rk") {
      expect_symbol("(");
      IndexExpr k = index_expr();
      expect_symbol(")");
      return GateExpr::rk(std::move(k));
    }
    if (t.text == "Phase") {
      expect_symbol("(");
      const double theta = real_expr();
      expect_symbol(")");
      if (!std::isfinite(theta)) syntax_error(t.loc, "phase must be finite");
      return GateExpr::phase(theta);
    }
    if (t.text == "Uf") {
      expect_symbol("(");
      const Token bits = peek();
      if (bits.kind != Token::Kind::Number || !is_bitstring(bits.text)) {
        expected("a truth table such as 0110");
      }
      take();
      const std::size_t len = bits.text.size();
      if (len < 2 || (len & (len - 1)) != 0) {
        syntax_error(bits.loc, "truth table length must be a power of two");
      }
      expect_symbol(",");
      IndexExpr point = index_expr();
      expect_symbol(")");
      return GateExpr::oracle(TruthTable::from_bits(bits.text), std::move(point));
    }
    syntax_error(t.loc, "unknown gate '" + t.text + "'");
  }

  Block block() {
    expect_symbol("{");
    Block body;
    skip_separators();
    while (!is_symbol("}")) {
      if (at_end()) expected("'}'");
      append_statement(body);
      skip_separators();
    }
    take();
    if (body.empty()) body.push_back(Stmt{Skip{}, peek().loc});
    return body;
  }

  std::vector<CaseArm> arms(std::size_t controls) {
    std::vector<CaseArm> out;
    std::set<std::string> seen;
    while (is_symbol("|")) {
      CaseArm arm;
      arm.loc = take().loc;
      if (!out.empty() && out.back().kind != CaseArm::Label::Bits) {
        syntax_error(arm.loc, "no arm may follow a catch-all arm");
      }
      const Token label = peek();
      if (label.kind == Token::Kind::Number && is_bitstring(label.text)) {
        if (label.text.size() != controls) {
          syntax_error(label.loc, "label |" + label.text + "> needs " +
                                      std::to_string(controls) + " bit(s)");
        }
        if (!seen.insert(label.text).second) {
          syntax_error(label.loc, "duplicate arm |" + label.text + ">");
        }
        arm.kind = CaseArm::Label::Bits;
      } else if (label.kind == Token::Kind::Ident && label.text == "_") {
        arm.kind = CaseArm::Label::Default;
      } else if (label.kind == Token::Kind::Ident && !kKeywords.count(label.text)) {
        arm.kind = CaseArm::Label::Binder;
      } else {
        expected("an arm label");
      }
      arm.label = take().text;
      expect_symbol(">");
      expect_symbol("->");
      arm.body = block();
      out.push_back(std::move(arm));
    }
    if (out.empty()) expected("'|' starting a case arm");
    return out;
  }

  void append_statement(Block& out) {
    const SourceLoc loc = peek().loc;
    if (is_keyword("skip")) {
      take();
      out.push_back({Skip{}, loc});
      return;
    }
    if (is_keyword("new")) {
      take();
      bool qbit = true;
      if (is_keyword("qbit")) {
        take();
      } else if (is_keyword("bit")) {
        take();
        qbit = false;
      } else {
        expected("'qbit' or 'bit'");
      }
      std::vector<NameRef> names = name_list();
      for (auto it = names.rbegin(); it != names.rend(); ++it) {
        if (qbit) {
          out.push_back({NewQbit{*it}, it->loc});
        } else {
          out.push_back({NewBit{*it}, it->loc});
        }
      }
      return;
    }
    if (is_keyword("discard")) {
      take();
      out.push_back({Discard{name()}, loc});
      return;
    }
    if (is_keyword("measure") || is_keyword("if")) {
      const bool measure = take().text == "measure";
      NameRef control = name();
      expect_keyword("then");
      Block then_block = block();
      expect_keyword("else");
      Block else_block = block();
      if (measure) {
        out.push_back({MeasureThenElse{control, std::move(then_block), std::move(else_block)}, loc});
      } else {
        out.push_back({QIf{control, std::move(then_block), std::move(else_block)}, loc});
      }
      return;
    }
    if (is_keyword("case")) {
      take();
      expect_symbol("(");
      std::vector<NameRef> controls = name_list();
      expect_symbol(")");
      expect_keyword("of");
      std::vector<CaseArm> case_arms = arms(controls.size());
      out.push_back({QCase{std::move(controls), std::move(case_arms)}, loc});
      return;
    }
    if (is_keyword("for")) {
      take();
      ForLoop loop;
      loop.var = identifier("a loop variable");
      expect_symbol("=");
      loop.lo = index_expr();
      expect_keyword("to");
      loop.hi = index_expr();
      loop.body = block();
      out.push_back({std::move(loop), loc});
      return;
    }
    if (peek().kind == Token::Kind::Ident && !kKeywords.count(peek().text)) {
      std::vector<NameRef> targets = name_list();
      expect_symbol("*=");
      out.push_back({ApplyGate{std::move(targets), gate()}, loc});
      return;
    }
    expected("a statement");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(std::string_view text) { return Parser(tokenize(text)).program(); }

}  // namespace qalt::lang
