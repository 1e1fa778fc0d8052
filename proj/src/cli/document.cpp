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

#include "document.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qalt::cli {

double clean(double x) { return std::abs(x) < kPrintZero ? 0.0 : x; }

Json complex_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json state_json(const DensityState& rho, const lang::Context& ctx) {
  Json vars = Json::array();
  for (const lang::Variable& v : ctx.vars()) {
    vars.push_back(v.kind == lang::VarKind::Bit ? "bit:" + v.name : v.name);
  }
  Json blocks = Json::array();
  for (const Matrix& b : rho.blocks()) blocks.push_back(matrix_json(b));
  Json out;
  out["context"] = std::move(vars);
  out["signature"] = rho.signature().to_string();
  out["blocks"] = std::move(blocks);
  out["trace"] = clean(rho.trace());
  return out;
}

Json kraus_json(const KrausSet& s) {
  Json ops = Json::array();
  for (const Matrix& e : s.ops()) ops.push_back(matrix_json(e));
  Json out;
  out["input_signature"] = s.input_sig().to_string();
  out["output_signature"] = s.output_sig().to_string();
  out["size"] = s.size();
  out["operators"] = std::move(ops);
  return out;
}

Json choi_json(const ChoiFamily& family) {
  Json out = Json::array();
  for (const Matrix& c : family) out.push_back(matrix_json(c));
  return out;
}

Json envelope(const std::vector<std::string>& command, double tol, Json result) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  doc["tolerance"] = tol;
  doc["result"] = std::move(result);
  return doc;
}

std::string real_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", clean(x));
  return buf;
}

std::string complex_text(Complex z) {
  const double re = clean(z.real());
  const double im = clean(z.imag());
  if (im == 0.0) return real_text(re);
  if (re == 0.0) return real_text(im) + "i";
  return real_text(re) + (im < 0 ? "-" : "+") + real_text(std::abs(im)) + "i";
}

std::string matrix_text(const Matrix& m, int indent) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cells[i].push_back(complex_text(m(i, j)));
      width = std::max(width, cells[i].back().size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << std::string(indent, ' ') << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      out << std::string(width - row[j].size(), ' ') << row[j];
    }
    out << "]\n";
  }
  return out.str();
}

lang::Context parse_context(const std::string& text) {
  std::vector<lang::Variable> vars;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "empty name in context '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    if (item.rfind("bit:", 0) == 0) {
      vars.push_back({item.substr(4), lang::VarKind::Bit});
    } else if (item.rfind("qbit:", 0) == 0) {
      vars.push_back({item.substr(5), lang::VarKind::Qbit});
    } else {
      vars.push_back({item, lang::VarKind::Qbit});
    }
  }
  return lang::Context(std::move(vars));
}

namespace {

Complex entry(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw Error(ErrorCode::InvalidArgument, "matrix entry must be a number or [re, im]");
}

Matrix matrix_from(const Json& rows) {
  if (!rows.is_array() || rows.empty()) {
    throw Error(ErrorCode::InvalidArgument, "block must be a non-empty list of rows");
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorCode::InvalidArgument, "block must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entry(row[j]);
  }
  return m;
}

}  // namespace

InitialState parse_state(const Json& doc, double tol) {
  if (!doc.is_object() || !doc.contains("context") || !doc.contains("blocks")) {
    throw Error(ErrorCode::InvalidArgument, "state document needs 'context' and 'blocks'");
  }
  std::string names;
  for (const Json& v : doc["context"]) {
    if (!v.is_string()) throw Error(ErrorCode::InvalidArgument, "context entries must be strings");
    if (!names.empty()) names += ",";
    names += v.get<std::string>();
  }
  lang::Context ctx = names.empty() ? lang::Context{} : parse_context(names);
  std::vector<Matrix> blocks;
  for (const Json& b : doc["blocks"]) blocks.push_back(matrix_from(b));
  DensityState state(ctx.signature(), std::move(blocks), tol);
  return {std::move(ctx), std::move(state)};
}

DensityState zero_state(const lang::Context& ctx) {
  const Signature sig = ctx.signature();
  BlockElement e = BlockElement::zero(sig);
  std::vector<Matrix> blocks = e.blocks();
  blocks[0](0, 0) = 1.0;
  return DensityState(sig, std::move(blocks));
}

}  // namespace qalt::cli
