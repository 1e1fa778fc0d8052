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

#include "qalt/stinespring.hpp"

#include <cmath>
#include <string>

namespace qalt {

namespace {

void require_consistent(const StinespringRep& rep) {
  const int h = rep.input_sig.dim();
  const int k = rep.output_sig.dim();
  if (rep.ancilla_dim < 1 || rep.v.rows() != h * rep.ancilla_dim ||
      rep.v.cols() != k) {
    throw Error(ErrorCode::DimensionMismatch,
                "dilation is " + std::to_string(rep.v.rows()) + "x" +
                    std::to_string(rep.v.cols()) + ", expected " +
                    std::to_string(h * rep.ancilla_dim) + "x" +
                    std::to_string(k));
  }
}

// Places adjoint(op) * psi (x) |index> into the rows of v.
void add_term(Matrix& v, const Matrix& op, int index, int ancilla_dim) {
  const Matrix dag = op.adjoint();
  for (Eigen::Index h = 0; h < dag.rows(); ++h) {
    v.row(h * ancilla_dim + index) += dag.row(h);
  }
}

}  // namespace

StinespringRep to_stinespring(const KrausSet& s) {
  if (s.empty()) {
    throw Error(ErrorCode::EmptySet,
                "the zero map has no dilation in this construction");
  }
  const int a = static_cast<int>(s.size());
  StinespringRep rep{s.input_sig(), s.output_sig(), a,
                     Matrix::Zero(s.input_sig().dim() * a, s.output_sig().dim())};
  for (int i = 0; i < a; ++i) add_term(rep.v, s.ops()[i], i, a);
  return rep;
}

Matrix stinespring_action(const StinespringRep& rep, const Matrix& rho) {
  require_consistent(rep);
  if (rho.rows() != rep.input_sig.dim() || rho.cols() != rep.input_sig.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state does not live on " + rep.input_sig.to_string());
  }
  return rep.v.adjoint() * tensor(rho, identity(rep.ancilla_dim)) * rep.v;
}

bool verify_stinespring(const KrausSet& s, const StinespringRep& rep,
                        double tol) {
  require_consistent(rep);
  if (!(rep.input_sig == s.input_sig()) || !(rep.output_sig == s.output_sig())) {
    throw Error(ErrorCode::DimensionMismatch,
                "dilation and Kraus set act between different spaces");
  }
  for (const BlockElement& e : basis_elements(s.input_sig())) {
    const Matrix rho = e.to_matrix();
    if (!approx_equal(stinespring_action(rep, rho), apply_matrix(s, rho), tol)) {
      return false;
    }
  }
  return true;
}

KrausSet from_stinespring(const StinespringRep& rep, double tol) {
  require_consistent(rep);
  const int h = rep.input_sig.dim();
  std::vector<Matrix> ops;
  for (int k = 0; k < rep.ancilla_dim; ++k) {
    Matrix dag(h, rep.v.cols());
    for (int row = 0; row < h; ++row) dag.row(row) = rep.v.row(row * rep.ancilla_dim + k);
    ops.push_back(dag.adjoint());
  }
  return KrausSet::make(rep.input_sig, rep.output_sig, std::move(ops), tol);
}

StinespringRep alternation_stinespring(const KrausSet& s, const KrausSet& t) {
  if (s.empty() || t.empty()) {
    throw Error(ErrorCode::EmptySet, "alternation dilation needs both branches");
  }
  if (!(s.input_sig() == t.input_sig()) || !(s.output_sig() == t.output_sig())) {
    throw Error(ErrorCode::SignatureMismatch,
                "alternated branches must share their type");
  }
  const Signature in = qbit_tensor(s.input_sig());
  const Signature out = qbit_tensor(s.output_sig());
  const Matrix lift_in = lift_permutation(2, s.input_sig()).adjoint();
  const Matrix lift_out = lift_permutation(2, s.output_sig());
  const int a = static_cast<int>(s.size() * t.size());
  StinespringRep rep{in, out, a, Matrix::Zero(in.dim() * a, out.dim())};

  const double norm_e = std::sqrt(static_cast<double>(t.size()));
  const double norm_f = std::sqrt(static_cast<double>(s.size()));
  for (std::size_t fi = 0; fi < t.size(); ++fi) {
    for (std::size_t ei = 0; ei < s.size(); ++ei) {
      const Matrix alt = tensor(projector(0, 2), s.ops()[ei] / norm_e) +
                         tensor(projector(1, 2), t.ops()[fi] / norm_f);
      const int index = static_cast<int>(fi * s.size() + ei);
      add_term(rep.v, lift_out * alt * lift_in, index, a);
    }
  }
  return rep;
}

}  // namespace qalt
