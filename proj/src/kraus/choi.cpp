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

#include <algorithm>
#include <limits>

#include "qalt/kraus.hpp"

namespace qalt {

namespace {

void require_same_type(const KrausSet& s, const KrausSet& t) {
  if (!(s.input_sig() == t.input_sig()) || !(s.output_sig() == t.output_sig())) {
    throw Error(ErrorCode::SignatureMismatch,
                "comparison needs equal signatures: " +
                    s.input_sig().to_string() + " -> " +
                    s.output_sig().to_string() + " vs " +
                    t.input_sig().to_string() + " -> " +
                    t.output_sig().to_string());
  }
}

// Column-stacking with the input index leading: entry (r, j) of an
// out x n matrix lands at j * out + r, so vec(A) vec(A)^dagger equals
// Sum_{jk} |j><k| (x) A|j><k|A^dagger.
Matrix vec(const Matrix& a) {
  Matrix v(a.rows() * a.cols(), 1);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) v(j * a.rows() + r, 0) = a(r, j);
  }
  return v;
}

}  // namespace

ChoiFamily to_choi(const KrausSet& s) {
  const Signature& in = s.input_sig();
  const int out_dim = s.output_sig().dim();
  ChoiFamily family;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const int n = in.block(i);
    Matrix choi = Matrix::Zero(n * out_dim, n * out_dim);
    for (const Matrix& e : s.ops()) {
      const Matrix v = vec(e.middleCols(in.offset(i), n));
      choi += v * v.adjoint();
    }
    family.push_back(std::move(choi));
  }
  return family;
}

double choi_distance(const ChoiFamily& a, const ChoiFamily& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SignatureMismatch, "Choi families differ in length");
  }
  double dist = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dist = std::max(dist, max_abs_diff(a[i], b[i]));
  }
  return dist;
}

bool ext_equal(const KrausSet& s, const KrausSet& t, double tol) {
  require_same_type(s, t);
  return choi_distance(to_choi(s), to_choi(t)) <= tol;
}

double lowner_gap(const KrausSet& s, const KrausSet& t) {
  require_same_type(s, t);
  const ChoiFamily cs = to_choi(s);
  const ChoiFamily ct = to_choi(t);
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    gap = std::min(gap, min_hermitian_eigenvalue(ct[i] - cs[i]));
  }
  return gap;
}

bool lowner_leq(const KrausSet& s, const KrausSet& t, double tol) {
  require_same_type(s, t);
  const ChoiFamily cs = to_choi(s);
  const ChoiFamily ct = to_choi(t);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!is_psd(ct[i] - cs[i], tol)) return false;
  }
  return true;
}

bool is_reversible(const KrausSet& s, double tol) {
  return s.input_sig() == s.output_sig() && s.size() == 1 &&
         is_unitary(s.ops().front(), tol);
}

}  // namespace qalt
