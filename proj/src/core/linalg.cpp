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

#include "qalt/linalg.hpp"

#include <cmath>
#include <string>

#include "qalt/error.hpp"

namespace qalt {

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Matrix zeros(Eigen::Index rows, Eigen::Index cols) {
  return Matrix::Zero(rows, cols);
}

Matrix ket(Eigen::Index index, Eigen::Index dim) {
  Matrix v = Matrix::Zero(dim, 1);
  v(index, 0) = 1.0;
  return v;
}

Matrix projector(Eigen::Index index, Eigen::Index dim) {
  Matrix p = Matrix::Zero(dim, dim);
  p(index, index) = 1.0;
  return p;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

bool all_finite(const Matrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex z = a.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_square(const Matrix& a) { return a.rows() == a.cols(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot compare " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " with " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tol;
}

bool is_zero(const Matrix& a, double tol) {
  return a.size() == 0 || a.cwiseAbs().maxCoeff() <= tol;
}

bool is_hermitian(const Matrix& a, double tol) {
  return is_square(a) && max_abs_diff(a, a.adjoint()) <= tol;
}

bool is_unitary(const Matrix& a, double tol) {
  if (!is_square(a)) return false;
  const Matrix id = identity(a.rows());
  return max_abs_diff(a.adjoint() * a, id) <= tol &&
         max_abs_diff(a * a.adjoint(), id) <= tol;
}

double min_hermitian_eigenvalue(const Matrix& a) {
  if (!is_square(a)) {
    throw Error(ErrorCode::InvalidArgument,
                "eigenvalues requested for a non-square matrix");
  }
  if (a.rows() == 0) return 0.0;
  const Matrix h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const Matrix& a, double tol) {
  if (!is_square(a)) {
    throw Error(ErrorCode::InvalidArgument,
                "positivity test on a non-square matrix");
  }
  if (!is_hermitian(a, tol)) return false;
  return min_hermitian_eigenvalue(a) >= -tol;
}

namespace {

int bit_of(Eigen::Index index, int qubit, int n) {
  return static_cast<int>((index >> (n - 1 - qubit)) & 1);
}

}  // namespace

Matrix embed_gate(const Matrix& u, std::span<const int> targets, int n) {
  const int k = static_cast<int>(targets.size());
  const Eigen::Index sub = Eigen::Index{1} << k;
  if (u.rows() != sub || u.cols() != sub) {
    throw Error(ErrorCode::DimensionMismatch,
                "gate of size " + std::to_string(u.rows()) + "x" +
                    std::to_string(u.cols()) + " cannot act on " +
                    std::to_string(k) + " qubit(s)");
  }
  Eigen::Index mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "target qubit " + std::to_string(t) + " out of range for " +
                      std::to_string(n) + " qubit(s)");
    }
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - t);
    if (mask & bit) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate target qubit " + std::to_string(t));
    }
    mask |= bit;
  }

  const Eigen::Index dim = Eigen::Index{1} << n;
  auto local_index = [&](Eigen::Index full) {
    Eigen::Index idx = 0;
    for (int t : targets) idx = (idx << 1) | bit_of(full, t, n);
    return idx;
  };

  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Eigen::Index rest = col & ~mask;
    const Eigen::Index lc = local_index(col);
    for (Eigen::Index lr = 0; lr < sub; ++lr) {
      const Complex amp = u(lr, lc);
      if (amp == Complex{}) continue;
      Eigen::Index row = rest;
      for (int j = 0; j < k; ++j) {
        if ((lr >> (k - 1 - j)) & 1) row |= Eigen::Index{1} << (n - 1 - targets[j]);
      }
      out(row, col) = amp;
    }
  }
  return out;
}

Matrix qubit_permutation(std::span<const int> perm, int n) {
  if (static_cast<int>(perm.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "permutation length mismatch");
  }
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    }
    seen[p] = true;
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index in = 0; in < dim; ++in) {
    Eigen::Index target = 0;
    for (int i = 0; i < n; ++i) {
      if (bit_of(in, i, n)) target |= Eigen::Index{1} << (n - 1 - perm[i]);
    }
    out(target, in) = 1.0;
  }
  return out;
}

}  // namespace qalt
