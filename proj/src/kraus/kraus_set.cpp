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
#include <cmath>
#include <string>

#include "qalt/kraus.hpp"

namespace qalt {

namespace {

long long rounded(double x) { return std::llround(x * 1e9); }

void require_shape(const Matrix& op, const Signature& in, const Signature& out) {
  if (op.rows() != out.dim() || op.cols() != in.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "Kraus operator is " + std::to_string(op.rows()) + "x" +
                    std::to_string(op.cols()) + ", expected " +
                    std::to_string(out.dim()) + "x" + std::to_string(in.dim()));
  }
}

}  // namespace

bool canonical_less(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  // Row-major lexicographic, descending, on entries rounded to 1e-9; exact
  // values break ties.
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        const Complex x = a(i, j);
        const Complex y = b(i, j);
        if (pass == 0) {
          const auto kx = std::pair{rounded(x.real()), rounded(x.imag())};
          const auto ky = std::pair{rounded(y.real()), rounded(y.imag())};
          if (kx != ky) return kx > ky;
        } else {
          if (x.real() != y.real()) return x.real() > y.real();
          if (x.imag() != y.imag()) return x.imag() > y.imag();
        }
      }
    }
  }
  return false;
}

std::vector<Matrix> coalesce(std::vector<Matrix> raw) {
  std::vector<Matrix> ops;
  for (Matrix& m : raw) {
    if (!is_zero(m, kCoalesceTol)) ops.push_back(std::move(m));
  }
  // sqrt(l) K can coincide with another member, so repeat until stable.
  bool merged = true;
  while (merged) {
    merged = false;
    std::vector<Matrix> reps;
    std::vector<int> counts;
    for (Matrix& m : ops) {
      auto it = std::find_if(reps.begin(), reps.end(), [&](const Matrix& r) {
        return approx_equal(r, m, kCoalesceTol);
      });
      if (it == reps.end()) {
        reps.push_back(std::move(m));
        counts.push_back(1);
      } else {
        ++counts[static_cast<std::size_t>(it - reps.begin())];
        merged = true;
      }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (counts[i] > 1) reps[i] *= std::sqrt(static_cast<double>(counts[i]));
    }
    ops = std::move(reps);
  }
  std::sort(ops.begin(), ops.end(), canonical_less);
  return ops;
}

KrausSet::KrausSet(Signature input, Signature output, std::vector<Matrix> ops)
    : input_(std::move(input)), output_(std::move(output)), ops_(std::move(ops)) {}

KrausSet KrausSet::make(Signature input, Signature output,
                        std::vector<Matrix> raw, double tol) {
  for (const Matrix& op : raw) {
    require_shape(op, input, output);
    if (!all_finite(op)) {
      throw Error(ErrorCode::InvalidArgument,
                  "Kraus operator has non-finite entries");
    }
  }
  KrausSet s(std::move(input), std::move(output), coalesce(std::move(raw)));
  const Matrix slack = qalt::identity(s.input_.dim()) - kraus_sum(s);
  if (!is_psd(slack, tol)) {
    throw Error(ErrorCode::TraceConditionViolated,
                "Sum E^dagger E exceeds the identity by " +
                    std::to_string(-min_hermitian_eigenvalue(slack)));
  }
  return s;
}

KrausSet KrausSet::identity(const Signature& sig) {
  return KrausSet(sig, sig, {qalt::identity(sig.dim())});
}

KrausSet KrausSet::empty(Signature input, Signature output) {
  return KrausSet(std::move(input), std::move(output), {});
}

Matrix kraus_sum(const KrausSet& s) {
  Matrix sum = Matrix::Zero(s.input_sig().dim(), s.input_sig().dim());
  for (const Matrix& e : s.ops()) sum += e.adjoint() * e;
  return sum;
}

KrausSet compose(const KrausSet& s, const KrausSet& t) {
  if (!(t.output_sig() == s.input_sig())) {
    throw Error(ErrorCode::DimensionMismatch,
                "cannot compose: " + t.output_sig().to_string() + " feeds " +
                    s.input_sig().to_string());
  }
  std::vector<Matrix> products;
  products.reserve(s.size() * t.size());
  for (const Matrix& e : s.ops()) {
    for (const Matrix& f : t.ops()) products.push_back(e * f);
  }
  return KrausSet::make(t.input_sig(), s.output_sig(), std::move(products));
}

KrausSet branch_sum(const KrausSet& s, const KrausSet& t) {
  if (!(s.input_sig() == t.input_sig()) || !(s.output_sig() == t.output_sig())) {
    throw Error(ErrorCode::SignatureMismatch,
                "branch sum needs equal signatures on both sides");
  }
  const Signature& in = s.input_sig();
  const Signature& out = s.output_sig();
  std::vector<Matrix> ops;
  for (const Matrix& e : s.ops()) {
    ops.push_back(injection(0, out) * e * injection(0, in).adjoint());
  }
  for (const Matrix& f : t.ops()) {
    ops.push_back(injection(1, out) * f * injection(1, in).adjoint());
  }
  return KrausSet::make(dsum(in, in), dsum(out, out), std::move(ops));
}

Matrix apply_matrix(const KrausSet& s, const Matrix& rho) {
  if (rho.rows() != s.input_sig().dim() || rho.cols() != s.input_sig().dim()) {
    throw Error(ErrorCode::SignatureMismatch,
                "state does not live on " + s.input_sig().to_string());
  }
  Matrix out = Matrix::Zero(s.output_sig().dim(), s.output_sig().dim());
  for (const Matrix& e : s.ops()) out += e * rho * e.adjoint();
  return out;
}

BlockElement apply(const KrausSet& s, const BlockElement& rho, double tol) {
  if (!(rho.signature() == s.input_sig())) {
    throw Error(ErrorCode::SignatureMismatch,
                "state signature " + rho.signature().to_string() +
                    " does not match input " + s.input_sig().to_string());
  }
  return BlockElement::from_matrix(s.output_sig(),
                                   apply_matrix(s, rho.to_matrix()), tol);
}

DensityState apply(const KrausSet& s, const DensityState& rho, double tol) {
  return DensityState(apply(s, rho.element(), tol), tol);
}

}  // namespace qalt
