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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qalt {

using Complex = std::complex<double>;

/// Dense complex matrix, row/col counts carried by Eigen. Treated as an
/// immutable value everywhere in this library: functions return fresh
/// matrices and never modify their arguments.
using Matrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTol = 1e-9;

Matrix identity(Eigen::Index n);
Matrix zeros(Eigen::Index rows, Eigen::Index cols);

/// Column vector |index> in a space of dimension dim.
Matrix ket(Eigen::Index index, Eigen::Index dim);
/// Projection |index><index| in a space of dimension dim.
Matrix projector(Eigen::Index index, Eigen::Index dim);

/// Kronecker product; A is the leading (most significant) factor.
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);

bool all_finite(const Matrix& a);
bool is_square(const Matrix& a);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);
/// Same shape and entrywise within tol.
bool approx_equal(const Matrix& a, const Matrix& b, double tol);
bool is_zero(const Matrix& a, double tol);

bool is_hermitian(const Matrix& a, double tol);
bool is_unitary(const Matrix& a, double tol);

/// Smallest eigenvalue of (A + A^dagger) / 2. A must be square.
double min_hermitian_eigenvalue(const Matrix& a);

/// Hermitian within tol and smallest eigenvalue >= -tol. Throws
/// InvalidArgument for a non-square matrix.
bool is_psd(const Matrix& a, double tol = kDefaultTol);

/// Lifts U (2^|targets| square) onto an n-qubit register. Qubit 0 is the
/// leading tensor factor; U sees the targets in the listed order.
Matrix embed_gate(const Matrix& u, std::span<const int> targets, int n);

/// Permutation unitary on n qubits moving qubit i to position perm[i]:
/// the factor at position i of the input is at position perm[i] of the
/// output.
Matrix qubit_permutation(std::span<const int> perm, int n);

}  // namespace qalt
