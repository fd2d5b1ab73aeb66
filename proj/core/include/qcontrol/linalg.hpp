// Copyright 2026 The qcontrol Authors
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
#include <vector>

#include <Eigen/Dense>

#include "qcontrol/rng.hpp"

namespace qcontrol {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Product of a mixed-radix dimension list.
long total_dimension(const std::vector<int> &dims);

/// Digits of `index` in the mixed radix given by `dims`, first carrier
/// most significant.
std::vector<int> decode_index(long index, const std::vector<int> &dims);

/// Inverse of decode_index.
long encode_index(const std::vector<int> &digits, const std::vector<int> &dims);

Matrix kron(const Matrix &a, const Matrix &b);
Matrix kron_all(const std::vector<Matrix> &factors);

/// n-fold Kronecker power.
Matrix kron_power(const Matrix &a, int n);

/// Largest absolute entry of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// Haar-random unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(int dim, Rng &rng);

/// Random normalized state vector.
Vector random_state(int dim, Rng &rng);

/// |<a|b>|^2 / (|a|^2 |b|^2); global-phase-insensitive overlap of pure
/// states. Returns 0 if either vector is numerically null.
double state_fidelity(const Vector &a, const Vector &b);

} // namespace qcontrol
