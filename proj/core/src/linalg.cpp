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

#include "qcontrol/linalg.hpp"

#include <cmath>

#include "qcontrol/errors.hpp"

namespace qcontrol {

long total_dimension(const std::vector<int> &dims) {
    long n = 1;
    for (int d : dims) {
        if (d < 1) {
            throw DimensionError("carrier dimension must be positive");
        }
        n *= d;
    }
    return n;
}

std::vector<int> decode_index(long index, const std::vector<int> &dims) {
    std::vector<int> digits(dims.size());
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(index % dims[i]);
        index /= dims[i];
    }
    return digits;
}

long encode_index(const std::vector<int> &digits, const std::vector<int> &dims) {
    long index = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        index = index * dims[i] + digits[i];
    }
    return index;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix kron_all(const std::vector<Matrix> &factors) {
    if (factors.empty()) {
        return Matrix::Identity(1, 1);
    }
    Matrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = kron(out, factors[i]);
    }
    return out;
}

Matrix kron_power(const Matrix &a, int n) {
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        out = kron(out, a);
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix random_unitary(int dim, Rng &rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Cx(rng.normal(1.0), rng.normal(1.0));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        Cx d = r(i, i);
        double mag = std::abs(d);
        q.col(i) *= (mag > 0.0) ? d / mag : Cx(1.0, 0.0);
    }
    return q;
}

Vector random_state(int dim, Rng &rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = Cx(rng.normal(1.0), rng.normal(1.0));
    }
    v.normalize();
    return v;
}

double state_fidelity(const Vector &a, const Vector &b) {
    const double na = a.squaredNorm();
    const double nb = b.squaredNorm();
    if (na < 1e-300 || nb < 1e-300) {
        return 0.0;
    }
    const Cx overlap = a.dot(b);
    return std::norm(overlap) / (na * nb);
}

} // namespace qcontrol
