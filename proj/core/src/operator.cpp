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

#include "qcontrol/operator.hpp"

#include "qcontrol/errors.hpp"

namespace qcontrol {

Operator::Operator(std::vector<int> dims_in, std::vector<int> dims_out, Matrix entries)
    : dims_in_(std::move(dims_in)), dims_out_(std::move(dims_out)),
      entries_(std::move(entries)) {
    if (entries_.rows() != total_dimension(dims_out_) ||
        entries_.cols() != total_dimension(dims_in_)) {
        throw DimensionError("operator matrix shape does not match carrier dimensions");
    }
}

Operator::Operator(std::vector<int> dims, Matrix entries)
    : Operator(dims, dims, std::move(entries)) {}

Operator Operator::identity(std::vector<int> dims) {
    const long n = total_dimension(dims);
    return Operator(std::move(dims), Matrix::Identity(n, n));
}

bool Operator::is_unitary(double tol) const {
    if (!is_square()) {
        return false;
    }
    const Matrix gram = entries_.adjoint() * entries_;
    return max_abs_diff(gram, Matrix::Identity(gram.rows(), gram.cols())) < tol;
}

CarrierState Operator::apply(const CarrierState &state) const {
    if (state.dims() != dims_in_) {
        throw DimensionError("operator input carriers do not match state carriers");
    }
    return CarrierState(dims_out_, entries_ * state.amplitudes());
}

Operator Operator::compose(const Operator &inner) const {
    if (inner.dims_out_ != dims_in_) {
        throw DimensionError("operator composition carrier mismatch");
    }
    return Operator(inner.dims_in_, dims_out_, entries_ * inner.entries_);
}

Operator Operator::tensor(const Operator &other) const {
    std::vector<int> din = dims_in_;
    din.insert(din.end(), other.dims_in_.begin(), other.dims_in_.end());
    std::vector<int> dout = dims_out_;
    dout.insert(dout.end(), other.dims_out_.begin(), other.dims_out_.end());
    return Operator(std::move(din), std::move(dout), kron(entries_, other.entries_));
}

Operator Operator::adjoint() const {
    return Operator(dims_out_, dims_in_, entries_.adjoint());
}

} // namespace qcontrol
