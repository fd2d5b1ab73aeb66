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

#include "qcontrol/carrier.hpp"

#include "qcontrol/errors.hpp"

namespace qcontrol {

CarrierState::CarrierState(std::vector<int> dims, Vector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != total_dimension(dims_)) {
        throw DimensionError("amplitude vector length does not match carrier dimensions");
    }
}

CarrierState CarrierState::ground(std::vector<int> dims) {
    return basis(std::move(dims), 0);
}

CarrierState CarrierState::basis(std::vector<int> dims, long index) {
    const long n = total_dimension(dims);
    if (index < 0 || index >= n) {
        throw DimensionError("basis index out of range");
    }
    Vector v = Vector::Zero(n);
    v(index) = 1.0;
    return CarrierState(std::move(dims), std::move(v));
}

CarrierState CarrierState::normalized() const {
    const double p = probability();
    if (p < 1e-300) {
        return *this;
    }
    return CarrierState(dims_, amplitudes_ / std::sqrt(p));
}

Cx CarrierState::amplitude(const std::vector<int> &levels) const {
    if (levels.size() != dims_.size()) {
        throw DimensionError("level list length does not match carrier count");
    }
    return amplitudes_(encode_index(levels, dims_));
}

} // namespace qcontrol
