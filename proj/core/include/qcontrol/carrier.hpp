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

#include <vector>

#include "qcontrol/linalg.hpp"

namespace qcontrol {

/// Pure state of a register of information carriers with per-carrier
/// dimension (2 for plain qubits, 4 or more for carriers with memory
/// levels). The norm need not be 1: post-selection and projective
/// operations produce sub-normalized states, and callers renormalize
/// explicitly when they want a conditional state.
///
/// Basis ordering is mixed-radix with the first carrier most
/// significant, matching Kronecker-product composition order.
class CarrierState {
  public:
    CarrierState(std::vector<int> dims, Vector amplitudes);

    /// All-zero register |0...0> over the given dimensions.
    static CarrierState ground(std::vector<int> dims);

    /// Single computational basis state.
    static CarrierState basis(std::vector<int> dims, long index);

    const std::vector<int> &dims() const { return dims_; }
    const Vector &amplitudes() const { return amplitudes_; }
    Vector &amplitudes() { return amplitudes_; }

    int carrier_count() const { return static_cast<int>(dims_.size()); }
    long dimension() const { return amplitudes_.size(); }

    /// Squared Euclidean norm; the probability weight carried by the
    /// state relative to a normalized input.
    double probability() const { return amplitudes_.squaredNorm(); }

    /// Copy scaled to unit norm. A numerically null state is returned
    /// unchanged.
    CarrierState normalized() const;

    Cx amplitude(const std::vector<int> &levels) const;

  private:
    std::vector<int> dims_;
    Vector amplitudes_;
};

} // namespace qcontrol
