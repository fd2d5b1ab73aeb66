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

#include "qcontrol/carrier.hpp"
#include "qcontrol/linalg.hpp"

namespace qcontrol {

/// Dense linear map between carrier registers. Not restricted to
/// unitaries: projectors and other contractive maps are first-class
/// citizens here, which is the whole point of working with controlled
/// quantum operations rather than controlled unitaries only.
class Operator {
  public:
    Operator(std::vector<int> dims_in, std::vector<int> dims_out, Matrix entries);

    /// Square operator with identical input and output carriers.
    Operator(std::vector<int> dims, Matrix entries);

    static Operator identity(std::vector<int> dims);

    const std::vector<int> &dims_in() const { return dims_in_; }
    const std::vector<int> &dims_out() const { return dims_out_; }
    const Matrix &entries() const { return entries_; }

    bool is_square() const { return dims_in_ == dims_out_; }

    /// True iff O†O = I within the given max-norm tolerance.
    bool is_unitary(double tol = 1e-12) const;

    CarrierState apply(const CarrierState &state) const;

    Operator compose(const Operator &inner) const; // this ∘ inner
    Operator tensor(const Operator &other) const;
    Operator adjoint() const;

  private:
    std::vector<int> dims_in_;
    std::vector<int> dims_out_;
    Matrix entries_;
};

} // namespace qcontrol
