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

#include <stdexcept>
#include <string>

namespace qcontrol {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Operand shapes or carrier dimensions do not match.
class DimensionError : public Error {
  public:
    explicit DimensionError(const std::string &msg) : Error(msg) {}
};

/// A state carries weight on memory levels where none is allowed.
class ResidualMemoryError : public Error {
  public:
    ResidualMemoryError(const std::string &msg, double leaked)
        : Error(msg), leaked_weight(leaked) {}
    double leaked_weight;
};

/// Desk-scale simulation limits exceeded (photon number or mode count).
class CapacityError : public Error {
  public:
    explicit CapacityError(const std::string &msg) : Error(msg) {}
};

/// An iterative solver stopped without meeting its convergence contract.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &msg, double gradient)
        : Error(msg), gradient_norm(gradient) {}
    double gradient_norm;
};

/// Malformed or inconsistent serialized input.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string &msg) : Error(msg) {}
};

} // namespace qcontrol
