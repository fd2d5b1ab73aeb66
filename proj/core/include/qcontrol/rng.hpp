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

#include <cstdint>
#include <random>

namespace qcontrol {

/// Deterministic random stream.
///
/// Wraps mt19937_64 but draws normal and Poisson variates through fixed
/// in-house transforms, so a given seed reproduces the same sequence no
/// matter which standard library the binary was built against. Every
/// sampled artifact in the project (counts, resamples, jitter) flows
/// through this class; that is what makes the byte-identical output
/// contract of the CLI hold.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Uniform in [0, 1).
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Normal with mean 0 and the given standard deviation (Box-Muller).
    double normal(double sigma);

    /// Poisson with the given mean. Exact inversion for small means,
    /// Hormann's PTRS transformed rejection for large ones.
    long long poisson(double mean);

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

    /// Independent child stream; deterministic in (parent seed, id).
    Rng fork(std::uint64_t stream_id) const;

    std::uint64_t raw();

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace qcontrol
