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

#include "qcontrol/rng.hpp"

#include <cmath>

namespace qcontrol {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t Rng::raw() { return engine_(); }

double Rng::uniform() {
    // 53-bit mantissa, strictly below 1
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal(double sigma) {
    if (sigma == 0.0) {
        return 0.0;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double r = std::sqrt(-2.0 * std::log(u1));
    return sigma * r * std::cos(2.0 * M_PI * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
    // rejection to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) {
        v = engine_();
    }
    return v % n;
}

long long Rng::poisson(double mean) {
    if (mean <= 0.0) {
        return 0;
    }
    if (mean < 30.0) {
        // inversion by sequential search
        const double l = std::exp(-mean);
        long long k = 0;
        double p = uniform();
        double cum = l;
        double term = l;
        while (p > cum) {
            ++k;
            term *= mean / static_cast<double>(k);
            cum += term;
            if (term < 1e-300 && p > cum) {
                break;
            }
        }
        return k;
    }

    // PTRS transformed rejection (Hormann 1993), exact for mean >= 10
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        double u = uniform() - 0.5;
        double v = uniform();
        double us = 0.5 - std::fabs(u);
        double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) {
            return static_cast<long long>(k);
        }
        if (k < 0.0 || (us < 0.013 && v > us)) {
            continue;
        }
        const double log_mean = std::log(mean);
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0)) {
            return static_cast<long long>(k);
        }
    }
}

Rng Rng::fork(std::uint64_t stream_id) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream_id + 0x5851F42D4C957F2DULL)));
}

} // namespace qcontrol
