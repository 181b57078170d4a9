// Copyright 2026 The gdjsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "gdj/errors.hpp"

namespace gdj {

// SplitMix64 step, used for seed mixing and child-stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random stream.  The engine is std::mt19937_64, whose output
// sequence is pinned by the C++ standard, so a fixed seed reproduces the same
// draws on every platform.  All derived quantities (doubles, Bernoulli trials,
// indices) are computed from raw engine words here rather than through
// std::*_distribution, which is implementation-defined.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p < 0.0 || p > 1.0) {
            throw input_error("bernoulli probability must be in [0, 1]");
        }
        return next_double() < p;
    }

    // Uniform index in [0, n).
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) {
            throw input_error("uniform_index needs a nonempty range");
        }
        auto k = static_cast<std::size_t>(next_double() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

    // Samples an index with probability weights[i] / sum(weights).
    std::size_t sample_discrete(std::span<const double> weights) {
        if (weights.empty()) {
            throw input_error("sample_discrete needs at least one weight");
        }
        double total = 0.0;
        for (double w : weights) {
            total += w;
        }
        if (total <= 0.0) {
            throw input_error("sample_discrete weights must sum to a positive value");
        }
        double u = next_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) {
                return i;
            }
        }
        return weights.size() - 1;
    }

    // Independent stream for parallel trial i.  Derivation is pure in
    // (seed, i), so trials may be dispatched in any order.
    RandomSource child(std::uint64_t i) const {
        std::uint64_t mix = seed_ ^ 0x5851f42d4c957f2dULL;
        splitmix64(mix);
        mix ^= i * 0x2545f4914f6cdd1dULL + 0x1234567855aa55aaULL;
        return RandomSource(splitmix64(mix));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace gdj
