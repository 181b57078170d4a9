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

#include <cmath>
#include <cstdint>
#include <vector>

#include "gdj/rng.hpp"
#include "gdj/statevector.hpp"

namespace gdj::test {

// A reproducible random normalized state.
inline StateVector random_state(int num_qubits, std::uint64_t seed) {
    RandomSource rng(seed);
    const std::uint64_t dim = 1ull << num_qubits;
    std::vector<Complex> amps(dim);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = {rng.next_double() * 2.0 - 1.0, rng.next_double() * 2.0 - 1.0};
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

inline double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    const std::uint64_t dim = 1ull << a.num_qubits();
    for (std::uint64_t i = 0; i < dim; ++i) {
        worst = std::max(worst, std::abs(a.amplitude(i) - b.amplitude(i)));
    }
    return worst;
}

}  // namespace gdj::test
