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
#include <complex>
#include <cstdint>
#include <vector>

namespace gdj::ref {

using Complex = std::complex<double>;

// Serial reference kernels.  Each one rebuilds the state by gathering from a
// copy, the most literal reading of the gate definitions, and serves as the
// trusted baseline for the in-place parallel kernels in gdj::kernel.

inline void apply_hadamard(std::vector<Complex>& amp, int bit) {
    const std::size_t stride = std::size_t{1} << bit;
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<Complex> in = amp;
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::size_t lo = i & ~stride;
        const std::size_t hi = i | stride;
        amp[i] = (i & stride) ? (in[lo] - in[hi]) * s : (in[lo] + in[hi]) * s;
    }
}

inline void apply_x(std::vector<Complex>& amp, int bit) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::vector<Complex> in = amp;
    for (std::size_t i = 0; i < in.size(); ++i) {
        amp[i] = in[i ^ stride];
    }
}

inline void apply_cnot(std::vector<Complex>& amp, int control_bit, int target_bit) {
    const std::size_t cmask = std::size_t{1} << control_bit;
    const std::size_t tmask = std::size_t{1} << target_bit;
    const std::vector<Complex> in = amp;
    for (std::size_t i = 0; i < in.size(); ++i) {
        amp[i] = (i & cmask) ? in[i ^ tmask] : in[i];
    }
}

inline void apply_phase_signs(std::vector<Complex>& amp, const std::vector<std::int8_t>& signs,
                              int shift) {
    for (std::size_t i = 0; i < amp.size(); ++i) {
        amp[i] *= static_cast<double>(signs[i >> shift]);
    }
}

}  // namespace gdj::ref
