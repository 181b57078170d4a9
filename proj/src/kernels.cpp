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

#include "gdj/kernels.hpp"

#include <cmath>
#include <utility>

namespace gdj::kernel {

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

void apply_hadamard(Complex* amp, std::size_t size, int bit) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t pairs = size / 2;
    const std::int64_t count = static_cast<std::int64_t>(pairs);
#pragma omp parallel for schedule(static) if (size >= parallel_threshold)
    for (std::int64_t m = 0; m < count; ++m) {
        const std::size_t u = static_cast<std::size_t>(m);
        // Index with `bit` cleared: upper bits of m shifted past the bit, low bits kept.
        const std::size_t i0 = ((u >> bit) << (bit + 1)) | (u & (stride - 1));
        const std::size_t i1 = i0 | stride;
        const Complex a = amp[i0];
        const Complex b = amp[i1];
        amp[i0] = (a + b) * inv_sqrt2;
        amp[i1] = (a - b) * inv_sqrt2;
    }
}

void apply_x(Complex* amp, std::size_t size, int bit) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t pairs = size / 2;
    const std::int64_t count = static_cast<std::int64_t>(pairs);
#pragma omp parallel for schedule(static) if (size >= parallel_threshold)
    for (std::int64_t m = 0; m < count; ++m) {
        const std::size_t u = static_cast<std::size_t>(m);
        const std::size_t i0 = ((u >> bit) << (bit + 1)) | (u & (stride - 1));
        std::swap(amp[i0], amp[i0 | stride]);
    }
}

void apply_cnot(Complex* amp, std::size_t size, int control_bit, int target_bit) {
    const std::size_t cmask = std::size_t{1} << control_bit;
    const std::size_t tmask = std::size_t{1} << target_bit;
    const std::int64_t count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) if (size >= parallel_threshold)
    for (std::int64_t m = 0; m < count; ++m) {
        const std::size_t i = static_cast<std::size_t>(m);
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amp[i], amp[i | tmask]);
        }
    }
}

void apply_phase_signs(Complex* amp, std::size_t size, const std::int8_t* signs, int shift) {
    const std::int64_t count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) if (size >= parallel_threshold)
    for (std::int64_t m = 0; m < count; ++m) {
        const std::size_t i = static_cast<std::size_t>(m);
        if (signs[i >> shift] < 0) {
            amp[i] = -amp[i];
        }
    }
}

void scale(Complex* amp, std::size_t size, double factor) {
    const std::int64_t count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) if (size >= parallel_threshold)
    for (std::int64_t m = 0; m < count; ++m) {
        amp[static_cast<std::size_t>(m)] *= factor;
    }
}

void project_mask(Complex* amp, std::size_t size, std::size_t mask, std::size_t value) {
    const std::int64_t count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) if (size >= parallel_threshold)
    for (std::int64_t m = 0; m < count; ++m) {
        const std::size_t i = static_cast<std::size_t>(m);
        if ((i & mask) != value) {
            amp[i] = Complex{0.0, 0.0};
        }
    }
}

}  // namespace gdj::kernel
