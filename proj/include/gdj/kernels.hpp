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

#include <complex>
#include <cstddef>
#include <cstdint>

namespace gdj::kernel {

using Complex = std::complex<double>;

// In-place amplitude kernels, OpenMP-parallel above a size threshold.  Every
// loop iteration owns the amplitudes it touches, so results are bitwise
// identical for any thread count.  `bit` counts from the least significant
// bit of the array index.  The serial reference implementations live in
// gdj::ref (reference.hpp); tests cross-check the two and tools/bench.cpp
// times them against each other.

// Smallest state size that is dispatched to the parallel path.
inline constexpr std::size_t parallel_threshold = std::size_t{1} << 12;

void apply_hadamard(Complex* amp, std::size_t size, int bit);
void apply_x(Complex* amp, std::size_t size, int bit);
void apply_cnot(Complex* amp, std::size_t size, int control_bit, int target_bit);

// amp[i] *= signs[i >> shift]; signs holds +1/-1.
void apply_phase_signs(Complex* amp, std::size_t size, const std::int8_t* signs, int shift);

void scale(Complex* amp, std::size_t size, double factor);

// Zeroes every amplitude whose index does not satisfy (i & mask) == value.
void project_mask(Complex* amp, std::size_t size, std::size_t mask, std::size_t value);

}  // namespace gdj::kernel
