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

// Times the OpenMP kernels against the serial reference implementation:
// one full Hadamard sweep (H on every qubit) per measurement, best of
// three, plus a Monte-Carlo throughput row for the noise harness.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gdj/ensemble.hpp"
#include "gdj/kernels.hpp"
#include "gdj/reference.hpp"
#include "gdj/rng.hpp"

namespace {

using Complex = std::complex<double>;
using Clock = std::chrono::steady_clock;

std::vector<Complex> make_state(int nq, std::uint64_t seed) {
    gdj::RandomSource rng(seed);
    std::vector<Complex> amp(std::size_t{1} << nq);
    double norm_sq = 0.0;
    for (auto& a : amp) {
        a = {rng.next_double() * 2.0 - 1.0, rng.next_double() * 2.0 - 1.0};
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amp) a *= inv;
    return amp;
}

template <typename F>
double best_of_three_ms(F&& sweep) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto start = Clock::now();
        sweep();
        const auto stop = Clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp threads: (built without OpenMP)\n");
#endif
    std::printf("%4s %10s %12s %12s %9s\n", "n", "dim", "serial_ms", "kernel_ms", "speedup");

    for (int nq = 12; nq <= 22; nq += 2) {
        const std::size_t dim = std::size_t{1} << nq;

        std::vector<Complex> serial_state = make_state(nq, 42);
        const double serial_ms = best_of_three_ms([&] {
            for (int bit = 0; bit < nq; ++bit) gdj::ref::apply_hadamard(serial_state, bit);
        });

        std::vector<Complex> kernel_state = make_state(nq, 42);
        const double kernel_ms = best_of_three_ms([&] {
            for (int bit = 0; bit < nq; ++bit) {
                gdj::kernel::apply_hadamard(kernel_state.data(), dim, bit);
            }
        });

        std::printf("%4d %10zu %12.3f %12.3f %8.2fx\n", nq, dim, serial_ms, kernel_ms,
                    serial_ms / kernel_ms);
    }

    // Monte-Carlo fan-out throughput: noisy-decode trials per second.
    const int trials = 20000;
    gdj::RandomSource rng(7);
    const auto start = Clock::now();
    const double acc = gdj::monte_carlo_noise_accuracy(gdj::Algorithm::gdj, 5, 0.15, trials, rng);
    const auto stop = Clock::now();
    const double secs = std::chrono::duration<double>(stop - start).count();
    std::printf("\nmonte-carlo: %d noisy-decode trials in %.3f s (%.0f trials/s, accuracy %.4f)\n",
                trials, secs, trials / secs, acc);
    return 0;
}
