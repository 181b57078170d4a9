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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "gdj/errors.hpp"
#include "gdj/reference.hpp"
#include "gdj/statevector.hpp"
#include "gdj/tolerances.hpp"
#include "test_util.hpp"

using namespace gdj;
using test::max_amp_diff;
using test::random_state;

TEST_SUITE("statevector") {

TEST_CASE("fresh state is the all-zeros basis state") {
    StateVector sv(3);
    CHECK(sv.num_qubits() == 3);
    CHECK(sv.amplitude(0) == Complex{1.0, 0.0});
    for (std::uint64_t i = 1; i < 8; ++i) CHECK(std::abs(sv.amplitude(i)) == 0.0);
    CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("construction rejects out-of-range qubit counts") {
    CHECK_THROWS_AS(StateVector(0), input_error);
    CHECK_THROWS_AS(StateVector(StateVector::max_qubits + 1), resource_error);
}

TEST_CASE("basis_state places qubit 0 at the top of the index") {
    StateVector sv = StateVector::basis_state(3, "100");
    // Bitstring "100" means qubit 0 is set, so the index is 0b100 = 4.
    CHECK(std::abs(sv.amplitude(4) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(sv.amplitude("100") - Complex{1.0, 0.0}) < 1e-15);
    CHECK_THROWS_AS(StateVector::basis_state(3, "10"), input_error);
}

TEST_CASE("from_amplitudes enforces normalization") {
    std::vector<Complex> amps{{0.5, 0.0}, {0.5, 0.0}};
    CHECK_THROWS_AS(StateVector::from_amplitudes(1, amps), input_error);
    amps = {{std::sqrt(0.5), 0.0}, {0.0, std::sqrt(0.5)}};
    StateVector sv = StateVector::from_amplitudes(1, amps);
    CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hadamard and x are involutions and preserve the norm") {
    for (int q = 0; q < 4; ++q) {
        StateVector sv = random_state(4, 100 + static_cast<std::uint64_t>(q));
        StateVector orig = sv;
        sv.apply_hadamard(q);
        CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-13));
        sv.apply_hadamard(q);
        CHECK(max_amp_diff(sv, orig) < 1e-13);
        sv.apply_x(q);
        sv.apply_x(q);
        CHECK(max_amp_diff(sv, orig) < 1e-13);
    }
}

TEST_CASE("cnot is an involution and acts only when the control is set") {
    StateVector sv = random_state(5, 7);
    StateVector orig = sv;
    sv.apply_cnot(1, 3);
    sv.apply_cnot(1, 3);
    CHECK(max_amp_diff(sv, orig) < 1e-15);

    StateVector basis = StateVector::basis_state(2, "01");
    basis.apply_cnot(0, 1);  // control clear: no change
    CHECK(std::abs(basis.amplitude("01") - Complex{1.0, 0.0}) < 1e-15);
    basis = StateVector::basis_state(2, "10");
    basis.apply_cnot(0, 1);  // control set: target toggles
    CHECK(std::abs(basis.amplitude("11") - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("gate argument validation") {
    StateVector sv(2);
    CHECK_THROWS_AS(sv.apply_hadamard(2), input_error);
    CHECK_THROWS_AS(sv.apply_x(-1), input_error);
    CHECK_THROWS_AS(sv.apply_cnot(0, 0), input_error);
}

TEST_CASE("bell preparation yields the phi-minus pair") {
    StateVector sv(2);
    sv.prepare_bell_phi_minus(0, 1);
    const double r = std::sqrt(0.5);
    CHECK(std::abs(sv.amplitude("00") - Complex{r, 0.0}) < 1e-15);
    CHECK(std::abs(sv.amplitude("11") - Complex{-r, 0.0}) < 1e-15);
    CHECK(std::abs(sv.amplitude("01")) < 1e-15);
    CHECK(std::abs(sv.amplitude("10")) < 1e-15);
}

TEST_CASE("bell preparation embeds in a larger register and needs |00>") {
    StateVector sv(4);
    sv.prepare_bell_phi_minus(2, 3);
    const double r = std::sqrt(0.5);
    CHECK(std::abs(sv.amplitude("0000") - Complex{r, 0.0}) < 1e-15);
    CHECK(std::abs(sv.amplitude("0011") - Complex{-r, 0.0}) < 1e-15);

    StateVector busy = StateVector::basis_state(2, "10");
    CHECK_THROWS_AS(busy.prepare_bell_phi_minus(0, 1), input_error);
}

TEST_CASE("phase sign application composes pointwise and commutes") {
    StateVector sv = random_state(3, 11);
    const std::vector<std::int8_t> s1{1, -1, 1, -1, 1, 1, -1, -1};
    const std::vector<std::int8_t> s2{-1, -1, 1, 1, 1, -1, 1, -1};

    StateVector seq = sv;
    seq.apply_phase_signs(s1);
    seq.apply_phase_signs(s2);

    StateVector swapped = sv;
    swapped.apply_phase_signs(s2);
    swapped.apply_phase_signs(s1);
    CHECK(max_amp_diff(seq, swapped) == 0.0);

    std::vector<std::int8_t> prod(8);
    for (int i = 0; i < 8; ++i) prod[i] = static_cast<std::int8_t>(s1[i] * s2[i]);
    StateVector combined = sv;
    combined.apply_phase_signs(prod);
    CHECK(max_amp_diff(seq, combined) == 0.0);
}

TEST_CASE("phase signs are validated") {
    StateVector sv(2);
    const std::vector<std::int8_t> wrong_len{1, -1};
    CHECK_THROWS_AS(sv.apply_phase_signs(wrong_len), input_error);
    const std::vector<std::int8_t> bad_entry{1, -1, 2, 1};
    CHECK_THROWS_AS(sv.apply_phase_signs(bad_entry), input_error);
}

TEST_CASE("prefix phase signs ignore the trailing qubits") {
    StateVector sv = random_state(4, 13);
    StateVector manual = sv;
    // Signs on the first 2 qubits: index i gets sign s[i >> 2].
    const std::vector<std::int8_t> prefix{1, -1, -1, 1};
    sv.apply_phase_signs_on_prefix(prefix, 2);
    std::vector<std::int8_t> full(16);
    for (int i = 0; i < 16; ++i) full[i] = prefix[i >> 2];
    manual.apply_phase_signs(full);
    CHECK(max_amp_diff(sv, manual) == 0.0);
}

TEST_CASE("probabilities and marginals are normalized and consistent") {
    StateVector sv = random_state(4, 17);
    const auto probs = sv.probabilities();
    double total = 0.0;
    for (const double p : probs) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<int> qs{1, 3};
    const auto marg = sv.marginal_probabilities(qs);
    REQUIRE(marg.size() == 4);
    double mt = 0.0;
    for (const double p : marg) mt += p;
    CHECK(mt == doctest::Approx(1.0).epsilon(1e-12));

    // Recompute the marginal by hand from the full distribution.
    std::vector<double> manual(4, 0.0);
    for (std::uint64_t i = 0; i < 16; ++i) {
        const int b1 = static_cast<int>((i >> 2) & 1);  // qubit 1
        const int b3 = static_cast<int>(i & 1);         // qubit 3
        manual[(b1 << 1) | b3] += probs[i];
    }
    for (int i = 0; i < 4; ++i) CHECK(marg[i] == doctest::Approx(manual[i]).epsilon(1e-12));
}

TEST_CASE("marginal ordering follows the listed qubits") {
    StateVector sv = StateVector::basis_state(2, "10");
    const std::vector<int> fwd{0, 1};
    const std::vector<int> rev{1, 0};
    auto m_fwd = sv.marginal_probabilities(fwd);
    auto m_rev = sv.marginal_probabilities(rev);
    CHECK(m_fwd[2] == doctest::Approx(1.0));  // pattern "10"
    CHECK(m_rev[1] == doctest::Approx(1.0));  // pattern "01"
}

TEST_CASE("measurement collapses the state and renormalizes") {
    StateVector sv(2);
    sv.prepare_bell_phi_minus(0, 1);
    RandomSource rng(21);
    const std::vector<int> first{0};
    const std::string bit = sv.measure_subset(first, rng);
    REQUIRE(bit.size() == 1);
    CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    // Both qubits agree after the collapse; the phase of |11> survives.
    const std::string both = bit + bit;
    double expected_sign = (bit == "1") ? -1.0 : 1.0;
    CHECK(std::abs(sv.amplitude(both) - Complex{expected_sign, 0.0}) < 1e-12);
}

TEST_CASE("measurement frequencies follow the marginal") {
    StateVector base(2);
    base.prepare_bell_phi_minus(0, 1);
    RandomSource rng(31);
    int ones = 0;
    const int samples = 4000;
    const std::vector<int> first{0};
    for (int i = 0; i < samples; ++i) {
        StateVector sv = base;
        if (sv.measure_subset(first, rng) == "1") ++ones;
    }
    // 3-sigma binomial window around 1/2.
    const double sigma = std::sqrt(0.25 * samples);
    CHECK(std::abs(ones - samples / 2.0) < 3.0 * sigma + 1.0);
}

TEST_CASE("measurement streams are reproducible for a fixed seed") {
    std::vector<std::string> first_run;
    std::vector<std::string> second_run;
    for (auto* target : {&first_run, &second_run}) {
        RandomSource rng(77);
        for (int trial = 0; trial < 32; ++trial) {
            StateVector sv = random_state(3, 500 + static_cast<std::uint64_t>(trial));
            const std::vector<int> all{0, 1, 2};
            target->push_back(sv.measure_subset(all, rng));
        }
    }
    CHECK(first_run == second_run);
}

TEST_CASE("kernel gates match the serial reference implementation") {
    const int nq = 9;
    for (int q = 0; q < nq; ++q) {
        const int bit = nq - 1 - q;  // qubit q occupies this index bit
        StateVector sv = random_state(nq, 900 + static_cast<std::uint64_t>(q));
        const std::vector<Complex> raw = sv.amplitudes();

        StateVector h = sv;
        h.apply_hadamard(q);
        auto ref_h = raw;
        ref::apply_hadamard(ref_h, bit);
        for (std::uint64_t i = 0; i < raw.size(); ++i) {
            CHECK(std::abs(h.amplitude(i) - ref_h[i]) < 1e-14);
        }

        StateVector x = sv;
        x.apply_x(q);
        auto ref_x = raw;
        ref::apply_x(ref_x, bit);
        for (std::uint64_t i = 0; i < raw.size(); ++i) {
            CHECK(std::abs(x.amplitude(i) - ref_x[i]) < 1e-14);
        }

        StateVector c = sv;
        const int tgt = (q + 3) % nq;
        c.apply_cnot(q, tgt);
        auto ref_c = raw;
        ref::apply_cnot(ref_c, bit, nq - 1 - tgt);
        for (std::uint64_t i = 0; i < raw.size(); ++i) {
            CHECK(std::abs(c.amplitude(i) - ref_c[i]) < 1e-14);
        }
    }
}

TEST_CASE("prefix phase kernel matches the serial reference") {
    const int nq = 6;
    StateVector sv = random_state(nq, 1234);
    auto raw = sv.amplitudes();

    std::vector<std::int8_t> signs(8);
    RandomSource rng(9);
    for (int i = 0; i < 8; ++i) {
        signs[i] = rng.bernoulli(0.5) ? 1 : -1;
    }
    const std::vector<std::int8_t> ref_signs = signs;
    sv.apply_phase_signs_on_prefix(signs, 3);
    ref::apply_phase_signs(raw, ref_signs, nq - 3);
    for (std::uint64_t i = 0; i < raw.size(); ++i) {
        CHECK(std::abs(sv.amplitude(i) - raw[i]) == 0.0);
    }
}

TEST_CASE("random circuits preserve the norm") {
    StateVector sv = random_state(8, 4242);
    RandomSource rng(55);
    for (int step = 0; step < 200; ++step) {
        const int q = static_cast<int>(rng.uniform_index(8));
        switch (rng.uniform_index(3)) {
            case 0:
                sv.apply_hadamard(q);
                break;
            case 1:
                sv.apply_x(q);
                break;
            default: {
                int t = static_cast<int>(rng.uniform_index(8));
                if (t == q) t = (t + 1) % 8;
                sv.apply_cnot(q, t);
                break;
            }
        }
    }
    CHECK(sv.norm_sq() == doctest::Approx(1.0).epsilon(1e-11));
}

}  // TEST_SUITE
