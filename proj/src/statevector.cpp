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

#include "gdj/statevector.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gdj/bits.hpp"
#include "gdj/errors.hpp"
#include "gdj/kernels.hpp"
#include "gdj/tolerances.hpp"

namespace gdj {

StateVector::StateVector(int num_qubits) : nq_(num_qubits) {
    if (num_qubits < 1) {
        throw input_error("statevector needs at least one qubit");
    }
    if (num_qubits > max_qubits) {
        throw resource_error("statevector capped at " + std::to_string(max_qubits) + " qubits");
    }
    amp_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amp_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::basis_state(int num_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != num_qubits) {
        throw input_error("basis bitstring length must equal the qubit count");
    }
    StateVector sv(num_qubits);
    const std::size_t index = index_of_bits(bits);
    sv.amp_[0] = Complex{0.0, 0.0};
    sv.amp_[index] = Complex{1.0, 0.0};
    return sv;
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Complex> amps) {
    StateVector sv(num_qubits);
    if (amps.size() != sv.dim()) {
        throw input_error("amplitude vector length must be 2^num_qubits");
    }
    sv.amp_ = std::move(amps);
    if (std::abs(sv.norm_sq() - 1.0) > tol::probability) {
        throw input_error("amplitude vector must be normalized");
    }
    return sv;
}

Complex StateVector::amplitude(std::size_t index) const {
    if (index >= amp_.size()) {
        throw input_error("basis index out of range");
    }
    return amp_[index];
}

Complex StateVector::amplitude(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != nq_) {
        throw input_error("basis bitstring length must equal the qubit count");
    }
    return amp_[index_of_bits(bits)];
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= nq_) {
        throw input_error("qubit index out of range");
    }
}

void StateVector::apply_hadamard(int qubit) {
    check_qubit(qubit);
    kernel::apply_hadamard(amp_.data(), amp_.size(), bit_of(qubit));
}

void StateVector::apply_x(int qubit) {
    check_qubit(qubit);
    kernel::apply_x(amp_.data(), amp_.size(), bit_of(qubit));
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw input_error("cnot control and target must differ");
    }
    kernel::apply_cnot(amp_.data(), amp_.size(), bit_of(control), bit_of(target));
}

void StateVector::prepare_bell_phi_minus(int q1, int q2) {
    check_qubit(q1);
    check_qubit(q2);
    if (q1 == q2) {
        throw input_error("bell pair qubits must differ");
    }
    const std::size_t mask = (std::size_t{1} << bit_of(q1)) | (std::size_t{1} << bit_of(q2));
    double mass = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & mask) == 0) {
            mass += std::norm(amp_[i]);
        }
    }
    if (std::abs(mass - 1.0) > tol::probability) {
        throw input_error("bell preparation requires the pair to be in |00>");
    }
    apply_x(q1);
    apply_hadamard(q1);
    apply_cnot(q1, q2);
}

void StateVector::apply_phase_signs(std::span<const std::int8_t> signs) {
    if (signs.size() != amp_.size()) {
        throw input_error("phase sign vector length must equal the state dimension");
    }
    for (std::int8_t s : signs) {
        if (s != 1 && s != -1) {
            throw input_error("phase signs must be +1 or -1");
        }
    }
    kernel::apply_phase_signs(amp_.data(), amp_.size(), signs.data(), 0);
}

void StateVector::apply_phase_signs_on_prefix(std::span<const std::int8_t> signs,
                                              int prefix_qubits) {
    if (prefix_qubits < 1 || prefix_qubits > nq_) {
        throw input_error("phase prefix must cover between 1 and num_qubits qubits");
    }
    if (signs.size() != (std::size_t{1} << prefix_qubits)) {
        throw input_error("phase sign vector length must be 2^prefix_qubits");
    }
    kernel::apply_phase_signs(amp_.data(), amp_.size(), signs.data(), nq_ - prefix_qubits);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        p[i] = std::norm(amp_[i]);
    }
    return p;
}

std::vector<double> StateVector::marginal_probabilities(std::span<const int> qubits) const {
    if (qubits.empty()) {
        throw input_error("marginal needs at least one qubit");
    }
    std::size_t seen = 0;
    for (int q : qubits) {
        check_qubit(q);
        const std::size_t m = std::size_t{1} << q;
        if (seen & m) {
            throw input_error("marginal qubits must be distinct");
        }
        seen |= m;
    }
    std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        std::size_t pattern = 0;
        for (int q : qubits) {
            pattern = (pattern << 1) | ((i >> bit_of(q)) & 1);
        }
        p[pattern] += std::norm(amp_[i]);
    }
    return p;
}

std::string StateVector::measure_subset(std::span<const int> qubits, RandomSource& rng) {
    const std::vector<double> p = marginal_probabilities(qubits);
    const std::size_t pattern = rng.sample_discrete(p);

    std::size_t mask = 0;
    std::size_t value = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const std::size_t bit = std::size_t{1} << bit_of(qubits[k]);
        mask |= bit;
        if ((pattern >> (qubits.size() - 1 - k)) & 1) {
            value |= bit;
        }
    }
    kernel::project_mask(amp_.data(), amp_.size(), mask, value);
    kernel::scale(amp_.data(), amp_.size(), 1.0 / std::sqrt(p[pattern]));
    return bits_of_index(pattern, static_cast<int>(qubits.size()));
}

double StateVector::norm_sq() const {
    double total = 0.0;
    for (const Complex& a : amp_) {
        total += std::norm(a);
    }
    return total;
}

}  // namespace gdj
