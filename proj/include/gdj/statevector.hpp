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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdj/rng.hpp"

namespace gdj {

using Complex = std::complex<double>;

// Dense statevector over 2^num_qubits amplitudes.  Qubit 0 is the most
// significant bit of the basis index (see bits.hpp).  Gates mutate in place
// through the kernels in gdj::kernel; a single writer at a time, no internal
// locking.  Global phase is physical here and never normalized away.
class StateVector {
  public:
    static constexpr int max_qubits = 24;

    // |0...0> on num_qubits qubits.
    explicit StateVector(int num_qubits);

    static StateVector basis_state(int num_qubits, std::string_view bits);

    // Takes ownership of a prepared amplitude vector; it must already be
    // normalized.  Used for states assembled directly from coefficients.
    static StateVector from_amplitudes(int num_qubits, std::vector<Complex> amps);

    int num_qubits() const { return nq_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<Complex>& amplitudes() const { return amp_; }
    std::vector<Complex>& mutable_amplitudes() { return amp_; }

    Complex amplitude(std::size_t index) const;
    Complex amplitude(std::string_view bits) const;

    void apply_hadamard(int qubit);
    void apply_x(int qubit);
    void apply_cnot(int control, int target);

    // X q1; H q1; CNOT q1->q2 on a pair currently in |00>, leaving it in
    // (|00> - |11>)/sqrt(2).
    void prepare_bell_phi_minus(int q1, int q2);

    // Multiplies amplitude i by signs[i]; signs must hold +1/-1 and cover the
    // full state.
    void apply_phase_signs(std::span<const std::int8_t> signs);

    // Multiplies amplitude i by signs[i >> (num_qubits - prefix_qubits)],
    // i.e. a sign vector indexed by the first prefix_qubits qubits.
    void apply_phase_signs_on_prefix(std::span<const std::int8_t> signs, int prefix_qubits);

    std::vector<double> probabilities() const;

    // Distribution over the listed qubits; pattern bit order follows the
    // order of `qubits`, first listed qubit most significant.
    std::vector<double> marginal_probabilities(std::span<const int> qubits) const;

    // Samples a pattern for the listed qubits from the exact marginal and
    // collapses the state onto it.  Returns the pattern as a bitstring.
    std::string measure_subset(std::span<const int> qubits, RandomSource& rng);

    double norm_sq() const;

  private:
    int bit_of(int qubit) const { return nq_ - 1 - qubit; }
    void check_qubit(int qubit) const;

    int nq_;
    std::vector<Complex> amp_;
};

}  // namespace gdj
