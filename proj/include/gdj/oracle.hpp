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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gdj/statevector.hpp"

namespace gdj {

// The four promise classes, named by the value pair (a, b) where a is the
// function value read off the x register and b the value read off the y
// register.  For n = 1 these are the four one-bit functions with
// a = f(0), b = f(1); for n > 1 each register's restriction is the constant
// a or b.
enum class FunctionClass : int {
    constant00 = 0,
    constant11 = 1,
    balanced01 = 2,
    balanced10 = 3,
};

enum class FunctionKind { constant, balanced };

inline constexpr int num_function_classes = 4;

int value_x(FunctionClass cls);
int value_y(FunctionClass cls);
FunctionKind kind_of(FunctionClass cls);
FunctionClass class_of_values(int a, int b);

std::string_view class_name(FunctionClass cls);
std::string_view kind_name(FunctionKind kind);
std::optional<FunctionClass> class_from_name(std::string_view name);

// Register size bound: 2n + 2 simulated qubits must fit in max_qubits.
inline constexpr int max_register_n = (StateVector::max_qubits - 2) / 2;

// A two-register Boolean function on n-bit inputs, either one of the four
// promise classes or a pair of explicit truth tables for the general case.
class FunctionSpec {
  public:
    static FunctionSpec make(FunctionClass cls, int n);
    static FunctionSpec from_tables(int n, std::vector<std::uint8_t> fx,
                                    std::vector<std::uint8_t> fy);

    int n() const { return n_; }
    bool has_class() const { return cls_.has_value(); }
    FunctionClass cls() const;

    // Truth-table reads; class-based specs answer with the constant a or b.
    int fx(std::size_t x) const;
    int fy(std::size_t y) const;

    // True when both register restrictions are constant.
    bool is_promise() const;

    // The promise class of a spec whose tables satisfy the promise.
    FunctionClass promise_class() const;

  private:
    FunctionSpec() = default;
    int n_ = 1;
    std::optional<FunctionClass> cls_;
    std::vector<std::uint8_t> fx_;
    std::vector<std::uint8_t> fy_;
};

bool is_valid_promise(std::span<const std::uint8_t> fx, std::span<const std::uint8_t> fy);

// Diagonal +/-1 oracle over the 2n index qubits:
//   signs[(x, y)] = (-1)^(parity(~x) * fx(x) + parity(y) * fy(y))
// where ~x is the n-bit complement and the index interleaves as (x << n) | y.
struct OraclePhase {
    int num_index_qubits;
    std::vector<std::int8_t> signs;
};

OraclePhase build_oracle_phase(const FunctionSpec& spec);

// Gate-list form of the oracle for promise specs, acting on the 2n index
// qubits plus the two-qubit ancilla at positions 2n and 2n+1.  On any index
// basis state tensored with (|00> - |11>)/sqrt(2) its action equals the
// phase oracle exactly, including global phase: a CNOT pair from one control
// into both halves of the ancilla flips its sign when the control is set,
// and X conjugation moves the control to the complemented bit.
struct Gate {
    enum class Kind { x, cnot };
    Kind kind;
    int target;
    int control = -1;
};

std::vector<Gate> build_marking_oracle(const FunctionSpec& spec);

// Applies the phase oracle to a state whose first num_index_qubits qubits
// form the index register.
void apply_oracle(StateVector& sv, const OraclePhase& oracle);

void apply_gates(StateVector& sv, std::span<const Gate> gates);

}  // namespace gdj
