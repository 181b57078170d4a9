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

#include "gdj/oracle.hpp"

#include <string>

#include "gdj/bits.hpp"
#include "gdj/errors.hpp"

namespace gdj {

int value_x(FunctionClass cls) {
    return (cls == FunctionClass::constant11 || cls == FunctionClass::balanced10) ? 1 : 0;
}

int value_y(FunctionClass cls) {
    return (cls == FunctionClass::constant11 || cls == FunctionClass::balanced01) ? 1 : 0;
}

FunctionKind kind_of(FunctionClass cls) {
    return value_x(cls) == value_y(cls) ? FunctionKind::constant : FunctionKind::balanced;
}

FunctionClass class_of_values(int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
        throw input_error("function values must be bits");
    }
    if (a == 0 && b == 0) return FunctionClass::constant00;
    if (a == 1 && b == 1) return FunctionClass::constant11;
    if (a == 0 && b == 1) return FunctionClass::balanced01;
    return FunctionClass::balanced10;
}

std::string_view class_name(FunctionClass cls) {
    switch (cls) {
        case FunctionClass::constant00: return "constant00";
        case FunctionClass::constant11: return "constant11";
        case FunctionClass::balanced01: return "balanced01";
        case FunctionClass::balanced10: return "balanced10";
    }
    throw input_error("unknown function class");
}

std::string_view kind_name(FunctionKind kind) {
    return kind == FunctionKind::constant ? "constant" : "balanced";
}

std::optional<FunctionClass> class_from_name(std::string_view name) {
    if (name == "constant00") return FunctionClass::constant00;
    if (name == "constant11") return FunctionClass::constant11;
    if (name == "balanced01") return FunctionClass::balanced01;
    if (name == "balanced10") return FunctionClass::balanced10;
    return std::nullopt;
}

namespace {

void check_register_size(int n) {
    if (n < 1) {
        throw input_error("register size must be at least 1");
    }
    if (n > max_register_n) {
        throw resource_error("register size capped at " + std::to_string(max_register_n) +
                             " (2n + 2 qubits must fit the simulator)");
    }
}

}  // namespace

FunctionSpec FunctionSpec::make(FunctionClass cls, int n) {
    check_register_size(n);
    FunctionSpec spec;
    spec.n_ = n;
    spec.cls_ = cls;
    return spec;
}

FunctionSpec FunctionSpec::from_tables(int n, std::vector<std::uint8_t> fx,
                                       std::vector<std::uint8_t> fy) {
    check_register_size(n);
    const std::size_t points = std::size_t{1} << n;
    if (fx.size() != points || fy.size() != points) {
        throw input_error("truth tables must have 2^n entries");
    }
    for (std::size_t i = 0; i < points; ++i) {
        if (fx[i] > 1 || fy[i] > 1) {
            throw input_error("truth table entries must be bits");
        }
    }
    FunctionSpec spec;
    spec.n_ = n;
    spec.fx_ = std::move(fx);
    spec.fy_ = std::move(fy);
    if (spec.is_promise()) {
        spec.cls_ = class_of_values(spec.fx_[0], spec.fy_[0]);
    }
    return spec;
}

FunctionClass FunctionSpec::cls() const {
    if (!cls_) {
        throw promise_error("function is outside the four promise classes");
    }
    return *cls_;
}

int FunctionSpec::fx(std::size_t x) const {
    if (x >= (std::size_t{1} << n_)) {
        throw input_error("function input out of range");
    }
    return fx_.empty() ? value_x(*cls_) : fx_[x];
}

int FunctionSpec::fy(std::size_t y) const {
    if (y >= (std::size_t{1} << n_)) {
        throw input_error("function input out of range");
    }
    return fy_.empty() ? value_y(*cls_) : fy_[y];
}

bool FunctionSpec::is_promise() const {
    if (cls_) {
        return true;
    }
    return is_valid_promise(fx_, fy_);
}

FunctionClass FunctionSpec::promise_class() const { return cls(); }

bool is_valid_promise(std::span<const std::uint8_t> fx, std::span<const std::uint8_t> fy) {
    if (fx.empty() || fy.empty() || fx.size() != fy.size()) {
        throw input_error("promise check needs two equal-size nonempty tables");
    }
    for (std::uint8_t v : fx) {
        if (v != fx[0]) return false;
    }
    for (std::uint8_t v : fy) {
        if (v != fy[0]) return false;
    }
    return true;
}

OraclePhase build_oracle_phase(const FunctionSpec& spec) {
    const int n = spec.n();
    const std::size_t points = std::size_t{1} << n;
    OraclePhase oracle;
    oracle.num_index_qubits = 2 * n;
    oracle.signs.resize(points * points);
    for (std::size_t x = 0; x < points; ++x) {
        const int term_x = parity_complement(x, n) * spec.fx(x);
        for (std::size_t y = 0; y < points; ++y) {
            const int term_y = parity(y) * spec.fy(y);
            oracle.signs[(x << n) | y] = ((term_x + term_y) & 1) ? -1 : 1;
        }
    }
    return oracle;
}

std::vector<Gate> build_marking_oracle(const FunctionSpec& spec) {
    if (!spec.is_promise()) {
        throw promise_error("marking oracle is defined for the promise classes only");
    }
    const int n = spec.n();
    const FunctionClass cls = spec.has_class() ? spec.cls() : spec.promise_class();
    const int anc1 = 2 * n;
    const int anc2 = 2 * n + 1;
    std::vector<Gate> gates;
    if (value_x(cls) == 1) {
        for (int k = 0; k < n; ++k) {
            gates.push_back({Gate::Kind::x, k});
            gates.push_back({Gate::Kind::cnot, anc1, k});
            gates.push_back({Gate::Kind::cnot, anc2, k});
            gates.push_back({Gate::Kind::x, k});
        }
    }
    if (value_y(cls) == 1) {
        for (int k = n; k < 2 * n; ++k) {
            gates.push_back({Gate::Kind::cnot, anc1, k});
            gates.push_back({Gate::Kind::cnot, anc2, k});
        }
    }
    return gates;
}

void apply_oracle(StateVector& sv, const OraclePhase& oracle) {
    if (oracle.num_index_qubits > sv.num_qubits()) {
        throw input_error("oracle index register exceeds the state size");
    }
    sv.apply_phase_signs_on_prefix(oracle.signs, oracle.num_index_qubits);
}

void apply_gates(StateVector& sv, std::span<const Gate> gates) {
    for (const Gate& g : gates) {
        switch (g.kind) {
            case Gate::Kind::x:
                sv.apply_x(g.target);
                break;
            case Gate::Kind::cnot:
                sv.apply_cnot(g.control, g.target);
                break;
        }
    }
}

}  // namespace gdj
