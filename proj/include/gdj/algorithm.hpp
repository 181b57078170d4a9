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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gdj/oracle.hpp"
#include "gdj/rng.hpp"
#include "gdj/statevector.hpp"

namespace gdj {

enum class Algorithm { deutsch, gd, dj, gdj };

std::string_view algorithm_name(Algorithm alg);

// Decoded measurement pattern.  The index register lands on an all-zeros or
// all-ones pattern per register: i mirrors the x value a directly, j inverts
// the y value b.
struct DecodeResult {
    FunctionClass cls;
    FunctionKind kind;
    int value_x;
    int value_y;
};

// Returns nothing when (i, j) falls outside the decode table's support,
// which can only happen for n > 1.
std::optional<DecodeResult> try_decode_outcome(std::string_view i_bits, std::string_view j_bits);

// Throwing form; decode_error on out-of-support patterns.
DecodeResult decode_outcome(std::string_view i_bits, std::string_view j_bits, int n);

// Closed-form decode patterns: i = a^n; j = (1-b)^n.
std::string expected_i_pattern(FunctionClass cls, int n);
std::string expected_j_pattern(FunctionClass cls, int n);

struct AlgorithmOutcome {
    std::string i_bits;
    std::string j_bits;
    FunctionClass decoded_class;
    FunctionKind decoded_kind;
    int value_x;
    int value_y;
    // Exact probability of the measured pattern in the final state.
    double pattern_probability;
};

// Full run on 2n + 2 qubits: |0>^n |1>^n (|00> - |11>)/sqrt(2), Hadamards on
// the index registers, oracle, Hadamards again, index measurement, decode.
// Non-promise specs are rejected unless allow_nonpromise is set.
AlgorithmOutcome run_gdj(const FunctionSpec& spec, RandomSource& rng,
                         bool allow_nonpromise = false);

// The n = 1 special case on 4 qubits.
AlgorithmOutcome run_gd(const FunctionSpec& spec, RandomSource& rng);

// Circuit stages, split so a channel action can be inserted between the
// oracle and the receiver's basis change (see qkd.hpp).
StateVector gdj_transmitted_state(const FunctionSpec& spec);
// Applies the final Hadamard layer, then samples the 2n index qubits from
// the exact marginal.  Returns (i, j, pattern probability).
struct IndexSample {
    std::string i_bits;
    std::string j_bits;
    double probability;
};
IndexSample gdj_measure_index(StateVector& sv, int n, RandomSource& rng);

struct RunReport {
    FunctionSpec spec;
    AlgorithmOutcome outcome;
    std::optional<int> shots;
    // Histogram over concatenated i+j patterns, present in shots mode.
    std::map<std::string, int> counts;
};

// shots == 0 selects exact mode (no histogram).
RunReport run_gdj_report(const FunctionSpec& spec, int shots, RandomSource& rng);

// Single-register baseline circuit on n + 1 qubits, used by the ensemble
// noise harness and the QKD DJ mode.  The balanced representative is the
// parity function, whose noiseless measurement pattern is all ones.
enum class DjSymbol : int { constant = 0, balanced = 1 };

std::string_view dj_symbol_name(DjSymbol s);
StateVector dj_transmitted_state(int n, DjSymbol symbol);
struct DjSample {
    std::string bits;
    double probability;
};
DjSample dj_measure_index(StateVector& sv, int n, RandomSource& rng);
// All-zeros reads as constant, anything else as balanced.
DjSymbol decode_dj_pattern(std::string_view bits);
std::string dj_expected_pattern(DjSymbol symbol, int n);

// Worst-case deterministic classical query counts as tabulated for the four
// problems.  deutsch and gd require n = 1.
std::uint64_t classical_query_count(Algorithm alg, int n);

// Worst-case deterministic query count found by exhaustive decision-tree
// search over the problem's admissible function family (n <= 3).
int min_deterministic_queries_bruteforce(Algorithm alg, int n);

// Tabulated quantum query counts.  For gd and gdj this is the effective
// two-evaluation count; the circuit itself invokes the oracle once, which
// circuit_oracle_calls reports.
int quantum_query_count(Algorithm alg);
int circuit_oracle_calls(Algorithm alg);

}  // namespace gdj
