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

#include "gdj/algorithm.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

#include "gdj/bits.hpp"
#include "gdj/errors.hpp"

namespace gdj {

std::string_view algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::deutsch: return "deutsch";
        case Algorithm::gd: return "gd";
        case Algorithm::dj: return "dj";
        case Algorithm::gdj: return "gdj";
    }
    throw input_error("unknown algorithm");
}

namespace {

void check_pattern_chars(std::string_view bits) {
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw input_error("pattern may only contain '0' and '1'");
        }
    }
}

// all '0' -> 0, all '1' -> 1, mixed -> -1.
int uniform_bit(std::string_view bits) {
    check_pattern_chars(bits);
    if (bits.find('1') == std::string_view::npos) return 0;
    if (bits.find('0') == std::string_view::npos) return 1;
    return -1;
}

}  // namespace

std::optional<DecodeResult> try_decode_outcome(std::string_view i_bits, std::string_view j_bits) {
    if (i_bits.empty() || i_bits.size() != j_bits.size()) {
        throw input_error("decode needs two equal-length nonempty patterns");
    }
    const int i_val = uniform_bit(i_bits);
    const int j_val = uniform_bit(j_bits);
    if (i_val < 0 || j_val < 0) {
        return std::nullopt;
    }
    const int a = i_val;
    const int b = 1 - j_val;
    const FunctionClass cls = class_of_values(a, b);
    return DecodeResult{cls, kind_of(cls), a, b};
}

DecodeResult decode_outcome(std::string_view i_bits, std::string_view j_bits, int n) {
    if (static_cast<int>(i_bits.size()) != n || static_cast<int>(j_bits.size()) != n) {
        throw input_error("decode patterns must each have n bits");
    }
    auto result = try_decode_outcome(i_bits, j_bits);
    if (!result) {
        throw decode_error("pattern (" + std::string(i_bits) + ", " + std::string(j_bits) +
                           ") is outside the decode table");
    }
    return *result;
}

std::string expected_i_pattern(FunctionClass cls, int n) {
    return std::string(static_cast<std::size_t>(n), value_x(cls) ? '1' : '0');
}

std::string expected_j_pattern(FunctionClass cls, int n) {
    return std::string(static_cast<std::size_t>(n), value_y(cls) ? '0' : '1');
}

StateVector gdj_transmitted_state(const FunctionSpec& spec) {
    const int n = spec.n();
    StateVector sv(2 * n + 2);
    for (int q = n; q < 2 * n; ++q) {
        sv.apply_x(q);
    }
    sv.prepare_bell_phi_minus(2 * n, 2 * n + 1);
    for (int q = 0; q < 2 * n; ++q) {
        sv.apply_hadamard(q);
    }
    apply_oracle(sv, build_oracle_phase(spec));
    return sv;
}

IndexSample gdj_measure_index(StateVector& sv, int n, RandomSource& rng) {
    for (int q = 0; q < 2 * n; ++q) {
        sv.apply_hadamard(q);
    }
    std::vector<int> index_qubits(static_cast<std::size_t>(2 * n));
    for (int q = 0; q < 2 * n; ++q) {
        index_qubits[static_cast<std::size_t>(q)] = q;
    }
    const std::vector<double> marginal = sv.marginal_probabilities(index_qubits);
    const std::size_t pattern = rng.sample_discrete(marginal);
    const std::string bits = bits_of_index(pattern, 2 * n);
    return IndexSample{bits.substr(0, static_cast<std::size_t>(n)),
                       bits.substr(static_cast<std::size_t>(n)), marginal[pattern]};
}

AlgorithmOutcome run_gdj(const FunctionSpec& spec, RandomSource& rng, bool allow_nonpromise) {
    if (!spec.is_promise() && !allow_nonpromise) {
        throw promise_error("function is outside the promise; pass force to run anyway");
    }
    StateVector sv = gdj_transmitted_state(spec);
    const IndexSample sample = gdj_measure_index(sv, spec.n(), rng);
    const DecodeResult decoded = decode_outcome(sample.i_bits, sample.j_bits, spec.n());
    return AlgorithmOutcome{sample.i_bits, sample.j_bits,     decoded.cls,
                            decoded.kind,  decoded.value_x,   decoded.value_y,
                            sample.probability};
}

AlgorithmOutcome run_gd(const FunctionSpec& spec, RandomSource& rng) {
    if (spec.n() != 1) {
        throw input_error("gd runs on single-bit registers; use gdj for larger n");
    }
    return run_gdj(spec, rng);
}

RunReport run_gdj_report(const FunctionSpec& spec, int shots, RandomSource& rng) {
    if (shots < 0) {
        throw input_error("shot count must be nonnegative");
    }
    RunReport report{spec, run_gdj(spec, rng), std::nullopt, {}};
    if (shots > 0) {
        report.shots = shots;
        StateVector sv = gdj_transmitted_state(spec);
        const int n = spec.n();
        for (int q = 0; q < 2 * n; ++q) {
            sv.apply_hadamard(q);
        }
        std::vector<int> index_qubits(static_cast<std::size_t>(2 * n));
        for (int q = 0; q < 2 * n; ++q) {
            index_qubits[static_cast<std::size_t>(q)] = q;
        }
        const std::vector<double> marginal = sv.marginal_probabilities(index_qubits);
        for (int s = 0; s < shots; ++s) {
            const std::size_t pattern = rng.sample_discrete(marginal);
            ++report.counts[bits_of_index(pattern, 2 * n)];
        }
    }
    return report;
}

std::string_view dj_symbol_name(DjSymbol s) {
    return s == DjSymbol::constant ? "constant" : "balanced";
}

StateVector dj_transmitted_state(int n, DjSymbol symbol) {
    if (n < 1 || n > StateVector::max_qubits - 1) {
        throw input_error("dj register size out of range");
    }
    StateVector sv(n + 1);
    sv.apply_x(n);
    for (int q = 0; q <= n; ++q) {
        sv.apply_hadamard(q);
    }
    if (symbol == DjSymbol::balanced) {
        std::vector<std::int8_t> signs(std::size_t{1} << n);
        for (std::size_t x = 0; x < signs.size(); ++x) {
            signs[x] = parity(x) ? -1 : 1;
        }
        sv.apply_phase_signs_on_prefix(signs, n);
    }
    return sv;
}

DjSample dj_measure_index(StateVector& sv, int n, RandomSource& rng) {
    for (int q = 0; q < n; ++q) {
        sv.apply_hadamard(q);
    }
    std::vector<int> index_qubits(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        index_qubits[static_cast<std::size_t>(q)] = q;
    }
    const std::vector<double> marginal = sv.marginal_probabilities(index_qubits);
    const std::size_t pattern = rng.sample_discrete(marginal);
    return DjSample{bits_of_index(pattern, n), marginal[pattern]};
}

DjSymbol decode_dj_pattern(std::string_view bits) {
    check_pattern_chars(bits);
    if (bits.empty()) {
        throw input_error("dj decode needs a nonempty pattern");
    }
    return bits.find('1') == std::string_view::npos ? DjSymbol::constant : DjSymbol::balanced;
}

std::string dj_expected_pattern(DjSymbol symbol, int n) {
    return std::string(static_cast<std::size_t>(n), symbol == DjSymbol::constant ? '0' : '1');
}

std::uint64_t classical_query_count(Algorithm alg, int n) {
    switch (alg) {
        case Algorithm::deutsch:
            if (n != 1) throw input_error("deutsch is a single-bit problem");
            return 2;
        case Algorithm::gd:
            if (n != 1) throw input_error("gd is a single-bit problem");
            return 3;
        case Algorithm::dj:
            if (n < 1 || n > 63) throw input_error("dj register size out of range");
            return (std::uint64_t{1} << (n - 1)) + 1;
        case Algorithm::gdj:
            if (n < 1 || n > 32) throw input_error("gdj register size out of range");
            return (std::uint64_t{1} << (2 * n - 2)) + 1;
    }
    throw input_error("unknown algorithm");
}

int quantum_query_count(Algorithm alg) {
    switch (alg) {
        case Algorithm::deutsch:
        case Algorithm::dj:
            return 1;
        case Algorithm::gd:
        case Algorithm::gdj:
            return 2;
    }
    throw input_error("unknown algorithm");
}

int circuit_oracle_calls(Algorithm alg) {
    algorithm_name(alg);
    return 1;
}

namespace {

// Adaptive decision-tree game: each query reveals one function value, the
// tree must pin down the label in the worst case.  States are partial
// assignments over the query universe, encoded base-3 for memoization.
struct DecisionProblem {
    int points;
    std::vector<std::vector<std::uint8_t>> answers;  // answers[f][p]
    std::vector<int> labels;                         // labels[f]
};

int minimax_depth(const DecisionProblem& problem) {
    std::vector<int> assignment(static_cast<std::size_t>(problem.points), -1);
    std::unordered_map<std::uint64_t, int> memo;

    auto encode = [&]() {
        std::uint64_t key = 0;
        for (int v : assignment) {
            key = key * 3 + static_cast<std::uint64_t>(v + 1);
        }
        return key;
    };

    auto solve = [&](auto&& self) -> int {
        const std::uint64_t key = encode();
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        std::vector<std::size_t> live;
        for (std::size_t f = 0; f < problem.answers.size(); ++f) {
            bool ok = true;
            for (int p = 0; p < problem.points; ++p) {
                const int want = assignment[static_cast<std::size_t>(p)];
                if (want >= 0 && problem.answers[f][static_cast<std::size_t>(p)] != want) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                live.push_back(f);
            }
        }
        bool uniform = true;
        for (std::size_t f : live) {
            if (problem.labels[f] != problem.labels[live.front()]) {
                uniform = false;
                break;
            }
        }
        int best;
        if (uniform) {
            best = 0;
        } else {
            best = problem.points + 1;
            for (int p = 0; p < problem.points; ++p) {
                if (assignment[static_cast<std::size_t>(p)] >= 0) {
                    continue;
                }
                bool seen[2] = {false, false};
                for (std::size_t f : live) {
                    seen[problem.answers[f][static_cast<std::size_t>(p)]] = true;
                }
                if (!(seen[0] && seen[1])) {
                    continue;  // every live function agrees here; no information
                }
                int worst = 0;
                for (int v = 0; v < 2; ++v) {
                    assignment[static_cast<std::size_t>(p)] = v;
                    worst = std::max(worst, self(self));
                    assignment[static_cast<std::size_t>(p)] = -1;
                }
                best = std::min(best, 1 + worst);
            }
        }
        memo.emplace(key, best);
        return best;
    };
    return solve(solve);
}

DecisionProblem deutsch_problem(bool identify_fully) {
    DecisionProblem problem;
    problem.points = 2;
    for (int f0 = 0; f0 < 2; ++f0) {
        for (int f1 = 0; f1 < 2; ++f1) {
            problem.answers.push_back({static_cast<std::uint8_t>(f0), static_cast<std::uint8_t>(f1)});
            problem.labels.push_back(identify_fully ? (f0 << 1) | f1 : (f0 == f1 ? 0 : 1));
        }
    }
    return problem;
}

DecisionProblem dj_problem(int n) {
    const int points = 1 << n;
    DecisionProblem problem;
    problem.points = points;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << points); ++mask) {
        const int ones = std::popcount(mask);
        const bool constant = ones == 0 || ones == points;
        if (!constant && ones != points / 2) {
            continue;
        }
        std::vector<std::uint8_t> answers(static_cast<std::size_t>(points));
        for (int p = 0; p < points; ++p) {
            answers[static_cast<std::size_t>(p)] = (mask >> p) & 1;
        }
        problem.answers.push_back(std::move(answers));
        problem.labels.push_back(constant ? 0 : 1);
    }
    return problem;
}

// The gdj promise family: four functions, queries address a register and an
// n-bit point (x-side points first).
DecisionProblem gdj_problem(int n) {
    const int points = 2 * (1 << n);
    DecisionProblem problem;
    problem.points = points;
    for (int c = 0; c < num_function_classes; ++c) {
        const auto cls = static_cast<FunctionClass>(c);
        std::vector<std::uint8_t> answers(static_cast<std::size_t>(points));
        for (int p = 0; p < points; ++p) {
            const bool x_side = p < points / 2;
            answers[static_cast<std::size_t>(p)] =
                static_cast<std::uint8_t>(x_side ? value_x(cls) : value_y(cls));
        }
        problem.answers.push_back(std::move(answers));
        problem.labels.push_back(c);
    }
    return problem;
}

}  // namespace

int min_deterministic_queries_bruteforce(Algorithm alg, int n) {
    switch (alg) {
        case Algorithm::deutsch:
            if (n != 1) throw input_error("deutsch is a single-bit problem");
            return minimax_depth(deutsch_problem(false));
        case Algorithm::gd:
            if (n != 1) throw input_error("gd is a single-bit problem");
            return minimax_depth(deutsch_problem(true));
        case Algorithm::dj:
            if (n < 1 || n > 3) throw input_error("brute-force search supports n <= 3");
            return minimax_depth(dj_problem(n));
        case Algorithm::gdj:
            if (n < 1 || n > 3) throw input_error("brute-force search supports n <= 3");
            return minimax_depth(gdj_problem(n));
    }
    throw input_error("unknown algorithm");
}

}  // namespace gdj
