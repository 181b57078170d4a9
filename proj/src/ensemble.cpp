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

#include "gdj/ensemble.hpp"

#include <cmath>
#include <cstdint>

#include "gdj/errors.hpp"
#include "gdj/tolerances.hpp"

namespace gdj {

namespace {

int ceil_log2(int value) {
    int bits = 0;
    while ((1 << bits) < value) {
        ++bits;
    }
    return bits;
}

void check_binary(std::span<const int> x, const char* what) {
    for (int v : x) {
        if (v != 0 && v != 1) {
            throw input_error(std::string(what) + " entries must be bits");
        }
    }
}

void check_dj_or_gdj(Algorithm alg) {
    if (alg != Algorithm::dj && alg != Algorithm::gdj) {
        throw input_error("expected dj or gdj");
    }
}

}  // namespace

int heaviside_classify(const ClassifierSpec& spec, std::span<const int> x) {
    if (spec.theta.size() != x.size()) {
        throw input_error("classifier dimension must match the feature vector");
    }
    check_binary(x, "feature");
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += spec.theta[i] * static_cast<double>(x[i]);
    }
    return dot - spec.phi >= 0.0 ? 1 : 0;
}

EnsembleConfig::EnsembleConfig(std::vector<ClassifierSpec> classifiers, int feature_dim)
    : classifiers_(std::move(classifiers)), feature_dim_(feature_dim) {
    if (classifiers_.empty()) {
        throw input_error("ensemble needs at least one classifier");
    }
    if (feature_dim_ < 1) {
        throw input_error("feature dimension must be at least 1");
    }
    double total = 0.0;
    for (const ClassifierSpec& c : classifiers_) {
        if (c.weight < 0.0) {
            throw input_error("classifier weights must be nonnegative");
        }
        if (c.theta.size() != static_cast<std::size_t>(feature_dim_)) {
            throw input_error("classifier dimension must match the feature dimension");
        }
        total += c.weight;
    }
    if (total <= 0.0) {
        throw input_error("classifier weights must sum to a positive value");
    }
    for (ClassifierSpec& c : classifiers_) {
        c.weight /= total;
    }
    register_qubits_ = ceil_log2(feature_dim_);
}

StateVector encode_feature_superposition(int n) {
    if (n < 1) {
        throw input_error("feature register needs at least one qubit");
    }
    StateVector sv(n);
    for (int q = 0; q < n; ++q) {
        sv.apply_hadamard(q);
    }
    return sv;
}

std::size_t ClassProbabilities::index_of(int bx, int by) {
    if ((bx != 0 && bx != 1) || (by != 0 && by != 1)) {
        throw input_error("class bits must be 0 or 1");
    }
    return static_cast<std::size_t>((bx << 1) | by);
}

std::string_view ClassProbabilities::label(std::size_t index) {
    static constexpr std::string_view labels[4] = {"00", "01", "10", "11"};
    if (index >= 4) {
        throw input_error("class index out of range");
    }
    return labels[index];
}

std::map<std::string, double> ClassProbabilities::as_map() const {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[std::string(label(i))] = p[i];
    }
    return out;
}

ClassProbabilities class_probabilities(const EnsembleConfig& config, std::span<const int> x,
                                       std::span<const int> y) {
    if (x.size() != static_cast<std::size_t>(config.feature_dim()) || x.size() != y.size()) {
        throw input_error("inputs must match the ensemble's feature dimension");
    }
    double total = 0.0;
    for (const ClassifierSpec& c : config.classifiers()) {
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw input_error("classifier weights must be normalized");
    }
    ClassProbabilities probs;
    for (const ClassifierSpec& c : config.classifiers()) {
        const int bx = heaviside_classify(c, x);
        const int by = heaviside_classify(c, y);
        probs.p[ClassProbabilities::index_of(bx, by)] += c.weight;
    }
    return probs;
}

std::string decide(const std::map<std::string, double>& probs, RandomSource& rng) {
    if (probs.empty()) {
        throw input_error("decide needs at least one class");
    }
    double best = -1.0;
    for (const auto& [label, p] : probs) {
        if (p > best) {
            best = p;
        }
    }
    std::vector<const std::string*> winners;
    for (const auto& [label, p] : probs) {
        if (p >= best - 1e-12) {
            winners.push_back(&label);
        }
    }
    return *winners[rng.uniform_index(winners.size())];
}

StateVector toy_majority_state(std::span<const int> votes) {
    if (votes.empty()) {
        throw input_error("majority state needs at least one vote");
    }
    check_binary(votes, "vote");
    const int index_qubits = ceil_log2(static_cast<int>(votes.size()));
    const int nq = index_qubits + 1;
    std::vector<Complex> amps(std::size_t{1} << nq, Complex{0.0, 0.0});
    const double coeff = 1.0 / std::sqrt(static_cast<double>(votes.size()));
    for (std::size_t j = 0; j < votes.size(); ++j) {
        amps[(j << 1) | static_cast<std::size_t>(votes[j])] = Complex{coeff, 0.0};
    }
    return StateVector::from_amplitudes(nq, std::move(amps));
}

double positive_vote_probability(const StateVector& state) {
    const int vote_qubit = state.num_qubits() - 1;
    const int qubits[1] = {vote_qubit};
    return state.marginal_probabilities(qubits)[1];
}

double noise_accuracy(Algorithm alg, double eta, double beta, double gamma) {
    check_dj_or_gdj(alg);
    if (eta < 0.0 || eta > 1.0) {
        throw input_error("noise level must be in [0, 1]");
    }
    if (beta < 0.0 || gamma < 0.0 || gamma >= beta) {
        throw input_error("noise model requires 0 <= gamma < beta");
    }
    const double a = alg == Algorithm::dj ? 1.0 - beta * eta : 1.0 - gamma * eta * eta;
    return a < 0.0 ? 0.0 : (a > 1.0 ? 1.0 : a);
}

namespace {

// Noiseless measurement patterns, taken from one exact circuit run per
// symbol rather than assumed.
std::vector<std::string> noiseless_patterns(Algorithm alg, int n, const RandomSource& rng) {
    std::vector<std::string> patterns;
    if (alg == Algorithm::dj) {
        for (int s = 0; s < 2; ++s) {
            RandomSource r = rng.child(0x9d0f00d0ULL + static_cast<std::uint64_t>(s));
            StateVector sv = dj_transmitted_state(n, static_cast<DjSymbol>(s));
            patterns.push_back(dj_measure_index(sv, n, r).bits);
        }
    } else {
        for (int c = 0; c < num_function_classes; ++c) {
            RandomSource r = rng.child(0x9d0f00d0ULL + static_cast<std::uint64_t>(c));
            StateVector sv = gdj_transmitted_state(FunctionSpec::make(static_cast<FunctionClass>(c), n));
            const IndexSample s = gdj_measure_index(sv, n, r);
            patterns.push_back(s.i_bits + s.j_bits);
        }
    }
    return patterns;
}

// Majority bit of a pattern slice; ties resolved by a coin flip.
int majority_bit(std::string_view bits, RandomSource& rng) {
    int ones = 0;
    for (char c : bits) {
        ones += c == '1';
    }
    const int n = static_cast<int>(bits.size());
    if (2 * ones == n) {
        return static_cast<int>(rng.uniform_index(2));
    }
    return 2 * ones > n ? 1 : 0;
}

long long noisy_decode_correct_count(Algorithm alg, int n, double eta, long long trials,
                                     const RandomSource& base,
                                     const std::vector<std::string>& patterns) {
    const double flip = eta * 0.5;
    long long correct = 0;
#pragma omp parallel for schedule(static) reduction(+ : correct)
    for (long long t = 0; t < trials; ++t) {
        RandomSource r = base.child(static_cast<std::uint64_t>(t));
        if (alg == Algorithm::dj) {
            const auto symbol = static_cast<DjSymbol>(r.uniform_index(2));
            std::string bits = patterns[static_cast<std::size_t>(symbol)];
            for (char& c : bits) {
                if (r.bernoulli(flip)) {
                    c = c == '0' ? '1' : '0';
                }
            }
            correct += decode_dj_pattern(bits) == symbol;
        } else {
            const auto cls = static_cast<FunctionClass>(r.uniform_index(4));
            std::string bits = patterns[static_cast<std::size_t>(cls)];
            for (char& c : bits) {
                if (r.bernoulli(flip)) {
                    c = c == '0' ? '1' : '0';
                }
            }
            const std::string_view view(bits);
            const int a = majority_bit(view.substr(0, static_cast<std::size_t>(n)), r);
            const int mj = majority_bit(view.substr(static_cast<std::size_t>(n)), r);
            correct += class_of_values(a, 1 - mj) == cls;
        }
    }
    return correct;
}

}  // namespace

double monte_carlo_noise_accuracy(Algorithm alg, int n, double eta, int trials,
                                  RandomSource& rng) {
    check_dj_or_gdj(alg);
    if (n < 1) {
        throw input_error("register size must be at least 1");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw input_error("noise level must be in [0, 1]");
    }
    if (trials < 1) {
        throw input_error("trial count must be positive");
    }
    const std::vector<std::string> patterns = noiseless_patterns(alg, n, rng);
    const long long correct = noisy_decode_correct_count(alg, n, eta, trials, rng, patterns);
    return static_cast<double>(correct) / static_cast<double>(trials);
}

double information_gain(Algorithm alg, int n) {
    check_dj_or_gdj(alg);
    if (n < 1) {
        throw input_error("register size must be at least 1");
    }
    return alg == Algorithm::dj ? 1.0 : 1.0 + std::log2(static_cast<double>(n));
}

ResourceCounts resource_counts(Algorithm alg, int n) {
    check_dj_or_gdj(alg);
    if (n < 1) {
        throw input_error("register size must be at least 1");
    }
    const long long nn = n;
    if (alg == Algorithm::dj) {
        return ResourceCounts{nn + 1, dja_gate_slope * nn};
    }
    return ResourceCounts{2 * nn + 1, gdja_gate_slope * nn * nn};
}

long long reference_gate_count(Algorithm alg, int n) {
    check_dj_or_gdj(alg);
    if (n < 1) {
        throw input_error("register size must be at least 1");
    }
    const long long nn = n;
    if (alg == Algorithm::dj) {
        // ancilla X, Hadamards on n+1, parity-oracle CNOTs, Hadamards on n,
        // n measurements
        return 1 + (nn + 1) + nn + nn + nn;
    }
    const long long oracle =
        n <= max_register_n
            ? static_cast<long long>(
                  build_marking_oracle(FunctionSpec::make(FunctionClass::constant11, n)).size())
            : 6 * nn;
    // y-register X layer, Bell preparation, two Hadamard layers, oracle,
    // 2n measurements
    return nn + 3 + 2 * nn + oracle + 2 * nn + 2 * nn;
}

double berry_esseen_bound(double n, double sigma, double rho, double c) {
    if (n < 1.0) {
        throw input_error("sample count must be at least 1");
    }
    if (sigma <= 0.0 || rho <= 0.0 || c <= 0.0) {
        throw input_error("berry-esseen parameters must be positive");
    }
    return c * rho / (sigma * sigma * sigma * std::sqrt(n));
}

std::vector<double> accuracy_std_vs_dimension(Algorithm alg, std::span<const int> dims,
                                              int trials, double eta, RandomSource& rng) {
    check_dj_or_gdj(alg);
    if (dims.empty()) {
        throw input_error("dimension list must be nonempty");
    }
    if (trials < 2) {
        throw input_error("standard deviation needs at least two batches");
    }
    if (eta < 0.0 || eta > 1.0) {
        throw input_error("noise level must be in [0, 1]");
    }
    std::vector<double> out;
    out.reserve(dims.size());
    for (std::size_t di = 0; di < dims.size(); ++di) {
        const int dim = dims[di];
        if (dim < 1) {
            throw input_error("dimensions must be at least 1");
        }
        int n = 0;
        while ((1 << n) < dim) {
            ++n;
        }
        if (n < 1) {
            n = 1;
        }
        const RandomSource base = rng.child((static_cast<std::uint64_t>(di) << 32) | 0xa5a5ULL);
        const std::vector<std::string> patterns = noiseless_patterns(alg, n, base);
        std::vector<double> accuracy(static_cast<std::size_t>(trials));
        for (int b = 0; b < trials; ++b) {
            const long long ok = noisy_decode_correct_count(
                alg, n, eta, dim, base.child(static_cast<std::uint64_t>(b)), patterns);
            accuracy[static_cast<std::size_t>(b)] =
                static_cast<double>(ok) / static_cast<double>(dim);
        }
        double mean = 0.0;
        for (double a : accuracy) {
            mean += a;
        }
        mean /= static_cast<double>(trials);
        double var = 0.0;
        for (double a : accuracy) {
            var += (a - mean) * (a - mean);
        }
        var /= static_cast<double>(trials - 1);
        out.push_back(std::sqrt(var));
    }
    return out;
}

}  // namespace gdj
