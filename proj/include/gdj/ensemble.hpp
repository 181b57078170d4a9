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

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdj/algorithm.hpp"
#include "gdj/rng.hpp"
#include "gdj/statevector.hpp"

namespace gdj {

// One threshold classifier: fires positive when theta . x - phi >= 0, with
// the boundary counted as positive.
struct ClassifierSpec {
    std::vector<double> theta;
    double phi = 0.0;
    double weight = 1.0;
};

int heaviside_classify(const ClassifierSpec& spec, std::span<const int> x);

// An ensemble over a d-dimensional binary feature space.  Weights are
// normalized to sum to 1 at construction.
class EnsembleConfig {
  public:
    EnsembleConfig(std::vector<ClassifierSpec> classifiers, int feature_dim);

    const std::vector<ClassifierSpec>& classifiers() const { return classifiers_; }
    int feature_dim() const { return feature_dim_; }
    // ceil(log2(feature_dim)): index qubits needed to address the features.
    int register_qubits() const { return register_qubits_; }

  private:
    std::vector<ClassifierSpec> classifiers_;
    int feature_dim_;
    int register_qubits_;
};

// Uniform superposition over 2^n basis states.
StateVector encode_feature_superposition(int n);

// Ensemble weight landing on each value pair (bx, by) where bx and by are a
// classifier's votes on the two inputs.
struct ClassProbabilities {
    std::array<double, 4> p{};

    static std::size_t index_of(int bx, int by);
    static std::string_view label(std::size_t index);  // "00", "01", "10", "11"
    std::map<std::string, double> as_map() const;
};

ClassProbabilities class_probabilities(const EnsembleConfig& config, std::span<const int> x,
                                       std::span<const int> y);

// Argmax vote with uniform random tie-breaking among maximal entries.
std::string decide(const std::map<std::string, double>& probs, RandomSource& rng);

// (1/sqrt(B)) sum_j |j>|vote_j> over B voters; index register first, vote
// qubit last.
StateVector toy_majority_state(std::span<const int> votes);

// Marginal probability that the vote qubit of a toy majority state reads 1.
double positive_vote_probability(const StateVector& state);

// Analytic accuracy-degradation models: 1 - beta*eta for the single-register
// baseline, 1 - gamma*eta^2 for the two-register algorithm, clamped to [0, 1].
inline constexpr double default_noise_beta = 0.8;
inline constexpr double default_noise_gamma = 0.3;

double noise_accuracy(Algorithm alg, double eta, double beta = default_noise_beta,
                      double gamma = default_noise_gamma);

// Empirical accuracy under measurement noise: each measured bit is
// randomized with probability eta (so it flips with probability eta/2).
// The dj baseline decodes with its all-zeros test; gdj decodes each register
// by majority vote, the error-tolerant reading of its all-equal patterns.
// Noiseless patterns come from one exact circuit run per symbol.
double monte_carlo_noise_accuracy(Algorithm alg, int n, double eta, int trials,
                                  RandomSource& rng);

// Bits learned per run: 1 for dj, 1 + log2(n) for gdj.
double information_gain(Algorithm alg, int n);

// Resource model: dj uses n+1 qubits and c1*n gates, gdj 2n+1 qubits and
// c2*n^2 gates.  c1 and c2 are the per-n gate slopes counted off the
// reference circuits, whose exact totals reference_gate_count reports.
struct ResourceCounts {
    long long qubits;
    long long gates;
};

inline constexpr int dja_gate_slope = 4;    // baseline circuit counts 4n + 2 gates
inline constexpr int gdja_gate_slope = 13;  // two-register circuit counts 13n + 3 gates

ResourceCounts resource_counts(Algorithm alg, int n);
long long reference_gate_count(Algorithm alg, int n);

// C * rho / (sigma^3 * sqrt(n)).
inline constexpr double default_berry_esseen_c = 0.4748;

double berry_esseen_bound(double n, double sigma, double rho,
                          double c = default_berry_esseen_c);

// Standard deviation of noisy-decode accuracy at each dimension: register
// width ceil(log2(dim)), batches of `dim` trials each, sampled `trials`
// times at fixed eta.
inline constexpr double default_stddev_eta = 0.02;

std::vector<double> accuracy_std_vs_dimension(Algorithm alg, std::span<const int> dims,
                                              int trials, double eta, RandomSource& rng);

}  // namespace gdj
