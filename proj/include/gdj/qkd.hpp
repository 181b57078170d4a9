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
#include <span>
#include <string>
#include <vector>

#include "gdj/algorithm.hpp"

namespace gdj {

// Phenomenological per-dimension detection-rate constants for the two
// protocols at eta = 0.1 scale.
inline constexpr double default_k_dj = 8e-4;
inline constexpr double default_k_gdj = 2.5e-3;

struct QkdConfig {
    Algorithm protocol = Algorithm::gdj;  // dj or gdj
    int n = 1;
    std::uint64_t d = 1000;     // transmissions in the session
    double eta = 0.0;           // fraction intercepted by the eavesdropper
    double q0 = 0.0;            // honest-noise flag rate
    double test_fraction = 1.0;  // fraction publicly compared
    std::uint64_t seed = 0;

    void validate() const;
};

// One transmission.  Symbols are DjSymbol codes for dj, FunctionClass codes
// for gdj; bob == -1 records a decode error.
struct QkdTrial {
    int alice;
    bool attacked;
    int bob;
    bool compared;
    bool flagged;
};

struct QkdTranscript {
    QkdConfig config;
    std::vector<QkdTrial> trials;
    std::uint64_t compared_count = 0;
    std::uint64_t flag_count = 0;
    std::uint64_t attacked_count = 0;
    std::uint64_t attacked_mismatch_count = 0;
    double sample_mean = 0.0;  // flag rate over compared trials
    double threshold = 0.0;    // midpoint rule (q0 + q1_est) / 2
    bool detected = false;
    double alpha_ideal = 0.0;
    double alpha_measured = 0.0;  // mismatch rate among attacked trials
    std::uint64_t raw_key_bits = 0;
    std::uint64_t raw_key_bits_entropy = 0;
};

// Runs one session: per trial the sender draws a symbol uniformly, prepares
// the protocol state and applies its oracle; with probability eta an
// intercept-resend eavesdropper measures every qubit in the computational
// basis and forwards the collapsed state; the receiver applies the final
// Hadamard layer, measures, decodes, and on compared trials flags any
// mismatch or decode error, plus honest noise at rate q0.  Sessions abort
// (detected = true) when the flag rate exceeds the midpoint threshold
// between q0 and q1_est = q0 + alpha * eta.
QkdTranscript run_session(const QkdConfig& config);

// 1 - exp(-k * d * eta).
double detection_probability(double d, double k, double eta);

// Inverse of detection_probability in d: dimensions needed to reach the
// target detection probability.
double waypoint_dimension(double target, double k, double eta);

// Key bits credited per successful transmission: 1 for dj; 3 for gdj,
// counting the type bit plus both value bits.
int key_rate(Algorithm protocol);
// The entropy accounting, under which gdj carries 2 bits (four classes).
int key_rate_entropy(Algorithm protocol);

// Idealized per-intercept catch rate: 1/2 for dj, 3/4 for gdj.
double ideal_alpha(Algorithm protocol);

// -ln(1 - alpha): per-dimension rate constant implied by a catch rate.
double rate_constant_from_alpha(double alpha);

// Chernoff information of two Bernoulli distributions,
//   C(q0, q1) = -min_{s in [0,1]} log(q0^s q1^(1-s) + (1-q0)^s (1-q1)^(1-s)),
// minimized on a 1e-3 grid refined by ternary search to 1e-9.
double chernoff_information(double q0, double q1);

// exp(-c * m): bound on the miss probability after m intercepted trials.
double chernoff_miss_bound(double m, double c);

// 1 - exp(-alpha * eta * d) with the protocol's idealized alpha.
std::vector<double> detection_curve_analytic(Algorithm protocol, double eta,
                                             std::span<const double> d_values);

struct BernoulliStats {
    double mean;
    double variance;
};

// Flag-rate mean and q(1-q)/m variance over the compared trials.
BernoulliStats bernoulli_stats(const QkdTranscript& transcript);

}  // namespace gdj
