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

#include "gdj/qkd.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "gdj/errors.hpp"
#include "gdj/oracle.hpp"
#include "gdj/statevector.hpp"

namespace gdj {

namespace {

// Transcript records are kept per trial, so cap session length where the
// record vector stays comfortably in memory.
constexpr std::uint64_t max_session_trials = 10'000'000;

void measure_every_qubit(StateVector& sv, RandomSource& rng) {
    std::vector<int> all(static_cast<std::size_t>(sv.num_qubits()));
    std::iota(all.begin(), all.end(), 0);
    sv.measure_subset(all, rng);
}

// One transmission with its own random stream.  The eavesdropper model is
// intercept-resend: a computational-basis measurement of every qubit, whose
// collapsed state is what gets forwarded.
QkdTrial run_trial(const QkdConfig& config, RandomSource rng) {
    QkdTrial trial{};
    if (config.protocol == Algorithm::dj) {
        const auto symbol = static_cast<DjSymbol>(rng.uniform_index(2));
        trial.alice = static_cast<int>(symbol);
        StateVector sv = dj_transmitted_state(config.n, symbol);
        trial.attacked = rng.bernoulli(config.eta);
        if (trial.attacked) measure_every_qubit(sv, rng);
        const DjSample sample = dj_measure_index(sv, config.n, rng);
        trial.bob = static_cast<int>(decode_dj_pattern(sample.bits));
    } else {
        const auto cls = static_cast<FunctionClass>(rng.uniform_index(4));
        trial.alice = static_cast<int>(cls);
        StateVector sv = gdj_transmitted_state(FunctionSpec::make(cls, config.n));
        trial.attacked = rng.bernoulli(config.eta);
        if (trial.attacked) measure_every_qubit(sv, rng);
        const IndexSample sample = gdj_measure_index(sv, config.n, rng);
        const auto decoded = try_decode_outcome(sample.i_bits, sample.j_bits);
        trial.bob = decoded ? static_cast<int>(decoded->cls) : -1;
    }
    trial.compared = rng.bernoulli(config.test_fraction);
    const bool mismatch = trial.bob != trial.alice;
    const bool honest_noise = rng.bernoulli(config.q0);
    trial.flagged = trial.compared && (mismatch || honest_noise);
    return trial;
}

void require_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw input_error(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

void QkdConfig::validate() const {
    if (protocol != Algorithm::dj && protocol != Algorithm::gdj) {
        throw input_error("session protocol must be dj or gdj");
    }
    if (n < 1) throw input_error("register size must be at least 1");
    if (protocol == Algorithm::dj) {
        if (n + 1 > StateVector::max_qubits) {
            throw resource_error("dj session needs n + 1 qubits; register too large");
        }
    } else if (n > max_register_n) {
        throw resource_error("gdj session needs 2n + 2 qubits; register too large");
    }
    if (d > max_session_trials) {
        throw resource_error("session length exceeds the per-trial record limit");
    }
    require_unit_interval(eta, "eta");
    require_unit_interval(q0, "q0");
    require_unit_interval(test_fraction, "test_fraction");
}

QkdTranscript run_session(const QkdConfig& config) {
    config.validate();
    QkdTranscript out;
    out.config = config;
    out.alpha_ideal = ideal_alpha(config.protocol);
    out.trials.resize(static_cast<std::size_t>(config.d));

    const RandomSource base(config.seed);
    const auto count = static_cast<std::int64_t>(config.d);
    // child(i) is a pure function of (seed, i), so the transcript is
    // identical for any thread count.
#pragma omp parallel for schedule(static) if (count >= 16)
    for (std::int64_t i = 0; i < count; ++i) {
        out.trials[static_cast<std::size_t>(i)] =
            run_trial(config, base.child(static_cast<std::uint64_t>(i)));
    }

    std::uint64_t key_units = 0;
    for (const QkdTrial& trial : out.trials) {
        out.compared_count += trial.compared ? 1 : 0;
        out.flag_count += trial.flagged ? 1 : 0;
        out.attacked_count += trial.attacked ? 1 : 0;
        if (trial.attacked && trial.bob != trial.alice) ++out.attacked_mismatch_count;
        if (!trial.compared && trial.bob != -1) ++key_units;
    }
    if (out.compared_count > 0) {
        out.sample_mean =
            static_cast<double>(out.flag_count) / static_cast<double>(out.compared_count);
    }
    const double q1_est = config.q0 + out.alpha_ideal * config.eta;
    out.threshold = 0.5 * (config.q0 + q1_est);
    out.detected = out.compared_count > 0 && out.sample_mean > out.threshold;
    out.alpha_measured = out.attacked_count > 0
                             ? static_cast<double>(out.attacked_mismatch_count) /
                                   static_cast<double>(out.attacked_count)
                             : 0.0;
    const auto units = key_units;
    out.raw_key_bits = units * static_cast<std::uint64_t>(key_rate(config.protocol));
    out.raw_key_bits_entropy =
        units * static_cast<std::uint64_t>(key_rate_entropy(config.protocol));
    return out;
}

double detection_probability(double d, double k, double eta) {
    if (!(d >= 0.0)) throw input_error("dimension count must be nonnegative");
    if (!(k > 0.0)) throw input_error("rate constant must be positive");
    require_unit_interval(eta, "eta");
    return -std::expm1(-k * d * eta);
}

double waypoint_dimension(double target, double k, double eta) {
    if (!(target > 0.0 && target < 1.0)) {
        throw input_error("target probability must lie strictly inside (0, 1)");
    }
    if (!(k > 0.0)) throw input_error("rate constant must be positive");
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw input_error("eta must lie in (0, 1] to invert the detection curve");
    }
    return -std::log1p(-target) / (k * eta);
}

int key_rate(Algorithm protocol) {
    switch (protocol) {
        case Algorithm::dj:
            return 1;
        case Algorithm::gdj:
            return 3;
        default:
            throw input_error("key rate is defined for dj and gdj only");
    }
}

int key_rate_entropy(Algorithm protocol) {
    switch (protocol) {
        case Algorithm::dj:
            return 1;
        case Algorithm::gdj:
            return 2;
        default:
            throw input_error("key rate is defined for dj and gdj only");
    }
}

double ideal_alpha(Algorithm protocol) {
    switch (protocol) {
        case Algorithm::dj:
            return 0.5;
        case Algorithm::gdj:
            return 0.75;
        default:
            throw input_error("catch rate is defined for dj and gdj only");
    }
}

double rate_constant_from_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw input_error("catch rate must lie in [0, 1)");
    }
    return -std::log1p(-alpha);
}

double chernoff_information(double q0, double q1) {
    if (!(q0 > 0.0 && q0 < 1.0) || !(q1 > 0.0 && q1 < 1.0)) {
        throw input_error("chernoff information needs rates strictly inside (0, 1)");
    }
    if (q0 == q1) return 0.0;
    const double l0 = std::log(q0);
    const double l1 = std::log(q1);
    const double m0 = std::log1p(-q0);
    const double m1 = std::log1p(-q1);
    const auto log_moment = [&](double s) {
        return std::log(std::exp(s * l0 + (1.0 - s) * l1) +
                        std::exp(s * m0 + (1.0 - s) * m1));
    };

    constexpr int grid = 1000;
    double best_s = 0.0;
    double best_v = log_moment(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double s = static_cast<double>(i) / grid;
        const double v = log_moment(s);
        if (v < best_v) {
            best_v = v;
            best_s = s;
        }
    }
    double lo = std::max(0.0, best_s - 1.0 / grid);
    double hi = std::min(1.0, best_s + 1.0 / grid);
    while (hi - lo > 1e-9) {
        const double m_lo = lo + (hi - lo) / 3.0;
        const double m_hi = hi - (hi - lo) / 3.0;
        if (log_moment(m_lo) <= log_moment(m_hi)) {
            hi = m_hi;
        } else {
            lo = m_lo;
        }
    }
    return std::max(-log_moment(0.5 * (lo + hi)), 0.0);
}

double chernoff_miss_bound(double m, double c) {
    if (!(m >= 0.0)) throw input_error("sample count must be nonnegative");
    if (!(c >= 0.0)) throw input_error("chernoff exponent must be nonnegative");
    return std::exp(-c * m);
}

std::vector<double> detection_curve_analytic(Algorithm protocol, double eta,
                                             std::span<const double> d_values) {
    const double alpha = ideal_alpha(protocol);
    require_unit_interval(eta, "eta");
    std::vector<double> out;
    out.reserve(d_values.size());
    for (const double d : d_values) {
        if (!(d >= 0.0)) throw input_error("dimension count must be nonnegative");
        out.push_back(-std::expm1(-alpha * eta * d));
    }
    return out;
}

BernoulliStats bernoulli_stats(const QkdTranscript& transcript) {
    if (transcript.compared_count == 0) {
        throw input_error("flag-rate statistics need at least one compared trial");
    }
    const double m = static_cast<double>(transcript.compared_count);
    const double mean = static_cast<double>(transcript.flag_count) / m;
    return BernoulliStats{mean, mean * (1.0 - mean) / m};
}

}  // namespace gdj
