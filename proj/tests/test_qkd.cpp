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

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "gdj/errors.hpp"
#include "gdj/qkd.hpp"
#include "gdj/serialize.hpp"

using namespace gdj;

namespace {

QkdConfig base_config(Algorithm protocol) {
    QkdConfig cfg;
    cfg.protocol = protocol;
    cfg.n = 1;
    cfg.d = 400;
    cfg.eta = 0.0;
    cfg.q0 = 0.0;
    cfg.test_fraction = 0.5;
    cfg.seed = 4242;
    return cfg;
}

}  // namespace

TEST_SUITE("qkd") {

TEST_CASE("config validation") {
    QkdConfig cfg = base_config(Algorithm::gdj);
    cfg.protocol = Algorithm::deutsch;
    CHECK_THROWS_AS(cfg.validate(), input_error);
    cfg = base_config(Algorithm::gdj);
    cfg.n = 0;
    CHECK_THROWS_AS(cfg.validate(), input_error);
    cfg = base_config(Algorithm::gdj);
    cfg.n = max_register_n + 1;
    CHECK_THROWS_AS(cfg.validate(), resource_error);
    cfg = base_config(Algorithm::dj);
    cfg.n = 24;
    CHECK_THROWS_AS(cfg.validate(), resource_error);
    cfg = base_config(Algorithm::gdj);
    cfg.eta = 1.5;
    CHECK_THROWS_AS(cfg.validate(), input_error);
    cfg = base_config(Algorithm::gdj);
    cfg.q0 = -0.1;
    CHECK_THROWS_AS(cfg.validate(), input_error);
    cfg = base_config(Algorithm::gdj);
    cfg.test_fraction = 2.0;
    CHECK_THROWS_AS(cfg.validate(), input_error);
    base_config(Algorithm::dj).validate();
    base_config(Algorithm::gdj).validate();
}

TEST_CASE("honest sessions never flag and bank the full key") {
    for (const auto protocol : {Algorithm::dj, Algorithm::gdj}) {
        const QkdConfig cfg = base_config(protocol);
        const QkdTranscript t = run_session(cfg);
        REQUIRE(t.trials.size() == cfg.d);
        CHECK(t.flag_count == 0);
        CHECK_FALSE(t.detected);
        CHECK(t.attacked_count == 0);
        CHECK(t.alpha_measured == 0.0);
        CHECK(t.sample_mean == 0.0);
        for (const QkdTrial& trial : t.trials) {
            CHECK(trial.bob == trial.alice);
            CHECK_FALSE(trial.attacked);
            CHECK_FALSE(trial.flagged);
        }
        const std::uint64_t banked = cfg.d - t.compared_count;
        CHECK(t.raw_key_bits == banked * static_cast<std::uint64_t>(key_rate(protocol)));
        CHECK(t.raw_key_bits_entropy ==
              banked * static_cast<std::uint64_t>(key_rate_entropy(protocol)));
    }
}

TEST_CASE("honest noise alone flags at roughly q0") {
    QkdConfig cfg = base_config(Algorithm::dj);
    cfg.d = 4000;
    cfg.test_fraction = 1.0;
    cfg.q0 = 0.2;
    const QkdTranscript t = run_session(cfg);
    const double sigma = std::sqrt(0.2 * 0.8 / static_cast<double>(t.compared_count));
    CHECK(std::abs(t.sample_mean - 0.2) < 4.0 * sigma);
    // With no attack the midpoint threshold sits at q0 itself.
    CHECK(t.threshold == doctest::Approx(0.2));
}

TEST_CASE("a full intercept-resend attack is caught at the expected rate") {
    for (const auto protocol : {Algorithm::dj, Algorithm::gdj}) {
        QkdConfig cfg = base_config(protocol);
        cfg.d = 6000;
        cfg.eta = 1.0;
        cfg.test_fraction = 1.0;
        const QkdTranscript t = run_session(cfg);
        CHECK(t.attacked_count == cfg.d);
        const double alpha = ideal_alpha(protocol);
        const double sigma = std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(cfg.d));
        // 4-sigma window keeps the unit test far from flakiness; the
        // acceptance gate tightens this to 3 sigma at larger d.
        CHECK(std::abs(t.sample_mean - alpha) < 4.0 * sigma);
        CHECK(t.detected);
        CHECK(t.alpha_measured == doctest::Approx(t.sample_mean));
    }
}

TEST_CASE("partial attacks report the per-intercept catch rate") {
    QkdConfig cfg = base_config(Algorithm::gdj);
    cfg.d = 8000;
    cfg.eta = 0.3;
    cfg.test_fraction = 1.0;
    const QkdTranscript t = run_session(cfg);
    CHECK(t.attacked_count > 0);
    CHECK(t.attacked_count < cfg.d);
    const double sigma =
        std::sqrt(0.75 * 0.25 / static_cast<double>(t.attacked_count));
    CHECK(std::abs(t.alpha_measured - 0.75) < 4.0 * sigma);
}

TEST_CASE("sessions are reproducible for a fixed seed") {
    const QkdConfig cfg = [] {
        QkdConfig c = base_config(Algorithm::gdj);
        c.eta = 0.4;
        c.q0 = 0.05;
        c.d = 600;
        return c;
    }();
    const QkdTranscript a = run_session(cfg);
    const QkdTranscript b = run_session(cfg);
    REQUIRE(a.trials.size() == b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].alice == b.trials[i].alice);
        CHECK(a.trials[i].attacked == b.trials[i].attacked);
        CHECK(a.trials[i].bob == b.trials[i].bob);
        CHECK(a.trials[i].compared == b.trials[i].compared);
        CHECK(a.trials[i].flagged == b.trials[i].flagged);
    }
    CHECK(a.flag_count == b.flag_count);
    CHECK(a.raw_key_bits == b.raw_key_bits);
}

TEST_CASE("analytic detection curve and waypoints") {
    CHECK(detection_probability(0.0, default_k_dj, 0.1) == 0.0);
    // Monotone in d.
    double prev = -1.0;
    for (double d = 0.0; d <= 40000.0; d += 5000.0) {
        const double p = detection_probability(d, default_k_dj, 0.1);
        CHECK(p > prev);
        prev = p;
    }

    // Half- and ninety-percent crossings for the published rate constants.
    CHECK(std::lround(waypoint_dimension(0.5, default_k_dj, 0.1)) == 8664);
    CHECK(std::lround(waypoint_dimension(0.9, default_k_dj, 0.1)) == 28782);
    CHECK(std::lround(waypoint_dimension(0.5, default_k_gdj, 0.1)) == 2773);
    CHECK(std::lround(waypoint_dimension(0.9, default_k_gdj, 0.1)) == 9210);

    // Inverse round trip.
    for (const double target : {0.25, 0.5, 0.9, 0.99}) {
        const double d = waypoint_dimension(target, default_k_gdj, 0.1);
        CHECK(detection_probability(d, default_k_gdj, 0.1) ==
              doctest::Approx(target).epsilon(1e-12));
    }

    CHECK_THROWS_AS(detection_probability(-1.0, default_k_dj, 0.1), input_error);
    CHECK_THROWS_AS(detection_probability(10.0, 0.0, 0.1), input_error);
    CHECK_THROWS_AS(waypoint_dimension(0.0, default_k_dj, 0.1), input_error);
    CHECK_THROWS_AS(waypoint_dimension(1.0, default_k_dj, 0.1), input_error);
    CHECK_THROWS_AS(waypoint_dimension(0.5, default_k_dj, 0.0), input_error);
}

TEST_CASE("key rates and catch rates per protocol") {
    CHECK(key_rate(Algorithm::dj) == 1);
    CHECK(key_rate(Algorithm::gdj) == 3);
    CHECK(key_rate_entropy(Algorithm::dj) == 1);
    CHECK(key_rate_entropy(Algorithm::gdj) == 2);
    CHECK(key_rate(Algorithm::gdj) == 3 * key_rate(Algorithm::dj));
    CHECK(ideal_alpha(Algorithm::dj) == 0.5);
    CHECK(ideal_alpha(Algorithm::gdj) == 0.75);
    CHECK_THROWS_AS(key_rate(Algorithm::gd), input_error);
    CHECK_THROWS_AS(ideal_alpha(Algorithm::deutsch), input_error);
}

TEST_CASE("rate constant from a catch rate") {
    CHECK(rate_constant_from_alpha(0.0) == 0.0);
    CHECK(rate_constant_from_alpha(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(rate_constant_from_alpha(0.75) == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK_THROWS_AS(rate_constant_from_alpha(1.0), input_error);
    CHECK_THROWS_AS(rate_constant_from_alpha(-0.1), input_error);
}

TEST_CASE("chernoff information matches a brute-force scan") {
    const auto brute = [](double q0, double q1) {
        double best = 0.0;
        const int large_grid = 1000000;
        for (int i = 0; i <= large_grid; ++i) {
            const double s = static_cast<double>(i) / large_grid;
            const double v = std::log(std::exp(s * std::log(q0) + (1 - s) * std::log(q1)) +
                                      std::exp(s * std::log1p(-q0) + (1 - s) * std::log1p(-q1)));
            best = std::min(best, v);
        }
        return -best;
    };
    for (const auto& [q0, q1] : std::vector<std::pair<double, double>>{
             {0.05, 0.175}, {0.05, 0.2375}, {0.3, 0.7}, {0.9, 0.1}}) {
        CHECK(chernoff_information(q0, q1) == doctest::Approx(brute(q0, q1)).epsilon(1e-9));
    }
    CHECK(chernoff_information(0.4, 0.4) == 0.0);
    // Symmetry in the two hypotheses.
    CHECK(chernoff_information(0.1, 0.6) ==
          doctest::Approx(chernoff_information(0.6, 0.1)).epsilon(1e-8));
    CHECK_THROWS_AS(chernoff_information(0.0, 0.5), input_error);
    CHECK_THROWS_AS(chernoff_information(0.5, 1.0), input_error);
}

TEST_CASE("miss bound decays exponentially") {
    const double c = 0.04;
    CHECK(chernoff_miss_bound(0, c) == 1.0);
    CHECK(chernoff_miss_bound(50, c) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(chernoff_miss_bound(100, c) < chernoff_miss_bound(50, c));
    CHECK_THROWS_AS(chernoff_miss_bound(-1, c), input_error);
    CHECK_THROWS_AS(chernoff_miss_bound(10, -0.1), input_error);
}

TEST_CASE("analytic curves use the protocol catch rate as exponent") {
    const std::vector<double> ds{0.0, 1000.0, 5000.0};
    const auto dj = detection_curve_analytic(Algorithm::dj, 0.1, ds);
    const auto gdj = detection_curve_analytic(Algorithm::gdj, 0.1, ds);
    REQUIRE(dj.size() == 3);
    CHECK(dj[0] == 0.0);
    CHECK(dj[1] == doctest::Approx(1.0 - std::exp(-0.5 * 0.1 * 1000.0)).epsilon(1e-12));
    CHECK(gdj[2] == doctest::Approx(1.0 - std::exp(-0.75 * 0.1 * 5000.0)).epsilon(1e-12));
    for (std::size_t i = 0; i < ds.size(); ++i) CHECK(gdj[i] >= dj[i]);
}

TEST_CASE("flag-rate statistics need compared trials") {
    QkdConfig cfg = base_config(Algorithm::dj);
    cfg.test_fraction = 0.0;
    const QkdTranscript t = run_session(cfg);
    CHECK(t.compared_count == 0);
    CHECK_FALSE(t.detected);
    CHECK_THROWS_AS(bernoulli_stats(t), input_error);

    QkdConfig cfg2 = base_config(Algorithm::dj);
    cfg2.q0 = 0.3;
    cfg2.d = 2000;
    cfg2.test_fraction = 1.0;
    const QkdTranscript t2 = run_session(cfg2);
    const BernoulliStats stats = bernoulli_stats(t2);
    CHECK(stats.mean == doctest::Approx(t2.sample_mean));
    CHECK(stats.variance ==
          doctest::Approx(stats.mean * (1.0 - stats.mean) / static_cast<double>(t2.compared_count)));
}

TEST_CASE("transcripts serialize to one summary line plus one line per trial") {
    QkdConfig cfg = base_config(Algorithm::gdj);
    cfg.d = 5;
    cfg.eta = 0.5;
    const QkdTranscript t = run_session(cfg);
    std::ostringstream out;
    write_transcript_jsonl(out, t);
    const std::string text = out.str();
    std::size_t lines = 0;
    for (const char ch : text) {
        if (ch == '\n') ++lines;
    }
    CHECK(lines == 6);
    CHECK(text.rfind("{\"record\":\"summary\"", 0) == 0);
    CHECK(text.find("\"record\":\"trial\"") != std::string::npos);
    CHECK(text.find("\"protocol\":\"gdj\"") != std::string::npos);
    CHECK(text.find("\"seed\":4242") != std::string::npos);

    // Byte-identical serialization on a rerun.
    std::ostringstream again;
    write_transcript_jsonl(again, run_session(cfg));
    CHECK(again.str() == text);
}

}  // TEST_SUITE
