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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdj/algorithm.hpp"
#include "gdj/ensemble.hpp"
#include "gdj/errors.hpp"
#include "gdj/oracle.hpp"
#include "gdj/qkd.hpp"
#include "gdj/serialize.hpp"

namespace {

using namespace gdj;

// Exit codes: 0 success, 2 usage, 3 bad input / broken promise / failed
// decode, 4 resource limit.
constexpr int exit_usage = 2;
constexpr int exit_input = 3;
constexpr int exit_resource = 4;

struct OutputOptions {
    std::string path;  // empty → stdout
    bool force = false;
};

// Buffers the whole document, then writes it in one shot so files never
// appear half-written and reruns can be compared byte for byte.
void deliver(const OutputOptions& out, const std::string& content) {
    if (out.path.empty()) {
        std::cout << content;
        return;
    }
    if (!out.force && std::filesystem::exists(out.path)) {
        throw input_error("output file '" + out.path + "' exists; pass --force to overwrite");
    }
    std::ofstream file(out.path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw input_error("cannot open output file '" + out.path + "'");
    }
    file << content;
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "Write to this file instead of stdout");
    cmd->add_flag("--force", out.force, "Overwrite an existing output file");
}

const std::vector<std::string> class_names_list{"constant00", "constant11", "balanced01",
                                                "balanced10"};

// ---------------------------------------------------------------- run ----

struct RunArgs {
    std::string algorithm;
    std::string class_name;
    int n = 1;
    int shots = 4000;
    std::uint64_t seed = 0;
    std::string format = "text";
    OutputOptions out;
};

std::string render_run_text(const RunArgs& args, const RunReport& report) {
    std::ostringstream os;
    os << "algorithm: " << args.algorithm << "\n";
    os << "class: " << class_name(report.spec.cls()) << "\n";
    os << "n: " << report.spec.n() << "\n";
    os << "seed: " << args.seed << "\n";
    os << "shots: " << (report.shots ? std::to_string(*report.shots) : std::string("exact"))
       << "\n";
    const AlgorithmOutcome& o = report.outcome;
    os << "decoded: " << class_name(o.decoded_class) << " (" << kind_name(o.decoded_kind)
       << ")\n";
    os << "value_x: " << o.value_x << "\n";
    os << "value_y: " << o.value_y << "\n";
    os << "pattern: i=" << o.i_bits << " j=" << o.j_bits << "\n";
    os << "pattern_probability: " << format_double(o.pattern_probability) << "\n";
    if (report.shots) {
        os << "histogram:\n";
        for (const auto& [pattern, count] : report.counts) {
            os << "  " << pattern << ": " << count << "\n";
        }
    }
    return os.str();
}

std::string render_run_csv(const RunArgs& args, const RunReport& report) {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "run");
    csv.metadata("algorithm", args.algorithm);
    csv.metadata("class", class_name(report.spec.cls()));
    csv.metadata("n", static_cast<std::int64_t>(report.spec.n()));
    csv.metadata("shots", static_cast<std::int64_t>(args.shots));
    csv.metadata("seed", args.seed);
    csv.metadata("decoded", class_name(report.outcome.decoded_class));
    csv.row({"pattern", "count"});
    if (report.shots) {
        for (const auto& [pattern, count] : report.counts) {
            csv.row({pattern, CsvWriter::cell(count)});
        }
    } else {
        csv.row({report.outcome.i_bits + report.outcome.j_bits, CsvWriter::cell(1)});
    }
    return os.str();
}

std::string render_run_json(const RunArgs& args, const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["command"] = "run";
    doc["algorithm"] = args.algorithm;
    doc["class"] = std::string(class_name(report.spec.cls()));
    doc["n"] = report.spec.n();
    doc["shots"] = args.shots;
    doc["seed"] = args.seed;
    const AlgorithmOutcome& o = report.outcome;
    doc["outcome"] = {{"decoded_class", std::string(class_name(o.decoded_class))},
                      {"kind", std::string(kind_name(o.decoded_kind))},
                      {"value_x", o.value_x},
                      {"value_y", o.value_y},
                      {"i_bits", o.i_bits},
                      {"j_bits", o.j_bits},
                      {"pattern_probability", round12(o.pattern_probability)}};
    if (report.shots) {
        nlohmann::ordered_json counts = nlohmann::ordered_json::object();
        for (const auto& [pattern, count] : report.counts) counts[pattern] = count;
        doc["counts"] = counts;
    }
    return doc.dump() + "\n";
}

FunctionClass required_class(std::string_view name) {
    const auto cls = class_from_name(name);
    if (!cls) throw input_error("unknown function class: " + std::string(name));
    return *cls;
}

int cmd_run(const RunArgs& args) {
    const FunctionClass cls = required_class(args.class_name);
    const FunctionSpec spec = FunctionSpec::make(cls, args.n);
    if (args.algorithm == "gd" && args.n != 1) {
        throw input_error("gd runs on single-bit registers; use gdj for larger n");
    }
    RandomSource rng(args.seed);
    const RunReport report = run_gdj_report(spec, args.shots, rng);
    std::string content;
    if (args.format == "text") {
        content = render_run_text(args, report);
    } else if (args.format == "csv") {
        content = render_run_csv(args, report);
    } else {
        content = render_run_json(args, report);
    }
    deliver(args.out, content);
    return 0;
}

// --------------------------------------------------- query complexity ----

struct QueryArgs {
    int n_max = 8;
    bool with_brute_force = false;
    OutputOptions out;
};

int cmd_query_complexity(const QueryArgs& args) {
    if (args.n_max < 1) {
        throw input_error("n-max must be at least 1");
    }
    if (args.with_brute_force && args.n_max > 3) {
        throw input_error("brute-force verification is capped at n-max 3");
    }
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "query-complexity");
    csv.metadata("n_max", static_cast<std::int64_t>(args.n_max));
    // The single-bit problems live beside the table: the worst-case counts
    // assume the task of identifying the full class, while an optimal
    // decision tree can stop at the pair of decisive points.
    csv.metadata("deutsch_classical", classical_query_count(Algorithm::deutsch, 1));
    csv.metadata("deutsch_quantum", static_cast<std::int64_t>(quantum_query_count(Algorithm::deutsch)));
    csv.metadata("gd_classical", classical_query_count(Algorithm::gd, 1));
    csv.metadata("gd_quantum", static_cast<std::int64_t>(quantum_query_count(Algorithm::gd)));
    if (args.with_brute_force) {
        csv.metadata("deutsch_brute_force",
                     static_cast<std::int64_t>(min_deterministic_queries_bruteforce(Algorithm::deutsch, 1)));
        csv.metadata("gd_brute_force",
                     static_cast<std::int64_t>(min_deterministic_queries_bruteforce(Algorithm::gd, 1)));
    }
    if (args.with_brute_force) {
        csv.row({"n", "classical_dj", "classical_gdj", "quantum_dj", "quantum_gdj", "brute_dj",
                 "brute_gdj"});
    } else {
        csv.row({"n", "classical_dj", "classical_gdj", "quantum_dj", "quantum_gdj"});
    }
    for (int n = 1; n <= args.n_max; ++n) {
        std::vector<std::string> cells{
            CsvWriter::cell(n),
            CsvWriter::cell(classical_query_count(Algorithm::dj, n)),
            CsvWriter::cell(classical_query_count(Algorithm::gdj, n)),
            CsvWriter::cell(quantum_query_count(Algorithm::dj)),
            CsvWriter::cell(quantum_query_count(Algorithm::gdj)),
        };
        if (args.with_brute_force) {
            cells.push_back(CsvWriter::cell(min_deterministic_queries_bruteforce(Algorithm::dj, n)));
            cells.push_back(CsvWriter::cell(min_deterministic_queries_bruteforce(Algorithm::gdj, n)));
        }
        csv.row(cells);
    }
    deliver(args.out, os.str());
    return 0;
}

// --------------------------------------------------------------- panels ----

struct NoiseArgs {
    int n = 5;
    int steps = 21;
    double eta_max = 1.0;
    int trials = 4000;
    double beta = default_noise_beta;
    double gamma = default_noise_gamma;
    std::uint64_t seed = 0;
    OutputOptions out;
};

int cmd_panels_noise(const NoiseArgs& args) {
    if (args.steps < 2) throw input_error("steps must be at least 2");
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "panels noise");
    csv.metadata("n", static_cast<std::int64_t>(args.n));
    csv.metadata("steps", static_cast<std::int64_t>(args.steps));
    csv.metadata("eta_max", args.eta_max);
    csv.metadata("trials", static_cast<std::int64_t>(args.trials));
    csv.metadata("beta", args.beta);
    csv.metadata("gamma", args.gamma);
    csv.metadata("seed", args.seed);
    csv.row({"eta", "a_dja_model", "a_gdja_model", "a_dja_mc", "a_gdja_mc", "trials"});
    const RandomSource base(args.seed);
    for (int i = 0; i < args.steps; ++i) {
        const double eta = args.eta_max * static_cast<double>(i) / (args.steps - 1);
        RandomSource rng_dj = base.child(static_cast<std::uint64_t>(2 * i));
        RandomSource rng_gdj = base.child(static_cast<std::uint64_t>(2 * i + 1));
        csv.row({CsvWriter::cell(eta),
                 CsvWriter::cell(noise_accuracy(Algorithm::dj, eta, args.beta, args.gamma)),
                 CsvWriter::cell(noise_accuracy(Algorithm::gdj, eta, args.beta, args.gamma)),
                 CsvWriter::cell(monte_carlo_noise_accuracy(Algorithm::dj, args.n, eta,
                                                            args.trials, rng_dj)),
                 CsvWriter::cell(monte_carlo_noise_accuracy(Algorithm::gdj, args.n, eta,
                                                            args.trials, rng_gdj)),
                 CsvWriter::cell(args.trials)});
    }
    deliver(args.out, os.str());
    return 0;
}

struct InfogainArgs {
    int n_max = 10;
    OutputOptions out;
};

int cmd_panels_infogain(const InfogainArgs& args) {
    if (args.n_max < 1) throw input_error("n-max must be at least 1");
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "panels infogain");
    csv.metadata("n_max", static_cast<std::int64_t>(args.n_max));
    csv.row({"n", "i_dja", "i_gdja"});
    for (int n = 1; n <= args.n_max; ++n) {
        csv.row({CsvWriter::cell(n), CsvWriter::cell(information_gain(Algorithm::dj, n)),
                 CsvWriter::cell(information_gain(Algorithm::gdj, n))});
    }
    deliver(args.out, os.str());
    return 0;
}

struct ResourceArgs {
    int n_max = 20;
    OutputOptions out;
};

int cmd_panels_resources(const ResourceArgs& args) {
    if (args.n_max < 1) throw input_error("n-max must be at least 1");
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "panels resources");
    csv.metadata("n_max", static_cast<std::int64_t>(args.n_max));
    csv.metadata("dja_gate_slope", static_cast<std::int64_t>(dja_gate_slope));
    csv.metadata("gdja_gate_slope", static_cast<std::int64_t>(gdja_gate_slope));
    csv.row({"n", "q_dja", "q_gdja", "g_dja", "g_gdja"});
    for (int n = 1; n <= args.n_max; ++n) {
        const auto dj = resource_counts(Algorithm::dj, n);
        const auto gdj = resource_counts(Algorithm::gdj, n);
        csv.row({CsvWriter::cell(n), CsvWriter::cell(static_cast<std::int64_t>(dj.qubits)),
                 CsvWriter::cell(static_cast<std::int64_t>(gdj.qubits)),
                 CsvWriter::cell(static_cast<std::int64_t>(dj.gates)),
                 CsvWriter::cell(static_cast<std::int64_t>(gdj.gates))});
    }
    deliver(args.out, os.str());
    return 0;
}

struct StddevArgs {
    std::vector<int> dims{2, 3, 4, 6, 8, 12, 16, 24, 32, 48};
    int trials = 200;
    double eta = default_stddev_eta;
    std::uint64_t seed = 0;
    OutputOptions out;
};

int cmd_panels_stddev(const StddevArgs& args) {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "panels stddev");
    {
        std::string joined;
        for (std::size_t i = 0; i < args.dims.size(); ++i) {
            if (i > 0) joined += " ";
            joined += std::to_string(args.dims[i]);
        }
        csv.metadata("dims", joined);
    }
    csv.metadata("trials", static_cast<std::int64_t>(args.trials));
    csv.metadata("eta", args.eta);
    csv.metadata("seed", args.seed);
    const RandomSource base(args.seed);
    RandomSource rng_dj = base.child(0);
    RandomSource rng_gdj = base.child(1);
    const auto std_dj = accuracy_std_vs_dimension(Algorithm::dj, args.dims, args.trials,
                                                  args.eta, rng_dj);
    const auto std_gdj = accuracy_std_vs_dimension(Algorithm::gdj, args.dims, args.trials,
                                                   args.eta, rng_gdj);
    csv.row({"dim", "std_dj", "std_gdj", "berry_esseen"});
    for (std::size_t i = 0; i < args.dims.size(); ++i) {
        csv.row({CsvWriter::cell(args.dims[i]), CsvWriter::cell(std_dj[i]),
                 CsvWriter::cell(std_gdj[i]),
                 CsvWriter::cell(berry_esseen_bound(args.dims[i], 0.5, 0.125))});
    }
    deliver(args.out, os.str());
    return 0;
}

// ----------------------------------------------------------------- qkd ----

struct CurveArgs {
    double eta = 0.1;
    double k_dj = default_k_dj;
    double k_gdj = default_k_gdj;
    double d_max = 40000.0;
    int steps = 81;
    OutputOptions out;
};

int cmd_qkd_curve(const CurveArgs& args) {
    if (args.steps < 2) throw input_error("steps must be at least 2");
    if (!(args.d_max > 0.0)) throw input_error("d-max must be positive");
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata("command", "qkd curve");
    csv.metadata("eta", args.eta);
    csv.metadata("k_dj", args.k_dj);
    csv.metadata("k_gdj", args.k_gdj);
    csv.metadata("d_max", args.d_max);
    csv.metadata("steps", static_cast<std::int64_t>(args.steps));

    struct Row {
        double d;
        std::string note;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(args.steps) + 4);
    for (int i = 0; i < args.steps; ++i) {
        rows.push_back({args.d_max * static_cast<double>(i) / (args.steps - 1), ""});
    }
    rows.push_back({waypoint_dimension(0.5, args.k_dj, args.eta), "d50_dj"});
    rows.push_back({waypoint_dimension(0.9, args.k_dj, args.eta), "d90_dj"});
    rows.push_back({waypoint_dimension(0.5, args.k_gdj, args.eta), "d50_gdj"});
    rows.push_back({waypoint_dimension(0.9, args.k_gdj, args.eta), "d90_gdj"});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const Row& a, const Row& b) { return a.d < b.d; });

    csv.row({"d", "p_dj", "p_gdj", "note"});
    for (const Row& row : rows) {
        csv.row({CsvWriter::cell(row.d),
                 CsvWriter::cell(detection_probability(row.d, args.k_dj, args.eta)),
                 CsvWriter::cell(detection_probability(row.d, args.k_gdj, args.eta)),
                 row.note});
    }
    deliver(args.out, os.str());
    return 0;
}

struct SimulateArgs {
    std::string protocol = "gdj";
    int n = 1;
    std::uint64_t d = 1000;
    double eta = 0.0;
    double q0 = 0.0;
    double test_fraction = 0.5;
    std::uint64_t seed = 0;
    OutputOptions out;
};

int cmd_qkd_simulate(const SimulateArgs& args) {
    QkdConfig cfg;
    cfg.protocol = args.protocol == "dj" ? Algorithm::dj : Algorithm::gdj;
    cfg.n = args.n;
    cfg.d = args.d;
    cfg.eta = args.eta;
    cfg.q0 = args.q0;
    cfg.test_fraction = args.test_fraction;
    cfg.seed = args.seed;
    const QkdTranscript transcript = run_session(cfg);
    std::ostringstream os;
    write_transcript_jsonl(os, transcript);
    deliver(args.out, os.str());
    return 0;
}

// ----------------------------------------------------------- life-death ----

struct LifeDeathArgs {
    std::string class_name_arg;
    std::uint64_t seed = 0;
};

int cmd_life_death(const LifeDeathArgs& args) {
    const FunctionClass cls = required_class(args.class_name_arg);
    RandomSource rng(args.seed);
    const AlgorithmOutcome outcome = run_gd(FunctionSpec::make(cls, 1), rng);
    const auto room = [](int value) { return value == 1 ? "Life" : "Death"; };
    std::cout << "class: " << class_name(cls) << "\n";
    std::cout << "decoded: " << class_name(outcome.decoded_class) << " ("
              << kind_name(outcome.decoded_kind) << ")\n";
    std::cout << "Room 1: " << room(outcome.value_x) << ", Room 2: " << room(outcome.value_y)
              << "\n";
    std::cout << "certainty: " << format_double(outcome.pattern_probability)
              << " (one oracle call)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Statevector simulator and experiment harness for two-register "
                 "function-class identification circuits"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one circuit and report the decode");
    run_cmd->add_option("algorithm", run_args.algorithm, "Circuit family")
        ->required()
        ->check(CLI::IsMember({"gd", "gdj"}));
    run_cmd->add_option("class", run_args.class_name, "Function class")
        ->required()
        ->check(CLI::IsMember(class_names_list));
    run_cmd->add_option("--n", run_args.n, "Register width")->capture_default_str();
    run_cmd->add_option("--shots", run_args.shots, "Histogram shots; 0 for exact mode")
        ->capture_default_str();
    run_cmd->add_option("--seed", run_args.seed, "Random seed")
        ->envname("GDJ_SEED")
        ->capture_default_str();
    run_cmd->add_option("--format", run_args.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    add_output_flags(run_cmd, run_args.out);

    QueryArgs query_args;
    CLI::App* query_cmd =
        app.add_subcommand("query-complexity", "Tabulate classical vs quantum query counts");
    query_cmd->add_option("--n-max", query_args.n_max, "Largest register width")
        ->capture_default_str();
    query_cmd->add_flag("--with-brute-force", query_args.with_brute_force,
                        "Add exhaustive decision-tree columns (n-max <= 3)");
    add_output_flags(query_cmd, query_args.out);

    CLI::App* panels_cmd = app.add_subcommand("panels", "Emit analysis panel data");
    panels_cmd->require_subcommand(1);

    NoiseArgs noise_args;
    CLI::App* noise_cmd = panels_cmd->add_subcommand("noise", "Accuracy vs noise level");
    noise_cmd->add_option("--n", noise_args.n, "Register width")->capture_default_str();
    noise_cmd->add_option("--steps", noise_args.steps, "Grid points")->capture_default_str();
    noise_cmd->add_option("--eta-max", noise_args.eta_max, "Largest noise level")
        ->capture_default_str();
    noise_cmd->add_option("--trials", noise_args.trials, "Monte-Carlo trials per point")
        ->capture_default_str();
    noise_cmd->add_option("--beta", noise_args.beta, "Linear degradation slope")
        ->capture_default_str();
    noise_cmd->add_option("--gamma", noise_args.gamma, "Quadratic degradation coefficient")
        ->capture_default_str();
    noise_cmd->add_option("--seed", noise_args.seed, "Random seed")
        ->envname("GDJ_SEED")
        ->capture_default_str();
    add_output_flags(noise_cmd, noise_args.out);

    InfogainArgs infogain_args;
    CLI::App* infogain_cmd =
        panels_cmd->add_subcommand("infogain", "Information gained per oracle call");
    infogain_cmd->add_option("--n-max", infogain_args.n_max, "Largest register width")
        ->capture_default_str();
    add_output_flags(infogain_cmd, infogain_args.out);

    ResourceArgs resource_args;
    CLI::App* resources_cmd =
        panels_cmd->add_subcommand("resources", "Qubit and gate counts vs register width");
    resources_cmd->add_option("--n-max", resource_args.n_max, "Largest register width")
        ->capture_default_str();
    add_output_flags(resources_cmd, resource_args.out);

    StddevArgs stddev_args;
    CLI::App* stddev_cmd =
        panels_cmd->add_subcommand("stddev", "Accuracy spread vs feature dimension");
    stddev_cmd->add_option("--dims", stddev_args.dims, "Dimensions to sample")
        ->delimiter(',')
        ->capture_default_str();
    stddev_cmd->add_option("--trials", stddev_args.trials, "Batches per dimension")
        ->capture_default_str();
    stddev_cmd->add_option("--eta", stddev_args.eta, "Noise level")->capture_default_str();
    stddev_cmd->add_option("--seed", stddev_args.seed, "Random seed")
        ->envname("GDJ_SEED")
        ->capture_default_str();
    add_output_flags(stddev_cmd, stddev_args.out);

    CLI::App* qkd_cmd = app.add_subcommand("qkd", "Key-distribution experiments");
    qkd_cmd->require_subcommand(1);

    CurveArgs curve_args;
    CLI::App* curve_cmd =
        qkd_cmd->add_subcommand("curve", "Analytic detection probability vs dimension");
    curve_cmd->add_option("--eta", curve_args.eta, "Intercepted fraction")->capture_default_str();
    curve_cmd->add_option("--k-dj", curve_args.k_dj, "Rate constant, single-register protocol")
        ->capture_default_str();
    curve_cmd->add_option("--k-gdj", curve_args.k_gdj, "Rate constant, two-register protocol")
        ->capture_default_str();
    curve_cmd->add_option("--d-max", curve_args.d_max, "Largest dimension")
        ->capture_default_str();
    curve_cmd->add_option("--steps", curve_args.steps, "Grid points")->capture_default_str();
    add_output_flags(curve_cmd, curve_args.out);

    SimulateArgs simulate_args;
    CLI::App* simulate_cmd =
        qkd_cmd->add_subcommand("simulate", "Run a session and emit its transcript");
    simulate_cmd->add_option("--protocol", simulate_args.protocol, "Protocol")
        ->check(CLI::IsMember({"dj", "gdj"}))
        ->capture_default_str();
    simulate_cmd->add_option("--n", simulate_args.n, "Register width")->capture_default_str();
    simulate_cmd->add_option("--d", simulate_args.d, "Transmissions")->capture_default_str();
    simulate_cmd->add_option("--eta", simulate_args.eta, "Intercepted fraction")
        ->capture_default_str();
    simulate_cmd->add_option("--q0", simulate_args.q0, "Honest flag rate")
        ->capture_default_str();
    simulate_cmd->add_option("--test-fraction", simulate_args.test_fraction,
                             "Fraction of trials publicly compared")
        ->capture_default_str();
    simulate_cmd->add_option("--seed", simulate_args.seed, "Random seed")
        ->envname("GDJ_SEED")
        ->capture_default_str();
    add_output_flags(simulate_cmd, simulate_args.out);

    LifeDeathArgs life_args;
    CLI::App* life_cmd =
        app.add_subcommand("life-death", "Render the two-door guessing game for a class");
    life_cmd->add_option("class", life_args.class_name_arg, "Function class")
        ->required()
        ->check(CLI::IsMember(class_names_list));
    life_cmd->add_option("--seed", life_args.seed, "Random seed")
        ->envname("GDJ_SEED")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (query_cmd->parsed()) return cmd_query_complexity(query_args);
        if (panels_cmd->parsed()) {
            if (noise_cmd->parsed()) return cmd_panels_noise(noise_args);
            if (infogain_cmd->parsed()) return cmd_panels_infogain(infogain_args);
            if (resources_cmd->parsed()) return cmd_panels_resources(resource_args);
            if (stddev_cmd->parsed()) return cmd_panels_stddev(stddev_args);
        }
        if (qkd_cmd->parsed()) {
            if (curve_cmd->parsed()) return cmd_qkd_curve(curve_args);
            if (simulate_cmd->parsed()) return cmd_qkd_simulate(simulate_args);
        }
        if (life_cmd->parsed()) return cmd_life_death(life_args);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const promise_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const decode_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return 0;
}
