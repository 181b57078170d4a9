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

#include "gdj/serialize.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace gdj {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double round12(double value) {
    if (value == 0.0 || !std::isfinite(value)) return value;
    const double magnitude = std::floor(std::log10(std::fabs(value)));
    const double scale = std::pow(10.0, 11.0 - magnitude);
    return std::round(value * scale) / scale;
}

std::string csv_escape(std::string_view cell) {
    if (cell.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(cell);
    }
    std::string quoted = "\"";
    for (const char c : cell) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void CsvWriter::comment(std::string_view text) { out_ << "# " << text << "\n"; }

void CsvWriter::metadata(std::string_view key, std::string_view value) {
    out_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::metadata(std::string_view key, double value) {
    metadata(key, format_double(value));
}

void CsvWriter::metadata(std::string_view key, std::uint64_t value) {
    metadata(key, std::string_view(std::to_string(value)));
}

void CsvWriter::metadata(std::string_view key, std::int64_t value) {
    metadata(key, std::string_view(std::to_string(value)));
}

void CsvWriter::row(std::span<const std::string> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out_ << ",";
        out_ << csv_escape(cells[i]);
    }
    out_ << "\n";
}

void CsvWriter::row(std::initializer_list<std::string> cells) {
    row(std::span<const std::string>(cells.begin(), cells.size()));
}

void write_transcript_jsonl(std::ostream& out, const QkdTranscript& t) {
    nlohmann::ordered_json summary;
    summary["record"] = "summary";
    summary["protocol"] = std::string(algorithm_name(t.config.protocol));
    summary["n"] = t.config.n;
    summary["d"] = t.config.d;
    summary["eta"] = round12(t.config.eta);
    summary["q0"] = round12(t.config.q0);
    summary["test_fraction"] = round12(t.config.test_fraction);
    summary["seed"] = t.config.seed;
    summary["compared_count"] = t.compared_count;
    summary["flag_count"] = t.flag_count;
    summary["attacked_count"] = t.attacked_count;
    summary["attacked_mismatch_count"] = t.attacked_mismatch_count;
    summary["sample_mean"] = round12(t.sample_mean);
    summary["threshold"] = round12(t.threshold);
    summary["detected"] = t.detected;
    summary["alpha_ideal"] = round12(t.alpha_ideal);
    summary["alpha_measured"] = round12(t.alpha_measured);
    summary["raw_key_bits"] = t.raw_key_bits;
    summary["raw_key_bits_entropy"] = t.raw_key_bits_entropy;
    out << summary.dump() << "\n";

    for (std::size_t i = 0; i < t.trials.size(); ++i) {
        const QkdTrial& trial = t.trials[i];
        nlohmann::ordered_json line;
        line["record"] = "trial";
        line["index"] = i;
        line["alice"] = trial.alice;
        line["attacked"] = trial.attacked;
        line["bob"] = trial.bob;
        line["compared"] = trial.compared;
        line["flagged"] = trial.flagged;
        out << line.dump() << "\n";
    }
}

}  // namespace gdj
