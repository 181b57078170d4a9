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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdj/qkd.hpp"

namespace gdj {

// Numbers in text outputs use 12 significant digits, enough to round-trip
// the quantities reported here while keeping reruns byte-identical.
std::string format_double(double value);

// Rounds to 12 significant digits, for values embedded in JSON.
double round12(double value);

// Quotes a CSV cell when it contains a comma, quote, or newline.
std::string csv_escape(std::string_view cell);

// Comma-separated output with '#'-prefixed metadata lines and LF line
// endings.  Every emitter records its fully resolved configuration
// (including the seed) as metadata so a file identifies the run that
// produced it.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void comment(std::string_view text);
    void metadata(std::string_view key, std::string_view value);
    void metadata(std::string_view key, double value);
    void metadata(std::string_view key, std::uint64_t value);
    void metadata(std::string_view key, std::int64_t value);
    void row(std::span<const std::string> cells);
    void row(std::initializer_list<std::string> cells);

    static std::string cell(double value) { return format_double(value); }
    static std::string cell(std::uint64_t value) { return std::to_string(value); }
    static std::string cell(std::int64_t value) { return std::to_string(value); }
    static std::string cell(int value) { return std::to_string(value); }
    static std::string cell(std::string_view value) { return std::string(value); }

  private:
    std::ostream& out_;
};

// One JSON object per line: a summary record first, then one record per
// trial, in trial order.
void write_transcript_jsonl(std::ostream& out, const QkdTranscript& transcript);

}  // namespace gdj
