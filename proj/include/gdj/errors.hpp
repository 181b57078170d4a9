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

#include <stdexcept>
#include <string>

namespace gdj {

// Bad argument values: out-of-range indices, malformed bitstrings, invalid
// parameter ranges.  Maps to CLI exit code 3 when thrown past the parser.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A function outside the four promise classes was passed to a routine that
// requires the promise.
struct promise_error : std::runtime_error {
    explicit promise_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Measured pattern falls outside the decode table's support.
struct decode_error : std::runtime_error {
    explicit decode_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds the simulator's capacity limits.  Maps to CLI exit code 4.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gdj
