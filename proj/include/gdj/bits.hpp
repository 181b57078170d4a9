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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "gdj/errors.hpp"

namespace gdj {

// Basis-state indexing convention used throughout: qubit 0 is the most
// significant bit of the index, so a bitstring reads left to right as qubit
// 0, 1, ... and its integer value is ordinary binary notation.

inline std::size_t index_of_bits(std::string_view bits) {
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw input_error("bitstring may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return index;
}

inline std::string bits_of_index(std::size_t index, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = width - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = (index & 1) ? '1' : '0';
        index >>= 1;
    }
    return out;
}

inline int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Parity of the bitwise complement of an n-bit value.
inline int parity_complement(std::uint64_t x, int n) { return parity(x) ^ (n & 1); }

}  // namespace gdj
