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

namespace gdj::tol {

// Probabilistic quantities: norms, marginals, outcome probabilities.
inline constexpr double probability = 1e-10;

// Amplitude-level comparisons between two evolution routes.
inline constexpr double amplitude = 1e-12;

}  // namespace gdj::tol
