// Copyright 2026 The qclh Authors
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

#include <string>

#include "qclh/circuit.hpp"

namespace qclh {

struct OracleResult {
    double max_acceptance = 0.0;
    std::string witness;  // first maximizer in lexicographic order
};

/// Exhaustive search over all 2^{n_x} classical witnesses.  Ground truth for
/// the spectral pipeline; n_x <= 20.
OracleResult brute_force_max_acceptance(const Circuit& circuit);

enum class Decision { Yes, No, PromiseViolated };
std::string to_string(Decision decision);

/// Yes when some witness accepts with probability >= 1 - epsilon, No when
/// every witness accepts with probability <= epsilon.
Decision decide_instance(const Circuit& circuit, double epsilon);

}  // namespace qclh
