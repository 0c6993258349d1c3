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
#include <vector>

#include "qclh/circuit.hpp"
#include "qclh/operators.hpp"
#include "qclh/reduction.hpp"

namespace qclh {

/// The uniform superposition over computation steps: clock value t paired
/// with the state after the first t gates, each with amplitude 1/sqrt(T+1).
struct HistoryState {
    StateVector state;  // computational register then clock register
    ClockEncoding encoding = ClockEncoding::Binary;
    int circuit_length = 0;  // effective T
    std::string witness;
};

/// Builds the history state of `circuit` run on |witness>|0...0>.  The
/// binary encoding pads the circuit the same way assemble() does, so the
/// result matches assemblies built from the same circuit.
HistoryState build_history_state(const Circuit& circuit, const std::string& witness,
                                 ClockEncoding encoding);

struct EnergyBreakdown {
    double total = 0.0;
    std::vector<std::pair<std::string, double>> by_label;  // label order of first appearance
};

/// <y|H|y> split by term label.
EnergyBreakdown history_energy(const HistoryState& history, const HamiltonianSum& h);

}  // namespace qclh
