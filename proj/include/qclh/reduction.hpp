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

#include <optional>
#include <string>
#include <vector>

#include "qclh/circuit.hpp"
#include "qclh/operators.hpp"

namespace qclh {

enum class ClockEncoding { Binary, Unary };
enum class LocalityTarget { Log, Five, Two };

ClockEncoding encoding_for(LocalityTarget target);
std::string to_string(LocalityTarget target);
std::string to_string(ClockEncoding encoding);

/// Penalty coefficients and promise parameter for one compilation.
struct ReductionParams {
    LocalityTarget target = LocalityTarget::Log;
    int spacing = 4;  // L, used by the two-local target only
    double j_in = 1.0;
    double j_prop = 1.0;   // log / five
    double j_clock = 1.0;  // five / two
    double j_1 = 1.0;      // two
    double j_2 = 1.0;      // two
    double epsilon = 0.01;
    bool auto_penalties = false;
    ZDressing dressing = ZDressing::Insert;  // forwarded to padding for `two`

    void validate() const;
};

/// Promise thresholds: ground energy <= a on accept, >= b on reject.
struct DecisionThresholds {
    double a = 0.0;
    double b = 0.0;
};

/// Width of the clock register used by an encoding for a length-T circuit.
int clock_width(ClockEncoding encoding, int circuit_length);

// Constraint builders.  Each returns terms over the full register layout of
// `circuit` plus its clock (computational qubits first, then clock qubits),
// except build_h_clock(T) which is over a bare T-qubit clock register.

/// Penalizes ancilla qubits set to 1 while the clock reads 0.
HamiltonianSum build_h_in(const Circuit& circuit, ClockEncoding encoding);

/// (T+1) * |0><0| on the output qubit at the final clock value.
HamiltonianSum build_h_out(const Circuit& circuit, ClockEncoding encoding);

/// Propagation terms with a binary clock register; one term per time step,
/// each acting on the gate qubits plus the whole clock register.
HamiltonianSum build_h_prop_binary(const Circuit& circuit);

/// Propagation terms with a unary clock, split into two-body pieces: two
/// clock-pair projectors per step plus one gate (x) single-clock-bit
/// coupling.  The endpoint steps use the one-sided projector forms.
HamiltonianSum build_h_prop_unary(const Circuit& circuit);

/// Propagation terms with a unary clock, kept as one positive semidefinite
/// term per step on a two- or three-qubit clock window:
///   t = 1:     |00><00| + |10><10| with hop |10><00| on clock (1, 2)
///   1 < t < T: |100><100| + |110><110| with hop |110><100| on (t-1, t, t+1)
///   t = T:     |10><10| + |11><11| with hop |11><10| on (T-1, T)
/// The windowed hops move a legal unary string exactly one step, so the
/// history state is annihilated exactly.
HamiltonianSum build_h_prop_unary_windowed(const Circuit& circuit);

/// sum_{i<j} |01><01|_{ij} over a bare T-qubit clock register: every illegal
/// unary string (a 0 before a 1) is penalized; the kernel has dimension T+1.
HamiltonianSum build_h_clock(int clock_length);
/// Same constraints embedded after `computational_qubits` leading qubits.
HamiltonianSum build_h_clock_embedded(int computational_qubits, int clock_length);

/// Sign of the single-clock-bit factor that ties the two gate qubits of a
/// CPhase slot to the clock transition t-1 -> t.  Kept in one place: the
/// Hermitian coupling |1><0|_t + |0><1|_t is the reading used throughout;
/// change here to experiment with alternatives.
Eigen::Matrix2cd cphase_clock_factor();

/// Gate-qubit penalties at a CPhase slot: four two-body terms
///  (-2|0><0| + |1><1|)/2 on each gate qubit, tensored with the clock factor.
HamiltonianSum build_h_qubit(int computational_qubits, int clock_length, int spacing,
                             int time, int first_qubit, int second_qubit);

/// How the mirrored half of the time-check window is transcribed.  The
/// descending clock-pair subscripts are read with the pair sorted ascending
/// (mirror-symmetric; default).  Positional keeps the printed bit order, so
/// those three projectors only fire on illegal clock strings.
enum class TimeMirror { Sorted, Positional };

/// Clock-only two-body window around a CPhase slot: weighted unary-value
/// projectors at t-3..t+2 plus one- and two-bit hop couplings, all with the
/// 1/8 base coefficient.  Requires 4 <= t <= T-3.
HamiltonianSum build_h_time(int computational_qubits, int clock_length, int time,
                            TimeMirror mirror = TimeMirror::Sorted);

/// Penalty selection from the two-sided restriction bound: given the gap J
/// (smallest nonzero eigenvalue) of the penalty, returns
///   (2||h_rest|| + 8||h_rest||^2) / J * 1.1.
/// Requires the penalty to be PSD with a nontrivial kernel.
double choose_penalties(const HamiltonianSum& h_rest, const HamiltonianSum& h_penalty);

struct Assembly {
    HamiltonianSum hamiltonian;
    DecisionThresholds thresholds;
    Circuit circuit;  // effective circuit (after any internal padding)
    ReductionParams params;  // penalties actually used
    ClockEncoding encoding = ClockEncoding::Binary;
    int clock_qubits = 0;
    std::vector<std::string> notes;  // penalty trace and conditioning warnings
};

/// Builds the full labeled Hamiltonian for the requested locality level.
///   log:  J_in*H_in + H_out + J_prop*sum_t H_prop,t          (binary clock)
///   five: J_in*H_in + H_out + J_prop*sum_t H_prop,t + J_clock*H_clock
///         (unary clock, windowed propagation)
///   two:  H_out + J_in*H_in + J_1*H_prop1 + J_2*H_prop2 + J_clock*H_clock
///         (unary clock; circuit must already be padded to `spacing`)
/// The binary path pads the circuit so every clock value is reachable; the
/// unary paths extend length-1 circuits by one identity.
Assembly assemble(const Circuit& circuit, const ReductionParams& params);

}  // namespace qclh
