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

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qclh {

inline constexpr double kUnitarityTol = 1e-12;

/// Gate set: the named single-qubit gates, arbitrary custom single-qubit
/// unitaries, and the diagonal two-qubit phase gate diag(1, 1, 1, -1).
enum class GateKind { Identity, PauliX, PauliY, PauliZ, Hadamard, PhaseS, Custom, CPhase };

struct Gate {
    GateKind kind = GateKind::Identity;
    int target = 0;   // 1-based qubit index
    int target2 = 0;  // second qubit, CPhase only
    Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();  // Custom only

    static Gate single(GateKind kind, int qubit);
    /// Throws std::invalid_argument if the matrix is not unitary to 1e-12.
    static Gate custom(int qubit, const Eigen::Matrix2cd& matrix);
    static Gate cphase(int qubit1, int qubit2);

    bool is_two_qubit() const { return kind == GateKind::CPhase; }
    bool is_identity() const { return kind == GateKind::Identity; }
    /// Dense unitary of the gate on its own qubits (2x2, or 4x4 for CPhase).
    Eigen::MatrixXcd block() const;

    bool operator==(const Gate& other) const;
};

/// A verifier circuit over a witness register (qubits 1..n_x) and an ancilla
/// register (qubits n_x+1..n_x+m_x).  Qubit 1 is the output qubit.
struct Circuit {
    int witness_qubits = 0;  // n_x >= 1
    int ancilla_qubits = 0;  // m_x >= 0
    std::vector<Gate> gates;

    int total_qubits() const { return witness_qubits + ancilla_qubits; }
    int length() const { return static_cast<int>(gates.size()); }

    /// Throws std::invalid_argument on any structural violation.
    void validate() const;

    bool operator==(const Circuit& other) const;
};

/// Dense amplitudes over `num_qubits` qubits; qubit 1 is the most significant
/// bit of the amplitude index.
struct StateVector {
    int num_qubits = 0;
    Eigen::VectorXcd amplitudes;
};

StateVector make_basis_state(int num_qubits, std::uint64_t index);

void apply_gate(StateVector& state, const Gate& gate);

/// Runs the circuit on |witness> (x) |0...0>.  The witness is a bitstring of
/// length n_x, most significant qubit first.
StateVector simulate(const Circuit& circuit, const std::string& witness);

/// Probability that the output qubit (qubit 1) measures 1 after simulate().
double acceptance_probability(const Circuit& circuit, const std::string& witness);

/// Full 2^n x 2^n unitary of the circuit.  Intended for small-system checks.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// Whether the surrounding two-qubit phase gates get dressed with the
/// diagonal identity Z (x) Z . CPhase . Z (x) Z during padding.  Dressing
/// keeps the circuit unitary unchanged while placing the Z gates the
/// two-body time-check terms expect at slots t-2..t+2.
enum class ZDressing { Insert, Plain };

/// Spaces the two-qubit gates onto time slots L, 2L, ..., fills the remaining
/// slots with single-qubit gates (originals in order, identities elsewhere),
/// and leaves at least three trailing slots after the last CPhase.  The
/// returned circuit computes the same unitary.
Circuit pad_and_normalize(const Circuit& circuit, int spacing,
                          ZDressing dressing = ZDressing::Insert);

/// Appends identity gates until T + 1 is a power of two, so that a binary
/// clock register of width ceil(log2(T+1)) has no unreachable values.
Circuit pad_to_clock_capacity(const Circuit& circuit);

std::vector<int> cphase_times(const Circuit& circuit);

/// Line-based circuit file format.  Throws std::invalid_argument with the
/// offending line number on malformed input.
Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& circuit);

}  // namespace qclh
