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

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qclh {

inline constexpr double kHermiticityTol = 1e-12;
// Dense embeddings are refused above this system size; matrix-free paths
// carry on up to the iterative cap.
inline constexpr int kDenseQubitCap = 14;
inline constexpr int kIterativeQubitCap = 24;

/// One coefficient-weighted Hermitian block acting on a small ordered qubit
/// support.  The first listed support qubit is the most significant bit of
/// the block index.
struct LocalTerm {
    double coefficient = 1.0;
    std::vector<int> support;  // 1-based global qubit indices, distinct
    Eigen::MatrixXcd block;    // 2^k x 2^k, Hermitian to 1e-12
    std::string label;         // group tag: in/out/prop/prop1/prop2-qubit/prop2-time/clock

    int arity() const { return static_cast<int>(support.size()); }
};

/// H = sum_i coefficient_i * embed(block_i).  Terms are kept as given; equal
/// supports are not merged.
struct HamiltonianSum {
    int system_size = 0;  // total qubit count
    std::vector<LocalTerm> terms;

    void validate() const;  // throws std::invalid_argument
};

/// Dense 2^n x 2^n matrix of the sum.  Throws above kDenseQubitCap.
Eigen::MatrixXcd embed_to_dense(const HamiltonianSum& h);

/// Matrix-free H * v with a fixed term and index order (deterministic).
Eigen::VectorXcd apply(const HamiltonianSum& h, const Eigen::VectorXcd& v);

/// Real part of <v|H|v>; throws if the imaginary residual exceeds 1e-10.
double expectation(const HamiltonianSum& h, const Eigen::VectorXcd& v);

/// Spectral norm, dense below the cap, power iteration on H^2 above it
/// (relative accuracy 1e-6; throws on non-convergence with the residual).
double operator_norm(const HamiltonianSum& h);

/// sum_i |c_i| * ||block_i||: a cheap upper bound on ||H||.
double term_norm_bound(const HamiltonianSum& h);

struct LocalityAudit {
    int max_support = 0;
    std::map<int, int> histogram;  // arity k -> term count
};
LocalityAudit locality_audit(const HamiltonianSum& h);

/// Keeps only terms whose label is in `labels`.
HamiltonianSum select_labels(const HamiltonianSum& h, const std::vector<std::string>& labels);
/// Keeps only terms whose label is not in `labels`.
HamiltonianSum drop_labels(const HamiltonianSum& h, const std::vector<std::string>& labels);
/// Concatenates term lists (system sizes must match).
HamiltonianSum concat(const HamiltonianSum& a, const HamiltonianSum& b);
/// Multiplies every term coefficient by `factor`.
HamiltonianSum scaled(const HamiltonianSum& h, double factor);

/// Term-list file format; lossless round-trip.  Header comments are emitted
/// verbatim after the version line.
std::string serialize_hamiltonian(const HamiltonianSum& h, const std::string& header_comment = "");
HamiltonianSum parse_hamiltonian(const std::string& text);

}  // namespace qclh
