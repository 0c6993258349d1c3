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

#include <Eigen/Dense>

#include "qclh/operators.hpp"

namespace qclh {

// Eigenvalues of a PSD penalty below this cutoff count as kernel.
inline constexpr double kKernelCutoff = 1e-9;
inline constexpr double kIterativeResidualTol = 1e-7;
inline constexpr int kIterativeMatvecCap = 10000;

enum class EigMethod { Auto, Dense, Iterative };

struct SpectrumResult {
    double lambda_min = 0.0;
    std::string method;       // "dense" or "iterative"
    double residual = 0.0;    // ||H v - lambda v||
    std::string restriction;  // empty when unrestricted
    Eigen::Index dim = 0;     // effective dimension solved
};

/// Smallest eigenvalue.  Dense below the cap; otherwise restarted Lanczos on
/// the PSD-shifted operator sigma*I - H with sigma the term-norm bound.
/// Throws std::runtime_error on iterative non-convergence.
SpectrumResult min_eigenvalue(const HamiltonianSum& h, EigMethod method = EigMethod::Auto);

/// Orthonormal basis (columns) of the zero eigenspace of a PSD penalty,
/// eigenvalue cutoff 1e-9.  Pure clock-constraint sums take an analytic path
/// that returns the legal unary strings directly.  Throws if the kernel is
/// empty or the penalty has eigenvalues below -1e-9.
Eigen::MatrixXcd zero_eigenspace_basis(const HamiltonianSum& h_penalty);

/// Smallest eigenvalue of B^dagger H B for an orthonormal basis B
/// (Gram residual below 1e-10, otherwise throws).
SpectrumResult restricted_min_eigenvalue(const HamiltonianSum& h, const Eigen::MatrixXcd& basis);

/// Smallest eigenvalue above the kernel cutoff.  Throws if the operator has
/// no kernel, or none above the cutoff.
double smallest_nonzero_eigenvalue(const HamiltonianSum& h);

struct ProjectionReport {
    bool precondition_met = false;  // J > 2 ||H1||
    double h1_norm = 0.0;
    double penalty_gap = 0.0;  // J: smallest nonzero eigenvalue of H2
    Eigen::Index kernel_dim = 0;
    double lambda_restricted = 0.0;  // lambda(H1 | ker H2)
    double lambda_sum = 0.0;         // lambda(H1 + H2)
    double lower_bound = 0.0;        // lambda_restricted - ||H1||^2 / (J - 2||H1||)
    bool upper_holds = false;        // lambda_sum <= lambda_restricted + 1e-9
    bool lower_holds = false;        // lower_bound <= lambda_sum + 1e-9 (when precondition met)
    double upper_slack = 0.0;        // lambda_restricted - lambda_sum
    double lower_slack = 0.0;        // lambda_sum - lower_bound
};

/// Evaluates both sides of the restriction bound
///   lambda(H1|_{S2}) - ||H1||^2/(J - 2||H1||) <= lambda(H1+H2) <= lambda(H1|_{S2})
/// numerically.  The upper inequality is checked unconditionally (it only
/// needs H2 PSD); the lower one is marked not-applicable when J <= 2||H1||.
ProjectionReport projection_lemma_check(const HamiltonianSum& h1, const HamiltonianSum& h2);

}  // namespace qclh
