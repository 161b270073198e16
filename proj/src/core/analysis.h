// Copyright 2026 The uqec Authors
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

#ifndef UQEC_CORE_ANALYSIS_H
#define UQEC_CORE_ANALYSIS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/channels.h"
#include "core/codes.h"
#include "core/tensor.h"

namespace uqec {

constexpr double kDefaultTolerance = 1e-10;

struct FactorizationResult {
    DenseMatrix reduced_qubit;
    DenseMatrix reduced_ancilla;
    /// ||rho_out - rho_A (x) sigma'||_F
    double residual = 0;
    bool is_product = false;
};

FactorizationResult check_product_form(const DenseMatrix &rho_out, QubitSplit split, double tol);

/// <psi|rho_A|psi> for a 2x2 rho_A.
double fidelity_pure(const DenseMatrix &rho_a, const PureQubitState &psi);

struct LabeledProbability {
    std::string label;
    double p;
};

/// Diagonal of sigma' paired with the recovery matrix's class labels; ancilla
/// indices past the labeled classes are summed under "(outside)". Throws
/// Error(NotDiagonal) if any off-diagonal entry exceeds tol in magnitude.
std::vector<LabeledProbability> syndrome_distribution(const DenseMatrix &sigma_prime, const RecoveryMatrix &r,
                                                      double tol);

/// Basis permutation gate on n qubits: flips every target bit when all
/// control bits are 1. Qubits are numbered from 1 (most significant).
DenseMatrix controlled_flip_gate(int num_qubits, const std::vector<int> &controls, const std::vector<int> &targets);

struct PermutationFactorization {
    double products_residual;   // P(4,5,6,7) P(3,4) vs P(3,7) P(4,5,6,7)
    double row_built_residual;  // build_recovery(bitflip3, I,X3,X2,X1) vs P(4,5,6,7) P(3,4)
    double c1x2x3_residual;     // P(4,5,6,7) vs [C1 X2 X3]
    double x1c2c3_residual;     // P(3,7) vs [X1 C2 C3]
    bool holds() const {
        return products_residual == 0 && row_built_residual == 0 && c1x2x3_residual == 0 && x1c2c3_residual == 0;
    }
};

PermutationFactorization verify_permutation_factorization_3qubit();

/// A code with its channel operator set and its recovery matrix, built once.
struct CodeContext {
    Code code;
    std::vector<ErrorOperator> errors;
    RecoveryMatrix recovery;

    static CodeContext load(std::string_view name);
};

struct RecoveryReport {
    std::string code;
    std::vector<LabeledProbability> channel;
    double alpha = 0;
    double beta = 0;
    double fidelity = 0;
    double residual = 0;
    std::vector<LabeledProbability> syndrome;
    bool passed = false;
    double tolerance = kDefaultTolerance;
    FactorizationResult factorization;
};

/// encode -> channel -> R rho R^T -> factorization, fidelity, syndrome.
/// Every channel operator must belong to the code's error set.
RecoveryReport run_experiment(const CodeContext &ctx, const ErrorChannel &ch, const PureQubitState &psi,
                              double tol = kDefaultTolerance);
RecoveryReport run_experiment(std::string_view code_name, const ErrorChannel &ch, const PureQubitState &psi,
                              double tol = kDefaultTolerance);

/// All probability vectors of length k with entries in multiples of 1/steps.
std::vector<Vector> simplex_grid(size_t k, int steps);
/// Normalized exponential draws from mt19937_64(seed).
std::vector<Vector> random_probability_vectors(size_t k, size_t count, uint64_t seed);
/// (1,0), (0,1), (0.6,0.8), (1,1)/sqrt2, (1,-1)/sqrt2.
std::vector<PureQubitState> reference_inputs();

struct VerificationCase {
    Vector probs;
    PureQubitState psi;
};

/// Quarter-step simplex grid plus ten seeded random vectors, crossed with the
/// reference inputs. For shor9 the 28-entry quarter grid is too large
/// (31465 vectors), so the grid is replaced by its 28 vertices plus the
/// uniform vector.
std::vector<VerificationCase> verification_cases(const CodeContext &ctx);

struct TrajectoryClassStat {
    std::string label;
    double expected = 0;
    uint64_t observed = 0;
    double frequency = 0;
    /// 3 sqrt(p (1 - p) / N)
    double bound = 0;
    bool within = false;
};

struct TrajectoryStats {
    std::string code;
    uint64_t samples = 0;
    uint64_t seed = 0;
    double alpha = 0;
    double beta = 0;
    std::vector<TrajectoryClassStat> classes;
    uint64_t misclassified = 0;
    double max_recovery_error = 0;

    bool frequencies_within_bounds() const;
    bool passed(double tol) const;
};

/// Samples single-error trajectories, applies R to each state vector and reads
/// the class off the ancilla register.
TrajectoryStats run_trajectories(const CodeContext &ctx, const ErrorChannel &ch, const PureQubitState &psi,
                                 uint64_t samples, uint64_t seed);

// Serialization. JSON key order is fixed and numbers use %.17g.
std::string to_json(const RecoveryReport &r);
std::string to_json(const TrajectoryStats &s, double tol);
std::string to_json(const KLReport &kl, std::string_view code);
std::string csv_header();
std::string to_csv_row(const RecoveryReport &r);
std::string to_table_row(const RecoveryReport &r);

}  // namespace uqec

#endif
