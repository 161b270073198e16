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

#ifndef UQEC_CORE_CHANNELS_H
#define UQEC_CORE_CHANNELS_H

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "core/codes.h"
#include "core/tensor.h"

namespace uqec {

/// Real symmetric, unit-trace, positive semidefinite matrix.
class DensityMatrix {
   public:
    struct Diagnostics {
        double asymmetry = 0;       // max |rho_ij - rho_ji|
        double trace_error = 0;     // |tr rho - 1|
        double min_eigenvalue = 0;  // smallest eigenvalue of the symmetric part
    };

    /// Checks every invariant (symmetric and unit trace within tol, eigenvalues
    /// >= eig_floor) and throws Error(InvalidArgument) on the first failure.
    static DensityMatrix validated(DenseMatrix m, double tol = 1e-12, double eig_floor = -1e-10);
    static DensityMatrix from_pure(std::span<const double> psi);
    /// Skips validation. Used for outputs of maps that preserve the invariants
    /// (channels with sum p = 1, orthogonal conjugation).
    static DensityMatrix trusted(DenseMatrix m);
    static Diagnostics inspect(const DenseMatrix &m);

    const DenseMatrix &matrix() const noexcept {
        return m_;
    }
    size_t dim() const noexcept {
        return m_.rows();
    }

   private:
    explicit DensityMatrix(DenseMatrix m) : m_(std::move(m)) {
    }
    DenseMatrix m_;
};

struct ChannelTerm {
    double probability;
    ErrorOperator op;
};

/// rho -> sum_i p_i W_i rho W_i^T.
class ErrorChannel {
   public:
    /// Throws Error(Channel) if a probability is negative or non-finite, the
    /// sum differs from 1 by more than tol, or operators disagree on dimension.
    static ErrorChannel make(std::vector<ChannelTerm> terms, double tol = 1e-12);

    const std::vector<ChannelTerm> &terms() const noexcept {
        return terms_;
    }
    size_t dim() const noexcept {
        return terms_.empty() ? 0 : terms_.front().op.dim();
    }

   private:
    std::vector<ChannelTerm> terms_;
};

/// Positional probabilities against `ops`; arity must match exactly. Sums
/// within 1e-9 of one are accepted; a sum off by more than 1e-12 is rescaled.
ErrorChannel channel_from_probs(const std::vector<ErrorOperator> &ops, std::span<const double> probs);

/// One "label probability" pair per line, blank lines and '#' comments
/// allowed. Labels resolve against `ops`; duplicates are rejected.
ErrorChannel parse_channel(std::string_view text, const std::vector<ErrorOperator> &ops);
ErrorChannel read_channel_file(const std::string &path, const std::vector<ErrorOperator> &ops);

DensityMatrix apply_channel(const ErrorChannel &ch, const DensityMatrix &rho);

struct KLReport {
    /// max |<m|W_i^T W_j|n> - delta_ij delta_mn| over class representatives.
    double gram_deviation = 0;
    /// Operators grouped by identical action on the code space, in first-seen
    /// order; singletons included.
    std::vector<std::vector<std::string>> classes;
    /// classes[class_of[k]] contains ops[k].
    std::vector<size_t> class_of;
    /// Index into ops of each class representative (first member).
    std::vector<size_t> representatives;
    bool is_nondegenerate = false;
    /// Human-readable location of gram_deviation, e.g. "<0|X_1^T Y_1|0>".
    std::string worst_pair;

    std::vector<std::vector<std::string>> degenerate_classes() const;
};

KLReport validate_kl(const Code &code, const std::vector<ErrorOperator> &ops);

struct RowLabel {
    static constexpr size_t kCompletion = static_cast<size_t>(-1);
    int logical = -1;  // 0, 1, or -1 for completion rows
    size_t error_class = kCompletion;
    std::string representative;
};

struct RecoveryMatrix {
    DenseMatrix matrix;
    std::vector<RowLabel> row_labels;
    /// Display label per class: the operator label, or "{A,B,...}" for a
    /// degenerate class.
    std::vector<std::string> class_labels;
    /// Operator label -> class index.
    std::map<std::string, size_t, std::less<>> class_map;

    size_t dim() const noexcept {
        return matrix.rows();
    }
    size_t ancilla_dim() const noexcept {
        return matrix.rows() / 2;
    }
    size_t num_classes() const noexcept {
        return class_labels.size();
    }
};

/// Row k < K is (W_k |0>_L)^T and row d/2 + k is (W_k |1>_L)^T for class
/// representative W_k, classes in input order. When 2K < d the remaining rows
/// of each half are filled by orthonormal completion, so data bit m always
/// sits in the top index bit of R W |psi>.
RecoveryMatrix build_recovery(const Code &code, const std::vector<ErrorOperator> &ops);

DensityMatrix apply_recovery(const RecoveryMatrix &r, const DensityMatrix &rho_err);

struct ConventionalRecovery {
    DensityMatrix state;
    double trace_before_normalization;
    bool renormalized;
};

/// P_07 (sum_{i=0..3} X_i rho X_i) P_07 on three qubits, rescaled to unit
/// trace when projection lost weight. Throws Error(Channel) when nothing
/// survives the projection.
ConventionalRecovery conventional_recovery_bitflip3(const DensityMatrix &rho_err);

struct Trajectory {
    size_t index;
    Vector state;
};

/// Owns a seeded mt19937_64 and draws channel terms by probability.
class TrajectorySampler {
   public:
    explicit TrajectorySampler(uint64_t seed) : rng_(seed) {
    }
    size_t draw(const ErrorChannel &ch);
    Trajectory sample(const ErrorChannel &ch, std::span<const double> state);

   private:
    std::mt19937_64 rng_;
};

Trajectory sample_trajectory(const ErrorChannel &ch, std::span<const double> state, uint64_t seed);

}  // namespace uqec

#endif
