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

#ifndef UQEC_CORE_CODES_H
#define UQEC_CORE_CODES_H

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "core/tensor.h"

namespace uqec {

enum class PauliKind { I, X, Y, Z };

/// Single-qubit Pauli error embedded on n qubits (qubit 1 is the most
/// significant bit of the basis index). Y is the real matrix [[0,-1],[1,0]].
///
/// The embedding is built with Kronecker products and also kept as a signed
/// permutation, W e_j = sign(j) e_{image(j)}, so that applying it to vectors
/// and conjugating density matrices costs O(d) and O(d^2).
class ErrorOperator {
   public:
    static ErrorOperator make(PauliKind kind, int qubit, int num_qubits);
    static ErrorOperator identity(int num_qubits) {
        return make(PauliKind::I, 0, num_qubits);
    }

    PauliKind kind() const noexcept {
        return kind_;
    }
    int qubit() const noexcept {
        return qubit_;
    }
    int num_qubits() const noexcept {
        return num_qubits_;
    }
    size_t dim() const noexcept {
        return image_.size();
    }
    const std::string &label() const noexcept {
        return label_;
    }
    const DenseMatrix &matrix() const noexcept {
        return *matrix_;
    }

    Vector apply(std::span<const double> v) const;
    /// W rho W^T.
    DenseMatrix conjugate(const DenseMatrix &rho) const;

   private:
    ErrorOperator() = default;

    PauliKind kind_ = PauliKind::I;
    int qubit_ = 0;
    int num_qubits_ = 0;
    std::string label_;
    std::shared_ptr<const DenseMatrix> matrix_;
    std::vector<size_t> image_;
    std::vector<double> sign_;
};

struct PureQubitState {
    double alpha = 1.0;
    double beta = 0.0;

    /// Throws Error(InvalidArgument) unless alpha^2 + beta^2 = 1 within tol.
    static PureQubitState make(double alpha, double beta, double tol = 1e-12);
    Vector vec() const {
        return {alpha, beta};
    }
};

struct Code {
    std::string name;
    int num_qubits = 0;
    Vector logical0;
    Vector logical1;

    size_t dim() const noexcept {
        return logical0.size();
    }
    const Vector &logical(int m) const {
        return m == 0 ? logical0 : logical1;
    }
};

/// |000>, |111>.
Code bitflip3();
/// Five-qubit perfect code, sixteen +-1/4 terms per logical vector.
Code divincenzo5();
/// Shor code: tensor cube of (|000> +- |111>)/sqrt(2).
Code shor9();

const std::vector<std::string> &code_names();
/// Throws Error(UnknownCode) listing the valid names.
Code code_by_name(std::string_view name);

/// Channel order: I, then X_1..X_n (bitflip3 stops there), then Y_1..Y_n,
/// then Z_1..Z_n.
std::vector<ErrorOperator> standard_error_set(const Code &code);

/// Row order used when stacking the recovery matrix. bitflip3 uses
/// (I, X_3, X_2, X_1) so that R is the P(4,5,6,7) P(3,4) permutation; the
/// other codes use the channel order.
std::vector<ErrorOperator> recovery_order(const Code &code);

/// Looks up `label` in ops, throwing Error(Channel) if absent.
const ErrorOperator &find_operator(const std::vector<ErrorOperator> &ops, std::string_view label);

Vector encode_state(const Code &code, const PureQubitState &psi);

/// Orthogonal U with U e_0 = |0>_L and U e_{2^(n-1)} = |1>_L. Column
/// (m, a), for data bit m and ancilla bits a, is seeded with X^a |m>_L (X on
/// the ancilla positions set in a) and Gram-Schmidt'd against the earlier
/// columns; any column left empty is filled from the standard basis. For
/// bitflip3 this reproduces the [C1 X2 X3] gate exactly.
DenseMatrix encoding_unitary(const Code &code);

}  // namespace uqec

#endif
