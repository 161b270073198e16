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

#include "core/codes.h"

#include <algorithm>
#include <cmath>

#include "core/error.h"

namespace uqec {

namespace {

DenseMatrix single_qubit(PauliKind kind) {
    switch (kind) {
        case PauliKind::I:
            return DenseMatrix::identity(2);
        case PauliKind::X:
            return {{0, 1}, {1, 0}};
        case PauliKind::Y:
            return {{0, -1}, {1, 0}};
        case PauliKind::Z:
            return {{1, 0}, {0, -1}};
    }
    throw Error(ErrorKind::InvalidArgument, "unknown Pauli kind");
}

char kind_char(PauliKind kind) {
    switch (kind) {
        case PauliKind::I:
            return 'I';
        case PauliKind::X:
            return 'X';
        case PauliKind::Y:
            return 'Y';
        case PauliKind::Z:
            return 'Z';
    }
    return '?';
}

Vector basis_sum(int n, const std::vector<std::string> &plus, const std::vector<std::string> &minus, double c) {
    Vector v(size_t{1} << n, 0.0);
    for (const auto &s : plus) {
        v[std::stoul(s, nullptr, 2)] += c;
    }
    for (const auto &s : minus) {
        v[std::stoul(s, nullptr, 2)] -= c;
    }
    return v;
}

}  // namespace

ErrorOperator ErrorOperator::make(PauliKind kind, int qubit, int num_qubits) {
    if (num_qubits < 1 || num_qubits > 10) {
        throw Error(ErrorKind::InvalidArgument, "error_operator: unsupported qubit count " + std::to_string(num_qubits));
    }
    if (kind != PauliKind::I && (qubit < 1 || qubit > num_qubits)) {
        throw Error(ErrorKind::InvalidArgument, "error_operator: qubit " + std::to_string(qubit) +
                                                    " out of range 1.." + std::to_string(num_qubits));
    }
    ErrorOperator op;
    op.kind_ = kind;
    op.qubit_ = kind == PauliKind::I ? 0 : qubit;
    op.num_qubits_ = num_qubits;
    op.label_ = kind == PauliKind::I ? "I" : std::string(1, kind_char(kind)) + "_" + std::to_string(qubit);

    DenseMatrix m = DenseMatrix::identity(1);
    for (int q = 1; q <= num_qubits; q++) {
        m = kron(m, q == op.qubit_ ? single_qubit(kind) : DenseMatrix::identity(2));
    }

    const size_t d = m.rows();
    op.image_.assign(d, 0);
    op.sign_.assign(d, 0.0);
    for (size_t j = 0; j < d; j++) {
        int hits = 0;
        for (size_t i = 0; i < d; i++) {
            double x = m(i, j);
            if (x != 0) {
                if (std::abs(x) != 1.0) {
                    throw Error(ErrorKind::InvalidArgument, op.label_ + " is not a signed permutation");
                }
                op.image_[j] = i;
                op.sign_[j] = x;
                hits++;
            }
        }
        if (hits != 1) {
            throw Error(ErrorKind::InvalidArgument, op.label_ + " is not a signed permutation");
        }
    }
    op.matrix_ = std::make_shared<const DenseMatrix>(std::move(m));
    return op;
}

Vector ErrorOperator::apply(std::span<const double> v) const {
    if (v.size() != dim()) {
        throw Error(ErrorKind::Dimension, label_ + ": vector length " + std::to_string(v.size()) +
                                              " does not match dimension " + std::to_string(dim()));
    }
    Vector out(v.size(), 0.0);
    for (size_t j = 0; j < v.size(); j++) {
        out[image_[j]] = sign_[j] * v[j];
    }
    return out;
}

DenseMatrix ErrorOperator::conjugate(const DenseMatrix &rho) const {
    if (!rho.is_square() || rho.rows() != dim()) {
        throw Error(ErrorKind::Dimension, label_ + ": density dimension " + std::to_string(rho.rows()) +
                                              " does not match operator dimension " + std::to_string(dim()));
    }
    const size_t d = dim();
    DenseMatrix out(d, d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            out(image_[i], image_[j]) = sign_[i] * sign_[j] * rho(i, j);
        }
    }
    return out;
}

PureQubitState PureQubitState::make(double alpha, double beta, double tol) {
    double n2 = alpha * alpha + beta * beta;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
        throw Error(ErrorKind::InvalidArgument, "qubit state (" + format_double(alpha) + ", " + format_double(beta) +
                                                    ") is not normalized");
    }
    return PureQubitState{alpha, beta};
}

Code bitflip3() {
    Vector l0(8, 0.0);
    Vector l1(8, 0.0);
    l0[0] = 1.0;
    l1[7] = 1.0;
    return Code{"bitflip3", 3, std::move(l0), std::move(l1)};
}

Code divincenzo5() {
    Vector l0 = basis_sum(5, {"00000", "11000", "01100", "00110", "00011", "10001"},
                          {"10100", "01010", "00101", "10010", "01001", "11110", "01111", "10111", "11011", "11101"},
                          0.25);
    Vector l1 = basis_sum(5, {"11111", "00111", "10011", "11001", "11100", "01110"},
                          {"01011", "10101", "11010", "01101", "10110", "00001", "10000", "01000", "00100", "00010"},
                          0.25);
    return Code{"divincenzo5", 5, std::move(l0), std::move(l1)};
}

Code shor9() {
    const double h = 1.0 / std::sqrt(2.0);
    Vector plus(8, 0.0);
    Vector minus(8, 0.0);
    plus[0] = h;
    plus[7] = h;
    minus[0] = h;
    minus[7] = -h;
    Vector l0 = kron(kron(plus, plus), plus);
    Vector l1 = kron(kron(minus, minus), minus);
    return Code{"shor9", 9, std::move(l0), std::move(l1)};
}

const std::vector<std::string> &code_names() {
    static const std::vector<std::string> names{"bitflip3", "divincenzo5", "shor9"};
    return names;
}

Code code_by_name(std::string_view name) {
    if (name == "bitflip3") {
        return bitflip3();
    }
    if (name == "divincenzo5") {
        return divincenzo5();
    }
    if (name == "shor9") {
        return shor9();
    }
    std::string valid;
    for (const auto &n : code_names()) {
        valid += (valid.empty() ? "" : ", ") + n;
    }
    throw Error(ErrorKind::UnknownCode, "unknown code '" + std::string(name) + "' (valid: " + valid + ")");
}

std::vector<ErrorOperator> standard_error_set(const Code &code) {
    const int n = code.num_qubits;
    std::vector<ErrorOperator> ops{ErrorOperator::identity(n)};
    if (code.name == "bitflip3") {
        for (int q = 1; q <= n; q++) {
            ops.push_back(ErrorOperator::make(PauliKind::X, q, n));
        }
        return ops;
    }
    if (code.name != "divincenzo5" && code.name != "shor9") {
        throw Error(ErrorKind::UnknownCode, "no standard error set for code '" + code.name + "'");
    }
    for (PauliKind k : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
        for (int q = 1; q <= n; q++) {
            ops.push_back(ErrorOperator::make(k, q, n));
        }
    }
    return ops;
}

std::vector<ErrorOperator> recovery_order(const Code &code) {
    auto ops = standard_error_set(code);
    if (code.name == "bitflip3") {
        std::reverse(ops.begin() + 1, ops.end());
    }
    return ops;
}

const ErrorOperator &find_operator(const std::vector<ErrorOperator> &ops, std::string_view label) {
    for (const auto &op : ops) {
        if (op.label() == label) {
            return op;
        }
    }
    throw Error(ErrorKind::Channel, "unknown error label '" + std::string(label) + "'");
}

Vector encode_state(const Code &code, const PureQubitState &psi) {
    Vector v(code.dim());
    for (size_t i = 0; i < v.size(); i++) {
        v[i] = psi.alpha * code.logical0[i] + psi.beta * code.logical1[i];
    }
    return v;
}

DenseMatrix encoding_unitary(const Code &code) {
    const size_t d = code.dim();
    const size_t half = d / 2;
    std::vector<Vector> columns(d);
    std::vector<bool> filled(d, false);
    columns[0] = code.logical0;
    columns[half] = code.logical1;
    filled[0] = filled[half] = true;

    std::vector<Vector> basis{code.logical0, code.logical1};
    require_orthonormal(basis, 1e-10);
    for (size_t j = 0; j < d; j++) {
        if (filled[j]) {
            continue;
        }
        const Vector &logical = j < half ? code.logical0 : code.logical1;
        const size_t flips = j % half;
        Vector cand(d);
        for (size_t i = 0; i < d; i++) {
            cand[i] = logical[i ^ flips];
        }
        auto added = extend_orthonormal(basis, {cand}, 1e-8, false);
        if (!added.empty()) {
            columns[j] = added.front();
            filled[j] = true;
            basis.push_back(std::move(added.front()));
        }
    }

    size_t next = 0;
    for (size_t c = 0; c < d && basis.size() < d; c++) {
        Vector e(d, 0.0);
        e[c] = 1.0;
        auto added = extend_orthonormal(basis, {e}, 1e-8, true);
        if (added.empty()) {
            continue;
        }
        while (filled[next]) {
            next++;
        }
        columns[next] = added.front();
        filled[next] = true;
        basis.push_back(std::move(added.front()));
    }

    DenseMatrix u(d, d);
    for (size_t j = 0; j < d; j++) {
        for (size_t i = 0; i < d; i++) {
            u(i, j) = columns[j][i];
        }
    }
    return u;
}

}  // namespace uqec
