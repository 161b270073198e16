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

// Brute-force reference computations for tests. Nothing here calls into the
// library: matrices are nested vectors, Pauli embeddings are built entrywise
// from bit patterns, and products are plain triple loops.
#ifndef UQEC_TESTS_ORACLE_H
#define UQEC_TESTS_ORACLE_H

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<double>>;
using Vec = std::vector<double>;

inline Mat zeros(size_t d) {
    return Mat(d, Vec(d, 0.0));
}

inline Mat identity(size_t d) {
    Mat m = zeros(d);
    for (size_t k = 0; k < d; k++) {
        m[k][k] = 1;
    }
    return m;
}

// 2x2 matrices indexed [row][col]; kind is one of 'I', 'X', 'Y', 'Z' with
// Y = [[0,-1],[1,0]].
inline double pauli_entry(char kind, int r, int c) {
    switch (kind) {
        case 'X':
            return r != c ? 1.0 : 0.0;
        case 'Y':
            return r == 1 && c == 0 ? 1.0 : (r == 0 && c == 1 ? -1.0 : 0.0);
        case 'Z':
            return r == c ? (r == 0 ? 1.0 : -1.0) : 0.0;
        default:
            return r == c ? 1.0 : 0.0;
    }
}

// Entry (i, j) of P acting on qubit q (1 = most significant) of n qubits is
// the product over qubits of the single-qubit entries at those bits.
inline Mat pauli_on_qubit(char kind, int q, int n) {
    const size_t d = size_t{1} << n;
    Mat m = zeros(d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            double v = 1.0;
            for (int k = 1; k <= n && v != 0; k++) {
                int bi = static_cast<int>((i >> (n - k)) & 1);
                int bj = static_cast<int>((j >> (n - k)) & 1);
                v *= pauli_entry(k == q ? kind : 'I', bi, bj);
            }
            m[i][j] = v;
        }
    }
    return m;
}

inline Mat matmul(const Mat &a, const Mat &b) {
    Mat out(a.size(), Vec(b[0].size(), 0.0));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t k = 0; k < b.size(); k++) {
            for (size_t j = 0; j < b[0].size(); j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline Mat transpose(const Mat &a) {
    Mat t(a[0].size(), Vec(a.size(), 0.0));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) {
            t[j][i] = a[i][j];
        }
    }
    return t;
}

inline Vec matvec(const Mat &a, const Vec &v) {
    Vec out(a.size(), 0.0);
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            out[i] += a[i][j] * v[j];
        }
    }
    return out;
}

inline Mat outer(const Vec &a, const Vec &b) {
    Mat m(a.size(), Vec(b.size(), 0.0));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            m[i][j] = a[i] * b[j];
        }
    }
    return m;
}

// sum_k p_k W_k rho W_k^T
inline Mat channel(const std::vector<double> &p, const std::vector<Mat> &ops, const Mat &rho) {
    Mat out = zeros(rho.size());
    for (size_t k = 0; k < ops.size(); k++) {
        Mat term = matmul(matmul(ops[k], rho), transpose(ops[k]));
        for (size_t i = 0; i < rho.size(); i++) {
            for (size_t j = 0; j < rho.size(); j++) {
                out[i][j] += p[k] * term[i][j];
            }
        }
    }
    return out;
}

inline double dot(const Vec &a, const Vec &b) {
    double s = 0;
    for (size_t k = 0; k < a.size(); k++) {
        s += a[k] * b[k];
    }
    return s;
}

}  // namespace oracle

#endif
