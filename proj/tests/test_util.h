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

#ifndef UQEC_TESTS_TEST_UTIL_H
#define UQEC_TESTS_TEST_UTIL_H

#include <random>

#include "core/tensor.h"
#include "oracle.h"

namespace uqec::testing {

inline DenseMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(rows, cols);
    for (auto &x : m.entries()) {
        x = u(rng);
    }
    return m;
}

/// A A^T / tr(A A^T): symmetric, PSD, unit trace.
inline DenseMatrix random_density(std::mt19937_64 &rng, size_t d) {
    DenseMatrix a = random_matrix(rng, d, d);
    DenseMatrix rho = a * a.transpose();
    rho *= 1.0 / rho.trace();
    return rho;
}

inline oracle::Mat to_oracle(const DenseMatrix &m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out[i][j] = m(i, j);
        }
    }
    return out;
}

inline double max_abs_diff(const DenseMatrix &m, const oracle::Mat &o) {
    double worst = 0;
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            worst = std::max(worst, std::abs(m(i, j) - o[i][j]));
        }
    }
    return worst;
}

}  // namespace uqec::testing

#endif
