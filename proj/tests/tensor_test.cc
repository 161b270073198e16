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

#include "core/tensor.h"

#include <cmath>
#include <random>

#include "core/error.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace uqec;
using uqec::testing::random_matrix;

namespace {

const DenseMatrix kX{{0, 1}, {1, 0}};
const DenseMatrix kZ{{1, 0}, {0, -1}};

std::vector<size_t> iota_perm(size_t d) {
    std::vector<size_t> p(d);
    for (size_t k = 0; k < d; k++) {
        p[k] = k;
    }
    return p;
}

}  // namespace

TEST(dense_matrix, rejects_bad_entry_count) {
    EXPECT_THROW(DenseMatrix(2, 2, {1, 2, 3}), Error);
}

TEST(kron, identity_and_basis_swap) {
    EXPECT_EQ(kron(DenseMatrix::identity(2), DenseMatrix::identity(2)), DenseMatrix::identity(4));

    DenseMatrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    EXPECT_EQ(kron(kX, DenseMatrix::identity(2)), expected);
}

TEST(kron, x_on_first_of_three_maps_000_to_100) {
    DenseMatrix x1 = kron(kX, kron(DenseMatrix::identity(2), DenseMatrix::identity(2)));
    Vector e0(8, 0.0);
    e0[0] = 1;
    Vector out = x1 * e0;
    for (size_t k = 0; k < 8; k++) {
        EXPECT_EQ(out[k], k == 4 ? 1.0 : 0.0);
    }
}

TEST(kron, associative_on_random_inputs) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_matrix(rng, 1 + trial % 3, 2);
        auto b = random_matrix(rng, 2, 1 + trial % 2);
        auto c = random_matrix(rng, 3, 2);
        EXPECT_LE(max_abs_difference(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    }
}

TEST(partial_trace, product_reduces_to_scaled_factor) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; trial++) {
        auto a = random_matrix(rng, 2, 2);
        auto b = random_matrix(rng, 4, 4);
        auto split = QubitSplit::of(2, 4, 8);
        EXPECT_LE(max_abs_difference(partial_trace(kron(a, b), split, Keep::First), a * b.trace()), 1e-12);
        EXPECT_LE(max_abs_difference(partial_trace(kron(a, b), split, Keep::Rest), b * a.trace()), 1e-12);
    }
}

TEST(partial_trace, bell_state_reduces_to_maximally_mixed) {
    const double h = 1.0 / std::sqrt(2.0);
    Vector bell{h, 0, 0, h};
    DenseMatrix rho = outer(bell, bell);
    DenseMatrix reduced = partial_trace(rho, QubitSplit::leading_qubit(4), Keep::First);
    DenseMatrix half{{0.5, 0}, {0, 0.5}};
    EXPECT_LE(max_abs_difference(reduced, half), 1e-15);
}

TEST(partial_trace, preserves_trace) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; trial++) {
        auto rho = uqec::testing::random_density(rng, 16);
        for (auto split : {QubitSplit::of(2, 8, 16), QubitSplit::of(4, 4, 16), QubitSplit::of(8, 2, 16)}) {
            for (Keep keep : {Keep::First, Keep::Rest}) {
                EXPECT_NEAR(partial_trace(rho, split, keep).trace(), rho.trace(), 1e-12);
            }
        }
    }
}

TEST(partial_trace, dimension_mismatch) {
    EXPECT_THROW(partial_trace(DenseMatrix::identity(6), QubitSplit::of(2, 4, 8), Keep::First), Error);
    EXPECT_THROW(QubitSplit::of(2, 3, 8), Error);
    EXPECT_THROW(QubitSplit::of(0, 8, 0), Error);
}

TEST(permutation_matrix, identity_and_transposition) {
    EXPECT_EQ(permutation_matrix(iota_perm(8)), DenseMatrix::identity(8));

    auto p = iota_perm(8);
    std::swap(p[3], p[4]);
    DenseMatrix m = permutation_matrix(p);
    for (size_t j = 0; j < 8; j++) {
        Vector e(8, 0.0);
        e[j] = 1;
        Vector out = m * e;
        size_t expected = j == 3 ? 4 : (j == 4 ? 3 : j);
        for (size_t i = 0; i < 8; i++) {
            EXPECT_EQ(out[i], i == expected ? 1.0 : 0.0);
        }
    }
}

TEST(permutation_matrix, rejects_non_bijection) {
    std::vector<size_t> p{0, 1, 1};
    EXPECT_THROW(permutation_matrix(p), Error);
    std::vector<size_t> q{0, 3, 1};
    EXPECT_THROW(permutation_matrix(q), Error);
}

TEST(permutation_matrix, composition_property) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; trial++) {
        size_t d = 1 + trial % 9;
        auto p = iota_perm(d);
        auto q = iota_perm(d);
        std::shuffle(p.begin(), p.end(), rng);
        std::shuffle(q.begin(), q.end(), rng);
        std::vector<size_t> pq(d);
        for (size_t j = 0; j < d; j++) {
            pq[j] = p[q[j]];
        }
        EXPECT_EQ(permutation_matrix(p) * permutation_matrix(q), permutation_matrix(pq));
    }
}

TEST(orthonormal_completion, standard_basis_prefix) {
    Vector e0{1, 0, 0, 0};
    Vector e1{0, 1, 0, 0};
    EXPECT_EQ(orthonormal_completion({e0, e1}, 4), DenseMatrix::identity(4));
}

TEST(orthonormal_completion, single_diagonal_row) {
    const double h = 1.0 / std::sqrt(2.0);
    DenseMatrix m = orthonormal_completion({{h, h}}, 2);
    EXPECT_NEAR(m(1, 0), h, 1e-15);
    EXPECT_NEAR(m(1, 1), -h, 1e-15);
}

TEST(orthonormal_completion, full_basis_is_unchanged) {
    std::mt19937_64 rng(5);
    auto p = iota_perm(8);
    std::shuffle(p.begin(), p.end(), rng);
    DenseMatrix perm = permutation_matrix(p);
    std::vector<Vector> rows;
    for (size_t r = 0; r < 8; r++) {
        rows.emplace_back(perm.row(r).begin(), perm.row(r).end());
    }
    EXPECT_EQ(orthonormal_completion(rows, 8), perm);
}

TEST(orthonormal_completion, random_prefixes_complete_to_orthogonal) {
    std::mt19937_64 rng(6);
    for (size_t d : {4u, 16u, 64u}) {
        // Rows of a random orthogonal matrix via completion of random vectors.
        std::vector<Vector> cands;
        for (size_t k = 0; k < d / 3; k++) {
            auto m = random_matrix(rng, 1, d);
            cands.emplace_back(m.entries().begin(), m.entries().end());
        }
        auto rows = extend_orthonormal({}, cands, 1e-8, false);
        DenseMatrix full = orthonormal_completion(rows, d);
        EXPECT_LE(orthogonality_defect(full), 1e-10);
        for (size_t r = 0; r < rows.size(); r++) {
            for (size_t c = 0; c < d; c++) {
                EXPECT_EQ(full(r, c), rows[r][c]);
            }
        }
    }
}

TEST(orthonormal_completion, rejects_non_orthonormal_input) {
    try {
        orthonormal_completion({{1, 0, 0}, {1, 1, 0}}, 3);
        FAIL() << "expected rejection";
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("rows 0 and 1"), std::string::npos) << e.what();
    }
}

TEST(frobenius_distance, examples) {
    EXPECT_EQ(frobenius_distance(kX, kX), 0.0);
    EXPECT_DOUBLE_EQ(frobenius_distance(DenseMatrix::identity(2), DenseMatrix::zeros(2, 2)), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(frobenius_distance(kX, kZ), 2.0);
    EXPECT_THROW(frobenius_distance(kX, DenseMatrix::identity(3)), Error);
}

TEST(matrix_text, round_trip_is_bit_exact) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 5; trial++) {
        auto m = random_matrix(rng, 1 + trial, 3 + trial);
        m(0, 0) = 1.0 / 3.0;
        EXPECT_EQ(parse_matrix(format_matrix(m)), m);
    }
}

TEST(matrix_text, header_and_layout) {
    DenseMatrix m{{1, -0.25}, {0, 2}};
    EXPECT_EQ(format_matrix(m), "2 2\n1 -0.25\n0 2\n");
    EXPECT_THROW(parse_matrix("2 2\n1 2 3\n"), Error);
    EXPECT_THROW(parse_matrix("x"), Error);
    EXPECT_THROW(parse_matrix("1 1\nabc\n"), Error);
}
