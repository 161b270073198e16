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

#ifndef UQEC_CORE_TENSOR_H
#define UQEC_CORE_TENSOR_H

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uqec {

using Vector = std::vector<double>;

/// Real dense matrix, row-major. Every operator in this library is real
/// (Y is taken as [[0,-1],[1,0]]), so transposition stands in for the adjoint.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols);
    DenseMatrix(size_t rows, size_t cols, std::vector<double> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(size_t d);
    static DenseMatrix zeros(size_t rows, size_t cols);
    static DenseMatrix column(std::span<const double> v);
    static DenseMatrix from_rows(const std::vector<Vector> &rows);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    double &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    double operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const double> entries() const noexcept {
        return entries_;
    }
    std::span<double> entries() noexcept {
        return entries_;
    }
    std::span<const double> row(size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    Vector col(size_t c) const;

    DenseMatrix transpose() const;
    double trace() const;

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator-=(const DenseMatrix &other);
    DenseMatrix &operator*=(double s);

    bool operator==(const DenseMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> entries_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b);
DenseMatrix operator*(DenseMatrix a, double s);
DenseMatrix operator*(double s, DenseMatrix a);
DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
Vector operator*(const DenseMatrix &m, std::span<const double> v);

/// Bipartition of a square matrix's index space into (first, rest) factors.
struct QubitSplit {
    size_t dim_first = 1;
    size_t dim_rest = 1;

    /// Validated constructor: both factors >= 1 and their product == total.
    static QubitSplit of(size_t dim_first, size_t dim_rest, size_t total);
    /// Single data qubit in front of an ancilla register, for a d-dim space.
    static QubitSplit leading_qubit(size_t total);

    size_t total() const noexcept {
        return dim_first * dim_rest;
    }
};

enum class Keep { First, Rest };

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);
Vector kron(std::span<const double> a, std::span<const double> b);

DenseMatrix partial_trace(const DenseMatrix &rho, QubitSplit split, Keep keep);

/// Matrix M with M|j> = |perm[j]>. Throws if perm is not a bijection on 0..d-1.
DenseMatrix permutation_matrix(std::span<const size_t> perm);

/// Extends orthonormal `rows` to a full d x d orthogonal matrix. Missing rows
/// come from Gram-Schmidt over the standard basis e_0, e_1, ... in order;
/// candidates whose residual norm falls below 1e-8 are skipped and kept rows
/// are sign-normalized so their leading nonzero entry is positive.
DenseMatrix orthonormal_completion(const std::vector<Vector> &rows, size_t d);

/// Gram-Schmidt extension of an orthonormal set. Each candidate is projected
/// out of the current basis and appended if its residual norm is at least
/// `skip_below`. Returns only the appended vectors, in acceptance order.
std::vector<Vector> extend_orthonormal(const std::vector<Vector> &basis,
                                       const std::vector<Vector> &candidates, double skip_below,
                                       bool positive_leading);

/// Throws Error(InvalidArgument) naming the first pair whose inner product
/// deviates from the identity by more than tol.
void require_orthonormal(const std::vector<Vector> &rows, double tol);

double frobenius_norm(const DenseMatrix &a);
double frobenius_distance(const DenseMatrix &a, const DenseMatrix &b);
double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b);
/// ||M M^T - I||_F.
double orthogonality_defect(const DenseMatrix &m);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
DenseMatrix outer(std::span<const double> a, std::span<const double> b);

// Text format: "rows cols" header, then one line per row of space-separated
// %.17g scalars. Round-trips bit-exactly.
std::string format_matrix(const DenseMatrix &m);
DenseMatrix parse_matrix(std::string_view text);
void write_matrix_file(const std::string &path, const DenseMatrix &m);
DenseMatrix read_matrix_file(const std::string &path);

std::string format_double(double x);

}  // namespace uqec

#endif
