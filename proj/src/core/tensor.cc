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

#include <Eigen/Core>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/error.h"

namespace uqec {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_same_shape(const DenseMatrix &a, const DenseMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::Dimension, std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
    }
}

}  // namespace

DenseMatrix::DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {
}

DenseMatrix::DenseMatrix(size_t rows, size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::Dimension, "DenseMatrix: " + std::to_string(entries_.size()) +
                                              " entries cannot fill " + std::to_string(rows_) + "x" +
                                              std::to_string(cols_));
    }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::Dimension, "DenseMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(size_t d) {
    DenseMatrix m(d, d);
    for (size_t k = 0; k < d; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::zeros(size_t rows, size_t cols) {
    return DenseMatrix(rows, cols);
}

DenseMatrix DenseMatrix::column(std::span<const double> v) {
    return DenseMatrix(v.size(), 1, Vector(v.begin(), v.end()));
}

DenseMatrix DenseMatrix::from_rows(const std::vector<Vector> &rows) {
    if (rows.empty()) {
        return {};
    }
    size_t cols = rows.front().size();
    Vector entries;
    entries.reserve(rows.size() * cols);
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw Error(ErrorKind::Dimension, "from_rows: ragged rows");
        }
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return DenseMatrix(rows.size(), cols, std::move(entries));
}

Vector DenseMatrix::col(size_t c) const {
    Vector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

double DenseMatrix::trace() const {
    if (!is_square()) {
        throw Error(ErrorKind::Dimension, "trace of a non-square matrix");
    }
    double t = 0;
    for (size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(double s) {
    for (auto &x : entries_) {
        x *= s;
    }
    return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
    a += b;
    return a;
}

DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
    a -= b;
    return a;
}

DenseMatrix operator*(DenseMatrix a, double s) {
    a *= s;
    return a;
}

DenseMatrix operator*(double s, DenseMatrix a) {
    a *= s;
    return a;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::Dimension, "matrix product: inner dimensions " + std::to_string(a.cols()) +
                                              " and " + std::to_string(b.rows()) + " differ");
    }
    DenseMatrix out(a.rows(), b.cols());
    Eigen::Map<const RowMajor> ma(a.entries().data(), a.rows(), a.cols());
    Eigen::Map<const RowMajor> mb(b.entries().data(), b.rows(), b.cols());
    Eigen::Map<RowMajor> mo(out.entries().data(), out.rows(), out.cols());
    mo.noalias() = ma * mb;
    return out;
}

Vector operator*(const DenseMatrix &m, std::span<const double> v) {
    if (m.cols() != v.size()) {
        throw Error(ErrorKind::Dimension, "matrix-vector product: dimension mismatch");
    }
    Vector out(m.rows(), 0.0);
    for (size_t r = 0; r < m.rows(); r++) {
        out[r] = dot(m.row(r), v);
    }
    return out;
}

QubitSplit QubitSplit::of(size_t dim_first, size_t dim_rest, size_t total) {
    if (dim_first < 1 || dim_rest < 1 || dim_first * dim_rest != total) {
        throw Error(ErrorKind::Dimension, "QubitSplit: " + std::to_string(dim_first) + " x " +
                                              std::to_string(dim_rest) + " does not factor " +
                                              std::to_string(total));
    }
    return QubitSplit{dim_first, dim_rest};
}

QubitSplit QubitSplit::leading_qubit(size_t total) {
    if (total < 2 || total % 2 != 0) {
        throw Error(ErrorKind::Dimension, "leading_qubit: dimension " + std::to_string(total) + " is not even");
    }
    return of(2, total / 2, total);
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            double s = a(ar, ac);
            if (s == 0) {
                continue;
            }
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

Vector kron(std::span<const double> a, std::span<const double> b) {
    Vector out;
    out.reserve(a.size() * b.size());
    for (double x : a) {
        for (double y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

DenseMatrix partial_trace(const DenseMatrix &rho, QubitSplit split, Keep keep) {
    if (!rho.is_square() || rho.rows() != split.total()) {
        throw Error(ErrorKind::Dimension, "partial_trace: matrix is " + std::to_string(rho.rows()) + "x" +
                                              std::to_string(rho.cols()) + " but split covers " +
                                              std::to_string(split.total()));
    }
    const size_t da = split.dim_first;
    const size_t db = split.dim_rest;
    if (keep == Keep::First) {
        DenseMatrix out(da, da);
        for (size_t i = 0; i < da; i++) {
            for (size_t j = 0; j < da; j++) {
                double s = 0;
                for (size_t k = 0; k < db; k++) {
                    s += rho(i * db + k, j * db + k);
                }
                out(i, j) = s;
            }
        }
        return out;
    }
    DenseMatrix out(db, db);
    for (size_t k = 0; k < da; k++) {
        for (size_t i = 0; i < db; i++) {
            for (size_t j = 0; j < db; j++) {
                out(i, j) += rho(k * db + i, k * db + j);
            }
        }
    }
    return out;
}

DenseMatrix permutation_matrix(std::span<const size_t> perm) {
    const size_t d = perm.size();
    std::vector<bool> hit(d, false);
    for (size_t j = 0; j < d; j++) {
        if (perm[j] >= d || hit[perm[j]]) {
            throw Error(ErrorKind::InvalidArgument,
                        "permutation_matrix: map is not a bijection (index " + std::to_string(j) + ")");
        }
        hit[perm[j]] = true;
    }
    DenseMatrix m(d, d);
    for (size_t j = 0; j < d; j++) {
        m(perm[j], j) = 1.0;
    }
    return m;
}

void require_orthonormal(const std::vector<Vector> &rows, double tol) {
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = i; j < rows.size(); j++) {
            double ip = dot(rows[i], rows[j]);
            double expected = i == j ? 1.0 : 0.0;
            if (std::abs(ip - expected) > tol) {
                throw Error(ErrorKind::InvalidArgument, "rows " + std::to_string(i) + " and " + std::to_string(j) +
                                                            " are not orthonormal: inner product " +
                                                            format_double(ip));
            }
        }
    }
}

std::vector<Vector> extend_orthonormal(const std::vector<Vector> &basis, const std::vector<Vector> &candidates,
                                       double skip_below, bool positive_leading) {
    std::vector<const Vector *> current;
    current.reserve(basis.size() + candidates.size());
    for (const auto &b : basis) {
        current.push_back(&b);
    }
    std::vector<Vector> added;
    added.reserve(candidates.size());
    for (const auto &cand : candidates) {
        Vector v = cand;
        double cand_norm = norm(v);
        if (cand_norm == 0) {
            continue;
        }
        // Two passes of modified Gram-Schmidt keep the residual orthogonal to
        // working precision even after hundreds of projections.
        for (int pass = 0; pass < 2; pass++) {
            for (const Vector *q : current) {
                double c = dot(*q, v);
                if (c == 0) {
                    continue;
                }
                for (size_t k = 0; k < v.size(); k++) {
                    v[k] -= c * (*q)[k];
                }
            }
        }
        double r = norm(v);
        if (r < skip_below) {
            continue;
        }
        for (auto &x : v) {
            x /= r;
        }
        if (positive_leading) {
            for (double x : v) {
                if (std::abs(x) > 1e-12) {
                    if (x < 0) {
                        for (auto &y : v) {
                            y = -y;
                        }
                    }
                    break;
                }
            }
        }
        added.push_back(std::move(v));
        current.push_back(&added.back());
    }
    return added;
}

DenseMatrix orthonormal_completion(const std::vector<Vector> &rows, size_t d) {
    for (const auto &r : rows) {
        if (r.size() != d) {
            throw Error(ErrorKind::Dimension, "orthonormal_completion: row of length " + std::to_string(r.size()) +
                                                  " in dimension " + std::to_string(d));
        }
    }
    if (rows.size() > d) {
        throw Error(ErrorKind::InvalidArgument, "orthonormal_completion: more rows than dimensions");
    }
    require_orthonormal(rows, 1e-10);

    std::vector<Vector> out = rows;
    for (size_t c = 0; c < d && out.size() < d; c++) {
        Vector e(d, 0.0);
        e[c] = 1.0;
        auto added = extend_orthonormal(out, {e}, 1e-8, true);
        for (auto &v : added) {
            out.push_back(std::move(v));
        }
    }
    if (out.size() != d) {
        throw Error(ErrorKind::InvalidArgument, "orthonormal_completion: standard basis exhausted early");
    }
    return DenseMatrix::from_rows(out);
}

double frobenius_norm(const DenseMatrix &a) {
    double s = 0;
    for (double x : a.entries()) {
        s += x * x;
    }
    return std::sqrt(s);
}

double frobenius_distance(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t k = 0; k < ea.size(); k++) {
        double diff = ea[k] - eb[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

double max_abs_difference(const DenseMatrix &a, const DenseMatrix &b) {
    require_same_shape(a, b, "max_abs_difference");
    double m = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t k = 0; k < ea.size(); k++) {
        m = std::max(m, std::abs(ea[k] - eb[k]));
    }
    return m;
}

double orthogonality_defect(const DenseMatrix &m) {
    return frobenius_distance(m * m.transpose(), DenseMatrix::identity(m.rows()));
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::Dimension, "dot: length mismatch");
    }
    double s = 0;
    for (size_t k = 0; k < a.size(); k++) {
        s += a[k] * b[k];
    }
    return s;
}

double norm(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

DenseMatrix outer(std::span<const double> a, std::span<const double> b) {
    DenseMatrix m(a.size(), b.size());
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < b.size(); j++) {
            m(i, j) = a[i] * b[j];
        }
    }
    return m;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_matrix(const DenseMatrix &m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (c) {
                out += ' ';
            }
            out += format_double(m(r, c));
        }
        out += '\n';
    }
    return out;
}

DenseMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long rows = -1;
    long long cols = -1;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
        throw Error(ErrorKind::Io, "matrix text: missing or invalid 'rows cols' header");
    }
    Vector entries;
    entries.reserve(static_cast<size_t>(rows * cols));
    std::string tok;
    while (in >> tok) {
        char *end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0') {
            throw Error(ErrorKind::Io, "matrix text: bad scalar '" + tok + "'");
        }
        entries.push_back(v);
    }
    if (entries.size() != static_cast<size_t>(rows * cols)) {
        throw Error(ErrorKind::Io, "matrix text: expected " + std::to_string(rows * cols) + " scalars, found " +
                                       std::to_string(entries.size()));
    }
    return DenseMatrix(static_cast<size_t>(rows), static_cast<size_t>(cols), std::move(entries));
}

void write_matrix_file(const std::string &path, const DenseMatrix &m) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    }
    out << format_matrix(m);
    if (!out) {
        throw Error(ErrorKind::Io, "write to '" + path + "' failed");
    }
}

DenseMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

}  // namespace uqec
