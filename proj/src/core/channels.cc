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

#include "core/channels.h"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "core/error.h"

namespace uqec {

namespace {

constexpr double kKlTolerance = 1e-10;

std::string class_display(const std::vector<std::string> &members) {
    if (members.size() == 1) {
        return members.front();
    }
    std::string s = "{";
    for (size_t k = 0; k < members.size(); k++) {
        s += (k ? "," : "") + members[k];
    }
    return s + "}";
}

ErrorChannel normalized_channel(std::vector<ChannelTerm> terms) {
    double sum = 0;
    for (const auto &t : terms) {
        if (!std::isfinite(t.probability) || t.probability < 0) {
            throw Error(ErrorKind::Channel,
                        "probability for " + t.op.label() + " must be a nonnegative number, got " +
                            format_double(t.probability));
        }
        sum += t.probability;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error(ErrorKind::Channel, "channel probabilities sum to " + format_double(sum) + ", not 1");
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        for (auto &t : terms) {
            t.probability /= sum;
        }
    }
    return ErrorChannel::make(std::move(terms), 1e-12);
}

}  // namespace

DensityMatrix::Diagnostics DensityMatrix::inspect(const DenseMatrix &m) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(ErrorKind::Dimension, "density matrix must be square and nonempty");
    }
    Diagnostics d;
    const size_t n = m.rows();
    Eigen::MatrixXd sym(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            d.asymmetry = std::max(d.asymmetry, std::abs(m(i, j) - m(j, i)));
            sym(i, j) = 0.5 * (m(i, j) + m(j, i));
        }
    }
    d.trace_error = std::abs(m.trace() - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
    return d;
}

DensityMatrix DensityMatrix::validated(DenseMatrix m, double tol, double eig_floor) {
    auto d = inspect(m);
    if (d.asymmetry > tol) {
        throw Error(ErrorKind::InvalidArgument, "density matrix is not symmetric (max deviation " +
                                                    format_double(d.asymmetry) + ")");
    }
    if (d.trace_error > tol) {
        throw Error(ErrorKind::InvalidArgument, "density matrix trace differs from 1 by " +
                                                    format_double(d.trace_error));
    }
    if (d.min_eigenvalue < eig_floor) {
        throw Error(ErrorKind::InvalidArgument, "density matrix has negative eigenvalue " +
                                                    format_double(d.min_eigenvalue));
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_pure(std::span<const double> psi) {
    double n = norm(psi);
    if (std::abs(n - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "pure state has norm " + format_double(n));
    }
    return DensityMatrix(outer(psi, psi));
}

DensityMatrix DensityMatrix::trusted(DenseMatrix m) {
    if (!m.is_square()) {
        throw Error(ErrorKind::Dimension, "density matrix must be square");
    }
    return DensityMatrix(std::move(m));
}

ErrorChannel ErrorChannel::make(std::vector<ChannelTerm> terms, double tol) {
    if (terms.empty()) {
        throw Error(ErrorKind::Channel, "channel has no terms");
    }
    double sum = 0;
    for (const auto &t : terms) {
        if (!std::isfinite(t.probability) || t.probability < 0 || t.probability > 1) {
            throw Error(ErrorKind::Channel, "probability for " + t.op.label() + " outside [0, 1]: " +
                                                format_double(t.probability));
        }
        if (t.op.dim() != terms.front().op.dim()) {
            throw Error(ErrorKind::Dimension, "channel operators act on different dimensions");
        }
        sum += t.probability;
    }
    if (std::abs(sum - 1.0) > tol) {
        throw Error(ErrorKind::Channel, "channel probabilities sum to " + format_double(sum) + ", not 1");
    }
    ErrorChannel ch;
    ch.terms_ = std::move(terms);
    return ch;
}

ErrorChannel channel_from_probs(const std::vector<ErrorOperator> &ops, std::span<const double> probs) {
    if (probs.size() != ops.size()) {
        throw Error(ErrorKind::Channel, "expected " + std::to_string(ops.size()) + " probabilities, got " +
                                            std::to_string(probs.size()));
    }
    std::vector<ChannelTerm> terms;
    for (size_t k = 0; k < ops.size(); k++) {
        terms.push_back({probs[k], ops[k]});
    }
    return normalized_channel(std::move(terms));
}

ErrorChannel parse_channel(std::string_view text, const std::vector<ErrorOperator> &ops) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<ChannelTerm> terms;
    std::set<std::string> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string label;
        std::string prob;
        if (!(ls >> label)) {
            continue;
        }
        std::string extra;
        if (!(ls >> prob) || (ls >> extra)) {
            throw Error(ErrorKind::Channel, "channel line " + std::to_string(lineno) +
                                                ": expected 'label probability'");
        }
        char *end = nullptr;
        double p = std::strtod(prob.c_str(), &end);
        if (end == prob.c_str() || *end != '\0') {
            throw Error(ErrorKind::Channel, "channel line " + std::to_string(lineno) + ": bad probability '" +
                                                prob + "'");
        }
        if (!seen.insert(label).second) {
            throw Error(ErrorKind::Channel, "channel line " + std::to_string(lineno) + ": duplicate label '" +
                                                label + "'");
        }
        terms.push_back({p, find_operator(ops, label)});
    }
    return normalized_channel(std::move(terms));
}

ErrorChannel read_channel_file(const std::string &path, const std::vector<ErrorOperator> &ops) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open channel file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_channel(ss.str(), ops);
}

DensityMatrix apply_channel(const ErrorChannel &ch, const DensityMatrix &rho) {
    if (ch.dim() != rho.dim()) {
        throw Error(ErrorKind::Dimension, "channel acts on dimension " + std::to_string(ch.dim()) +
                                              " but state has dimension " + std::to_string(rho.dim()));
    }
    DenseMatrix out(rho.dim(), rho.dim());
    for (const auto &t : ch.terms()) {
        if (t.probability == 0) {
            continue;
        }
        out += t.probability * t.op.conjugate(rho.matrix());
    }
    return DensityMatrix::trusted(std::move(out));
}

std::vector<std::vector<std::string>> KLReport::degenerate_classes() const {
    std::vector<std::vector<std::string>> out;
    for (const auto &c : classes) {
        if (c.size() > 1) {
            out.push_back(c);
        }
    }
    return out;
}

KLReport validate_kl(const Code &code, const std::vector<ErrorOperator> &ops) {
    KLReport report;
    std::vector<std::array<Vector, 2>> shifted;
    for (size_t k = 0; k < ops.size(); k++) {
        if (ops[k].dim() != code.dim()) {
            throw Error(ErrorKind::Dimension, ops[k].label() + " does not act on the " + code.name + " space");
        }
        std::array<Vector, 2> s{ops[k].apply(code.logical0), ops[k].apply(code.logical1)};
        size_t found = report.classes.size();
        for (size_t c = 0; c < report.representatives.size(); c++) {
            const auto &rep = shifted[report.representatives[c]];
            bool same = true;
            for (int m = 0; m < 2 && same; m++) {
                for (size_t i = 0; i < s[m].size(); i++) {
                    if (std::abs(s[m][i] - rep[m][i]) > kKlTolerance) {
                        same = false;
                        break;
                    }
                }
            }
            if (same) {
                found = c;
                break;
            }
        }
        if (found == report.classes.size()) {
            report.classes.push_back({});
            report.representatives.push_back(k);
        }
        report.classes[found].push_back(ops[k].label());
        report.class_of.push_back(found);
        shifted.push_back(std::move(s));
    }

    for (size_t a = 0; a < report.representatives.size(); a++) {
        for (size_t b = a; b < report.representatives.size(); b++) {
            const auto &sa = shifted[report.representatives[a]];
            const auto &sb = shifted[report.representatives[b]];
            for (int m = 0; m < 2; m++) {
                for (int n = 0; n < 2; n++) {
                    double expected = (a == b && m == n) ? 1.0 : 0.0;
                    double dev = std::abs(dot(sa[m], sb[n]) - expected);
                    if (report.worst_pair.empty() || dev > report.gram_deviation) {
                        report.gram_deviation = dev;
                        report.worst_pair = "<" + std::to_string(m) + "|" + ops[report.representatives[a]].label() +
                                            "^T " + ops[report.representatives[b]].label() + "|" +
                                            std::to_string(n) + ">";
                    }
                }
            }
        }
    }

    bool singletons = true;
    for (const auto &c : report.classes) {
        singletons = singletons && c.size() == 1;
    }
    report.is_nondegenerate = singletons && report.gram_deviation <= kKlTolerance;
    return report;
}

RecoveryMatrix build_recovery(const Code &code, const std::vector<ErrorOperator> &ops) {
    KLReport kl = validate_kl(code, ops);
    if (kl.gram_deviation > kKlTolerance) {
        throw Error(ErrorKind::KnillLaflamme, "error-shifted codewords of " + code.name +
                                                  " are not orthonormal: " + kl.worst_pair + " deviates by " +
                                                  format_double(kl.gram_deviation));
    }
    const size_t d = code.dim();
    const size_t half = d / 2;
    const size_t classes = kl.representatives.size();
    if (2 * classes > d) {
        throw Error(ErrorKind::KnillLaflamme, "too many error classes for a " + std::to_string(d) + "-dim space");
    }

    RecoveryMatrix r;
    for (size_t c = 0; c < classes; c++) {
        r.class_labels.push_back(class_display(kl.classes[c]));
    }
    for (size_t k = 0; k < ops.size(); k++) {
        r.class_map.emplace(ops[k].label(), kl.class_of[k]);
    }

    std::vector<Vector> labeled;
    std::vector<RowLabel> labeled_meta;
    for (int m = 0; m < 2; m++) {
        for (size_t c = 0; c < classes; c++) {
            const auto &rep = ops[kl.representatives[c]];
            labeled.push_back(rep.apply(code.logical(m)));
            labeled_meta.push_back(RowLabel{m, c, rep.label()});
        }
    }
    DenseMatrix full = orthonormal_completion(labeled, d);

    r.matrix = DenseMatrix(d, d);
    r.row_labels.assign(d, RowLabel{});
    auto place = [&](size_t dst, std::span<const double> row, RowLabel label) {
        std::copy(row.begin(), row.end(), r.matrix.entries().begin() + dst * d);
        r.row_labels[dst] = std::move(label);
    };
    for (size_t c = 0; c < classes; c++) {
        place(c, labeled[c], labeled_meta[c]);
        place(half + c, labeled[classes + c], labeled_meta[classes + c]);
    }
    size_t src = 2 * classes;
    for (size_t base : {size_t{0}, half}) {
        for (size_t k = classes; k < half; k++) {
            place(base + k, full.row(src++), RowLabel{});
        }
    }
    return r;
}

DensityMatrix apply_recovery(const RecoveryMatrix &r, const DensityMatrix &rho_err) {
    if (r.dim() != rho_err.dim()) {
        throw Error(ErrorKind::Dimension, "recovery matrix is " + std::to_string(r.dim()) + "-dim but state is " +
                                              std::to_string(rho_err.dim()) + "-dim");
    }
    return DensityMatrix::trusted(r.matrix * rho_err.matrix() * r.matrix.transpose());
}

ConventionalRecovery conventional_recovery_bitflip3(const DensityMatrix &rho_err) {
    if (rho_err.dim() != 8) {
        throw Error(ErrorKind::Dimension, "conventional 3-qubit recovery needs an 8-dim state, got " +
                                              std::to_string(rho_err.dim()));
    }
    DenseMatrix sum(8, 8);
    for (const auto &x : standard_error_set(bitflip3())) {
        sum += x.conjugate(rho_err.matrix());
    }
    DenseMatrix projected(8, 8);
    for (size_t i : {size_t{0}, size_t{7}}) {
        for (size_t j : {size_t{0}, size_t{7}}) {
            projected(i, j) = sum(i, j);
        }
    }
    double tr = projected.trace();
    if (tr <= 1e-14) {
        throw Error(ErrorKind::Channel, "state has no weight on the correctable family after projection");
    }
    bool renormalize = std::abs(tr - 1.0) > 1e-12;
    if (renormalize) {
        projected *= 1.0 / tr;
    }
    return ConventionalRecovery{DensityMatrix::trusted(std::move(projected)), tr, renormalize};
}

size_t TrajectorySampler::draw(const ErrorChannel &ch) {
    const auto &terms = ch.terms();
    // 53 random bits -> uniform double in [0, 1).
    double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    double acc = 0;
    size_t last_positive = 0;
    for (size_t k = 0; k < terms.size(); k++) {
        if (terms[k].probability <= 0) {
            continue;
        }
        last_positive = k;
        acc += terms[k].probability;
        if (u < acc) {
            return k;
        }
    }
    return last_positive;
}

Trajectory TrajectorySampler::sample(const ErrorChannel &ch, std::span<const double> state) {
    size_t k = draw(ch);
    return Trajectory{k, ch.terms()[k].op.apply(state)};
}

Trajectory sample_trajectory(const ErrorChannel &ch, std::span<const double> state, uint64_t seed) {
    TrajectorySampler sampler(seed);
    return sampler.sample(ch, state);
}

}  // namespace uqec
