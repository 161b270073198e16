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

#include "core/analysis.h"

#include <cmath>
#include <optional>
#include <random>

#include "core/error.h"

namespace uqec {

FactorizationResult check_product_form(const DenseMatrix &rho_out, QubitSplit split, double tol) {
    FactorizationResult f;
    f.reduced_qubit = partial_trace(rho_out, split, Keep::First);
    f.reduced_ancilla = partial_trace(rho_out, split, Keep::Rest);
    f.residual = frobenius_distance(rho_out, kron(f.reduced_qubit, f.reduced_ancilla));
    f.is_product = f.residual <= tol;
    return f;
}

double fidelity_pure(const DenseMatrix &rho_a, const PureQubitState &psi) {
    if (rho_a.rows() != 2 || rho_a.cols() != 2) {
        throw Error(ErrorKind::Dimension, "fidelity_pure needs a 2x2 reduced state");
    }
    Vector v = psi.vec();
    return dot(v, rho_a * v);
}

std::vector<LabeledProbability> syndrome_distribution(const DenseMatrix &sigma_prime, const RecoveryMatrix &r,
                                                      double tol) {
    const size_t n = sigma_prime.rows();
    if (!sigma_prime.is_square() || n != r.ancilla_dim()) {
        throw Error(ErrorKind::Dimension, "ancilla state is " + std::to_string(n) + "-dim, recovery expects " +
                                              std::to_string(r.ancilla_dim()));
    }
    double off = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                off = std::max(off, std::abs(sigma_prime(i, j)));
            }
        }
    }
    if (off > tol) {
        throw Error(ErrorKind::NotDiagonal, "ancilla state is not diagonal: max off-diagonal magnitude " +
                                                format_double(off));
    }
    std::vector<LabeledProbability> out;
    for (size_t k = 0; k < r.num_classes(); k++) {
        out.push_back({r.class_labels[k], sigma_prime(k, k)});
    }
    if (r.num_classes() < n) {
        double outside = 0;
        for (size_t k = r.num_classes(); k < n; k++) {
            outside += sigma_prime(k, k);
        }
        out.push_back({"(outside)", outside});
    }
    return out;
}

DenseMatrix controlled_flip_gate(int num_qubits, const std::vector<int> &controls, const std::vector<int> &targets) {
    auto bit = [num_qubits](int q) {
        if (q < 1 || q > num_qubits) {
            throw Error(ErrorKind::InvalidArgument, "gate qubit " + std::to_string(q) + " out of range");
        }
        return size_t{1} << (num_qubits - q);
    };
    size_t control_mask = 0;
    size_t target_mask = 0;
    for (int q : controls) {
        control_mask |= bit(q);
    }
    for (int q : targets) {
        target_mask |= bit(q);
    }
    const size_t d = size_t{1} << num_qubits;
    std::vector<size_t> perm(d);
    for (size_t j = 0; j < d; j++) {
        perm[j] = (j & control_mask) == control_mask ? j ^ target_mask : j;
    }
    return permutation_matrix(perm);
}

PermutationFactorization verify_permutation_factorization_3qubit() {
    auto perm = [](std::initializer_list<std::pair<size_t, size_t>> swaps) {
        std::vector<size_t> p(8);
        for (size_t j = 0; j < 8; j++) {
            p[j] = j;
        }
        for (auto [a, b] : swaps) {
            std::swap(p[a], p[b]);
        }
        return permutation_matrix(p);
    };
    const DenseMatrix p34 = perm({{3, 4}});
    const DenseMatrix p37 = perm({{3, 7}});
    const DenseMatrix p4567 = perm({{4, 7}, {5, 6}});

    const Code code = bitflip3();
    const RecoveryMatrix r = build_recovery(code, recovery_order(code));

    PermutationFactorization out{};
    const DenseMatrix lhs = p4567 * p34;
    out.products_residual = max_abs_difference(lhs, p37 * p4567);
    out.row_built_residual = max_abs_difference(r.matrix, lhs);
    out.c1x2x3_residual = max_abs_difference(p4567, controlled_flip_gate(3, {1}, {2, 3}));
    out.x1c2c3_residual = max_abs_difference(p37, controlled_flip_gate(3, {2, 3}, {1}));
    return out;
}

CodeContext CodeContext::load(std::string_view name) {
    Code code = code_by_name(name);
    auto errors = standard_error_set(code);
    auto recovery = build_recovery(code, recovery_order(code));
    return CodeContext{std::move(code), std::move(errors), std::move(recovery)};
}

RecoveryReport run_experiment(const CodeContext &ctx, const ErrorChannel &ch, const PureQubitState &psi, double tol) {
    for (const auto &t : ch.terms()) {
        if (t.op.dim() != ctx.code.dim() || !ctx.recovery.class_map.contains(t.op.label())) {
            throw Error(ErrorKind::Channel, "operator " + t.op.label() + " is not in the " + ctx.code.name +
                                                " error set");
        }
    }
    RecoveryReport rep;
    rep.code = ctx.code.name;
    for (const auto &t : ch.terms()) {
        rep.channel.push_back({t.op.label(), t.probability});
    }
    rep.alpha = psi.alpha;
    rep.beta = psi.beta;
    rep.tolerance = tol;

    const auto rho = DensityMatrix::from_pure(encode_state(ctx.code, psi));
    const auto rho_err = apply_channel(ch, rho);
    const auto rho_out = apply_recovery(ctx.recovery, rho_err);

    rep.factorization = check_product_form(rho_out.matrix(), QubitSplit::leading_qubit(ctx.code.dim()), tol);
    rep.residual = rep.factorization.residual;
    rep.fidelity = fidelity_pure(rep.factorization.reduced_qubit, psi);
    rep.syndrome = syndrome_distribution(rep.factorization.reduced_ancilla, ctx.recovery, tol);

    double total = 0;
    for (const auto &s : rep.syndrome) {
        total += s.p;
    }
    rep.passed = rep.fidelity >= 1.0 - tol && rep.factorization.is_product && std::abs(total - 1.0) <= tol;
    return rep;
}

RecoveryReport run_experiment(std::string_view code_name, const ErrorChannel &ch, const PureQubitState &psi,
                              double tol) {
    return run_experiment(CodeContext::load(code_name), ch, psi, tol);
}

namespace {

void compositions(size_t k, int remaining, int steps, Vector &cur, std::vector<Vector> &out) {
    if (cur.size() + 1 == k) {
        cur.push_back(static_cast<double>(remaining) / steps);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; v--) {
        cur.push_back(static_cast<double>(v) / steps);
        compositions(k, remaining - v, steps, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Vector> simplex_grid(size_t k, int steps) {
    if (k == 0 || steps <= 0) {
        throw Error(ErrorKind::InvalidArgument, "simplex_grid needs k >= 1 and steps >= 1");
    }
    std::vector<Vector> out;
    Vector cur;
    compositions(k, steps, steps, cur, out);
    return out;
}

std::vector<Vector> random_probability_vectors(size_t k, size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vector> out;
    for (size_t c = 0; c < count; c++) {
        Vector p(k);
        double sum = 0;
        for (auto &x : p) {
            // Exponential(1) draws normalize to a uniform point on the simplex.
            double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
            x = -std::log(u);
            sum += x;
        }
        for (auto &x : p) {
            x /= sum;
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<PureQubitState> reference_inputs() {
    const double h = 1.0 / std::sqrt(2.0);
    return {{1.0, 0.0}, {0.0, 1.0}, {0.6, 0.8}, {h, h}, {h, -h}};
}

std::vector<VerificationCase> verification_cases(const CodeContext &ctx) {
    const size_t k = ctx.errors.size();
    std::vector<Vector> probs;
    if (ctx.code.name == "shor9") {
        for (size_t i = 0; i < k; i++) {
            Vector p(k, 0.0);
            p[i] = 1.0;
            probs.push_back(std::move(p));
        }
        probs.push_back(Vector(k, 1.0 / static_cast<double>(k)));
    } else {
        probs = simplex_grid(k, 4);
    }
    for (auto &p : random_probability_vectors(k, 10, 42)) {
        probs.push_back(std::move(p));
    }
    std::vector<VerificationCase> cases;
    for (const auto &p : probs) {
        for (const auto &psi : reference_inputs()) {
            cases.push_back({p, psi});
        }
    }
    return cases;
}

bool TrajectoryStats::frequencies_within_bounds() const {
    for (const auto &c : classes) {
        if (!c.within) {
            return false;
        }
    }
    return true;
}

bool TrajectoryStats::passed(double tol) const {
    return frequencies_within_bounds() && misclassified == 0 && max_recovery_error <= tol;
}

TrajectoryStats run_trajectories(const CodeContext &ctx, const ErrorChannel &ch, const PureQubitState &psi,
                                 uint64_t samples, uint64_t seed) {
    if (samples == 0) {
        throw Error(ErrorKind::InvalidArgument, "trajectory sample count must be positive");
    }
    const auto &r = ctx.recovery;
    const size_t half = r.ancilla_dim();
    const Vector encoded = encode_state(ctx.code, psi);

    std::vector<size_t> term_class;
    for (const auto &t : ch.terms()) {
        auto it = r.class_map.find(t.op.label());
        if (it == r.class_map.end() || t.op.dim() != ctx.code.dim()) {
            throw Error(ErrorKind::Channel, "operator " + t.op.label() + " is not in the " + ctx.code.name +
                                                " error set");
        }
        term_class.push_back(it->second);
    }

    struct Outcome {
        size_t ancilla;
        double error;
    };
    // R W_i |psi> depends only on the drawn term, so each is computed once.
    std::vector<std::optional<Outcome>> memo(ch.terms().size());
    auto outcome_of = [&](const Trajectory &tr) {
        auto &slot = memo[tr.index];
        if (!slot) {
            Vector v = r.matrix * tr.state;
            size_t best = 0;
            double best_w = -1;
            for (size_t k = 0; k < half; k++) {
                double w = v[k] * v[k] + v[half + k] * v[half + k];
                if (w > best_w) {
                    best_w = w;
                    best = k;
                }
            }
            double total = dot(v, v);
            double da = v[best] - psi.alpha;
            double db = v[half + best] - psi.beta;
            double err2 = std::max(0.0, total - best_w) + da * da + db * db;
            slot = Outcome{best, std::sqrt(err2)};
        }
        return *slot;
    };

    TrajectoryStats stats;
    stats.code = ctx.code.name;
    stats.samples = samples;
    stats.seed = seed;
    stats.alpha = psi.alpha;
    stats.beta = psi.beta;
    stats.classes.resize(r.num_classes());
    for (size_t c = 0; c < r.num_classes(); c++) {
        stats.classes[c].label = r.class_labels[c];
    }
    for (size_t t = 0; t < ch.terms().size(); t++) {
        stats.classes[term_class[t]].expected += ch.terms()[t].probability;
    }

    TrajectorySampler sampler(seed);
    for (uint64_t s = 0; s < samples; s++) {
        Trajectory tr = sampler.sample(ch, encoded);
        Outcome o = outcome_of(tr);
        stats.max_recovery_error = std::max(stats.max_recovery_error, o.error);
        if (o.ancilla < r.num_classes()) {
            stats.classes[o.ancilla].observed++;
        }
        if (o.ancilla != term_class[tr.index]) {
            stats.misclassified++;
        }
    }

    const double n = static_cast<double>(samples);
    for (auto &c : stats.classes) {
        c.frequency = static_cast<double>(c.observed) / n;
        c.bound = 3.0 * std::sqrt(std::max(0.0, c.expected * (1.0 - c.expected)) / n);
        c.within = std::abs(c.frequency - c.expected) <= c.bound + 1e-12;
    }
    return stats;
}

}  // namespace uqec
