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

#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <new>
#include <string>

#include "core/analysis.h"
#include "core/error.h"
#include "uqec/uqec.h"

struct uqec_code {
    uqec::CodeContext ctx;
};

struct uqec_channel {
    uqec::ErrorChannel channel;
};

struct uqec_report {
    uqec::RecoveryReport report;
    mutable std::string json;
    mutable std::string csv;
    mutable std::string table;
};

struct uqec_kl_report {
    std::string code;
    uqec::KLReport kl;
    mutable std::string json;
};

struct uqec_trajectory {
    uqec::TrajectoryStats stats;
    mutable std::string json;
};

namespace {

thread_local std::string last_error;

uqec_status status_of(uqec::ErrorKind kind) {
    switch (kind) {
        case uqec::ErrorKind::InvalidArgument:
            return UQEC_ERROR_INVALID_ARGUMENT;
        case uqec::ErrorKind::UnknownCode:
            return UQEC_ERROR_UNKNOWN_CODE;
        case uqec::ErrorKind::Dimension:
            return UQEC_ERROR_DIMENSION;
        case uqec::ErrorKind::Channel:
            return UQEC_ERROR_CHANNEL;
        case uqec::ErrorKind::KnillLaflamme:
            return UQEC_ERROR_KNILL_LAFLAMME;
        case uqec::ErrorKind::NotDiagonal:
            return UQEC_ERROR_NOT_DIAGONAL;
        case uqec::ErrorKind::Io:
            return UQEC_ERROR_IO;
    }
    return UQEC_ERROR_INTERNAL;
}

uqec_status fail(uqec_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename F>
uqec_status guarded(F &&f) {
    try {
        f();
        return UQEC_OK;
    } catch (const uqec::Error &e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(UQEC_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(UQEC_ERROR_INTERNAL, e.what());
    }
}

bool null_args(const void *a, const void *b) {
    if (a == nullptr || b == nullptr) {
        last_error = "null argument";
        return true;
    }
    return false;
}

}  // namespace

extern "C" {

const char *uqec_version(void) {
    return "0.1.0";
}

const char *uqec_status_name(uqec_status status) {
    switch (status) {
        case UQEC_OK:
            return "ok";
        case UQEC_ERROR_INVALID_ARGUMENT:
            return "invalid argument";
        case UQEC_ERROR_UNKNOWN_CODE:
            return "unknown code";
        case UQEC_ERROR_DIMENSION:
            return "dimension mismatch";
        case UQEC_ERROR_CHANNEL:
            return "invalid channel";
        case UQEC_ERROR_KNILL_LAFLAMME:
            return "Knill-Laflamme violation";
        case UQEC_ERROR_NOT_DIAGONAL:
            return "ancilla state not diagonal";
        case UQEC_ERROR_IO:
            return "i/o error";
        case UQEC_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *uqec_last_error(void) {
    return last_error.c_str();
}

size_t uqec_code_count(void) {
    return uqec::code_names().size();
}

const char *uqec_code_name_at(size_t index) {
    const auto &names = uqec::code_names();
    return index < names.size() ? names[index].c_str() : nullptr;
}

uqec_status uqec_code_open(const char *name, uqec_code **out) {
    if (null_args(name, out)) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new uqec_code{uqec::CodeContext::load(name)}; });
}

void uqec_code_free(uqec_code *code) {
    delete code;
}

const char *uqec_code_name(const uqec_code *code) {
    return code->ctx.code.name.c_str();
}

int uqec_code_num_qubits(const uqec_code *code) {
    return code->ctx.code.num_qubits;
}

size_t uqec_code_dim(const uqec_code *code) {
    return code->ctx.code.dim();
}

size_t uqec_code_num_errors(const uqec_code *code) {
    return code->ctx.errors.size();
}

const char *uqec_code_error_label(const uqec_code *code, size_t index) {
    return index < code->ctx.errors.size() ? code->ctx.errors[index].label().c_str() : nullptr;
}

uqec_status uqec_code_logical(const uqec_code *code, int m, double *out, size_t capacity) {
    if (null_args(code, out)) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    if (m != 0 && m != 1) {
        return fail(UQEC_ERROR_INVALID_ARGUMENT, "logical index must be 0 or 1");
    }
    const auto &v = code->ctx.code.logical(m);
    if (capacity < v.size()) {
        return fail(UQEC_ERROR_DIMENSION, "output buffer holds " + std::to_string(capacity) + " of " +
                                              std::to_string(v.size()) + " entries");
    }
    std::copy(v.begin(), v.end(), out);
    return UQEC_OK;
}

uqec_status uqec_code_recovery_matrix(const uqec_code *code, double *out, size_t capacity) {
    if (null_args(code, out)) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    auto e = code->ctx.recovery.matrix.entries();
    if (capacity < e.size()) {
        return fail(UQEC_ERROR_DIMENSION, "output buffer holds " + std::to_string(capacity) + " of " +
                                              std::to_string(e.size()) + " entries");
    }
    std::copy(e.begin(), e.end(), out);
    return UQEC_OK;
}

size_t uqec_code_num_classes(const uqec_code *code) {
    return code->ctx.recovery.num_classes();
}

const char *uqec_code_class_label(const uqec_code *code, size_t index) {
    const auto &labels = code->ctx.recovery.class_labels;
    return index < labels.size() ? labels[index].c_str() : nullptr;
}

uqec_status uqec_channel_from_probs(const uqec_code *code, const double *probs, size_t count, uqec_channel **out) {
    if (null_args(code, out) || (probs == nullptr && count > 0)) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out = new uqec_channel{uqec::channel_from_probs(code->ctx.errors, std::span<const double>(probs, count))};
    });
}

uqec_status uqec_channel_from_text(const uqec_code *code, const char *text, uqec_channel **out) {
    if (null_args(code, out) || text == nullptr) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new uqec_channel{uqec::parse_channel(text, code->ctx.errors)}; });
}

uqec_status uqec_channel_from_file(const uqec_code *code, const char *path, uqec_channel **out) {
    if (null_args(code, out) || path == nullptr) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] { *out = new uqec_channel{uqec::read_channel_file(path, code->ctx.errors)}; });
}

void uqec_channel_free(uqec_channel *channel) {
    delete channel;
}

size_t uqec_channel_num_terms(const uqec_channel *channel) {
    return channel->channel.terms().size();
}

const char *uqec_channel_term_label(const uqec_channel *channel, size_t index) {
    const auto &t = channel->channel.terms();
    return index < t.size() ? t[index].op.label().c_str() : nullptr;
}

double uqec_channel_term_probability(const uqec_channel *channel, size_t index) {
    const auto &t = channel->channel.terms();
    return index < t.size() ? t[index].probability : 0.0;
}

uqec_status uqec_run_experiment(const uqec_code *code, const uqec_channel *channel, double alpha, double beta,
                                double tol, uqec_report **out) {
    if (null_args(code, channel) || out == nullptr) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto psi = uqec::PureQubitState::make(alpha, beta, 1e-9);
        *out = new uqec_report{uqec::run_experiment(code->ctx, channel->channel, psi, tol), {}, {}, {}};
    });
}

void uqec_report_free(uqec_report *report) {
    delete report;
}

int uqec_report_passed(const uqec_report *report) {
    return report->report.passed ? 1 : 0;
}

double uqec_report_fidelity(const uqec_report *report) {
    return report->report.fidelity;
}

double uqec_report_residual(const uqec_report *report) {
    return report->report.residual;
}

size_t uqec_report_syndrome_size(const uqec_report *report) {
    return report->report.syndrome.size();
}

const char *uqec_report_syndrome_label(const uqec_report *report, size_t index) {
    const auto &s = report->report.syndrome;
    return index < s.size() ? s[index].label.c_str() : nullptr;
}

double uqec_report_syndrome_probability(const uqec_report *report, size_t index) {
    const auto &s = report->report.syndrome;
    return index < s.size() ? s[index].p : 0.0;
}

const char *uqec_report_json(const uqec_report *report) {
    const auto *r = report;
    if (r->json.empty()) {
        r->json = uqec::to_json(r->report);
    }
    return r->json.c_str();
}

const char *uqec_report_csv(const uqec_report *report) {
    const auto *r = report;
    if (r->csv.empty()) {
        r->csv = uqec::to_csv_row(r->report);
    }
    return r->csv.c_str();
}

const char *uqec_report_table(const uqec_report *report) {
    const auto *r = report;
    if (r->table.empty()) {
        r->table = uqec::to_table_row(r->report);
    }
    return r->table.c_str();
}

const char *uqec_report_csv_header(void) {
    static const std::string header = uqec::csv_header();
    return header.c_str();
}

uqec_status uqec_verify(const uqec_code *code, double tol, uqec_report_callback callback, void *user,
                        size_t *num_cases, size_t *num_failed) {
    if (code == nullptr) {
        return fail(UQEC_ERROR_INVALID_ARGUMENT, "null code");
    }
    size_t cases = 0;
    size_t failed = 0;
    uqec_status st = guarded([&] {
        const auto &ctx = code->ctx;
        if (ctx.code.name == "bitflip3") {
            cases++;
            auto f = uqec::verify_permutation_factorization_3qubit();
            if (!f.holds()) {
                failed++;
                last_error = "recovery matrix does not equal P(4,5,6,7) P(3,4) = P(3,7) P(4,5,6,7)";
            }
        }
        for (const auto &c : uqec::verification_cases(ctx)) {
            auto ch = uqec::channel_from_probs(ctx.errors, c.probs);
            uqec_report rep{uqec::run_experiment(ctx, ch, c.psi, tol), {}, {}, {}};
            cases++;
            if (!rep.report.passed) {
                failed++;
            }
            if (callback != nullptr && callback(user, &rep) != 0) {
                break;
            }
        }
    });
    if (num_cases != nullptr) {
        *num_cases = cases;
    }
    if (num_failed != nullptr) {
        *num_failed = failed;
    }
    return st;
}

int uqec_check_permutation_factorization(double residuals[4]) {
    try {
        auto f = uqec::verify_permutation_factorization_3qubit();
        if (residuals != nullptr) {
            residuals[0] = f.products_residual;
            residuals[1] = f.row_built_residual;
            residuals[2] = f.c1x2x3_residual;
            residuals[3] = f.x1c2c3_residual;
        }
        return f.holds() ? 1 : 0;
    } catch (const std::exception &e) {
        last_error = e.what();
        return 0;
    }
}

uqec_status uqec_kl_check(const uqec_code *code, uqec_kl_report **out) {
    if (null_args(code, out)) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        *out = new uqec_kl_report{code->ctx.code.name, uqec::validate_kl(code->ctx.code, code->ctx.errors), {}};
    });
}

void uqec_kl_free(uqec_kl_report *report) {
    delete report;
}

double uqec_kl_gram_deviation(const uqec_kl_report *report) {
    return report->kl.gram_deviation;
}

int uqec_kl_is_nondegenerate(const uqec_kl_report *report) {
    return report->kl.is_nondegenerate ? 1 : 0;
}

size_t uqec_kl_num_classes(const uqec_kl_report *report) {
    return report->kl.classes.size();
}

size_t uqec_kl_class_size(const uqec_kl_report *report, size_t index) {
    const auto &c = report->kl.classes;
    return index < c.size() ? c[index].size() : 0;
}

const char *uqec_kl_class_member(const uqec_kl_report *report, size_t index, size_t member) {
    const auto &c = report->kl.classes;
    if (index >= c.size() || member >= c[index].size()) {
        return nullptr;
    }
    return c[index][member].c_str();
}

const char *uqec_kl_json(const uqec_kl_report *report) {
    const auto *r = report;
    if (r->json.empty()) {
        r->json = uqec::to_json(r->kl, r->code);
    }
    return r->json.c_str();
}

uqec_status uqec_dump(const uqec_code *code, const char *directory) {
    if (null_args(code, directory)) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        namespace fs = std::filesystem;
        const fs::path dir(directory);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (!fs::is_directory(dir)) {
            throw uqec::Error(uqec::ErrorKind::Io, "cannot create output directory '" + dir.string() + "'");
        }
        const auto &ctx = code->ctx;
        const std::string stem = (dir / ctx.code.name).string();
        uqec::write_matrix_file(stem + "_R.txt", ctx.recovery.matrix);
        uqec::write_matrix_file(stem + "_UE.txt", uqec::encoding_unitary(ctx.code));
        uqec::write_matrix_file(stem + "_logical0.txt", uqec::DenseMatrix::column(ctx.code.logical0));
        uqec::write_matrix_file(stem + "_logical1.txt", uqec::DenseMatrix::column(ctx.code.logical1));

        std::ofstream labels(stem + "_R.labels.txt");
        if (!labels) {
            throw uqec::Error(uqec::ErrorKind::Io, "cannot open '" + stem + "_R.labels.txt' for writing");
        }
        const auto &rows = ctx.recovery.row_labels;
        for (size_t k = 0; k < rows.size(); k++) {
            if (rows[k].logical < 0) {
                labels << k << " c (completion)\n";
            } else {
                labels << k << ' ' << rows[k].logical << ' ' << ctx.recovery.class_labels[rows[k].error_class]
                       << '\n';
            }
        }
        if (!labels) {
            throw uqec::Error(uqec::ErrorKind::Io, "write to '" + stem + "_R.labels.txt' failed");
        }
    });
}

uqec_status uqec_matrix_read(const char *path, size_t *rows, size_t *cols, double *out, size_t capacity) {
    if (null_args(path, rows) || cols == nullptr) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto m = uqec::read_matrix_file(path);
        *rows = m.rows();
        *cols = m.cols();
        if (out != nullptr) {
            if (capacity < m.entries().size()) {
                throw uqec::Error(uqec::ErrorKind::Dimension, "output buffer too small for matrix");
            }
            std::copy(m.entries().begin(), m.entries().end(), out);
        }
    });
}

uqec_status uqec_trajectory_run(const uqec_code *code, const uqec_channel *channel, double alpha, double beta,
                                uint64_t samples, uint64_t seed, uqec_trajectory **out) {
    if (null_args(code, channel) || out == nullptr) {
        return UQEC_ERROR_INVALID_ARGUMENT;
    }
    return guarded([&] {
        auto psi = uqec::PureQubitState::make(alpha, beta, 1e-9);
        *out = new uqec_trajectory{uqec::run_trajectories(code->ctx, channel->channel, psi, samples, seed), {}};
    });
}

void uqec_trajectory_free(uqec_trajectory *trajectory) {
    delete trajectory;
}

size_t uqec_trajectory_num_classes(const uqec_trajectory *t) {
    return t->stats.classes.size();
}

const char *uqec_trajectory_class_label(const uqec_trajectory *t, size_t index) {
    return index < t->stats.classes.size() ? t->stats.classes[index].label.c_str() : nullptr;
}

double uqec_trajectory_class_expected(const uqec_trajectory *t, size_t index) {
    return index < t->stats.classes.size() ? t->stats.classes[index].expected : 0.0;
}

uint64_t uqec_trajectory_class_observed(const uqec_trajectory *t, size_t index) {
    return index < t->stats.classes.size() ? t->stats.classes[index].observed : 0;
}

double uqec_trajectory_class_bound(const uqec_trajectory *t, size_t index) {
    return index < t->stats.classes.size() ? t->stats.classes[index].bound : 0.0;
}

uint64_t uqec_trajectory_misclassified(const uqec_trajectory *t) {
    return t->stats.misclassified;
}

double uqec_trajectory_max_recovery_error(const uqec_trajectory *t) {
    return t->stats.max_recovery_error;
}

int uqec_trajectory_within_bounds(const uqec_trajectory *t) {
    return t->stats.frequencies_within_bounds() ? 1 : 0;
}

int uqec_trajectory_passed(const uqec_trajectory *t, double tol) {
    return t->stats.passed(tol) ? 1 : 0;
}

const char *uqec_trajectory_json(const uqec_trajectory *t, double tol) {
    const auto *m = t;
    m->json = uqec::to_json(m->stats, tol);
    return m->json.c_str();
}

}  // extern "C"
