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

/*
 * uqec: unitary quantum error correction without syndrome measurement.
 *
 * C interface over opaque handles. Every fallible call returns a
 * uqec_status; on failure, uqec_last_error() describes the problem for the
 * calling thread until its next failing call. Strings returned by accessor
 * functions are owned by the handle they came from and stay valid until that
 * handle is freed.
 */
#ifndef UQEC_UQEC_H
#define UQEC_UQEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(UQEC_BUILDING_LIBRARY)
#define UQEC_API __attribute__((visibility("default")))
#else
#define UQEC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uqec_status {
    UQEC_OK = 0,
    UQEC_ERROR_INVALID_ARGUMENT = 1,
    UQEC_ERROR_UNKNOWN_CODE = 2,
    UQEC_ERROR_DIMENSION = 3,
    UQEC_ERROR_CHANNEL = 4,
    UQEC_ERROR_KNILL_LAFLAMME = 5,
    UQEC_ERROR_NOT_DIAGONAL = 6,
    UQEC_ERROR_IO = 7,
    UQEC_ERROR_INTERNAL = 99
} uqec_status;

typedef struct uqec_code uqec_code;
typedef struct uqec_channel uqec_channel;
typedef struct uqec_report uqec_report;
typedef struct uqec_kl_report uqec_kl_report;
typedef struct uqec_trajectory uqec_trajectory;

UQEC_API const char *uqec_version(void);
UQEC_API const char *uqec_status_name(uqec_status status);
UQEC_API const char *uqec_last_error(void);

/* Built-in codes: "bitflip3", "divincenzo5", "shor9". */
UQEC_API size_t uqec_code_count(void);
UQEC_API const char *uqec_code_name_at(size_t index);

/* Opening a code builds its recovery matrix once; later calls reuse it. */
UQEC_API uqec_status uqec_code_open(const char *name, uqec_code **out);
UQEC_API void uqec_code_free(uqec_code *code);
UQEC_API const char *uqec_code_name(const uqec_code *code);
UQEC_API int uqec_code_num_qubits(const uqec_code *code);
UQEC_API size_t uqec_code_dim(const uqec_code *code);
/* Channel error set, in positional order for uqec_channel_from_probs. */
UQEC_API size_t uqec_code_num_errors(const uqec_code *code);
UQEC_API const char *uqec_code_error_label(const uqec_code *code, size_t index);
/* Copies |m>_L (m = 0 or 1) into out, which must hold uqec_code_dim entries. */
UQEC_API uqec_status uqec_code_logical(const uqec_code *code, int m, double *out, size_t capacity);
/* Copies the row-major recovery matrix; capacity must be at least dim*dim. */
UQEC_API uqec_status uqec_code_recovery_matrix(const uqec_code *code, double *out, size_t capacity);
UQEC_API size_t uqec_code_num_classes(const uqec_code *code);
UQEC_API const char *uqec_code_class_label(const uqec_code *code, size_t index);

/* Probabilities are positional in error-set order; sum must be 1 within 1e-9. */
UQEC_API uqec_status uqec_channel_from_probs(const uqec_code *code, const double *probs, size_t count,
                                             uqec_channel **out);
/* "label probability" per line. */
UQEC_API uqec_status uqec_channel_from_text(const uqec_code *code, const char *text, uqec_channel **out);
UQEC_API uqec_status uqec_channel_from_file(const uqec_code *code, const char *path, uqec_channel **out);
UQEC_API void uqec_channel_free(uqec_channel *channel);
UQEC_API size_t uqec_channel_num_terms(const uqec_channel *channel);
UQEC_API const char *uqec_channel_term_label(const uqec_channel *channel, size_t index);
UQEC_API double uqec_channel_term_probability(const uqec_channel *channel, size_t index);

/* Encode (alpha, beta), apply the channel, recover, and analyse. */
UQEC_API uqec_status uqec_run_experiment(const uqec_code *code, const uqec_channel *channel, double alpha,
                                         double beta, double tol, uqec_report **out);
UQEC_API void uqec_report_free(uqec_report *report);
UQEC_API int uqec_report_passed(const uqec_report *report);
UQEC_API double uqec_report_fidelity(const uqec_report *report);
UQEC_API double uqec_report_residual(const uqec_report *report);
UQEC_API size_t uqec_report_syndrome_size(const uqec_report *report);
UQEC_API const char *uqec_report_syndrome_label(const uqec_report *report, size_t index);
UQEC_API double uqec_report_syndrome_probability(const uqec_report *report, size_t index);
UQEC_API const char *uqec_report_json(const uqec_report *report);
UQEC_API const char *uqec_report_csv(const uqec_report *report);
UQEC_API const char *uqec_report_table(const uqec_report *report);
UQEC_API const char *uqec_report_csv_header(void);

/* Called once per verification case, in a fixed order. Returning nonzero stops
 * the run early. */
typedef int (*uqec_report_callback)(void *user, const uqec_report *report);

/* Runs the verification grid for one code. num_cases and num_failed may be
 * NULL. For bitflip3 the permutation factorization of R is also checked and
 * counted as one extra case (reported through uqec_last_error on failure). */
UQEC_API uqec_status uqec_verify(const uqec_code *code, double tol, uqec_report_callback callback, void *user,
                                 size_t *num_cases, size_t *num_failed);

/* Residuals: [products, row_built, c1x2x3, x1c2c3]. Returns 1 when all are 0. */
UQEC_API int uqec_check_permutation_factorization(double residuals[4]);

UQEC_API uqec_status uqec_kl_check(const uqec_code *code, uqec_kl_report **out);
UQEC_API void uqec_kl_free(uqec_kl_report *report);
UQEC_API double uqec_kl_gram_deviation(const uqec_kl_report *report);
UQEC_API int uqec_kl_is_nondegenerate(const uqec_kl_report *report);
UQEC_API size_t uqec_kl_num_classes(const uqec_kl_report *report);
UQEC_API size_t uqec_kl_class_size(const uqec_kl_report *report, size_t index);
UQEC_API const char *uqec_kl_class_member(const uqec_kl_report *report, size_t index, size_t member);
UQEC_API const char *uqec_kl_json(const uqec_kl_report *report);

/* Writes <code>_R.txt, <code>_R.labels.txt, <code>_UE.txt,
 * <code>_logical0.txt and <code>_logical1.txt into directory. */
UQEC_API uqec_status uqec_dump(const uqec_code *code, const char *directory);

/* Reads a matrix text file. *rows and *cols are always set on success; out
 * receives the entries when capacity suffices (else UQEC_ERROR_DIMENSION). */
UQEC_API uqec_status uqec_matrix_read(const char *path, size_t *rows, size_t *cols, double *out, size_t capacity);

UQEC_API uqec_status uqec_trajectory_run(const uqec_code *code, const uqec_channel *channel, double alpha,
                                         double beta, uint64_t samples, uint64_t seed, uqec_trajectory **out);
UQEC_API void uqec_trajectory_free(uqec_trajectory *trajectory);
UQEC_API size_t uqec_trajectory_num_classes(const uqec_trajectory *trajectory);
UQEC_API const char *uqec_trajectory_class_label(const uqec_trajectory *trajectory, size_t index);
UQEC_API double uqec_trajectory_class_expected(const uqec_trajectory *trajectory, size_t index);
UQEC_API uint64_t uqec_trajectory_class_observed(const uqec_trajectory *trajectory, size_t index);
UQEC_API double uqec_trajectory_class_bound(const uqec_trajectory *trajectory, size_t index);
UQEC_API uint64_t uqec_trajectory_misclassified(const uqec_trajectory *trajectory);
UQEC_API double uqec_trajectory_max_recovery_error(const uqec_trajectory *trajectory);
UQEC_API int uqec_trajectory_within_bounds(const uqec_trajectory *trajectory);
UQEC_API int uqec_trajectory_passed(const uqec_trajectory *trajectory, double tol);
UQEC_API const char *uqec_trajectory_json(const uqec_trajectory *trajectory, double tol);

#ifdef __cplusplus
}
#endif

#endif
