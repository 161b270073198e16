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

// Exercises the exported C surface only.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "uqec/uqec.h"

namespace {

struct Code {
    explicit Code(const char *name) {
        EXPECT_EQ(uqec_code_open(name, &ptr), UQEC_OK) << uqec_last_error();
    }
    ~Code() {
        uqec_code_free(ptr);
    }
    uqec_code *ptr = nullptr;
};

std::filesystem::path temp_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("uqec_capi_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(capi, registry_and_unknown_code) {
    ASSERT_EQ(uqec_code_count(), 3u);
    EXPECT_STREQ(uqec_code_name_at(0), "bitflip3");
    EXPECT_EQ(uqec_code_name_at(3), nullptr);

    uqec_code *code = nullptr;
    EXPECT_EQ(uqec_code_open("nosuch", &code), UQEC_ERROR_UNKNOWN_CODE);
    EXPECT_EQ(code, nullptr);
    EXPECT_NE(std::string(uqec_last_error()).find("shor9"), std::string::npos);
    EXPECT_EQ(uqec_code_open(nullptr, &code), UQEC_ERROR_INVALID_ARGUMENT);
}

TEST(capi, code_accessors) {
    Code c("divincenzo5");
    EXPECT_EQ(uqec_code_num_qubits(c.ptr), 5);
    EXPECT_EQ(uqec_code_dim(c.ptr), 32u);
    EXPECT_EQ(uqec_code_num_errors(c.ptr), 16u);
    EXPECT_STREQ(uqec_code_error_label(c.ptr, 15), "Z_5");
    EXPECT_EQ(uqec_code_error_label(c.ptr, 16), nullptr);

    std::vector<double> l0(32);
    ASSERT_EQ(uqec_code_logical(c.ptr, 0, l0.data(), l0.size()), UQEC_OK);
    EXPECT_EQ(l0[20], -0.25);
    EXPECT_EQ(uqec_code_logical(c.ptr, 2, l0.data(), l0.size()), UQEC_ERROR_INVALID_ARGUMENT);
    EXPECT_EQ(uqec_code_logical(c.ptr, 0, l0.data(), 8), UQEC_ERROR_DIMENSION);

    std::vector<double> r(32 * 32);
    ASSERT_EQ(uqec_code_recovery_matrix(c.ptr, r.data(), r.size()), UQEC_OK);
    // First row is |0>_L^T.
    for (size_t k = 0; k < 32; k++) {
        EXPECT_EQ(r[k], l0[k]);
    }
    EXPECT_EQ(uqec_code_num_classes(c.ptr), 16u);
}

TEST(capi, channel_construction) {
    Code c("bitflip3");
    uqec_channel *ch = nullptr;
    const double probs[] = {0.7, 0.1, 0.1, 0.1};
    ASSERT_EQ(uqec_channel_from_probs(c.ptr, probs, 4, &ch), UQEC_OK);
    EXPECT_EQ(uqec_channel_num_terms(ch), 4u);
    EXPECT_STREQ(uqec_channel_term_label(ch, 2), "X_2");
    EXPECT_EQ(uqec_channel_term_probability(ch, 0), 0.7);
    uqec_channel_free(ch);

    EXPECT_EQ(uqec_channel_from_probs(c.ptr, probs, 2, &ch), UQEC_ERROR_CHANNEL);
    EXPECT_EQ(uqec_channel_from_text(c.ptr, "I 0.5\nZ_1 0.5\n", &ch), UQEC_ERROR_CHANNEL);
    EXPECT_NE(std::string(uqec_last_error()).find("Z_1"), std::string::npos);

    auto dir = temp_dir("channel");
    std::ofstream(dir / "ch.txt") << "I 0.85\nX_2 0.15\n";
    ASSERT_EQ(uqec_channel_from_file(c.ptr, (dir / "ch.txt").c_str(), &ch), UQEC_OK);
    EXPECT_EQ(uqec_channel_num_terms(ch), 2u);
    uqec_channel_free(ch);
    EXPECT_EQ(uqec_channel_from_file(c.ptr, (dir / "missing.txt").c_str(), &ch), UQEC_ERROR_IO);
}

TEST(capi, run_experiment_and_serialization) {
    Code c("bitflip3");
    uqec_channel *ch = nullptr;
    const double probs[] = {0.5, 0.3, 0.15, 0.05};
    ASSERT_EQ(uqec_channel_from_probs(c.ptr, probs, 4, &ch), UQEC_OK);
    uqec_report *rep = nullptr;
    ASSERT_EQ(uqec_run_experiment(c.ptr, ch, 0.6, 0.8, 1e-10, &rep), UQEC_OK);
    EXPECT_EQ(uqec_report_passed(rep), 1);
    EXPECT_NEAR(uqec_report_fidelity(rep), 1.0, 1e-10);
    EXPECT_LE(uqec_report_residual(rep), 1e-10);
    ASSERT_EQ(uqec_report_syndrome_size(rep), 4u);
    EXPECT_STREQ(uqec_report_syndrome_label(rep, 3), "X_1");
    EXPECT_NEAR(uqec_report_syndrome_probability(rep, 3), 0.3, 1e-12);

    auto j = nlohmann::json::parse(uqec_report_json(rep));
    EXPECT_EQ(j["code"], "bitflip3");
    EXPECT_EQ(j["tolerance"].get<double>(), 1e-10);
    EXPECT_EQ(std::string(uqec_report_csv(rep)).rfind("bitflip3,", 0), 0u);
    EXPECT_NE(std::string(uqec_report_table(rep)).find("PASS"), std::string::npos);
    EXPECT_EQ(std::string(uqec_report_csv_header()).rfind("code,alpha,beta", 0), 0u);
    uqec_report_free(rep);

    EXPECT_EQ(uqec_run_experiment(c.ptr, ch, 1.0, 1.0, 1e-10, &rep), UQEC_ERROR_INVALID_ARGUMENT);
    uqec_channel_free(ch);
}

TEST(capi, verify_invokes_callback_per_case) {
    Code c("bitflip3");
    size_t seen = 0;
    size_t cases = 0;
    size_t failed = 99;
    auto cb = [](void *user, const uqec_report *) -> int {
        ++*static_cast<size_t *>(user);
        return 0;
    };
    ASSERT_EQ(uqec_verify(c.ptr, 1e-10, cb, &seen, &cases, &failed), UQEC_OK);
    EXPECT_EQ(seen, 225u);
    EXPECT_EQ(cases, 226u);  // plus the permutation-factorization check
    EXPECT_EQ(failed, 0u);

    double res[4] = {1, 1, 1, 1};
    EXPECT_EQ(uqec_check_permutation_factorization(res), 1);
    EXPECT_EQ(res[0] + res[1] + res[2] + res[3], 0.0);
}

TEST(capi, verify_can_stop_early) {
    Code c("divincenzo5");
    size_t cases = 0;
    auto stop = [](void *, const uqec_report *) -> int { return 1; };
    ASSERT_EQ(uqec_verify(c.ptr, 1e-10, stop, nullptr, &cases, nullptr), UQEC_OK);
    EXPECT_EQ(cases, 1u);
}

TEST(capi, kl_check) {
    Code c("shor9");
    uqec_kl_report *kl = nullptr;
    ASSERT_EQ(uqec_kl_check(c.ptr, &kl), UQEC_OK);
    EXPECT_EQ(uqec_kl_num_classes(kl), 22u);
    EXPECT_EQ(uqec_kl_is_nondegenerate(kl), 0);
    EXPECT_LE(uqec_kl_gram_deviation(kl), 1e-10);
    size_t degenerate = 0;
    for (size_t k = 0; k < uqec_kl_num_classes(kl); k++) {
        if (uqec_kl_class_size(kl, k) == 3) {
            degenerate++;
            EXPECT_EQ(uqec_kl_class_member(kl, k, 0)[0], 'Z');
        }
    }
    EXPECT_EQ(degenerate, 3u);
    auto j = nlohmann::json::parse(uqec_kl_json(kl));
    EXPECT_EQ(j["num_classes"], 22);
    uqec_kl_free(kl);
}

TEST(capi, dump_round_trips_bit_exactly) {
    auto dir = temp_dir("dump");
    for (const char *name : {"bitflip3", "divincenzo5"}) {
        Code c(name);
        ASSERT_EQ(uqec_dump(c.ptr, dir.c_str()), UQEC_OK) << uqec_last_error();
        const size_t d = uqec_code_dim(c.ptr);
        std::vector<double> expected(d * d);
        ASSERT_EQ(uqec_code_recovery_matrix(c.ptr, expected.data(), expected.size()), UQEC_OK);
        size_t rows = 0;
        size_t cols = 0;
        std::vector<double> read(d * d);
        auto path = dir / (std::string(name) + "_R.txt");
        ASSERT_EQ(uqec_matrix_read(path.c_str(), &rows, &cols, read.data(), read.size()), UQEC_OK);
        EXPECT_EQ(rows, d);
        EXPECT_EQ(cols, d);
        EXPECT_EQ(read, expected);

        std::vector<double> l1(d);
        ASSERT_EQ(uqec_code_logical(c.ptr, 1, l1.data(), d), UQEC_OK);
        std::vector<double> l1_read(d);
        path = dir / (std::string(name) + "_logical1.txt");
        ASSERT_EQ(uqec_matrix_read(path.c_str(), &rows, &cols, l1_read.data(), d), UQEC_OK);
        EXPECT_EQ(cols, 1u);
        EXPECT_EQ(l1_read, l1);

        path = dir / (std::string(name) + "_UE.txt");
        ASSERT_EQ(uqec_matrix_read(path.c_str(), &rows, &cols, nullptr, 0), UQEC_OK);
        EXPECT_EQ(rows, d);
    }

    std::ifstream labels(dir / "bitflip3_R.labels.txt");
    std::string line;
    std::getline(labels, line);
    EXPECT_EQ(line, "0 0 I");
    std::getline(labels, line);
    EXPECT_EQ(line, "1 0 X_3");

    // The 5-qubit labeled rows hold 0 or +-1/4 only.
    size_t rows = 0;
    size_t cols = 0;
    std::vector<double> r(32 * 32);
    ASSERT_EQ(uqec_matrix_read((dir / "divincenzo5_R.txt").c_str(), &rows, &cols, r.data(), r.size()), UQEC_OK);
    for (double x : r) {
        EXPECT_TRUE(x == 0 || std::abs(x) == 0.25);
    }

    EXPECT_EQ(uqec_matrix_read((dir / "bitflip3_R.txt").c_str(), &rows, &cols, r.data(), 3), UQEC_ERROR_DIMENSION);
}

TEST(capi, dump_to_unwritable_path_fails) {
    Code c("bitflip3");
    auto dir = temp_dir("blocked");
    std::ofstream(dir / "file") << "x";
    EXPECT_EQ(uqec_dump(c.ptr, (dir / "file").c_str()), UQEC_ERROR_IO);
}

TEST(capi, trajectory) {
    Code c("bitflip3");
    uqec_channel *ch = nullptr;
    const double probs[] = {0.5, 0.3, 0.15, 0.05};
    ASSERT_EQ(uqec_channel_from_probs(c.ptr, probs, 4, &ch), UQEC_OK);
    uqec_trajectory *t = nullptr;
    ASSERT_EQ(uqec_trajectory_run(c.ptr, ch, 0.6, 0.8, 100000, 42, &t), UQEC_OK);
    EXPECT_EQ(uqec_trajectory_within_bounds(t), 1);
    EXPECT_EQ(uqec_trajectory_misclassified(t), 0u);
    EXPECT_LE(uqec_trajectory_max_recovery_error(t), 1e-10);
    EXPECT_EQ(uqec_trajectory_passed(t, 1e-10), 1);
    ASSERT_EQ(uqec_trajectory_num_classes(t), 4u);
    EXPECT_STREQ(uqec_trajectory_class_label(t, 1), "X_3");
    EXPECT_EQ(uqec_trajectory_class_expected(t, 1), 0.05);
    uint64_t total = 0;
    for (size_t k = 0; k < 4; k++) {
        total += uqec_trajectory_class_observed(t, k);
        EXPECT_GT(uqec_trajectory_class_bound(t, k), 0.0);
    }
    EXPECT_EQ(total, 100000u);
    auto j = nlohmann::json::parse(uqec_trajectory_json(t, 1e-10));
    EXPECT_EQ(j["seed"], 42);
    uqec_trajectory_free(t);

    EXPECT_EQ(uqec_trajectory_run(c.ptr, ch, 0.6, 0.8, 0, 42, &t), UQEC_ERROR_INVALID_ARGUMENT);
    uqec_channel_free(ch);
}

TEST(capi, status_names) {
    EXPECT_STREQ(uqec_status_name(UQEC_OK), "ok");
    EXPECT_STREQ(uqec_status_name(UQEC_ERROR_KNILL_LAFLAMME), "Knill-Laflamme violation");
    EXPECT_STREQ(uqec_version(), "0.1.0");
}
