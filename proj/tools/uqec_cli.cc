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

// Command-line front end. Links only the C API in libuqec.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
// configuration error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uqec/uqec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string code = "bitflip3";
    std::string channel_file;
    std::vector<double> probs;
    std::optional<double> alpha;
    std::optional<double> beta;
    double tol = 1e-10;
    uint64_t seed = 42;
    uint64_t samples = 100000;
    std::string output = "-";
    std::string format = "table";
};

template <typename T, void (*Free)(T *)>
struct Deleter {
    void operator()(T *p) const {
        Free(p);
    }
};
using CodePtr = std::unique_ptr<uqec_code, Deleter<uqec_code, uqec_code_free>>;
using ChannelPtr = std::unique_ptr<uqec_channel, Deleter<uqec_channel, uqec_channel_free>>;
using ReportPtr = std::unique_ptr<uqec_report, Deleter<uqec_report, uqec_report_free>>;
using KlPtr = std::unique_ptr<uqec_kl_report, Deleter<uqec_kl_report, uqec_kl_free>>;
using TrajectoryPtr = std::unique_ptr<uqec_trajectory, Deleter<uqec_trajectory, uqec_trajectory_free>>;

class Output {
   public:
    explicit Output(const std::string &path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) {
                throw UsageError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream &stream() {
        return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout;
    }

   private:
    std::ofstream file_;
};

std::string valid_code_names() {
    std::string s;
    for (size_t k = 0; k < uqec_code_count(); k++) {
        s += (k ? ", " : "") + std::string(uqec_code_name_at(k));
    }
    return s;
}

CodePtr open_code(const std::string &name) {
    uqec_code *raw = nullptr;
    uqec_status st = uqec_code_open(name.c_str(), &raw);
    if (st == UQEC_ERROR_UNKNOWN_CODE) {
        throw UsageError("unknown code '" + name + "'; valid codes: " + valid_code_names());
    }
    if (st != UQEC_OK) {
        throw std::runtime_error(uqec_last_error());
    }
    return CodePtr(raw);
}

ChannelPtr load_channel(const uqec_code *code, const CliConfig &cfg) {
    const bool has_file = !cfg.channel_file.empty();
    const bool has_probs = !cfg.probs.empty();
    if (has_file == has_probs) {
        throw UsageError("give exactly one of --probs or --channel-file");
    }
    uqec_channel *raw = nullptr;
    uqec_status st = has_file ? uqec_channel_from_file(code, cfg.channel_file.c_str(), &raw)
                              : uqec_channel_from_probs(code, cfg.probs.data(), cfg.probs.size(), &raw);
    if (st != UQEC_OK) {
        std::string msg = uqec_last_error();
        if (has_probs && cfg.probs.size() != uqec_code_num_errors(code)) {
            msg += " (order:";
            for (size_t k = 0; k < uqec_code_num_errors(code); k++) {
                msg += std::string(" ") + uqec_code_error_label(code, k);
            }
            msg += ")";
        }
        throw UsageError(msg);
    }
    return ChannelPtr(raw);
}

std::pair<double, double> qubit_input(const CliConfig &cfg, bool required) {
    if (!cfg.alpha && !cfg.beta) {
        if (required) {
            throw UsageError("--alpha and --beta are required");
        }
        return {0.6, 0.8};
    }
    if (!cfg.alpha || !cfg.beta) {
        throw UsageError("--alpha and --beta must be given together");
    }
    double n2 = *cfg.alpha * *cfg.alpha + *cfg.beta * *cfg.beta;
    if (std::abs(n2 - 1.0) > 1e-9) {
        throw UsageError("alpha^2 + beta^2 must equal 1 (got " + std::to_string(n2) + ")");
    }
    return {*cfg.alpha, *cfg.beta};
}

void print_report(std::ostream &out, const uqec_report *r, const std::string &format) {
    if (format == "json") {
        out << uqec_report_json(r) << '\n';
    } else if (format == "csv") {
        out << uqec_report_csv(r) << '\n';
    } else {
        out << uqec_report_table(r) << '\n';
    }
}

struct VerifySink {
    std::ostream *out;
    const std::string *format;
};

int on_verify_case(void *user, const uqec_report *r) {
    auto *sink = static_cast<VerifySink *>(user);
    print_report(*sink->out, r, *sink->format);
    return 0;
}

int cmd_verify(const CliConfig &cfg) {
    std::vector<std::string> names;
    if (cfg.code == "all") {
        for (size_t k = 0; k < uqec_code_count(); k++) {
            names.emplace_back(uqec_code_name_at(k));
        }
    } else {
        names.push_back(cfg.code);
    }
    std::vector<CodePtr> codes;
    for (const auto &n : names) {
        codes.push_back(open_code(n));
    }

    Output output(cfg.output);
    auto &out = output.stream();
    if (cfg.format == "csv") {
        out << uqec_report_csv_header() << '\n';
    }
    bool all_passed = true;
    for (const auto &code : codes) {
        VerifySink sink{&out, &cfg.format};
        size_t cases = 0;
        size_t failed = 0;
        uqec_status st = uqec_verify(code.get(), cfg.tol, on_verify_case, &sink, &cases, &failed);
        if (st != UQEC_OK) {
            std::cerr << "error: " << uqec_code_name(code.get()) << ": " << uqec_last_error() << '\n';
            all_passed = false;
            continue;
        }
        std::cerr << uqec_code_name(code.get()) << ": " << (cases - failed) << "/" << cases << " cases passed\n";
        all_passed = all_passed && failed == 0;
    }
    return all_passed ? kExitOk : kExitFailed;
}

int cmd_demo(const CliConfig &cfg) {
    auto code = open_code(cfg.code);
    auto channel = load_channel(code.get(), cfg);
    auto [alpha, beta] = qubit_input(cfg, true);
    uqec_report *raw = nullptr;
    uqec_status st = uqec_run_experiment(code.get(), channel.get(), alpha, beta, cfg.tol, &raw);
    if (st == UQEC_ERROR_CHANNEL || st == UQEC_ERROR_INVALID_ARGUMENT) {
        throw UsageError(uqec_last_error());
    }
    if (st != UQEC_OK) {
        throw std::runtime_error(uqec_last_error());
    }
    ReportPtr report(raw);
    Output output(cfg.output);
    auto &out = output.stream();
    if (cfg.format == "csv") {
        out << uqec_report_csv_header() << '\n';
    }
    print_report(out, report.get(), cfg.format);
    if (cfg.format == "table") {
        out << "syndrome:\n";
        for (size_t k = 0; k < uqec_report_syndrome_size(report.get()); k++) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "  %-16s %.17g\n", uqec_report_syndrome_label(report.get(), k),
                          uqec_report_syndrome_probability(report.get(), k));
            out << buf;
        }
    }
    return uqec_report_passed(report.get()) ? kExitOk : kExitFailed;
}

int cmd_kl_check(const CliConfig &cfg) {
    auto code = open_code(cfg.code);
    uqec_kl_report *raw = nullptr;
    if (uqec_kl_check(code.get(), &raw) != UQEC_OK) {
        throw std::runtime_error(uqec_last_error());
    }
    KlPtr kl(raw);
    Output output(cfg.output);
    auto &out = output.stream();
    if (cfg.format == "json") {
        out << uqec_kl_json(kl.get()) << '\n';
        return kExitOk;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "code: %s\ngram deviation: %.3e\nclasses: %zu\nnondegenerate: %s\n",
                  uqec_code_name(code.get()), uqec_kl_gram_deviation(kl.get()), uqec_kl_num_classes(kl.get()),
                  uqec_kl_is_nondegenerate(kl.get()) ? "yes" : "no");
    out << buf;
    for (size_t c = 0; c < uqec_kl_num_classes(kl.get()); c++) {
        if (uqec_kl_class_size(kl.get(), c) < 2) {
            continue;
        }
        out << "degenerate class:";
        for (size_t m = 0; m < uqec_kl_class_size(kl.get(), c); m++) {
            out << ' ' << uqec_kl_class_member(kl.get(), c, m);
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_dump(const CliConfig &cfg) {
    auto code = open_code(cfg.code);
    const std::string dir = cfg.output == "-" ? "." : cfg.output;
    uqec_status st = uqec_dump(code.get(), dir.c_str());
    if (st == UQEC_ERROR_IO) {
        throw UsageError(uqec_last_error());
    }
    if (st != UQEC_OK) {
        throw std::runtime_error(uqec_last_error());
    }
    std::cerr << "wrote " << cfg.code << "_{R,R.labels,UE,logical0,logical1}.txt to " << dir << '\n';
    return kExitOk;
}

int cmd_trajectory(const CliConfig &cfg) {
    auto code = open_code(cfg.code);
    auto channel = load_channel(code.get(), cfg);
    auto [alpha, beta] = qubit_input(cfg, false);
    uqec_trajectory *raw = nullptr;
    uqec_status st = uqec_trajectory_run(code.get(), channel.get(), alpha, beta, cfg.samples, cfg.seed, &raw);
    if (st == UQEC_ERROR_CHANNEL || st == UQEC_ERROR_INVALID_ARGUMENT) {
        throw UsageError(uqec_last_error());
    }
    if (st != UQEC_OK) {
        throw std::runtime_error(uqec_last_error());
    }
    TrajectoryPtr t(raw);
    Output output(cfg.output);
    auto &out = output.stream();
    if (cfg.format == "json") {
        out << uqec_trajectory_json(t.get(), cfg.tol) << '\n';
    } else {
        const bool csv = cfg.format == "csv";
        out << (csv ? "label,expected,observed,frequency,bound\n"
                    : "class              expected     observed  frequency    3-sigma\n");
        for (size_t k = 0; k < uqec_trajectory_num_classes(t.get()); k++) {
            double expected = uqec_trajectory_class_expected(t.get(), k);
            uint64_t observed = uqec_trajectory_class_observed(t.get(), k);
            double freq = static_cast<double>(observed) / static_cast<double>(cfg.samples);
            double bound = uqec_trajectory_class_bound(t.get(), k);
            char buf[160];
            if (csv) {
                std::snprintf(buf, sizeof(buf), "%s,%.17g,%llu,%.17g,%.17g\n", uqec_trajectory_class_label(t.get(), k),
                              expected, static_cast<unsigned long long>(observed), freq, bound);
            } else {
                std::snprintf(buf, sizeof(buf), "%-18s %9.6f %12llu %10.6f %10.6f\n",
                              uqec_trajectory_class_label(t.get(), k), expected,
                              static_cast<unsigned long long>(observed), freq, bound);
            }
            out << buf;
        }
        if (!csv) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "misclassified: %llu\nmax recovery error: %.3e\n",
                          static_cast<unsigned long long>(uqec_trajectory_misclassified(t.get())),
                          uqec_trajectory_max_recovery_error(t.get()));
            out << buf;
        }
    }
    return uqec_trajectory_passed(t.get(), cfg.tol) ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unitary quantum error correction: encode, corrupt, recover, verify"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_common = [&cfg](CLI::App *sub) {
        sub->add_option("--code", cfg.code, "bitflip3, divincenzo5 or shor9");
        sub->add_option("--tol", cfg.tol, "Tolerance for fidelity, residual and diagonality")
            ->check(CLI::PositiveNumber);
        sub->add_option("--output,-o", cfg.output, "Output path ('-' for stdout)");
        sub->add_option("--format", cfg.format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
    };
    auto add_channel = [&cfg](CLI::App *sub) {
        sub->add_option("--probs", cfg.probs, "Comma-separated probabilities in error-set order")->delimiter(',');
        sub->add_option("--channel-file", cfg.channel_file, "File of 'label probability' lines");
        sub->add_option("--alpha", cfg.alpha, "Amplitude of |0>");
        sub->add_option("--beta", cfg.beta, "Amplitude of |1>");
    };

    auto *verify = app.add_subcommand("verify", "Run the verification grid (--code all for every code)");
    add_common(verify);
    auto *demo = app.add_subcommand("demo", "Run one encode/error/recover experiment");
    add_common(demo);
    add_channel(demo);
    auto *kl = app.add_subcommand("kl-check", "Check orthonormality of error-shifted codewords");
    add_common(kl);
    auto *dump = app.add_subcommand("dump", "Write R, its row labels, U_E and the logical vectors");
    add_common(dump);
    auto *traj = app.add_subcommand("trajectory", "Monte Carlo check of syndrome statistics");
    add_common(traj);
    add_channel(traj);
    traj->add_option("--samples", cfg.samples, "Number of sampled trajectories")->check(CLI::PositiveNumber);
    traj->add_option("--seed", cfg.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!verify->parsed() && cfg.code == "all") {
            throw UsageError("--code all is only valid for verify");
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        if (demo->parsed()) {
            return cmd_demo(cfg);
        }
        if (kl->parsed()) {
            return cmd_kl_check(cfg);
        }
        if (dump->parsed()) {
            return cmd_dump(cfg);
        }
        return cmd_trajectory(cfg);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}
