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

#include <cmath>

#include "core/analysis.h"

namespace uqec {

namespace {

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

// JSON has no NaN/Inf; those become null.
std::string number(double x) {
    return std::isfinite(x) ? format_double(x) : "null";
}

std::string labeled_list(const std::vector<LabeledProbability> &items) {
    std::string out = "[";
    for (size_t k = 0; k < items.size(); k++) {
        out += (k ? "," : "") + std::string("{\"label\":") + quote(items[k].label) + ",\"p\":" + number(items[k].p) +
               "}";
    }
    return out + "]";
}

std::string compact_pairs(const std::vector<LabeledProbability> &items) {
    std::string out;
    for (size_t k = 0; k < items.size(); k++) {
        out += (k ? ";" : "") + items[k].label + ":" + number(items[k].p);
    }
    return out;
}

}  // namespace

std::string to_json(const RecoveryReport &r) {
    std::string out = "{";
    out += "\"code\":" + quote(r.code);
    out += ",\"channel\":" + labeled_list(r.channel);
    out += ",\"alpha\":" + number(r.alpha);
    out += ",\"beta\":" + number(r.beta);
    out += ",\"fidelity\":" + number(r.fidelity);
    out += ",\"residual\":" + number(r.residual);
    out += ",\"syndrome\":" + labeled_list(r.syndrome);
    out += ",\"passed\":" + std::string(r.passed ? "true" : "false");
    out += ",\"tolerance\":" + number(r.tolerance);
    return out + "}";
}

std::string to_json(const TrajectoryStats &s, double tol) {
    std::string out = "{";
    out += "\"code\":" + quote(s.code);
    out += ",\"samples\":" + std::to_string(s.samples);
    out += ",\"seed\":" + std::to_string(s.seed);
    out += ",\"alpha\":" + number(s.alpha);
    out += ",\"beta\":" + number(s.beta);
    out += ",\"classes\":[";
    for (size_t k = 0; k < s.classes.size(); k++) {
        const auto &c = s.classes[k];
        out += (k ? "," : "") + std::string("{\"label\":") + quote(c.label) + ",\"expected\":" + number(c.expected) +
               ",\"observed\":" + std::to_string(c.observed) + ",\"frequency\":" + number(c.frequency) +
               ",\"bound\":" + number(c.bound) + ",\"within\":" + (c.within ? "true" : "false") + "}";
    }
    out += "]";
    out += ",\"misclassified\":" + std::to_string(s.misclassified);
    out += ",\"max_recovery_error\":" + number(s.max_recovery_error);
    out += ",\"passed\":" + std::string(s.passed(tol) ? "true" : "false");
    out += ",\"tolerance\":" + number(tol);
    return out + "}";
}

std::string to_json(const KLReport &kl, std::string_view code) {
    std::string out = "{";
    out += "\"code\":" + quote(code);
    out += ",\"gram_deviation\":" + number(kl.gram_deviation);
    out += ",\"worst_pair\":" + quote(kl.worst_pair);
    out += ",\"is_nondegenerate\":" + std::string(kl.is_nondegenerate ? "true" : "false");
    out += ",\"num_classes\":" + std::to_string(kl.classes.size());
    out += ",\"classes\":[";
    for (size_t c = 0; c < kl.classes.size(); c++) {
        out += c ? ",[" : "[";
        for (size_t m = 0; m < kl.classes[c].size(); m++) {
            out += (m ? "," : "") + quote(kl.classes[c][m]);
        }
        out += "]";
    }
    return out + "]}";
}

std::string csv_header() {
    return "code,alpha,beta,fidelity,residual,passed,tolerance,channel,syndrome";
}

std::string to_csv_row(const RecoveryReport &r) {
    return r.code + "," + number(r.alpha) + "," + number(r.beta) + "," + number(r.fidelity) + "," +
           number(r.residual) + "," + (r.passed ? "true" : "false") + "," + number(r.tolerance) + "," +
           compact_pairs(r.channel) + "," + compact_pairs(r.syndrome);
}

std::string to_table_row(const RecoveryReport &r) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-12s alpha=% .6f beta=% .6f  1-F=%.3e  residual=%.3e  %s", r.code.c_str(),
                  r.alpha, r.beta, 1.0 - r.fidelity, r.residual, r.passed ? "PASS" : "FAIL");
    return buf;
}

}  // namespace uqec
