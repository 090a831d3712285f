// Copyright 2026 The sdc Authors
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

#include "sdc/format.h"

#include <charconv>
#include <json.hpp>

namespace sdc {

std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

namespace {

// Round-trip through the 9-digit text so JSON and CSV carry identical values.
double rounded(double v) {
    const std::string s = format_number(v);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

}  // namespace

void write_csv(std::ostream &out, std::span<const QuantityReport> rows) {
    out << kCsvHeader << '\n';
    for (const auto &row : rows) {
        out << format_number(row.r) << ',' << format_number(row.q_l) << ','
            << format_number(row.p_success) << ',' << format_number(row.capacity_bits) << ','
            << format_number(row.negativity_bits) << ','
            << (row.discord_bits ? format_number(*row.discord_bits) : "") << ','
            << format_number(row.p_success_closed) << ',' << format_number(row.capacity_closed)
            << ',' << format_number(row.negativity_closed) << '\n';
    }
}

void write_json(std::ostream &out, std::span<const QuantityReport> rows) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto &row : rows) {
        nlohmann::ordered_json obj;
        obj["r"] = rounded(row.r);
        obj["q_l"] = rounded(row.q_l);
        obj["P"] = rounded(row.p_success);
        obj["C"] = rounded(row.capacity_bits);
        obj["N"] = rounded(row.negativity_bits);
        obj["D"] = row.discord_bits ? nlohmann::ordered_json(rounded(*row.discord_bits))
                                    : nlohmann::ordered_json(nullptr);
        obj["P_closed"] = rounded(row.p_success_closed);
        obj["C_closed"] = rounded(row.capacity_closed);
        obj["N_closed"] = rounded(row.negativity_closed);
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

void write_report(std::ostream &out, const QuantityReport &rep) {
    auto line = [&](const char *key, double v) { out << key << '=' << format_number(v) << '\n'; };
    line("r", rep.r);
    line("q_l", rep.q_l);
    line("P", rep.p_success);
    line("P_closed", rep.p_success_closed);
    line("C", rep.capacity_bits);
    line("C_closed", rep.capacity_closed);
    line("N", rep.negativity_bits);
    line("N_closed", rep.negativity_closed);
    line("I", rep.mutual_info_bits);
    if (rep.classical_corr_bits) {
        line("J", *rep.classical_corr_bits);
    }
    if (rep.discord_bits) {
        line("D", *rep.discord_bits);
    }
}

}  // namespace sdc
