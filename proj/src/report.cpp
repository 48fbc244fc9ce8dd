// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/report.hpp"

#include <cstdio>

#include "priodpa/errors.hpp"

namespace priodpa {

std::string decimal_ratio(const GainPair& gains) {
    const auto r = gains.ratio();
    if (!r) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(*r));
    std::string s = buf;
    while (s.back() == '0' && s[s.size() - 2] != '.') {
        s.pop_back();
    }
    return s;
}

std::string csv_row(const RatioReport& report) {
    return report.graph + "," + report.algorithm + "," + report.instance_hash + "," +
           std::to_string(report.gains.alg) + "," + std::to_string(report.gains.opt) + "," +
           decimal_ratio(report.gains) + "," + std::to_string(report.advice_bits) + "," + std::to_string(report.ms);
}

void write_csv(std::ostream& out, const std::vector<RatioReport>& reports) {
    out << csv_header << '\n';
    for (const auto& r : reports) {
        out << csv_row(r) << '\n';
    }
}

nlohmann::json report_to_json(const RatioReport& report) {
    nlohmann::json j{{"graph", report.graph},
                     {"algorithm", report.algorithm},
                     {"instance_hash", report.instance_hash},
                     {"gain_alg", report.gains.alg},
                     {"gain_opt", report.gains.opt},
                     {"ratio_exact", format_ratio(report.gains.ratio())},
                     {"unbounded", report.gains.unbounded()},
                     {"advice_bits", report.advice_bits},
                     {"ms", report.ms}};
    if (report.gains.unbounded()) {
        j["ratio"] = nullptr;
    } else {
        j["ratio"] = report.gains.ratio_value();
    }
    return j;
}

RatioReport report_from_json(const nlohmann::json& j) {
    try {
        RatioReport r;
        r.graph = j.at("graph").get<std::string>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.instance_hash = j.at("instance_hash").get<std::string>();
        r.gains = GainPair{j.at("gain_alg").get<std::int64_t>(), j.at("gain_opt").get<std::int64_t>()};
        r.advice_bits = j.at("advice_bits").get<std::size_t>();
        r.ms = j.at("ms").get<std::int64_t>();
        if (r.gains.alg < 0 || r.gains.opt < 0) {
            throw FormatError("negative gain in report");
        }
        if (j.at("unbounded").get<bool>() != r.gains.unbounded() || j.at("ratio").is_null() != r.gains.unbounded()) {
            throw FormatError("report ratio disagrees with its gains");
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed report: ") + e.what());
    }
}

void write_json_lines(std::ostream& out, const std::vector<RatioReport>& reports) {
    for (const auto& r : reports) {
        out << report_to_json(r).dump() << '\n';
    }
}

} // namespace priodpa
