// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "priodpa/measure.hpp"

namespace priodpa {

// One measured run. The ratio is derived from the gains.
struct RatioReport {
    std::string graph;
    std::string algorithm;
    std::string instance_hash;
    GainPair gains;
    std::size_t advice_bits = 0;
    std::int64_t ms = 0;

    friend bool operator==(const RatioReport& a, const RatioReport& b) {
        return a.graph == b.graph && a.algorithm == b.algorithm && a.instance_hash == b.instance_hash &&
               a.gains.alg == b.gains.alg && a.gains.opt == b.gains.opt && a.advice_bits == b.advice_bits &&
               a.ms == b.ms;
    }
};

inline constexpr const char* csv_header = "graph,algorithm,instance_hash,gain_alg,gain_opt,ratio,advice_bits,ms";

// "2.4", "1.0", "2.666667"; "inf" when unbounded.
[[nodiscard]] std::string decimal_ratio(const GainPair& gains);
[[nodiscard]] std::string csv_row(const RatioReport& report);
void write_csv(std::ostream& out, const std::vector<RatioReport>& reports);

// Unbounded ratios are written as null with "unbounded": true.
[[nodiscard]] nlohmann::json report_to_json(const RatioReport& report);
[[nodiscard]] RatioReport report_from_json(const nlohmann::json& j);
// One JSON object per line.
void write_json_lines(std::ostream& out, const std::vector<RatioReport>& reports);

} // namespace priodpa
