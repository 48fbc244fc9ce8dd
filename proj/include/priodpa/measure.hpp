// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "priodpa/engine.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

using Ratio = boost::rational<std::int64_t>;

// Algorithm gain against optimum. A zero algorithm gain against a positive optimum is unbounded.
struct GainPair {
    std::int64_t alg = 0;
    std::int64_t opt = 0;

    [[nodiscard]] bool unbounded() const { return alg == 0 && opt > 0; }
    // nullopt when unbounded; 1 when both are zero.
    [[nodiscard]] std::optional<Ratio> ratio() const;
    [[nodiscard]] double ratio_value() const;
};

// "3/2", "inf", "1".
[[nodiscard]] std::string format_ratio(const std::optional<Ratio>& r);
[[nodiscard]] double to_double(const Ratio& r);

// Result of serving an adversarial instance to an algorithm.
struct AdversaryOutcome {
    std::string case_label;
    Request top;
    Instance instance;
    GainPair gains;
    std::size_t bits_consumed = 0;
};

} // namespace priodpa
