// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/measure.hpp"

#include <limits>

namespace priodpa {

std::optional<Ratio> GainPair::ratio() const {
    if (unbounded()) {
        return std::nullopt;
    }
    if (alg == 0) {
        return Ratio(1);
    }
    return Ratio(opt, alg);
}

double GainPair::ratio_value() const {
    const auto r = ratio();
    return r ? to_double(*r) : std::numeric_limits<double>::infinity();
}

double to_double(const Ratio& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

std::string format_ratio(const std::optional<Ratio>& r) {
    if (!r) {
        return "inf";
    }
    if (r->denominator() == 1) {
        return std::to_string(r->numerator());
    }
    return std::to_string(r->numerator()) + "/" + std::to_string(r->denominator());
}

} // namespace priodpa
