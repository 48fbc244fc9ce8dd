// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/dpa_path.hpp"

#include <stdexcept>

namespace priodpa {

PriorityOrder right_end_order(const Graph& /*graph*/) {
    return PriorityOrder::by_key("right-end", [](const Request& r) { return PriorityKey{-r.y(), 0, 0, 0}; });
}

Solution greedy_paths(const Instance& instance) {
    if (instance.graph().kind() != GraphKind::path) {
        throw std::invalid_argument("greedy_paths needs a path graph, got " + instance.graph().descriptor());
    }
    if (instance.empty()) {
        return {};
    }
    GreedyAlgorithm alg("greedy-path", right_end_order);
    return run(alg, instance).solution;
}

} // namespace priodpa
