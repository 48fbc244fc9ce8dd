// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Named algorithms for experiments and adversary testing.

#include <memory>
#include <string>
#include <vector>

#include "priodpa/engine.hpp"

namespace priodpa {

// Greedy-style algorithms on cycle-free graphs.
[[nodiscard]] std::vector<std::string> battery_names();
// Routing algorithms for grids.
[[nodiscard]] std::vector<std::string> grid_battery_names();
// Any name from either list, or an advice algorithm ("advice-lwdpa", "advice-cat").
// Throws std::invalid_argument on an unknown name.
[[nodiscard]] std::unique_ptr<PriorityAlgorithm> make_algorithm(const std::string& name);

// Order by a seeded hash of the request.
[[nodiscard]] PriorityOrder random_order(std::uint64_t seed);
// Shorter requests first, then smaller left end; uses graph distance.
[[nodiscard]] PriorityOrder shortest_first_order(const Graph& graph);
// Smaller (x, y) first.
[[nodiscard]] PriorityOrder lexicographic_order();

} // namespace priodpa
