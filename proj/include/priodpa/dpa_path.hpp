// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Optimal greedy for disjoint paths on a path graph.

#include "priodpa/engine.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

// Smaller right end first.
[[nodiscard]] PriorityOrder right_end_order(const Graph& graph);
[[nodiscard]] Solution greedy_paths(const Instance& instance);

} // namespace priodpa
