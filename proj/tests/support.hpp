// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "priodpa/model.hpp"

namespace priodpa::testing {

using Pairs = std::vector<std::pair<int, int>>;

std::shared_ptr<const Graph> path_graph(int length);
std::shared_ptr<const Graph> tree_graph(const Pairs& edges);
Instance make_instance(std::shared_ptr<const Graph> graph, const Pairs& requests);
std::vector<Request> requests_of(const Pairs& pairs);
std::set<Request> as_set(const std::vector<Request>& v);

// Edges of the x-y path found by breadth-first search; cycle-free graphs only.
std::set<EdgeId> bfs_path_edges(const Graph& graph, const Request& r);

// Best gain over all subsets by plain enumeration, no pruning.
std::int64_t naive_opt(const Instance& instance, GainMode mode);

// The tree and instance of the labelled-peak example with vertex 3 of degree 8.
std::shared_ptr<const Graph> label_example_tree();
Instance label_example_instance();

// The peak example tree (14 vertices).
std::shared_ptr<const Graph> peak_example_tree();

} // namespace priodpa::testing
