// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Seeded generators for experiment instances. Everything is driven by one 64-bit seed.

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "priodpa/graph.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

using Rng = std::mt19937_64;

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);
// Stable hash of (seed, request); used by random-order algorithms and random routing.
[[nodiscard]] std::uint64_t mix_request(std::uint64_t seed, const Request& r);

// Uniform integer in [lo, hi], independent of the standard library's distribution code.
[[nodiscard]] int uniform_int(Rng& rng, int lo, int hi);

// Random distinct requests on the graph; count drawn from [0, max_requests] capped by the number of pairs.
[[nodiscard]] std::vector<Request> random_requests(Rng& rng, const Graph& graph, int max_requests);
// Path of length in [1, max_length] with up to max_requests requests; never empty.
[[nodiscard]] Instance random_path_instance(Rng& rng, int max_length, int max_requests);

// Uniform labelled tree on n >= 2 vertices (Pruefer sequence).
[[nodiscard]] Graph random_tree(Rng& rng, int n);
[[nodiscard]] Graph tree_from_pruefer(const std::vector<int>& code);
// Every labelled tree on n vertices.
[[nodiscard]] std::vector<Graph> labelled_trees(int n);
// One representative per tree shape rooted at a leaf, relabelled breadth-first from the root.
[[nodiscard]] std::vector<Graph> rooted_tree_shapes(int n);

[[nodiscard]] std::vector<bool> random_bits(Rng& rng, int n);

} // namespace priodpa
