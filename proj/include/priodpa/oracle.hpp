// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exact offline optimum by exhaustive search.
//
// Requests are split into connected components of the "may intersect" relation and
// each component is searched separately; the cap bounds the component size. Within a
// component, subsets are visited in increasing bitmask order over the (x, y)-sorted
// requests, so the witness is the lexicographically smallest maximizer. On grids every
// simple path of every request is tried.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "priodpa/engine.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

struct OracleOptions {
    // Largest component (in requests) the search will accept.
    std::size_t cap = 22;
    bool collect_all = false;
};

struct OracleResult {
    std::int64_t optimum = 0;
    Solution witness;
    // Only with OracleOptions::collect_all.
    std::optional<std::vector<Solution>> all_optimal;
};

[[nodiscard]] OracleResult brute_force_opt(const Instance& instance, GainMode mode, const OracleOptions& options = {});

// Best gain of a valid solution that contains every request of `forced` and otherwise only
// requests of `allowed`. Requests may be pinned to one allocation through `pinned`
// (grids). std::nullopt when the forced set cannot be realized.
struct CompletionQuery {
    std::vector<Request> forced;
    std::optional<std::vector<Request>> allowed; // nullopt: whole instance
    std::vector<Allocation> pinned;
};
[[nodiscard]] std::optional<std::int64_t> best_completion(const Instance& instance, const CompletionQuery& query,
                                                          GainMode mode, const OracleOptions& options = {});

// Greediest optimal solution: walk the instance in priority order and keep every request
// that still extends to an optimal solution. `accepted` lists requests in that order.
[[nodiscard]] Solution greediest_opt(const Instance& instance, const PriorityOrder& order, GainMode mode,
                                     const OracleOptions& options = {});

// All simple paths realizing `request`, depth-first with neighbors in id order.
[[nodiscard]] std::vector<std::vector<EdgeId>> simple_paths(const Graph& graph, const Request& request);

} // namespace priodpa
