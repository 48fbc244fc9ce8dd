// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "priodpa/graph.hpp"

namespace priodpa {

// Unordered vertex pair [x,y]; stored with x < y.
class Request {
  public:
    Request(VertexId a, VertexId b);

    [[nodiscard]] VertexId x() const { return x_; }
    [[nodiscard]] VertexId y() const { return y_; }
    [[nodiscard]] bool has_endpoint(VertexId v) const { return v == x_ || v == y_; }
    [[nodiscard]] std::string str() const;

    friend auto operator<=>(const Request&, const Request&) = default;

  private:
    VertexId x_;
    VertexId y_;
};

// Edges of a simple path, endpoint to endpoint, tagged with the graph they live on.
struct EdgePath {
    std::uint64_t graph = 0;
    std::vector<EdgeId> edges;

    [[nodiscard]] EdgeSet edge_set() const;
};

enum class GainMode { count, length };

[[nodiscard]] EdgePath unique_path(const Graph& graph, const Request& request);
[[nodiscard]] bool intersects(const EdgePath& a, const EdgePath& b);
[[nodiscard]] bool intersects(const Graph& graph, const Request& a, const Request& b);

// Checks that `edges` walks from one endpoint of `request` to the other without repeating a vertex.
[[nodiscard]] bool is_simple_path(const Graph& graph, const Request& request, std::span<const EdgeId> edges);

class Instance {
  public:
    // Requests are sorted by (x, y). Throws InvalidRequest on duplicates or foreign endpoints.
    Instance(std::shared_ptr<const Graph> graph, std::vector<Request> requests);

    [[nodiscard]] const Graph& graph() const { return *graph_; }
    [[nodiscard]] const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
    [[nodiscard]] std::span<const Request> requests() const { return requests_; }
    [[nodiscard]] std::size_t size() const { return requests_.size(); }
    [[nodiscard]] bool empty() const { return requests_.empty(); }
    [[nodiscard]] std::optional<std::size_t> index_of(const Request& r) const;
    [[nodiscard]] bool contains(const Request& r) const { return index_of(r).has_value(); }

    // Cached unique-path edge sets; only on acyclic graphs.
    [[nodiscard]] const EdgeSet& route(std::size_t i) const;

    [[nodiscard]] Instance with(const Request& extra) const;

  private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Request> requests_;
    std::vector<EdgeSet> routes_;
};

// One accepted request. On acyclic graphs `edges` stays empty: the path is implied.
struct Allocation {
    Request request;
    std::vector<EdgeId> edges;
};

struct Solution {
    std::vector<Allocation> accepted;

    [[nodiscard]] bool contains(const Request& r) const;
    // Accepted requests in (x, y) order.
    [[nodiscard]] std::vector<Request> requests() const;
    [[nodiscard]] std::size_t size() const { return accepted.size(); }
};

// Edge set of an allocation: the explicit edges, or the unique path when none are stored.
[[nodiscard]] EdgeSet allocation_edges(const Graph& graph, const Allocation& allocation);
[[nodiscard]] std::int64_t allocation_length(const Graph& graph, const Allocation& allocation);

[[nodiscard]] std::int64_t gain(const Graph& graph, const Solution& solution, GainMode mode);
[[nodiscard]] std::int64_t request_gain(const Graph& graph, const Request& r, GainMode mode);
[[nodiscard]] bool validate_solution(const Instance& instance, const Solution& solution);

} // namespace priodpa
