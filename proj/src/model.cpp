// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "priodpa/errors.hpp"

namespace priodpa {

Request::Request(VertexId a, VertexId b) : x_{std::min(a, b)}, y_{std::max(a, b)} {
    if (a == b) {
        throw InvalidRequest("request [" + std::to_string(a) + "," + std::to_string(b) + "] has equal endpoints");
    }
    if (x_ < 0) {
        throw InvalidRequest("negative vertex id in request");
    }
}

std::string Request::str() const { return "[" + std::to_string(x_) + "," + std::to_string(y_) + "]"; }

EdgeSet EdgePath::edge_set() const {
    EdgeSet s;
    for (auto e : edges) {
        s.insert(e);
    }
    return s;
}

EdgePath unique_path(const Graph& graph, const Request& request) {
    if (!graph.contains(request.x()) || !graph.contains(request.y())) {
        throw InvalidRequest("request " + request.str() + " has an endpoint outside " + graph.descriptor());
    }
    if (!graph.acyclic()) {
        throw std::invalid_argument("unique_path needs a cycle-free graph, got " + graph.descriptor());
    }
    std::vector<EdgeId> from_x;
    std::vector<EdgeId> from_y;
    VertexId a = request.x();
    VertexId b = request.y();
    while (a != b) {
        if (graph.depth(a) >= graph.depth(b)) {
            from_x.push_back(graph.parent_edge(a));
            a = graph.parent(a);
        } else {
            from_y.push_back(graph.parent_edge(b));
            b = graph.parent(b);
        }
    }
    from_x.insert(from_x.end(), from_y.rbegin(), from_y.rend());
    return EdgePath{graph.fingerprint(), std::move(from_x)};
}

bool intersects(const EdgePath& a, const EdgePath& b) {
    if (a.graph != b.graph) {
        throw std::invalid_argument("cannot compare requests on different graphs");
    }
    for (auto e : a.edges) {
        if (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end()) {
            return true;
        }
    }
    return false;
}

bool intersects(const Graph& graph, const Request& a, const Request& b) {
    return intersects(unique_path(graph, a), unique_path(graph, b));
}

bool is_simple_path(const Graph& graph, const Request& request, std::span<const EdgeId> edges) {
    if (!graph.contains(request.x()) || !graph.contains(request.y()) || edges.empty()) {
        return false;
    }
    std::vector<bool> visited(static_cast<std::size_t>(graph.vertex_count()), false);
    // The walk may be listed from either end.
    VertexId at = request.x();
    VertexId target = request.y();
    const auto& first = graph.edge(edges.front());
    if (first.u != at && first.v != at) {
        std::swap(at, target);
    }
    visited[static_cast<std::size_t>(at)] = true;
    for (auto e : edges) {
        if (e < 0 || e >= graph.edge_count()) {
            return false;
        }
        const auto& edge = graph.edge(e);
        VertexId next = -1;
        if (edge.u == at) {
            next = edge.v;
        } else if (edge.v == at) {
            next = edge.u;
        } else {
            return false;
        }
        if (visited[static_cast<std::size_t>(next)]) {
            return false;
        }
        visited[static_cast<std::size_t>(next)] = true;
        at = next;
    }
    return at == target;
}

Instance::Instance(std::shared_ptr<const Graph> graph, std::vector<Request> requests)
    : graph_{std::move(graph)}, requests_{std::move(requests)} {
    if (!graph_) {
        throw std::invalid_argument("instance without a graph");
    }
    std::sort(requests_.begin(), requests_.end());
    for (std::size_t i = 0; i < requests_.size(); ++i) {
        const auto& r = requests_[i];
        if (!graph_->contains(r.x()) || !graph_->contains(r.y())) {
            throw InvalidRequest("request " + r.str() + " has an endpoint outside " + graph_->descriptor());
        }
        if (i > 0 && requests_[i - 1] == r) {
            throw InvalidRequest("request " + r.str() + " appears twice");
        }
    }
    if (graph_->acyclic()) {
        routes_.reserve(requests_.size());
        for (const auto& r : requests_) {
            routes_.push_back(unique_path(*graph_, r).edge_set());
        }
    }
}

std::optional<std::size_t> Instance::index_of(const Request& r) const {
    const auto it = std::lower_bound(requests_.begin(), requests_.end(), r);
    if (it != requests_.end() && *it == r) {
        return static_cast<std::size_t>(it - requests_.begin());
    }
    return std::nullopt;
}

const EdgeSet& Instance::route(std::size_t i) const {
    if (!graph_->acyclic()) {
        throw std::logic_error("routes are only implied on cycle-free graphs");
    }
    return routes_.at(i);
}

Instance Instance::with(const Request& extra) const {
    auto reqs = requests_;
    reqs.push_back(extra);
    return Instance(graph_, std::move(reqs));
}

bool Solution::contains(const Request& r) const {
    return std::any_of(accepted.begin(), accepted.end(), [&](const Allocation& a) { return a.request == r; });
}

std::vector<Request> Solution::requests() const {
    std::vector<Request> out;
    out.reserve(accepted.size());
    for (const auto& a : accepted) {
        out.push_back(a.request);
    }
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet allocation_edges(const Graph& graph, const Allocation& allocation) {
    if (allocation.edges.empty()) {
        return unique_path(graph, allocation.request).edge_set();
    }
    EdgeSet s;
    for (auto e : allocation.edges) {
        s.insert(e);
    }
    return s;
}

std::int64_t allocation_length(const Graph& graph, const Allocation& allocation) {
    if (allocation.edges.empty()) {
        return graph.distance(allocation.request.x(), allocation.request.y());
    }
    return static_cast<std::int64_t>(allocation.edges.size());
}

std::int64_t request_gain(const Graph& graph, const Request& r, GainMode mode) {
    if (mode == GainMode::count) {
        return 1;
    }
    if (!graph.acyclic()) {
        throw std::invalid_argument("length gain of an unallocated request is undefined on " + graph.descriptor());
    }
    return graph.distance(r.x(), r.y());
}

std::int64_t gain(const Graph& graph, const Solution& solution, GainMode mode) {
    if (mode == GainMode::count) {
        return static_cast<std::int64_t>(solution.accepted.size());
    }
    std::int64_t total = 0;
    for (const auto& a : solution.accepted) {
        total += allocation_length(graph, a);
    }
    return total;
}

bool validate_solution(const Instance& instance, const Solution& solution) {
    const auto& graph = instance.graph();
    EdgeSet used;
    std::vector<Request> seen;
    for (const auto& a : solution.accepted) {
        if (!instance.contains(a.request)) {
            return false;
        }
        if (std::find(seen.begin(), seen.end(), a.request) != seen.end()) {
            return false;
        }
        seen.push_back(a.request);
        EdgeSet edges;
        if (a.edges.empty()) {
            if (!graph.acyclic()) {
                return false;
            }
            edges = instance.route(*instance.index_of(a.request));
        } else {
            if (!is_simple_path(graph, a.request, a.edges)) {
                return false;
            }
            edges = allocation_edges(graph, a);
        }
        if (edges.intersects(used)) {
            return false;
        }
        used.merge(edges);
    }
    return true;
}

} // namespace priodpa
