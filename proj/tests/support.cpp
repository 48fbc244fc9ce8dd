// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "support.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace priodpa::testing {

std::shared_ptr<const Graph> path_graph(int length) { return std::make_shared<const Graph>(Graph::path(length)); }

std::shared_ptr<const Graph> tree_graph(const Pairs& edges) {
    std::vector<Edge> es;
    for (auto [u, v] : edges) {
        es.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    return std::make_shared<const Graph>(Graph::tree(std::move(es)));
}

std::vector<Request> requests_of(const Pairs& pairs) {
    std::vector<Request> out;
    for (auto [a, b] : pairs) {
        out.emplace_back(a, b);
    }
    return out;
}

Instance make_instance(std::shared_ptr<const Graph> graph, const Pairs& requests) {
    return Instance(std::move(graph), requests_of(requests));
}

std::set<Request> as_set(const std::vector<Request>& v) { return {v.begin(), v.end()}; }

std::set<EdgeId> bfs_path_edges(const Graph& graph, const Request& r) {
    std::map<VertexId, std::pair<VertexId, EdgeId>> from;
    std::queue<VertexId> q;
    q.push(r.x());
    from[r.x()] = {-1, -1};
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (const auto& inc : graph.incident(v)) {
            if (!from.contains(inc.neighbor)) {
                from[inc.neighbor] = {v, inc.edge};
                q.push(inc.neighbor);
            }
        }
    }
    std::set<EdgeId> out;
    for (VertexId v = r.y(); v != r.x(); v = from.at(v).first) {
        out.insert(from.at(v).second);
    }
    return out;
}

std::int64_t naive_opt(const Instance& instance, GainMode mode) {
    const auto n = instance.size();
    if (n > 20) {
        throw std::invalid_argument("naive_opt is limited to 20 requests");
    }
    std::vector<std::set<EdgeId>> edges;
    for (const auto& r : instance.requests()) {
        edges.push_back(bfs_path_edges(instance.graph(), r));
    }
    std::int64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::set<EdgeId> used;
        std::int64_t value = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if ((mask >> i) & 1U) {
                for (auto e : edges[i]) {
                    ok = ok && used.insert(e).second;
                }
                value += mode == GainMode::count ? 1 : static_cast<std::int64_t>(edges[i].size());
            }
        }
        if (ok) {
            best = std::max(best, value);
        }
    }
    return best;
}

std::shared_ptr<const Graph> label_example_tree() {
    return tree_graph({{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10}, {4, 11},
                       {6, 12}, {6, 13}, {9, 14}, {10, 15}});
}

Instance label_example_instance() {
    return make_instance(label_example_tree(), {{11, 8}, {5, 7}, {12, 13}, {3, 14}, {2, 15}, {4, 5}, {8, 10}});
}

std::shared_ptr<const Graph> peak_example_tree() {
    return tree_graph({{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {5, 11}, {7, 12}, {7, 13},
                       {4, 9}, {4, 10}});
}

} // namespace priodpa::testing
