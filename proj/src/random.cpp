// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/random.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace priodpa {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_request(std::uint64_t seed, const Request& r) {
    return splitmix64(splitmix64(seed) ^ (static_cast<std::uint64_t>(r.x()) << 32 | static_cast<std::uint32_t>(r.y())));
}

int uniform_int(Rng& rng, int lo, int hi) {
    if (hi < lo) {
        throw std::invalid_argument("uniform_int: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection sampling keeps the draw unbiased and platform independent.
    const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
}

std::vector<Request> random_requests(Rng& rng, const Graph& graph, int max_requests) {
    std::vector<Request> all;
    for (VertexId a = 0; a < graph.vertex_count(); ++a) {
        for (VertexId b = a + 1; b < graph.vertex_count(); ++b) {
            all.emplace_back(a, b);
        }
    }
    const int count = uniform_int(rng, 0, std::min<int>(max_requests, static_cast<int>(all.size())));
    for (int i = 0; i < count; ++i) {
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(uniform_int(rng, i, static_cast<int>(all.size()) - 1))]);
    }
    all.erase(all.begin() + count, all.end());
    return all;
}

Instance random_path_instance(Rng& rng, int max_length, int max_requests) {
    auto graph = std::make_shared<const Graph>(Graph::path(uniform_int(rng, 1, max_length)));
    auto reqs = random_requests(rng, *graph, max_requests);
    if (reqs.empty()) {
        const int a = uniform_int(rng, 0, graph->path_length() - 1);
        reqs.emplace_back(a, uniform_int(rng, a + 1, graph->path_length()));
    }
    return Instance(graph, std::move(reqs));
}

Graph tree_from_pruefer(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : code) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("Pruefer code entry out of range");
        }
        ++degree[static_cast<std::size_t>(v)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }
    std::vector<Edge> edges;
    for (int v : code) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.push_back(Edge{std::min(leaf, v), std::max(leaf, v)});
        if (--degree[static_cast<std::size_t>(v)] == 1) {
            leaves.push(v);
        }
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    return Graph::tree(std::move(edges));
}

Graph random_tree(Rng& rng, int n) {
    if (n < 2) {
        throw std::invalid_argument("random_tree needs n >= 2");
    }
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& v : code) {
        v = uniform_int(rng, 0, n - 1);
    }
    return tree_from_pruefer(code);
}

std::vector<Graph> labelled_trees(int n) {
    if (n < 2) {
        throw std::invalid_argument("labelled_trees needs n >= 2");
    }
    std::vector<Graph> out;
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        out.push_back(tree_from_pruefer(code));
        std::size_t i = 0;
        while (i < code.size() && ++code[i] == n) {
            code[i++] = 0;
        }
        if (i == code.size()) {
            return out;
        }
    }
}

std::vector<Graph> rooted_tree_shapes(int n) {
    std::map<std::string, Graph> shapes;
    for (const auto& t : labelled_trees(n)) {
        // Canonical string of the subtree below v, children sorted.
        std::function<std::string(VertexId)> canon = [&](VertexId v) {
            std::vector<std::string> parts;
            for (auto c : t.children(v)) {
                parts.push_back(canon(c));
            }
            std::sort(parts.begin(), parts.end());
            std::string s = "(";
            for (const auto& p : parts) {
                s += p;
            }
            return s + ")";
        };
        const auto key = canon(t.root());
        if (shapes.contains(key)) {
            continue;
        }
        // Breadth-first relabelling with children in canonical order keeps the root at 0.
        std::vector<VertexId> label(static_cast<std::size_t>(n), -1);
        std::vector<VertexId> queue{t.root()};
        label[static_cast<std::size_t>(t.root())] = 0;
        int next = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            std::vector<std::pair<std::string, VertexId>> kids;
            for (auto c : t.children(queue[i])) {
                kids.emplace_back(canon(c), c);
            }
            std::sort(kids.begin(), kids.end());
            for (const auto& [s, c] : kids) {
                label[static_cast<std::size_t>(c)] = next++;
                queue.push_back(c);
            }
        }
        std::vector<Edge> edges;
        for (const auto& e : t.edges()) {
            const auto a = label[static_cast<std::size_t>(e.u)];
            const auto b = label[static_cast<std::size_t>(e.v)];
            edges.push_back(Edge{std::min(a, b), std::max(a, b)});
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
        shapes.emplace(key, Graph::tree(std::move(edges)));
    }
    std::vector<Graph> out;
    for (auto& [k, g] : shapes) {
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<bool> random_bits(Rng& rng, int n) {
    std::vector<bool> out;
    for (int i = 0; i < n; ++i) {
        out.push_back((rng() & 1U) != 0);
    }
    return out;
}

} // namespace priodpa
