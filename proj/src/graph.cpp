// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "priodpa/errors.hpp"

namespace priodpa {

bool EdgeSet::intersects(const EdgeSet& other) const {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

void EdgeSet::merge(const EdgeSet& other) {
    if (words_.size() < other.words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
}

void EdgeSet::subtract(const EdgeSet& other) {
    const auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        words_[i] &= ~other.words_[i];
    }
}

std::size_t EdgeSet::count() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<EdgeId> EdgeSet::to_vector() const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w != 0) {
            const int b = std::countr_zero(w);
            out.push_back(static_cast<EdgeId>(i * 64 + static_cast<std::size_t>(b)));
            w &= w - 1;
        }
    }
    return out;
}

bool operator==(const EdgeSet& a, const EdgeSet& b) {
    const auto n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto wa = i < a.words_.size() ? a.words_[i] : 0;
        const auto wb = i < b.words_.size() ? b.words_[i] : 0;
        if (wa != wb) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

Graph::Graph(GraphKind kind, int vertex_count, std::vector<Edge> edges)
    : kind_{kind}, edges_{std::move(edges)}, adjacency_(static_cast<std::size_t>(vertex_count)) {
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        auto& edge = edges_[static_cast<std::size_t>(e)];
        if (edge.u > edge.v) {
            std::swap(edge.u, edge.v);
        }
        if (edge.u == edge.v || edge.u < 0 || edge.v >= vertex_count) {
            throw InvalidTree("edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) + "} is invalid");
        }
        adjacency_[static_cast<std::size_t>(edge.u)].push_back({edge.v, e});
        adjacency_[static_cast<std::size_t>(edge.v)].push_back({edge.u, e});
    }
    for (auto& inc : adjacency_) {
        std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
        for (std::size_t i = 1; i < inc.size(); ++i) {
            if (inc[i].neighbor == inc[i - 1].neighbor) {
                throw InvalidTree("parallel edges are not supported");
            }
        }
    }
}

Graph Graph::path(int length) {
    if (length < 1) {
        throw InvalidParams("path length must be at least 1");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(length));
    for (VertexId i = 0; i < length; ++i) {
        edges.push_back({i, i + 1});
    }
    Graph g(GraphKind::path, length + 1, std::move(edges));
    g.rows_ = 1;
    g.cols_ = length + 1;
    g.build_rooted();
    return g;
}

Graph Graph::tree(std::vector<Edge> edges) {
    if (edges.empty()) {
        throw InvalidTree("a tree needs at least one edge");
    }
    const int n = static_cast<int>(edges.size()) + 1;
    Graph g(GraphKind::tree, n, std::move(edges));
    g.build_rooted();
    if (!g.acyclic_) {
        throw InvalidTree("edge list is not a tree (disconnected or cyclic)");
    }
    return g;
}

Graph Graph::grid(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2) {
        throw InvalidParams("grid needs positive dimensions and at least two vertices");
    }
    std::vector<Edge> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c + 1 < cols; ++c) {
            edges.push_back({r * cols + c, r * cols + c + 1});
        }
    }
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            edges.push_back({r * cols + c, (r + 1) * cols + c});
        }
    }
    Graph g(GraphKind::grid, rows * cols, std::move(edges));
    g.rows_ = rows;
    g.cols_ = cols;
    if (rows == 1 || cols == 1) {
        g.build_rooted();
    } else {
        g.fingerprint_ = fnv1a(fnv1a(fnv1a(0xcbf29ce484222325ULL, 2), static_cast<std::uint64_t>(rows)),
                               static_cast<std::uint64_t>(cols));
    }
    return g;
}

void Graph::build_rooted() {
    const auto n = adjacency_.size();
    std::uint64_t h = fnv1a(0xcbf29ce484222325ULL, static_cast<std::uint64_t>(kind_));
    h = fnv1a(h, n);
    for (const auto& e : edges_) {
        h = fnv1a(fnv1a(h, static_cast<std::uint64_t>(e.u)), static_cast<std::uint64_t>(e.v));
    }
    fingerprint_ = h;

    if (edges_.size() + 1 != n) {
        acyclic_ = false;
        return;
    }
    root_ = -1;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (adjacency_[static_cast<std::size_t>(v)].size() == 1) {
            root_ = v;
            break;
        }
    }
    if (root_ < 0) {
        acyclic_ = false;
        return;
    }
    parent_.assign(n, -1);
    parent_edge_.assign(n, -1);
    depth_.assign(n, -1);
    children_.assign(n, {});
    std::deque<VertexId> queue{root_};
    depth_[static_cast<std::size_t>(root_)] = 0;
    std::size_t seen = 1;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const auto& inc : adjacency_[static_cast<std::size_t>(v)]) {
            auto& d = depth_[static_cast<std::size_t>(inc.neighbor)];
            if (d >= 0) {
                continue;
            }
            d = depth_[static_cast<std::size_t>(v)] + 1;
            parent_[static_cast<std::size_t>(inc.neighbor)] = v;
            parent_edge_[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
            children_[static_cast<std::size_t>(v)].push_back(inc.neighbor);
            queue.push_back(inc.neighbor);
            ++seen;
        }
    }
    // n - 1 edges and connected implies acyclic.
    acyclic_ = seen == n;
}

void Graph::require_rooted() const {
    if (!acyclic_) {
        throw std::logic_error("rooted structure requested on a graph with cycles");
    }
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& inc : adjacency_) {
        best = std::max(best, static_cast<int>(inc.size()));
    }
    return best;
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
    if (!contains(a) || !contains(b)) {
        return std::nullopt;
    }
    const auto inc = incident(a);
    const auto it = std::lower_bound(inc.begin(), inc.end(), b,
                                     [](const Incidence& i, VertexId v) { return i.neighbor < v; });
    if (it != inc.end() && it->neighbor == b) {
        return it->edge;
    }
    return std::nullopt;
}

VertexId Graph::root() const {
    require_rooted();
    return root_;
}

VertexId Graph::parent(VertexId v) const {
    require_rooted();
    return parent_.at(static_cast<std::size_t>(v));
}

EdgeId Graph::parent_edge(VertexId v) const {
    require_rooted();
    return parent_edge_.at(static_cast<std::size_t>(v));
}

int Graph::depth(VertexId v) const {
    require_rooted();
    return depth_.at(static_cast<std::size_t>(v));
}

std::span<const VertexId> Graph::children(VertexId v) const {
    require_rooted();
    return children_.at(static_cast<std::size_t>(v));
}

int Graph::distance(VertexId a, VertexId b) const {
    require_rooted();
    int d = 0;
    while (a != b) {
        if (depth(a) >= depth(b)) {
            a = parent(a);
        } else {
            b = parent(b);
        }
        ++d;
    }
    return d;
}

int Graph::path_length() const {
    if (kind_ != GraphKind::path) {
        throw std::logic_error("path_length() on a non-path graph");
    }
    return edge_count();
}

VertexId Graph::grid_vertex(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw std::out_of_range("grid coordinate out of range");
    }
    return row * cols_ + col;
}

std::pair<int, int> Graph::grid_coords(VertexId v) const { return {v / cols_, v % cols_}; }

std::string Graph::descriptor() const {
    switch (kind_) {
    case GraphKind::path:
        return "path:" + std::to_string(edge_count());
    case GraphKind::tree:
        return "tree:" + std::to_string(vertex_count());
    case GraphKind::grid:
        return "grid:" + std::to_string(rows_) + "x" + std::to_string(cols_);
    }
    return "unknown";
}

} // namespace priodpa
