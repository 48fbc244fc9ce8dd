// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Undirected simple graphs used by the allocation problems: paths, rooted trees and grids.
// Vertex ids are 0-based and consecutive. Graphs are immutable after construction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace priodpa {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u;
    VertexId v; // u < v

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class GraphKind { path, tree, grid };

// Dynamic bitset over edge ids.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t edge_count) : words_((edge_count + 63) / 64, 0) {}

    void insert(EdgeId e) {
        grow(e);
        words_[static_cast<std::size_t>(e) / 64] |= bit(e);
    }
    void erase(EdgeId e) {
        if (static_cast<std::size_t>(e) / 64 < words_.size()) {
            words_[static_cast<std::size_t>(e) / 64] &= ~bit(e);
        }
    }
    [[nodiscard]] bool contains(EdgeId e) const {
        const auto w = static_cast<std::size_t>(e) / 64;
        return w < words_.size() && (words_[w] & bit(e)) != 0;
    }
    [[nodiscard]] bool intersects(const EdgeSet& other) const;
    void merge(const EdgeSet& other);
    void subtract(const EdgeSet& other);
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool empty() const { return count() == 0; }
    [[nodiscard]] std::vector<EdgeId> to_vector() const;

    friend bool operator==(const EdgeSet& a, const EdgeSet& b);

  private:
    static std::uint64_t bit(EdgeId e) { return std::uint64_t{1} << (static_cast<unsigned>(e) % 64); }
    void grow(EdgeId e) {
        const auto need = static_cast<std::size_t>(e) / 64 + 1;
        if (words_.size() < need) {
            words_.resize(need, 0);
        }
    }

    std::vector<std::uint64_t> words_;
};

class Graph {
  public:
    struct Incidence {
        VertexId neighbor;
        EdgeId edge;
    };

    // Path 0 - 1 - ... - length; edge i joins i and i+1.
    static Graph path(int length);
    // Tree on vertices 0..edges.size(); rooted at the leaf with the smallest id.
    static Graph tree(std::vector<Edge> edges);
    // rows x cols grid, vertex (row, col) has id row * cols + col. Horizontal edges first.
    static Graph grid(int rows, int cols);

    [[nodiscard]] GraphKind kind() const { return kind_; }
    [[nodiscard]] int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] bool contains(VertexId v) const { return v >= 0 && v < vertex_count(); }
    [[nodiscard]] const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
    // Sorted by neighbor id.
    [[nodiscard]] std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
    [[nodiscard]] bool acyclic() const { return acyclic_; }

    // Rooted structure; only available when acyclic().
    [[nodiscard]] VertexId root() const;
    [[nodiscard]] VertexId parent(VertexId v) const; // -1 for the root
    [[nodiscard]] EdgeId parent_edge(VertexId v) const;
    [[nodiscard]] int depth(VertexId v) const;
    [[nodiscard]] std::span<const VertexId> children(VertexId v) const;
    [[nodiscard]] int distance(VertexId a, VertexId b) const;

    [[nodiscard]] int path_length() const;
    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] VertexId grid_vertex(int row, int col) const;
    [[nodiscard]] std::pair<int, int> grid_coords(VertexId v) const;

    // "path:5", "tree:14", "grid:3x3".
    [[nodiscard]] std::string descriptor() const;
    // Structural identity; equal graphs have equal fingerprints.
    [[nodiscard]] std::uint64_t fingerprint() const { return fingerprint_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.kind_ == b.kind_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.edges_ == b.edges_;
    }

  private:
    Graph(GraphKind kind, int vertex_count, std::vector<Edge> edges);
    void build_rooted();
    void require_rooted() const;

    GraphKind kind_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    bool acyclic_ = false;
    int rows_ = 0;
    int cols_ = 0;
    std::uint64_t fingerprint_ = 0;

    VertexId root_ = -1;
    std::vector<VertexId> parent_;
    std::vector<EdgeId> parent_edge_;
    std::vector<int> depth_;
    std::vector<std::vector<VertexId>> children_;
};

} // namespace priodpa
