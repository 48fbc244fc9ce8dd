// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Disjoint paths on trees: peak order, greedy, the star adversary, the phase label advice
// codec and edge-disjoint star packing.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "priodpa/engine.hpp"
#include "priodpa/measure.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

// Vertex of the request's path closest to the root.
struct Peak {
    Request request;
    VertexId vertex = -1;
    bool at_endpoint = false;
};

[[nodiscard]] Peak peak(const Graph& tree, const Request& request);
// The two path edges incident to a peak that is not an endpoint, in child id order.
[[nodiscard]] std::array<EdgeId, 2> peak_edges(const Graph& tree, const Peak& p);

// Deeper peak first, then larger peak id, then requests ending at their peak.
[[nodiscard]] PriorityOrder cat_order(const Graph& tree);
[[nodiscard]] Solution greedy_cat(const Instance& instance);

// Serves the algorithm's top length-2 path around a degree >= 4 vertex, then the two
// paths that each share one of its edges. Throws InvalidTree when the maximum degree is below 4.
[[nodiscard]] AdversaryOutcome star_adversary(PriorityAlgorithm& alg, std::shared_ptr<const Graph> tree);

struct TreeStats {
    int leaves = 0;
    int degree3 = 0;
    int max_degree = 0;
    int star_weight = 0; // sum of floor(deg / 4)
    int star_bound = 0;  // ceil(star_weight / 2)
};
[[nodiscard]] TreeStats tree_stats(const Graph& tree);

// (leaves - degree3 - 2) * ceil(log2(max_degree / 2)); 0 when the maximum degree is below 4.
[[nodiscard]] std::int64_t cat_advice_bound(const TreeStats& stats);
// Bits per label at a peak of this degree.
[[nodiscard]] int label_width(int degree);

// Labels of the child edges still free when a phase at a degree >= 4 peak needs advice.
struct PhaseLabels {
    VertexId vertex = -1;
    std::vector<EdgeId> edges;
    std::vector<int> labels;
};

struct CatEncoding {
    AdviceTape tape;
    std::vector<PhaseLabels> phases;
};
[[nodiscard]] CatEncoding encode_cat_advice(const Instance& instance);

// Greedy on phases that need no advice; elsewhere accepts a request only if both its edges at
// the peak carry the same positive label.
class CatAdviceAlgorithm : public PriorityAlgorithm {
  public:
    [[nodiscard]] std::string name() const override { return "advice-cat"; }
    void start(const Graph& graph, AdviceReader& advice) override;
    [[nodiscard]] const PriorityOrder& order() const override { return *order_; }
    [[nodiscard]] Decision decide(const Request& request, const RunState& state, AdviceReader& advice) override;

  private:
    std::optional<PriorityOrder> order_;
    VertexId phase_ = -1;
    bool labels_ready_ = false;
    std::vector<EdgeId> edges_;
    std::vector<int> labels_;
};

[[nodiscard]] RunResult decode_run_cat(const Instance& instance, const AdviceTape& tape);

struct StarCopy {
    VertexId center = -1;
    std::array<VertexId, 4> leaves{};
};
// Pairwise edge-disjoint copies of K_{1,4}; at least tree_stats(tree).star_bound of them.
[[nodiscard]] std::vector<StarCopy> pack_s4(const Graph& tree);

} // namespace priodpa
