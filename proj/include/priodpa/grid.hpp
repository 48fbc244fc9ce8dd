// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The 3x3 grid: routing algorithms, the corner/center adversary and an exhaustive
// check of its case analysis over every simple path.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "priodpa/engine.hpp"
#include "priodpa/measure.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

// The eight symmetries of a square grid as vertex maps (image[v]).
[[nodiscard]] std::vector<std::vector<VertexId>> grid_symmetries(const Graph& grid);
// Pairs at grid distance exactly d.
[[nodiscard]] std::vector<Request> pairs_at_distance(const Graph& grid, int d);

enum class RoutePolicy { shortest, through_center, avoid_center, longest, random };

// Accepts whenever some simple path is free and allocates one chosen by the policy.
class GridRoutingAlgorithm : public PriorityAlgorithm {
  public:
    using OrderFactory = std::function<PriorityOrder(const Graph&)>;

    GridRoutingAlgorithm(std::string name, OrderFactory make_order, RoutePolicy policy, std::uint64_t seed = 0,
                         bool reject_first = false)
        : name_{std::move(name)}, make_order_{std::move(make_order)}, policy_{policy}, seed_{seed},
          reject_first_{reject_first} {}

    [[nodiscard]] std::string name() const override { return name_; }
    void start(const Graph& graph, AdviceReader& advice) override;
    [[nodiscard]] const PriorityOrder& order() const override { return *order_; }
    [[nodiscard]] Decision decide(const Request& request, const RunState& state, AdviceReader& advice) override;

  private:
    std::string name_;
    OrderFactory make_order_;
    RoutePolicy policy_;
    std::uint64_t seed_;
    bool reject_first_;
    std::optional<PriorityOrder> order_;
};

// How the adversary answers an allocation of its top request.
struct GridResponse {
    std::string kind;  // "center" or "corner"
    VertexId corner = -1;  // endpoint of the top request at a grid corner
    VertexId pivot = -1;   // corner case: internal corner of the path; center case: vertex before the center
    std::vector<Request> follow_ups;
    std::vector<VertexId> canonical; // symmetry used to match the reference orientation
};

// Throws std::logic_error when the path neither passes an internal corner nor the center.
[[nodiscard]] GridResponse grid_response(const Graph& grid, const Request& top, std::span<const EdgeId> allocation);

[[nodiscard]] AdversaryOutcome grid_adversary(PriorityAlgorithm& alg);

struct GridCase {
    Request request;
    std::vector<EdgeId> path;
    bool split_holds = false; // internal corner or center on the path
    std::string kind{};
    std::vector<Request> follow_ups{};
    std::int64_t follow_up_opt = 0;   // optimum over the follow-ups alone
    std::int64_t instance_opt = 0;    // optimum with the top request included
    std::int64_t best_committed = 0;  // best total once the top request holds this path
    std::optional<Ratio> certified{};   // follow_up_opt / best_committed
    std::optional<Ratio> exact{};       // instance_opt / best_committed
    bool passed = false;
};

struct GridVerification {
    int pairs = 0;
    bool single_orbit = false;
    std::vector<GridCase> cases;
    int corner_cases = 0;
    int center_cases = 0;
    bool passed = false;
};

[[nodiscard]] GridVerification exhaustive_verify_3x3();

} // namespace priodpa
