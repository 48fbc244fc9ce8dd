// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/battery.hpp"

#include <stdexcept>

#include "priodpa/cat_tree.hpp"
#include "priodpa/dpa_path.hpp"
#include "priodpa/grid.hpp"
#include "priodpa/lwdpa.hpp"
#include "priodpa/random.hpp"

namespace priodpa {

namespace {

constexpr int kRandomOrders = 10;

enum class Policy { greedy, reject_first, accept_first_only };

int request_length(const Graph& g, const Request& r) {
    return g.acyclic() ? g.distance(r.x(), r.y()) : [&] {
        const auto [ra, ca] = g.grid_coords(r.x());
        const auto [rb, cb] = g.grid_coords(r.y());
        return std::abs(ra - rb) + std::abs(ca - cb);
    }();
}

// Greedy on the unique path, optionally refusing the first request or everything after it.
class PolicyAlgorithm : public PriorityAlgorithm {
  public:
    PolicyAlgorithm(std::string name, GreedyAlgorithm::OrderFactory make_order, Policy policy)
        : name_{std::move(name)}, make_order_{std::move(make_order)}, policy_{policy} {}

    [[nodiscard]] std::string name() const override { return name_; }
    void start(const Graph& graph, AdviceReader& /*advice*/) override { order_.emplace(make_order_(graph)); }
    [[nodiscard]] const PriorityOrder& order() const override { return *order_; }
    [[nodiscard]] Decision decide(const Request& request, const RunState& state, AdviceReader& /*advice*/) override {
        const bool first = state.log().empty();
        bool accept = !state.blocked(request);
        if (policy_ == Policy::reject_first && first) {
            accept = false;
        }
        if (policy_ == Policy::accept_first_only && !first) {
            accept = false;
        }
        return Decision{request, accept ? Verdict::accept : Verdict::reject, {}};
    }

  private:
    std::string name_;
    GreedyAlgorithm::OrderFactory make_order_;
    Policy policy_;
    std::optional<PriorityOrder> order_;
};

// Greedy whose order flips between longest-first and shortest-first after every decision.
class AlternatingAlgorithm : public PriorityAlgorithm {
  public:
    [[nodiscard]] std::string name() const override { return "alternating"; }
    void start(const Graph& graph, AdviceReader& /*advice*/) override {
        longest_.emplace(lwdpa_order_on(graph));
        shortest_.emplace(shortest_first_order(graph));
        flip_ = false;
    }
    [[nodiscard]] const PriorityOrder& order() const override { return flip_ ? *shortest_ : *longest_; }
    [[nodiscard]] Decision decide(const Request& request, const RunState& state, AdviceReader& /*advice*/) override {
        flip_ = !flip_;
        return Decision{request, state.blocked(request) ? Verdict::reject : Verdict::accept, {}};
    }

  private:
    static PriorityOrder lwdpa_order_on(const Graph& g) {
        const Graph* gp = &g;
        return PriorityOrder::by_key("longest-first", [gp](const Request& r) {
            return PriorityKey{request_length(*gp, r), -r.x(), 0, 0};
        });
    }

    std::optional<PriorityOrder> longest_;
    std::optional<PriorityOrder> shortest_;
    bool flip_ = false;
};

std::uint64_t seed_of(const std::string& name, const std::string& prefix) {
    return std::stoull(name.substr(prefix.size()));
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

PriorityOrder longest_first_rightmost(const Graph& g) {
    const Graph* gp = &g;
    return PriorityOrder::by_key("longest-rightmost",
                                 [gp](const Request& r) { return PriorityKey{request_length(*gp, r), r.x(), 0, 0}; });
}

} // namespace

PriorityOrder random_order(std::uint64_t seed) {
    return PriorityOrder::by_key("random-" + std::to_string(seed), [seed](const Request& r) {
        return PriorityKey{static_cast<std::int64_t>(mix_request(seed, r) >> 1), 0, 0, 0};
    });
}

PriorityOrder shortest_first_order(const Graph& graph) {
    const Graph* g = &graph;
    return PriorityOrder::by_key("shortest-first",
                                 [g](const Request& r) { return PriorityKey{-request_length(*g, r), -r.x(), 0, 0}; });
}

PriorityOrder lexicographic_order() {
    return PriorityOrder::by_key("lexicographic", [](const Request&) { return PriorityKey{}; });
}

std::vector<std::string> battery_names() {
    std::vector<std::string> names{"greedy-path",        "greedy-lwdpa",          "greedy-cat",
                                   "greedy-shortest",    "greedy-lex",            "greedy-longest-right",
                                   "reject-first-lwdpa", "reject-first-shortest", "accept-first-only",
                                   "alternating"};
    for (int s = 1; s <= kRandomOrders; ++s) {
        names.push_back("random-" + std::to_string(s));
    }
    return names;
}

std::vector<std::string> grid_battery_names() {
    std::vector<std::string> names;
    for (const auto* order : {"lex", "shortest", "longest"}) {
        for (const auto* route : {"shortest", "center", "avoid", "longest"}) {
            names.push_back(std::string("grid-") + order + "-" + route);
        }
    }
    for (int s = 1; s <= 4; ++s) {
        names.push_back("grid-random-" + std::to_string(s));
    }
    names.emplace_back("grid-reject-first");
    return names;
}

std::unique_ptr<PriorityAlgorithm> make_algorithm(const std::string& name) {
    using Factory = GreedyAlgorithm::OrderFactory;
    const Factory lex = [](const Graph&) { return lexicographic_order(); };
    if (name == "greedy-path") {
        return std::make_unique<GreedyAlgorithm>(name, right_end_order);
    }
    if (name == "greedy-lwdpa") {
        return std::make_unique<GreedyAlgorithm>(name, lwdpa_order);
    }
    if (name == "greedy-cat") {
        return std::make_unique<GreedyAlgorithm>(name, cat_order);
    }
    if (name == "greedy-shortest") {
        return std::make_unique<GreedyAlgorithm>(name, shortest_first_order);
    }
    if (name == "greedy-lex") {
        return std::make_unique<GreedyAlgorithm>(name, lex);
    }
    if (name == "greedy-longest-right") {
        return std::make_unique<GreedyAlgorithm>(name, longest_first_rightmost);
    }
    if (name == "reject-first-lwdpa") {
        return std::make_unique<PolicyAlgorithm>(name, lwdpa_order, Policy::reject_first);
    }
    if (name == "reject-first-shortest") {
        return std::make_unique<PolicyAlgorithm>(name, shortest_first_order, Policy::reject_first);
    }
    if (name == "accept-first-only") {
        return std::make_unique<PolicyAlgorithm>(name, lwdpa_order, Policy::accept_first_only);
    }
    if (name == "alternating") {
        return std::make_unique<AlternatingAlgorithm>();
    }
    if (name == "advice-lwdpa") {
        return std::make_unique<LwdpaAdviceAlgorithm>();
    }
    if (name == "advice-cat") {
        return std::make_unique<CatAdviceAlgorithm>();
    }
    if (starts_with(name, "random-")) {
        const auto seed = seed_of(name, "random-");
        return std::make_unique<GreedyAlgorithm>(name, [seed](const Graph&) { return random_order(seed); });
    }
    if (starts_with(name, "grid-random-")) {
        const auto seed = seed_of(name, "grid-random-");
        return std::make_unique<GridRoutingAlgorithm>(
            name, [seed](const Graph&) { return random_order(seed); }, RoutePolicy::random, seed);
    }
    if (name == "grid-reject-first") {
        return std::make_unique<GridRoutingAlgorithm>(name, lex, RoutePolicy::shortest, 0, true);
    }
    if (starts_with(name, "grid-")) {
        const auto rest = name.substr(5);
        const auto dash = rest.find('-');
        if (dash != std::string::npos) {
            const auto order = rest.substr(0, dash);
            const auto route = rest.substr(dash + 1);
            Factory f;
            if (order == "lex") {
                f = lex;
            } else if (order == "shortest") {
                f = shortest_first_order;
            } else if (order == "longest") {
                f = longest_first_rightmost;
            }
            std::optional<RoutePolicy> policy;
            if (route == "shortest") {
                policy = RoutePolicy::shortest;
            } else if (route == "center") {
                policy = RoutePolicy::through_center;
            } else if (route == "avoid") {
                policy = RoutePolicy::avoid_center;
            } else if (route == "longest") {
                policy = RoutePolicy::longest;
            }
            if (f && policy) {
                return std::make_unique<GridRoutingAlgorithm>(name, f, *policy);
            }
        }
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

} // namespace priodpa
