// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/grid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "priodpa/errors.hpp"
#include "priodpa/oracle.hpp"
#include "priodpa/random.hpp"

namespace priodpa {

namespace {

void require_square(const Graph& g) {
    if (g.kind() != GraphKind::grid || g.rows() != g.cols()) {
        throw std::invalid_argument("square grid required, got " + g.descriptor());
    }
}

VertexId center_of(const Graph& g) { return g.grid_vertex(g.rows() / 2, g.cols() / 2); }

bool is_corner(const Graph& g, VertexId v) {
    const auto [r, c] = g.grid_coords(v);
    return (r == 0 || r == g.rows() - 1) && (c == 0 || c == g.cols() - 1);
}

// Vertices visited by `edges` when walked from `from`.
std::vector<VertexId> walk(const Graph& g, VertexId from, std::span<const EdgeId> edges) {
    std::vector<EdgeId> seq(edges.begin(), edges.end());
    const auto& first = g.edge(seq.front());
    if (first.u != from && first.v != from) {
        std::reverse(seq.begin(), seq.end());
    }
    std::vector<VertexId> out{from};
    for (auto e : seq) {
        const auto& edge = g.edge(e);
        out.push_back(edge.u == out.back() ? edge.v : edge.u);
    }
    return out;
}

std::vector<VertexId> invert(const std::vector<VertexId>& map) {
    std::vector<VertexId> inv(map.size());
    for (std::size_t v = 0; v < map.size(); ++v) {
        inv[static_cast<std::size_t>(map[v])] = static_cast<VertexId>(v);
    }
    return inv;
}

const std::vector<VertexId>& symmetry_with(const std::vector<std::vector<VertexId>>& syms, VertexId a, VertexId ia,
                                           VertexId b, VertexId ib) {
    for (const auto& s : syms) {
        if (s[static_cast<std::size_t>(a)] == ia && s[static_cast<std::size_t>(b)] == ib) {
            return s;
        }
    }
    throw std::logic_error("no grid symmetry matches the reference orientation");
}

std::size_t pick_route(const Graph& g, const std::vector<std::vector<EdgeId>>& routes, RoutePolicy policy,
                       std::uint64_t seed, const Request& r) {
    const auto center = center_of(g);
    const auto through = [&](const std::vector<EdgeId>& p) {
        return std::any_of(p.begin(), p.end(), [&](EdgeId e) { return g.edge(e).u == center || g.edge(e).v == center; });
    };
    const auto shortest_where = [&](auto pred) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < routes.size(); ++i) {
            if (pred(routes[i]) && (!best || routes[i].size() < routes[*best].size())) {
                best = i;
            }
        }
        return best;
    };
    const auto any = [](const std::vector<EdgeId>&) { return true; };
    switch (policy) {
    case RoutePolicy::shortest:
        return *shortest_where(any);
    case RoutePolicy::through_center:
        return shortest_where(through).value_or(*shortest_where(any));
    case RoutePolicy::avoid_center:
        return shortest_where([&](const std::vector<EdgeId>& p) { return !through(p); }).value_or(*shortest_where(any));
    case RoutePolicy::longest: {
        std::size_t best = 0;
        for (std::size_t i = 1; i < routes.size(); ++i) {
            if (routes[i].size() > routes[best].size()) {
                best = i;
            }
        }
        return best;
    }
    case RoutePolicy::random:
        return static_cast<std::size_t>(mix_request(seed, r) % routes.size());
    }
    throw std::logic_error("unknown route policy");
}

} // namespace

std::vector<std::vector<VertexId>> grid_symmetries(const Graph& grid) {
    require_square(grid);
    const int n = grid.rows() - 1;
    std::vector<std::vector<VertexId>> out;
    for (int t = 0; t < 8; ++t) {
        std::vector<VertexId> map(static_cast<std::size_t>(grid.vertex_count()));
        for (VertexId v = 0; v < grid.vertex_count(); ++v) {
            auto [r, c] = grid.grid_coords(v);
            if (t & 4) {
                std::swap(r, c);
            }
            if (t & 2) {
                r = n - r;
            }
            if (t & 1) {
                c = n - c;
            }
            map[static_cast<std::size_t>(v)] = grid.grid_vertex(r, c);
        }
        out.push_back(std::move(map));
    }
    return out;
}

std::vector<Request> pairs_at_distance(const Graph& grid, int d) {
    std::vector<Request> out;
    for (VertexId a = 0; a < grid.vertex_count(); ++a) {
        for (VertexId b = a + 1; b < grid.vertex_count(); ++b) {
            const auto [ra, ca] = grid.grid_coords(a);
            const auto [rb, cb] = grid.grid_coords(b);
            if (std::abs(ra - rb) + std::abs(ca - cb) == d) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

void GridRoutingAlgorithm::start(const Graph& graph, AdviceReader& /*advice*/) { order_.emplace(make_order_(graph)); }

Decision GridRoutingAlgorithm::decide(const Request& request, const RunState& state, AdviceReader& /*advice*/) {
    if (reject_first_ && state.log().empty()) {
        return Decision{request, Verdict::reject, {}};
    }
    const auto& g = state.graph();
    std::vector<std::vector<EdgeId>> routes;
    for (auto& p : simple_paths(g, request)) {
        if (state.free(p)) {
            routes.push_back(std::move(p));
        }
    }
    if (routes.empty()) {
        return Decision{request, Verdict::reject, {}};
    }
    return Decision{request, Verdict::accept, routes[pick_route(g, routes, policy_, seed_, request)]};
}

GridResponse grid_response(const Graph& grid, const Request& top, std::span<const EdgeId> allocation) {
    require_square(grid);
    if (grid.rows() != 3) {
        throw std::invalid_argument("the grid adversary is defined on the 3x3 grid only");
    }
    const VertexId v = is_corner(grid, top.x()) ? top.x() : top.y();
    const VertexId w = top.x() == v ? top.y() : top.x();
    if (!is_corner(grid, v) || is_corner(grid, w)) {
        throw std::invalid_argument("top request " + top.str() + " does not join a corner to a side midpoint");
    }
    const auto syms = grid_symmetries(grid);
    const auto center = center_of(grid);
    const auto steps = walk(grid, v, allocation);

    GridResponse out;
    out.corner = v;
    if (steps.size() >= 3 && steps[2] == center) {
        out.kind = "center";
        out.pivot = steps[1];
        // Reference frame: v = 0, pivot = 3; follow-ups [3,2], [3,8], [6,1].
        out.canonical = symmetry_with(syms, v, 0, out.pivot, 3);
        const auto back = invert(out.canonical);
        const auto at = [&](VertexId u) { return back[static_cast<std::size_t>(u)]; };
        out.follow_ups = {Request(at(3), at(2)), Request(at(3), at(8)), Request(at(6), at(1))};
        return out;
    }
    for (std::size_t i = 1; i + 1 < steps.size(); ++i) {
        if (is_corner(grid, steps[i])) {
            out.kind = "corner";
            out.pivot = steps[i];
            out.canonical = symmetry_with(syms, v, 0, w, 7);
            // The midpoints of the two sides that avoid the corner.
            const auto [cr, cc] = grid.grid_coords(out.pivot);
            out.follow_ups = {Request(out.pivot, grid.grid_vertex(2 - cr, 1)),
                              Request(out.pivot, grid.grid_vertex(1, 2 - cc))};
            return out;
        }
    }
    throw std::logic_error("path for " + top.str() + " passes neither an internal corner nor the center");
}

AdversaryOutcome grid_adversary(PriorityAlgorithm& alg) {
    auto grid = std::make_shared<const Graph>(Graph::grid(3, 3));
    const auto universe = pairs_at_distance(*grid, 3);
    const Session probe(alg, grid);
    const auto top = probe.max_of(universe);

    Session first(alg, grid);
    const auto decision = first.feed(top);
    if (!decision.accepted()) {
        return AdversaryOutcome{"rejected", top, Instance(grid, {top}), GainPair{0, 1}, 0};
    }
    const auto response = grid_response(*grid, top, decision.allocation);
    auto reqs = response.follow_ups;
    reqs.push_back(top);
    Instance instance(grid, reqs);
    const auto result = run(alg, instance);
    if (result.log.front().request != top || result.log.front() != decision) {
        throw std::logic_error(alg.name() + " did not repeat its first decision");
    }
    const auto opt = brute_force_opt(instance, GainMode::count).optimum;
    return AdversaryOutcome{response.kind, top, instance,
                            GainPair{gain(*grid, result.solution, GainMode::count), opt}, 0};
}

GridVerification exhaustive_verify_3x3() {
    auto grid = std::make_shared<const Graph>(Graph::grid(3, 3));
    GridVerification out;
    const auto pairs = pairs_at_distance(*grid, 3);
    out.pairs = static_cast<int>(pairs.size());

    const auto syms = grid_symmetries(*grid);
    std::set<Request> orbit;
    for (const auto& s : syms) {
        orbit.insert(Request(s[static_cast<std::size_t>(pairs.front().x())], s[static_cast<std::size_t>(pairs.front().y())]));
    }
    out.single_orbit = orbit == std::set<Request>(pairs.begin(), pairs.end());

    out.passed = out.single_orbit && !pairs.empty();
    for (const auto& r : pairs) {
        for (const auto& p : simple_paths(*grid, r)) {
            GridCase c{.request = r, .path = p};
            try {
                const auto response = grid_response(*grid, r, p);
                c.split_holds = true;
                c.kind = response.kind;
                c.follow_ups = response.follow_ups;
            } catch (const std::logic_error&) {
                c.split_holds = false;
            }
            if (c.split_holds) {
                const Instance follow(grid, c.follow_ups);
                c.follow_up_opt = brute_force_opt(follow, GainMode::count).optimum;
                const Instance full = follow.with(r);
                c.instance_opt = brute_force_opt(full, GainMode::count).optimum;
                CompletionQuery q;
                q.forced = {r};
                q.pinned = {Allocation{r, p}};
                c.best_committed = best_completion(full, q, GainMode::count).value_or(0);
                const GainPair certified{c.best_committed, c.follow_up_opt};
                const GainPair exact{c.best_committed, c.instance_opt};
                c.certified = certified.ratio();
                c.exact = exact.ratio();
                const bool center = c.kind == "center";
                c.passed = c.follow_up_opt == (center ? 3 : 2) && c.best_committed <= (center ? 2 : 1) &&
                           c.certified && *c.certified >= Ratio(3, 2) && c.exact && *c.exact >= Ratio(3, 2) &&
                           (center || *c.certified == Ratio(2));
                (center ? out.center_cases : out.corner_cases) += 1;
            }
            out.passed = out.passed && c.passed;
            out.cases.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace priodpa
