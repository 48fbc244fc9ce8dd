// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/sgkh.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "priodpa/cat_tree.hpp"
#include "priodpa/errors.hpp"
#include "priodpa/oracle.hpp"

namespace priodpa {

namespace {

struct Gadget {
    std::vector<Request> requests;
};

// Requests to serve after the probe m, given the true bit.
using FollowUp = std::function<std::vector<Request>(const Gadget&, const Request& m, bool truth)>;

bool member(const std::vector<Request>& v, const Request& r) { return std::find(v.begin(), v.end(), r) != v.end(); }

// Highest-priority request of `pool` under the session's current order, checked against every other.
Request top_of(const Session& session, const std::vector<Request>& pool) {
    const auto m = session.max_of(pool);
    for (const auto& r : pool) {
        if (r != m && !session.order().higher(m, r)) {
            throw std::logic_error("reduction fed " + m.str() + " although " + r.str() + " ranks higher");
        }
    }
    return m;
}

GuessRun reduce(PriorityAlgorithm& alg, const GuessInstance& g, const std::shared_ptr<const Graph>& graph,
                const std::vector<Gadget>& gadgets, const FollowUp& follow_up, GainMode mode) {
    Session session(alg, graph);
    std::vector<Request> unserved;
    std::vector<int> gadget_of_unserved;
    for (std::size_t i = 0; i < gadgets.size(); ++i) {
        for (const auto& r : gadgets[i].requests) {
            unserved.push_back(r);
        }
    }
    std::vector<Request> pending;
    std::vector<Request> fed;
    const auto gadget_index = [&](const Request& r) {
        for (std::size_t i = 0; i < gadgets.size(); ++i) {
            if (member(gadgets[i].requests, r)) {
                return static_cast<int>(i);
            }
        }
        throw std::logic_error("request " + r.str() + " belongs to no gadget");
    };
    const auto feed = [&](const Request& r) {
        fed.push_back(r);
        return session.feed(r).accepted();
    };

    GuessRun out{{}, 0, Instance(graph, {}), {}, {}, {}};
    std::vector<int> probe_gadget;
    for (int k = 0; k < g.n(); ++k) {
        for (;;) {
            std::vector<Request> pool = unserved;
            pool.insert(pool.end(), pending.begin(), pending.end());
            const auto m = top_of(session, pool);
            if (!member(pending, m)) {
                break;
            }
            feed(m);
            pending.erase(std::find(pending.begin(), pending.end(), m));
        }
        std::vector<Request> pool = unserved;
        pool.insert(pool.end(), pending.begin(), pending.end());
        const auto m = top_of(session, pool);
        const int i = gadget_index(m);
        const auto& gadget = gadgets[static_cast<std::size_t>(i)];
        std::erase_if(unserved, [&](const Request& r) { return member(gadget.requests, r); });
        const bool guess = feed(m);
        const bool truth = g.bits[static_cast<std::size_t>(k)];
        out.guesses.push_back(guess);
        out.correct += guess == truth ? 1 : 0;
        for (const auto& r : follow_up(gadget, m, truth)) {
            pending.push_back(r);
        }
        out.gadgets.push_back(GadgetAccount{i, m, guess, truth, 0, 0});
    }
    while (!pending.empty()) {
        const auto m = top_of(session, pending);
        feed(m);
        pending.erase(std::find(pending.begin(), pending.end(), m));
    }

    out.instance = Instance(graph, fed);
    out.log = session.state().log();
    const auto& solution = session.state().solution();
    for (auto& acc : out.gadgets) {
        const auto& reqs = gadgets[static_cast<std::size_t>(acc.gadget)].requests;
        Solution part;
        std::vector<Request> served;
        for (const auto& a : solution.accepted) {
            if (member(reqs, a.request)) {
                part.accepted.push_back(a);
            }
        }
        for (const auto& r : fed) {
            if (member(reqs, r)) {
                served.push_back(r);
            }
        }
        acc.alg_gain = gain(*graph, part, mode);
        acc.opt_gain = brute_force_opt(Instance(graph, served), mode).optimum;
    }
    OracleOptions opts;
    opts.cap = 8; // every component lies inside one gadget
    out.gains = GainPair{gain(*graph, solution, mode), brute_force_opt(out.instance, mode, opts).optimum};
    return out;
}

void require_bits(const GuessInstance& g) {
    if (g.n() < 1) {
        throw InvalidParams("at least one bit to guess is needed");
    }
}

} // namespace

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy_lower_bound(double eps, std::int64_t n) {
    if (!(eps >= 0.5 && eps < 1.0)) {
        throw InvalidParams("eps must lie in [1/2, 1)");
    }
    if (n < 0) {
        throw InvalidParams("n must be nonnegative");
    }
    if (eps == 0.5) {
        return 0.0;
    }
    return (1.0 - binary_entropy(eps)) * static_cast<double>(n);
}

GuessRun run_guess(PriorityAlgorithm& alg, const GuessInstance& g, std::optional<int> length) {
    require_bits(g);
    const int l = length.value_or(3 * g.n());
    if (l < 3 * g.n()) {
        throw InvalidParams("path of length " + std::to_string(l) + " cannot hold " + std::to_string(g.n()) +
                            " segments of length 3");
    }
    auto graph = std::make_shared<const Graph>(Graph::path(l));
    std::vector<Gadget> gadgets;
    for (int i = 0; i < g.n(); ++i) {
        const int s = 3 * i;
        // Listed so that request j and request j+2 are complementary.
        gadgets.push_back(Gadget{{Request(s, s + 1), Request(s, s + 2), Request(s + 1, s + 3), Request(s + 2, s + 3)}});
    }
    const FollowUp follow_up = [](const Gadget& gadget, const Request& m, bool truth) {
        const auto& r = gadget.requests;
        const auto j = static_cast<std::size_t>(std::find(r.begin(), r.end(), m) - r.begin());
        const auto complement = r[(j + 2) % 4];
        if (truth) {
            return std::vector<Request>{complement};
        }
        std::vector<Request> rest;
        for (const auto& q : r) {
            if (q != m && q != complement) {
                rest.push_back(q);
            }
        }
        return rest;
    };
    return reduce(alg, g, graph, gadgets, follow_up, GainMode::length);
}

GuessRun run_tguess(PriorityAlgorithm& alg, const GuessInstance& g, std::shared_ptr<const Graph> tree) {
    require_bits(g);
    if (!tree->acyclic()) {
        throw InvalidTree("tree reduction needs a tree, got " + tree->descriptor());
    }
    const auto stars = pack_s4(*tree);
    if (static_cast<int>(stars.size()) < g.n()) {
        throw InvalidTree(tree->descriptor() + " holds only " + std::to_string(stars.size()) +
                          " edge-disjoint stars, " + std::to_string(g.n()) + " needed");
    }
    std::vector<Gadget> gadgets;
    for (int i = 0; i < g.n(); ++i) {
        const auto& leaves = stars[static_cast<std::size_t>(i)].leaves;
        Gadget gadget;
        for (std::size_t a = 0; a < leaves.size(); ++a) {
            for (std::size_t b = a + 1; b < leaves.size(); ++b) {
                gadget.requests.emplace_back(leaves[a], leaves[b]);
            }
        }
        std::sort(gadget.requests.begin(), gadget.requests.end());
        gadgets.push_back(std::move(gadget));
    }
    const Graph* t = tree.get();
    const FollowUp follow_up = [t](const Gadget& gadget, const Request& m, bool truth) {
        const auto meets = [&](const Request& a, const Request& b) { return intersects(*t, a, b); };
        if (truth) {
            std::vector<Request> disjoint;
            for (const auto& q : gadget.requests) {
                if (q != m && !meets(q, m)) {
                    disjoint.push_back(q);
                }
            }
            if (disjoint.size() != 1) {
                throw std::logic_error("star gadget: expected exactly one request disjoint from " + m.str());
            }
            return disjoint;
        }
        const auto& r = gadget.requests;
        for (std::size_t a = 0; a < r.size(); ++a) {
            for (std::size_t b = a + 1; b < r.size(); ++b) {
                if (r[a] != m && r[b] != m && meets(r[a], m) && meets(r[b], m) && !meets(r[a], r[b])) {
                    return std::vector<Request>{r[a], r[b]};
                }
            }
        }
        throw std::logic_error("star gadget: no disjoint pair crossing " + m.str());
    };
    return reduce(alg, g, tree, gadgets, follow_up, GainMode::count);
}

Ratio path_guess_ratio(int n, int wrong) { return Ratio(3 * n, 2 * wrong + 3 * (n - wrong)); }

Ratio tree_guess_ratio(int n, int wrong) { return Ratio(2 * n, wrong + 2 * (n - wrong)); }

Graph caterpillar_tree(int n) {
    if (n < 1) {
        throw InvalidParams("caterpillar needs n >= 1");
    }
    const int spine = 2 * n + 1; // edges on the spine
    std::vector<Edge> edges;
    for (int v = 0; v < spine; ++v) {
        edges.push_back(Edge{v, v + 1});
    }
    int next = spine + 1;
    for (int v = 1; v < spine; ++v) {
        edges.push_back(Edge{v, next++});
        edges.push_back(Edge{v, next++});
    }
    return Graph::tree(std::move(edges));
}

} // namespace priodpa
