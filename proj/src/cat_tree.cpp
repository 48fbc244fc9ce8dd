// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/cat_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "priodpa/errors.hpp"
#include "priodpa/oracle.hpp"

namespace priodpa {

namespace {

constexpr int kAdviceDegree = 4;

void require_tree(const Graph& graph, const char* who) {
    if (!graph.acyclic()) {
        throw std::invalid_argument(std::string(who) + " needs a tree, got " + graph.descriptor());
    }
}

// Smallest k with 2^k >= n.
int ceil_log2(std::int64_t n) {
    int k = 0;
    while ((std::int64_t{1} << k) < n) {
        ++k;
    }
    return k;
}

// Child edges of v that no accepted request uses yet, by child id.
std::vector<EdgeId> free_child_edges(const Graph& tree, VertexId v, const EdgeSet& used) {
    std::vector<EdgeId> out;
    for (auto c : tree.children(v)) {
        const auto e = tree.parent_edge(c);
        if (!used.contains(e)) {
            out.push_back(e);
        }
    }
    return out;
}

// The last label is 0 when every positive label already appears twice, else the one that is missing.
int infer_last_label(const std::vector<int>& labels) {
    std::map<int, int> seen;
    for (int l : labels) {
        if (l > 0) {
            ++seen[l];
        }
    }
    for (const auto& [label, count] : seen) {
        if (count == 1) {
            return label;
        }
    }
    return 0;
}

} // namespace

Peak peak(const Graph& tree, const Request& request) {
    require_tree(tree, "peak");
    if (!tree.contains(request.x()) || !tree.contains(request.y())) {
        throw InvalidRequest("request " + request.str() + " has an endpoint outside " + tree.descriptor());
    }
    VertexId a = request.x();
    VertexId b = request.y();
    while (a != b) {
        if (tree.depth(a) >= tree.depth(b)) {
            a = tree.parent(a);
        } else {
            b = tree.parent(b);
        }
    }
    return Peak{request, a, request.has_endpoint(a)};
}

std::array<EdgeId, 2> peak_edges(const Graph& tree, const Peak& p) {
    if (p.at_endpoint) {
        throw std::invalid_argument("request " + p.request.str() + " ends at its peak");
    }
    const auto below = [&](VertexId u) {
        while (tree.parent(u) != p.vertex) {
            u = tree.parent(u);
        }
        return u;
    };
    auto cx = below(p.request.x());
    auto cy = below(p.request.y());
    if (cx > cy) {
        std::swap(cx, cy);
    }
    return {tree.parent_edge(cx), tree.parent_edge(cy)};
}

PriorityOrder cat_order(const Graph& tree) {
    require_tree(tree, "cat_order");
    const Graph* t = &tree;
    return PriorityOrder::by_key("peak", [t](const Request& r) {
        const auto p = peak(*t, r);
        return PriorityKey{t->depth(p.vertex), p.vertex, p.at_endpoint ? 1 : 0, 0};
    });
}

Solution greedy_cat(const Instance& instance) {
    require_tree(instance.graph(), "greedy_cat");
    if (instance.empty()) {
        return {};
    }
    GreedyAlgorithm alg("greedy-cat", cat_order);
    return run(alg, instance).solution;
}

AdversaryOutcome star_adversary(PriorityAlgorithm& alg, std::shared_ptr<const Graph> tree) {
    require_tree(*tree, "star_adversary");
    VertexId center = -1;
    for (VertexId v = 0; v < tree->vertex_count(); ++v) {
        if (tree->degree(v) >= kAdviceDegree) {
            center = v;
            break;
        }
    }
    if (center < 0) {
        throw InvalidTree("star adversary needs a vertex of degree at least 4 in " + tree->descriptor());
    }
    std::array<VertexId, 4> arms{};
    for (std::size_t i = 0; i < arms.size(); ++i) {
        arms[i] = tree->incident(center)[i].neighbor;
    }
    std::vector<Request> universe;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        for (std::size_t j = i + 1; j < arms.size(); ++j) {
            universe.emplace_back(arms[i], arms[j]);
        }
    }
    const Session probe(alg, tree);
    const auto top = probe.max_of(universe);
    std::vector<VertexId> rest;
    for (auto a : arms) {
        if (!top.has_endpoint(a)) {
            rest.push_back(a);
        }
    }
    Instance instance(tree, {top, Request(top.x(), rest[0]), Request(top.y(), rest[1])});
    const auto result = run(alg, instance);
    if (result.log.front().request != top) {
        throw std::logic_error(alg.name() + " did not present its top request first");
    }
    if (!result.log.front().accepted()) {
        return AdversaryOutcome{"rejected", top, Instance(tree, {top}), GainPair{0, 1}, 0};
    }
    const auto opt = brute_force_opt(instance, GainMode::count).optimum;
    return AdversaryOutcome{"star", top, instance, GainPair{gain(*tree, result.solution, GainMode::count), opt},
                            result.bits_consumed};
}

TreeStats tree_stats(const Graph& tree) {
    TreeStats s;
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
        const int d = tree.degree(v);
        s.leaves += d == 1 ? 1 : 0;
        s.degree3 += d == 3 ? 1 : 0;
        s.max_degree = std::max(s.max_degree, d);
        s.star_weight += d / 4;
    }
    s.star_bound = (s.star_weight + 1) / 2;
    return s;
}

std::int64_t cat_advice_bound(const TreeStats& stats) {
    if (stats.max_degree < kAdviceDegree) {
        return 0;
    }
    // ceil(log2(D / 2)) = smallest k with 2^(k+1) >= D.
    const int k = ceil_log2(stats.max_degree) - 1;
    return static_cast<std::int64_t>(stats.leaves - stats.degree3 - 2) * k;
}

int label_width(int degree) { return ceil_log2((degree - 1) / 2 + 1); }

CatEncoding encode_cat_advice(const Instance& instance) {
    const auto& tree = instance.graph();
    require_tree(tree, "encode_cat_advice");
    CatEncoding out;
    if (instance.empty()) {
        return out;
    }
    const auto order = cat_order(tree);
    const auto opt = greediest_opt(instance, order, GainMode::count);
    const auto in_opt = [&](const Request& r) { return opt.contains(r); };

    EdgeSet used;
    VertexId phase = -1;
    bool labelled = false;
    for (const auto& r : presentation_sequence(order, instance)) {
        const auto pk = peak(tree, r);
        if (pk.vertex != phase) {
            phase = pk.vertex;
            labelled = false;
        }
        if (!labelled && !pk.at_endpoint && tree.degree(phase) >= kAdviceDegree) {
            labelled = true;
            PhaseLabels phase_labels{phase, free_child_edges(tree, phase, used), {}};
            const auto& edges = phase_labels.edges;
            std::map<EdgeId, int> pair_of; // edge -> index of its optimal request in this phase
            int through = 0;
            int pair_count = 0;
            for (const auto& a : opt.accepted) {
                const auto q = peak(tree, a.request);
                if (q.vertex == phase && !q.at_endpoint) {
                    for (auto e : peak_edges(tree, q)) {
                        if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
                            throw std::logic_error("optimal request " + a.request.str() +
                                                   " uses a child edge that is already taken");
                        }
                        pair_of[e] = pair_count;
                    }
                    ++pair_count;
                } else if (q.vertex != phase) {
                    const auto route = unique_path(tree, a.request).edge_set();
                    through += static_cast<int>(
                        std::count_if(edges.begin(), edges.end(), [&](EdgeId e) { return route.contains(e); }));
                }
            }
            if (through > 1) {
                throw std::logic_error("more than one free child edge at vertex " + std::to_string(phase) +
                                       " belongs to an optimal request of a later phase");
            }
            std::map<int, int> label_of_pair;
            for (auto e : edges) {
                const auto it = pair_of.find(e);
                if (it == pair_of.end()) {
                    phase_labels.labels.push_back(0);
                    continue;
                }
                const auto [slot, fresh] =
                    label_of_pair.emplace(it->second, static_cast<int>(label_of_pair.size()) + 1);
                phase_labels.labels.push_back(slot->second);
            }
            const int width = label_width(tree.degree(phase));
            for (std::size_t i = 0; i + 1 < phase_labels.labels.size(); ++i) {
                out.tape.append(static_cast<std::uint64_t>(phase_labels.labels[i]), width);
            }
            out.phases.push_back(std::move(phase_labels));
        }
        if (in_opt(r)) {
            used.merge(unique_path(tree, r).edge_set());
        }
    }
    return out;
}

void CatAdviceAlgorithm::start(const Graph& graph, AdviceReader& /*advice*/) {
    require_tree(graph, "advice-cat");
    order_.emplace(cat_order(graph));
    phase_ = -1;
    labels_ready_ = false;
    edges_.clear();
    labels_.clear();
}

Decision CatAdviceAlgorithm::decide(const Request& request, const RunState& state, AdviceReader& advice) {
    const auto& tree = state.graph();
    const auto pk = peak(tree, request);
    if (pk.vertex != phase_) {
        phase_ = pk.vertex;
        labels_ready_ = false;
    }
    const bool free = !state.blocked(request);
    if (pk.at_endpoint || tree.degree(phase_) < kAdviceDegree) {
        return Decision{request, free ? Verdict::accept : Verdict::reject, {}};
    }
    if (!labels_ready_) {
        labels_ready_ = true;
        edges_ = free_child_edges(tree, phase_, state.used_edges());
        labels_.clear();
        const int width = label_width(tree.degree(phase_));
        for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
            labels_.push_back(static_cast<int>(advice.read(width)));
        }
        if (!edges_.empty()) {
            labels_.push_back(infer_last_label(labels_));
        }
    }
    if (!free) {
        return Decision{request, Verdict::reject, {}};
    }
    const auto label = [&](EdgeId e) {
        const auto it = std::find(edges_.begin(), edges_.end(), e);
        return it == edges_.end() ? 0 : labels_[static_cast<std::size_t>(it - edges_.begin())];
    };
    const auto [e1, e2] = peak_edges(tree, pk);
    const int l1 = label(e1);
    return Decision{request, l1 > 0 && l1 == label(e2) ? Verdict::accept : Verdict::reject, {}};
}

RunResult decode_run_cat(const Instance& instance, const AdviceTape& tape) {
    CatAdviceAlgorithm alg;
    return run(alg, instance, &tape);
}

std::vector<StarCopy> pack_s4(const Graph& tree) {
    require_tree(tree, "pack_s4");
    const auto n = static_cast<std::size_t>(tree.vertex_count());
    std::vector<std::set<VertexId>> adj(n);
    for (const auto& e : tree.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    const auto deg = [&](VertexId v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };
    std::vector<StarCopy> out;
    for (;;) {
        VertexId pick = -1;
        for (VertexId u = 0; u < static_cast<VertexId>(n) && pick < 0; ++u) {
            if (deg(u) < kAdviceDegree) {
                continue;
            }
            const auto& nb = adj[static_cast<std::size_t>(u)];
            const auto heavy = std::count_if(nb.begin(), nb.end(), [&](VertexId w) { return deg(w) >= kAdviceDegree; });
            if (heavy <= 1) {
                pick = u;
            }
        }
        if (pick < 0) {
            return out;
        }
        const std::vector<VertexId> nb(adj[static_cast<std::size_t>(pick)].begin(),
                                       adj[static_cast<std::size_t>(pick)].end());
        for (std::size_t k = 0; k + kAdviceDegree <= nb.size(); k += kAdviceDegree) {
            out.push_back(StarCopy{pick, {nb[k], nb[k + 1], nb[k + 2], nb[k + 3]}});
        }
        for (auto w : nb) {
            adj[static_cast<std::size_t>(w)].erase(pick);
        }
        adj[static_cast<std::size_t>(pick)].clear();
    }
}

} // namespace priodpa
