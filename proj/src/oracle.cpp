// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "priodpa/errors.hpp"

namespace priodpa {

namespace {

struct Choice {
    EdgeSet edges;
    std::int64_t weight = 0;
    std::vector<EdgeId> allocation;
};

struct Item {
    Request request;
    std::vector<Choice> choices;
    bool forced = false;
};

constexpr int kExcluded = -1;

void require_enumerable(const Graph& graph) {
    if (!graph.acyclic() && (graph.rows() > 3 || graph.cols() > 3)) {
        throw InstanceTooLarge("allocation enumeration is limited to grids of at most 3x3, got " + graph.descriptor());
    }
}

std::vector<Item> build_items(const Instance& instance, const CompletionQuery& query, GainMode mode) {
    const auto& graph = instance.graph();
    require_enumerable(graph);
    for (const auto& r : query.forced) {
        if (!instance.contains(r)) {
            throw InvalidRequest("forced request " + r.str() + " is not in the instance");
        }
    }
    std::vector<Item> items;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const auto& r = instance.requests()[i];
        const bool forced = std::find(query.forced.begin(), query.forced.end(), r) != query.forced.end();
        if (!forced && query.allowed &&
            std::find(query.allowed->begin(), query.allowed->end(), r) == query.allowed->end()) {
            continue;
        }
        Item item{r, {}, forced};
        const auto pin = std::find_if(query.pinned.begin(), query.pinned.end(),
                                      [&](const Allocation& a) { return a.request == r; });
        if (graph.acyclic() && (pin == query.pinned.end() || pin->edges.empty())) {
            item.choices.push_back(Choice{instance.route(i), request_gain(graph, r, mode), {}});
        } else if (pin != query.pinned.end()) {
            if (!is_simple_path(graph, r, pin->edges)) {
                throw std::invalid_argument("pinned allocation for " + r.str() + " is not a simple path");
            }
            const Allocation alloc{r, pin->edges};
            const auto w = mode == GainMode::count ? 1 : static_cast<std::int64_t>(pin->edges.size());
            item.choices.push_back(Choice{allocation_edges(graph, alloc), w, pin->edges});
        } else {
            for (auto& path : simple_paths(graph, r)) {
                const Allocation alloc{r, path};
                const auto w = mode == GainMode::count ? 1 : static_cast<std::int64_t>(path.size());
                item.choices.push_back(Choice{allocation_edges(graph, alloc), w, std::move(path)});
            }
        }
        items.push_back(std::move(item));
    }
    return items;
}

// Groups items whose choices could possibly share an edge.
std::vector<std::vector<std::size_t>> components(const std::vector<Item>& items) {
    std::vector<EdgeSet> reach;
    reach.reserve(items.size());
    for (const auto& item : items) {
        EdgeSet all;
        for (const auto& c : item.choices) {
            all.merge(c.edges);
        }
        reach.push_back(std::move(all));
    }
    std::vector<std::size_t> parent(items.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (reach[i].intersects(reach[j])) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> groups;
    std::vector<long> slot(items.size(), -1);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return groups;
}

class ComponentSearch {
  public:
    ComponentSearch(const std::vector<Item>& items, std::vector<std::size_t> members, bool collect_all)
        : items_{items}, members_{std::move(members)}, collect_all_{collect_all},
          selection_(members_.size(), kExcluded) {}

    // Returns false when the forced requests cannot coexist.
    bool solve() {
        best_ = -1;
        maximize(static_cast<int>(members_.size()) - 1, 0);
        if (best_ < 0) {
            return false;
        }
        target_ = best_;
        witness_.clear();
        enumerate(static_cast<int>(members_.size()) - 1, 0);
        return true;
    }

    [[nodiscard]] std::int64_t optimum() const { return target_; }
    [[nodiscard]] const std::vector<std::vector<int>>& maximizers() const { return witness_; }
    [[nodiscard]] const std::vector<std::size_t>& members() const { return members_; }

  private:
    // Upper bound on what items members_[0..p] can still add; -1 if a forced item is stuck.
    std::int64_t bound(int p) const {
        std::int64_t total = 0;
        for (int q = 0; q <= p; ++q) {
            const auto& item = items_[members_[static_cast<std::size_t>(q)]];
            std::int64_t best = -1;
            for (const auto& c : item.choices) {
                if (!c.edges.intersects(used_)) {
                    best = std::max(best, c.weight);
                }
            }
            if (best < 0) {
                if (item.forced) {
                    return -1;
                }
                continue;
            }
            total += best;
        }
        return total;
    }

    // Include-first pass for the optimum value.
    void maximize(int p, std::int64_t gain) {
        if (p < 0) {
            best_ = std::max(best_, gain);
            return;
        }
        const auto b = bound(p);
        if (b < 0 || gain + b <= best_) {
            return;
        }
        const auto& item = items_[members_[static_cast<std::size_t>(p)]];
        for (const auto& c : item.choices) {
            if (c.edges.intersects(used_)) {
                continue;
            }
            used_.merge(c.edges);
            maximize(p - 1, gain + c.weight);
            used_.subtract(c.edges);
        }
        if (!item.forced) {
            maximize(p - 1, gain);
        }
    }

    // Exclude-first pass in increasing bitmask order; records maximizers.
    void enumerate(int p, std::int64_t gain) {
        if (!collect_all_ && !witness_.empty()) {
            return;
        }
        if (p < 0) {
            if (gain == target_) {
                witness_.push_back(selection_);
            }
            return;
        }
        const auto b = bound(p);
        if (b < 0 || gain + b < target_) {
            return;
        }
        const auto& item = items_[members_[static_cast<std::size_t>(p)]];
        if (!item.forced) {
            enumerate(p - 1, gain);
        }
        for (std::size_t ci = 0; ci < item.choices.size(); ++ci) {
            const auto& c = item.choices[ci];
            if (c.edges.intersects(used_)) {
                continue;
            }
            used_.merge(c.edges);
            selection_[static_cast<std::size_t>(p)] = static_cast<int>(ci);
            enumerate(p - 1, gain + c.weight);
            selection_[static_cast<std::size_t>(p)] = kExcluded;
            used_.subtract(c.edges);
        }
    }

    const std::vector<Item>& items_;
    std::vector<std::size_t> members_;
    bool collect_all_;
    std::vector<int> selection_;
    EdgeSet used_;
    std::int64_t best_ = -1;
    std::int64_t target_ = 0;
    std::vector<std::vector<int>> witness_;
};

struct SearchOutcome {
    bool feasible = false;
    OracleResult result;
};

void append_selection(const std::vector<Item>& items, const ComponentSearch& search, const std::vector<int>& selection,
                      Solution& into) {
    for (std::size_t k = 0; k < selection.size(); ++k) {
        if (selection[k] == kExcluded) {
            continue;
        }
        const auto& item = items[search.members()[k]];
        into.accepted.push_back(Allocation{item.request, item.choices[static_cast<std::size_t>(selection[k])].allocation});
    }
}

void sort_by_request(Solution& s) {
    std::sort(s.accepted.begin(), s.accepted.end(),
              [](const Allocation& a, const Allocation& b) { return a.request < b.request; });
}

SearchOutcome search(const Instance& instance, const CompletionQuery& query, GainMode mode,
                     const OracleOptions& options) {
    const auto items = build_items(instance, query, mode);
    std::vector<ComponentSearch> searches;
    for (auto& members : components(items)) {
        if (members.size() > options.cap) {
            throw InstanceTooLarge("component of " + std::to_string(members.size()) +
                                   " mutually reachable requests exceeds the oracle cap of " +
                                   std::to_string(options.cap));
        }
        searches.emplace_back(items, std::move(members), options.collect_all);
    }
    SearchOutcome out;
    for (auto& s : searches) {
        if (!s.solve()) {
            return out;
        }
        out.result.optimum += s.optimum();
        append_selection(items, s, s.maximizers().front(), out.result.witness);
    }
    sort_by_request(out.result.witness);
    out.feasible = true;

    if (options.collect_all) {
        constexpr std::size_t kMaxSolutions = 1'000'000;
        std::size_t total = 1;
        for (const auto& s : searches) {
            total *= s.maximizers().size();
            if (total > kMaxSolutions) {
                throw InstanceTooLarge("too many optimal solutions to list");
            }
        }
        std::vector<Solution> all{Solution{}};
        for (const auto& s : searches) {
            std::vector<Solution> next;
            next.reserve(all.size() * s.maximizers().size());
            for (const auto& partial : all) {
                for (const auto& sel : s.maximizers()) {
                    auto extended = partial;
                    append_selection(items, s, sel, extended);
                    next.push_back(std::move(extended));
                }
            }
            all = std::move(next);
        }
        for (auto& sol : all) {
            sort_by_request(sol);
        }
        out.result.all_optimal = std::move(all);
    }
    return out;
}

} // namespace

OracleResult brute_force_opt(const Instance& instance, GainMode mode, const OracleOptions& options) {
    return search(instance, CompletionQuery{}, mode, options).result;
}

std::optional<std::int64_t> best_completion(const Instance& instance, const CompletionQuery& query, GainMode mode,
                                            const OracleOptions& options) {
    auto opts = options;
    opts.collect_all = false;
    auto out = search(instance, query, mode, opts);
    if (!out.feasible) {
        return std::nullopt;
    }
    return out.result.optimum;
}

Solution greediest_opt(const Instance& instance, const PriorityOrder& order, GainMode mode,
                       const OracleOptions& options) {
    auto opts = options;
    opts.collect_all = false;
    const auto sequence = presentation_sequence(order, instance);
    const auto optimum = brute_force_opt(instance, mode, opts).optimum;

    std::vector<Request> kept;
    for (std::size_t k = 0; k < sequence.size(); ++k) {
        CompletionQuery query;
        query.forced = kept;
        query.forced.push_back(sequence[k]);
        std::vector<Request> allowed = query.forced;
        allowed.insert(allowed.end(), sequence.begin() + static_cast<std::ptrdiff_t>(k) + 1, sequence.end());
        query.allowed = std::move(allowed);
        const auto value = best_completion(instance, query, mode, opts);
        if (value && *value == optimum) {
            kept.push_back(sequence[k]);
        }
    }

    Solution out;
    if (instance.graph().acyclic()) {
        for (const auto& r : kept) {
            out.accepted.push_back(Allocation{r, {}});
        }
        return out;
    }
    // Realize the kept set with concrete allocations, then list them in priority order.
    CompletionQuery realize;
    realize.forced = kept;
    realize.allowed = kept;
    const auto witness = search(instance, realize, mode, opts).result.witness;
    for (const auto& r : kept) {
        const auto it = std::find_if(witness.accepted.begin(), witness.accepted.end(),
                                     [&](const Allocation& a) { return a.request == r; });
        out.accepted.push_back(*it);
    }
    return out;
}

std::vector<std::vector<EdgeId>> simple_paths(const Graph& graph, const Request& request) {
    std::vector<std::vector<EdgeId>> out;
    std::vector<bool> visited(static_cast<std::size_t>(graph.vertex_count()), false);
    std::vector<EdgeId> current;
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        if (v == request.y()) {
            out.push_back(current);
            return;
        }
        for (const auto& inc : graph.incident(v)) {
            if (visited[static_cast<std::size_t>(inc.neighbor)]) {
                continue;
            }
            visited[static_cast<std::size_t>(inc.neighbor)] = true;
            current.push_back(inc.edge);
            dfs(inc.neighbor);
            current.pop_back();
            visited[static_cast<std::size_t>(inc.neighbor)] = false;
        }
    };
    visited[static_cast<std::size_t>(request.x())] = true;
    dfs(request.x());
    return out;
}

} // namespace priodpa
