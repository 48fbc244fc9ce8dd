// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "priodpa/errors.hpp"

namespace priodpa {

namespace {

bool lexicographically_first(const Request& a, const Request& b) { return a < b; }

} // namespace

PriorityOrder PriorityOrder::by_key(std::string name, KeyFn key) {
    auto higher = [key](const Request& a, const Request& b) {
        const auto ka = key(a);
        const auto kb = key(b);
        if (ka != kb) {
            return ka > kb;
        }
        return lexicographically_first(a, b);
    };
    return PriorityOrder(std::move(name), std::move(key), std::move(higher));
}

PriorityOrder PriorityOrder::from_comparator(std::string name, HigherFn higher) {
    return PriorityOrder(std::move(name), nullptr, std::move(higher));
}

bool PriorityOrder::higher(const Request& a, const Request& b) const { return higher_(a, b); }

Request PriorityOrder::max_of(std::span<const Request> candidates) const {
    if (candidates.empty()) {
        throw std::invalid_argument("max_of on an empty candidate set");
    }
    if (key_) {
        std::size_t best = 0;
        auto best_key = key_(candidates[0]);
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            const auto k = key_(candidates[i]);
            if (k > best_key || (k == best_key && lexicographically_first(candidates[i], candidates[best]))) {
                best = i;
                best_key = k;
            }
        }
        return candidates[best];
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (higher_(candidates[i], candidates[best])) {
            best = i;
        }
    }
    const auto& m = candidates[best];
    if (higher_(m, m)) {
        throw InvalidOrder("order '" + name_ + "' is not irreflexive at " + m.str());
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i == best) {
            continue;
        }
        const auto& c = candidates[i];
        if (!higher_(m, c) || higher_(c, m)) {
            throw InvalidOrder("order '" + name_ + "' is not a strict total order on " + m.str() + " and " +
                               c.str());
        }
    }
    return m;
}

std::vector<Request> presentation_sequence(const PriorityOrder& order, std::span<const Request> requests) {
    std::vector<Request> remaining(requests.begin(), requests.end());
    std::vector<Request> out;
    out.reserve(remaining.size());
    while (!remaining.empty()) {
        const auto m = order.max_of(remaining);
        remaining.erase(std::find(remaining.begin(), remaining.end(), m));
        out.push_back(m);
    }
    return out;
}

std::vector<Request> presentation_sequence(const PriorityOrder& order, const Instance& instance) {
    return presentation_sequence(order, instance.requests());
}

void AdviceTape::append(std::uint64_t value, int width) {
    if (width < 0 || width > 64) {
        throw std::invalid_argument("advice field width out of range");
    }
    if (width < 64 && (value >> width) != 0) {
        throw std::invalid_argument("advice value does not fit its field");
    }
    for (int i = width - 1; i >= 0; --i) {
        bits_.push_back(((value >> i) & 1U) != 0);
    }
}

std::string AdviceTape::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::uint64_t AdviceReader::read(int width) {
    if (width < 0 || width > 64) {
        throw std::invalid_argument("advice field width out of range");
    }
    const std::size_t size = tape_ ? tape_->size() : 0;
    if (cursor_ + static_cast<std::size_t>(width) > size) {
        throw AdviceExhausted("advice tape exhausted: need " + std::to_string(width) + " bits at position " +
                              std::to_string(cursor_) + " of " + std::to_string(size));
    }
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i) {
        value = (value << 1) | (tape_->bit(cursor_++) ? 1U : 0U);
    }
    return value;
}

RunState::RunState(std::shared_ptr<const Graph> graph)
    : graph_{std::move(graph)}, used_(static_cast<std::size_t>(graph_->edge_count())) {}

bool RunState::blocked(const Request& r) const { return unique_path(*graph_, r).edge_set().intersects(used_); }

bool RunState::free(std::span<const EdgeId> edges) const {
    return std::none_of(edges.begin(), edges.end(), [&](EdgeId e) { return used_.contains(e); });
}

void RunState::apply(const Decision& d) {
    if (std::any_of(log_.begin(), log_.end(), [&](const Decision& prev) { return prev.request == d.request; })) {
        throw InvalidRequest("request " + d.request.str() + " presented twice");
    }
    if (d.accepted()) {
        EdgeSet edges;
        if (d.allocation.empty()) {
            if (!graph_->acyclic()) {
                throw IllegalAcceptance("accepting " + d.request.str() + " on " + graph_->descriptor() +
                                        " requires an explicit allocation");
            }
            edges = unique_path(*graph_, d.request).edge_set();
        } else {
            if (!is_simple_path(*graph_, d.request, d.allocation)) {
                throw IllegalAcceptance("allocation for " + d.request.str() + " is not a simple path");
            }
            edges = allocation_edges(*graph_, Allocation{d.request, d.allocation});
        }
        if (edges.intersects(used_)) {
            throw IllegalAcceptance("request " + d.request.str() + " is blocked but was accepted");
        }
        used_.merge(edges);
        solution_.accepted.push_back(Allocation{d.request, d.allocation});
    }
    log_.push_back(d);
}

Session::Session(PriorityAlgorithm& alg, std::shared_ptr<const Graph> graph, const AdviceTape* tape)
    : alg_{&alg}, state_{std::move(graph)}, reader_{tape} {
    alg_->start(state_.graph(), reader_);
}

const Decision& Session::feed(const Request& request) {
    if (!state_.graph().contains(request.x()) || !state_.graph().contains(request.y())) {
        throw InvalidRequest("request " + request.str() + " is not on " + state_.graph().descriptor());
    }
    auto decision = alg_->decide(request, state_, reader_);
    if (decision.request != request) {
        throw std::logic_error(alg_->name() + " answered for " + decision.request.str() + " instead of " +
                               request.str());
    }
    state_.apply(decision);
    return state_.log().back();
}

RunResult run(PriorityAlgorithm& alg, const Instance& instance, const AdviceTape* tape) {
    if (instance.empty()) {
        throw std::invalid_argument("run needs a nonempty instance");
    }
    Session session(alg, instance.graph_ptr(), tape);
    std::vector<Request> remaining(instance.requests().begin(), instance.requests().end());
    while (!remaining.empty()) {
        const auto next = session.max_of(remaining);
        remaining.erase(std::find(remaining.begin(), remaining.end(), next));
        session.feed(next);
    }
    return RunResult{session.state().solution(), session.state().log(), session.bits_consumed()};
}

void GreedyAlgorithm::start(const Graph& graph, AdviceReader& /*advice*/) { order_.emplace(make_order_(graph)); }

const PriorityOrder& GreedyAlgorithm::order() const {
    if (!order_) {
        throw std::logic_error(name_ + ": order() before start()");
    }
    return *order_;
}

Decision GreedyAlgorithm::decide(const Request& request, const RunState& state, AdviceReader& /*advice*/) {
    return Decision{request, state.blocked(request) ? Verdict::reject : Verdict::accept, {}};
}

} // namespace priodpa
