// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "priodpa/lwdpa.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "priodpa/errors.hpp"
#include "priodpa/oracle.hpp"

namespace priodpa {

namespace {

constexpr int kBlockWidth = 4;
constexpr int kCodeBits = 3;

// The adversary instances hold one component of up to about 3ab requests.
constexpr std::size_t kAdversaryCap = 256;

void require_path(const Graph& graph, const char* who) {
    if (graph.kind() != GraphKind::path) {
        throw std::invalid_argument(std::string(who) + " needs a path graph, got " + graph.descriptor());
    }
}

int length_of(const Request& r) { return r.y() - r.x(); }

// Unit requests on the edges of `p` that no request in `others` covers.
void add_uncovered_units(const Request& p, std::initializer_list<Request> others, std::vector<Request>& out) {
    for (int e = p.x(); e < p.y(); ++e) {
        const bool covered =
            std::any_of(others.begin(), others.end(), [&](const Request& q) { return q.x() <= e && e < q.y(); });
        if (!covered) {
            out.emplace_back(e, e + 1);
        }
    }
}

} // namespace

PriorityOrder lwdpa_order(const Graph& /*graph*/) {
    return PriorityOrder::by_key("length-first",
                                 [](const Request& r) { return PriorityKey{r.y() - r.x(), -r.x(), 0, 0}; });
}

Solution greedy_lwdpa(const Instance& instance) {
    require_path(instance.graph(), "greedy_lwdpa");
    if (instance.empty()) {
        return {};
    }
    GreedyAlgorithm alg("greedy-lwdpa", lwdpa_order);
    return run(alg, instance).solution;
}

Ratio lwdpa_greedy_bound(int length) {
    if (length < 1) {
        throw InvalidParams("path length must be positive");
    }
    return std::max(Ratio(1), Ratio(3) - Ratio(3, length));
}

std::vector<UnionSpan> greedy_union_spans(const Instance& instance) {
    require_path(instance.graph(), "greedy_union_spans");
    std::vector<UnionSpan> out;
    if (instance.empty()) {
        return out;
    }
    GreedyAlgorithm alg("greedy-lwdpa", lwdpa_order);
    const auto result = run(alg, instance);
    for (std::size_t k = 0; k < result.log.size(); ++k) {
        if (!result.log[k].accepted()) {
            continue;
        }
        const auto& p = result.log[k].request;
        int lo = p.x();
        int hi = p.y();
        for (std::size_t j = k + 1; j < result.log.size(); ++j) {
            const auto& q = result.log[j].request;
            if (q.x() < p.y() && p.x() < q.y()) {
                lo = std::min(lo, q.x());
                hi = std::max(hi, q.y());
            }
        }
        const int len = length_of(p);
        out.push_back(UnionSpan{p, hi - lo, len >= 2 ? 3 * len - 3 : 1});
    }
    return out;
}

StaircaseParams::StaircaseParams(int a, int b) : a_{a}, b_{b} {
    if (a < 3 || b < 3) {
        throw InvalidParams("staircase needs a, b >= 3, got a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
}

int StaircaseParams::step_length(int i) const {
    if (i < 1 || i > step_count()) {
        throw std::out_of_range("staircase step index " + std::to_string(i));
    }
    return i <= b_ ? i * a_ : (2 * b_ - i) * a_;
}

Request StaircaseParams::step(int i) const {
    int start = 0;
    for (int k = 1; k < i; ++k) {
        start += step_length(k) - 1;
    }
    return Request(start, start + step_length(i));
}

std::vector<Request> build_staircase(const StaircaseParams& params) {
    std::vector<Request> out;
    for (int i = 1; i <= params.step_count(); ++i) {
        out.push_back(params.step(i));
    }
    for (int e = 0; e < params.length(); ++e) {
        out.emplace_back(e, e + 1);
    }
    return out;
}

std::optional<StaircaseParams> largest_staircase(int length) {
    std::optional<StaircaseParams> best;
    for (int a = 3;; ++a) {
        const StaircaseParams p(a, 2 * (a + 1));
        if (p.length() > length) {
            return best;
        }
        best = p;
    }
}

AdversaryOutcome staircase_adversary(PriorityAlgorithm& alg, const StaircaseParams& params, std::optional<int> length) {
    const int l = length.value_or(params.length());
    if (l < params.length()) {
        throw InvalidParams("path of length " + std::to_string(l) + " cannot hold the staircase of length " +
                            std::to_string(params.length()));
    }
    auto graph = std::make_shared<const Graph>(Graph::path(l));
    const auto universe = build_staircase(params);
    const Session probe(alg, graph);
    const auto top = probe.max_of(universe);

    const int n = params.step_count();
    int index = 0;
    for (int i = 1; i <= n; ++i) {
        if (params.step(i) == top) {
            index = i;
        }
    }

    std::vector<Request> reqs{top};
    std::string label;
    if (index == 1 || index == n) {
        const auto next = params.step(index == 1 ? 2 : n - 1);
        label = index == 1 ? "first-step" : "last-step";
        reqs.push_back(next);
        add_uncovered_units(top, {next}, reqs);
    } else if (index > 0) {
        const auto left = params.step(index - 1);
        const auto right = params.step(index + 1);
        label = index == params.b() ? "peak-step" : "inner-step";
        reqs.push_back(left);
        reqs.push_back(right);
        add_uncovered_units(top, {left, right}, reqs);
    } else {
        label = "unit";
        for (int i = 1; i <= n; ++i) {
            const auto p = params.step(i);
            if (p.x() <= top.x() && top.y() <= p.y()) {
                reqs.push_back(p);
                break;
            }
        }
    }

    Instance instance(graph, reqs);
    const auto result = run(alg, instance);
    if (result.log.front().request != top) {
        throw std::logic_error(alg.name() + " presented " + result.log.front().request.str() +
                               " before its top request " + top.str());
    }
    if (!result.log.front().accepted()) {
        Instance single(graph, {top});
        return AdversaryOutcome{label + "-rejected", top, single, GainPair{0, length_of(top)}, 0};
    }
    OracleOptions opts;
    opts.cap = kAdversaryCap;
    const auto opt = brute_force_opt(instance, GainMode::length, opts).optimum;
    return AdversaryOutcome{label, top, instance, GainPair{gain(*graph, result.solution, GainMode::length), opt},
                            result.bits_consumed};
}

AdversaryOutcome staircase_adversary(PriorityAlgorithm& alg, int length) {
    const auto params = largest_staircase(length);
    if (!params) {
        throw InvalidParams("path length " + std::to_string(length) + " is too short for a staircase (needs 178)");
    }
    return staircase_adversary(alg, *params, length);
}

std::uint8_t StartPointBlock::code() const {
    if (offsets.empty()) {
        return 0;
    }
    if (offsets.size() == 1 && offsets[0] >= 0 && offsets[0] < kBlockWidth) {
        return static_cast<std::uint8_t>(1 + offsets[0]);
    }
    if (offsets == std::vector<int>{0, 2}) {
        return 5;
    }
    if (offsets == std::vector<int>{0, 3}) {
        return 6;
    }
    if (offsets == std::vector<int>{1, 3}) {
        return 7;
    }
    throw std::invalid_argument("no block code for this start point configuration");
}

StartPointBlock StartPointBlock::from_code(std::uint8_t code) {
    switch (code) {
    case 0:
        return {};
    case 1:
    case 2:
    case 3:
    case 4:
        return StartPointBlock{{code - 1}};
    case 5:
        return StartPointBlock{{0, 2}};
    case 6:
        return StartPointBlock{{0, 3}};
    case 7:
        return StartPointBlock{{1, 3}};
    default:
        throw std::invalid_argument("block code out of range: " + std::to_string(code));
    }
}

int lwdpa_advice_bits(int length) { return kCodeBits * ((length + kBlockWidth - 1) / kBlockWidth); }

AdviceTape encode_lwdpa_advice(const Instance& instance) {
    const auto& graph = instance.graph();
    require_path(graph, "encode_lwdpa_advice");
    const int blocks = (graph.path_length() + kBlockWidth - 1) / kBlockWidth;
    std::vector<StartPointBlock> config(static_cast<std::size_t>(blocks));
    if (!instance.empty()) {
        const auto order = lwdpa_order(graph);
        for (const auto& a : greediest_opt(instance, order, GainMode::length).accepted) {
            if (length_of(a.request) >= 2) {
                const auto x = a.request.x();
                config[static_cast<std::size_t>(x / kBlockWidth)].offsets.push_back(x % kBlockWidth);
            }
        }
    }
    AdviceTape tape;
    for (auto& block : config) {
        std::sort(block.offsets.begin(), block.offsets.end());
        tape.append(block.code(), kCodeBits);
    }
    return tape;
}

void LwdpaAdviceAlgorithm::start(const Graph& graph, AdviceReader& advice) {
    require_path(graph, "advice-lwdpa");
    order_.emplace(lwdpa_order(graph));
    starts_.clear();
    const int blocks = (graph.path_length() + kBlockWidth - 1) / kBlockWidth;
    for (int i = 0; i < blocks; ++i) {
        const auto block = StartPointBlock::from_code(static_cast<std::uint8_t>(advice.read(kCodeBits)));
        for (int off : block.offsets) {
            starts_.push_back(i * kBlockWidth + off);
        }
    }
}

Decision LwdpaAdviceAlgorithm::decide(const Request& request, const RunState& state, AdviceReader& /*advice*/) {
    const auto reject = Decision{request, Verdict::reject, {}};
    if (state.blocked(request)) {
        return reject;
    }
    if (length_of(request) == 1) {
        return Decision{request, Verdict::accept, {}};
    }
    const auto it = std::lower_bound(starts_.begin(), starts_.end(), request.x());
    if (it == starts_.end() || *it != request.x()) {
        return reject;
    }
    const auto next = std::next(it);
    if (next != starts_.end() && *next < request.y()) {
        return reject;
    }
    return Decision{request, Verdict::accept, {}};
}

RunResult decode_run_lwdpa(const Instance& instance, const AdviceTape& tape) {
    LwdpaAdviceAlgorithm alg;
    return run(alg, instance, &tape);
}

} // namespace priodpa
