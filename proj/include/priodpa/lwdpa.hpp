// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Length-weighted disjoint paths on a path graph: the length-first greedy, the
// staircase adversary and the block advice codec.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "priodpa/engine.hpp"
#include "priodpa/measure.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

// Longer first, then leftmost.
[[nodiscard]] PriorityOrder lwdpa_order(const Graph& graph);
[[nodiscard]] Solution greedy_lwdpa(const Instance& instance);

// Worst-case ratio of the greedy on a path of length l, max(1, 3 - 3/l).
[[nodiscard]] Ratio lwdpa_greedy_bound(int length);

// For each request the greedy accepts: the length of the union of it and every later
// request intersecting it, with the bound that union must respect.
struct UnionSpan {
    Request accepted;
    std::int64_t union_length = 0;
    std::int64_t bound = 0;
};
[[nodiscard]] std::vector<UnionSpan> greedy_union_spans(const Instance& instance);

// Staircase of long paths p_1..p_{2b-1} plus every unit path, on a path of length ab^2 - 2b + 2.
class StaircaseParams {
  public:
    // Throws InvalidParams unless a, b >= 3.
    StaircaseParams(int a, int b);

    [[nodiscard]] int a() const { return a_; }
    [[nodiscard]] int b() const { return b_; }
    [[nodiscard]] int length() const { return a_ * b_ * b_ - 2 * b_ + 2; }
    [[nodiscard]] int step_count() const { return 2 * b_ - 1; }
    // 1-based, as p_1..p_{2b-1}.
    [[nodiscard]] Request step(int i) const;
    [[nodiscard]] int step_length(int i) const;

  private:
    int a_;
    int b_;
};

// The long paths in index order, then the unit paths left to right.
[[nodiscard]] std::vector<Request> build_staircase(const StaircaseParams& params);

// Largest a >= 3 with the staircase (a, 2(a+1)) fitting into a path of the given length.
[[nodiscard]] std::optional<StaircaseParams> largest_staircase(int length);

// Looks up which constructed request the algorithm ranks highest, serves the matching
// instance and measures it. `length` defaults to the staircase's own length.
[[nodiscard]] AdversaryOutcome staircase_adversary(PriorityAlgorithm& alg, const StaircaseParams& params,
                                                   std::optional<int> length = std::nullopt);
// Same on an arbitrary path length, embedding the largest fitting staircase at vertex 0.
[[nodiscard]] AdversaryOutcome staircase_adversary(PriorityAlgorithm& alg, int length);

// Start points of one block of four vertices. Offsets are 0..3 within the block.
struct StartPointBlock {
    std::vector<int> offsets; // ascending, at most two

    // 0 none, 1..4 one start at offset 0..3, 5 (0,2), 6 (0,3), 7 (1,3).
    [[nodiscard]] std::uint8_t code() const;
    [[nodiscard]] static StartPointBlock from_code(std::uint8_t code);
    friend bool operator==(const StartPointBlock&, const StartPointBlock&) = default;
};

[[nodiscard]] int lwdpa_advice_bits(int length);
// Start points of the greediest optimal solution's requests of length >= 2.
[[nodiscard]] AdviceTape encode_lwdpa_advice(const Instance& instance);

// Accepts the first unblocked request starting at a conveyed start point that does not run past
// the next one; unit requests are taken greedily.
class LwdpaAdviceAlgorithm : public PriorityAlgorithm {
  public:
    [[nodiscard]] std::string name() const override { return "advice-lwdpa"; }
    void start(const Graph& graph, AdviceReader& advice) override;
    [[nodiscard]] const PriorityOrder& order() const override { return *order_; }
    [[nodiscard]] Decision decide(const Request& request, const RunState& state, AdviceReader& advice) override;

  private:
    std::optional<PriorityOrder> order_;
    std::vector<int> starts_;
};

[[nodiscard]] RunResult decode_run_lwdpa(const Instance& instance, const AdviceTape& tape);

} // namespace priodpa
