// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "priodpa/battery.hpp"
#include "priodpa/dpa_path.hpp"
#include "priodpa/errors.hpp"
#include "priodpa/lwdpa.hpp"
#include "priodpa/oracle.hpp"
#include "priodpa/random.hpp"
#include "support.hpp"

using namespace priodpa;
using namespace priodpa::testing;

namespace {

Instance bold_and_thin() {
    return make_instance(path_graph(26), {{1, 6},   {7, 9},   {9, 11},  {11, 12}, {13, 15}, {15, 16}, {16, 20},
                                          {20, 22}, {23, 26}, {1, 4},   {4, 5},   {5, 6},   {8, 12},  {14, 18},
                                          {24, 26}});
}

std::vector<int> block_codes(const AdviceTape& tape) {
    AdviceReader reader(&tape);
    std::vector<int> codes;
    while (reader.remaining() >= 3) {
        codes.push_back(static_cast<int>(reader.read(3)));
    }
    return codes;
}

} // namespace

TEST_SUITE("dpa-path") {

TEST_CASE("right-end order") {
    const auto g = path_graph(5);
    const auto order = right_end_order(*g);
    CHECK(presentation_sequence(order, requests_of({{2, 5}, {1, 3}, {0, 2}})) == requests_of({{0, 2}, {1, 3}, {2, 5}}));
    CHECK(order.higher(Request(0, 2), Request(2, 5)));
}

TEST_CASE("greedy on the three-request example") {
    const auto inst = make_instance(path_graph(5), {{0, 2}, {1, 3}, {2, 5}});
    const auto sol = greedy_paths(inst);
    CHECK(sol.requests() == requests_of({{0, 2}, {2, 5}}));
    CHECK(static_cast<std::int64_t>(sol.size()) == naive_opt(inst, GainMode::count));
}

TEST_CASE("greedy matches plain enumeration on random paths") {
    Rng rng(11);
    for (int round = 0; round < 500; ++round) {
        const auto inst = random_path_instance(rng, 10, 9);
        CHECK(static_cast<std::int64_t>(greedy_paths(inst).size()) == naive_opt(inst, GainMode::count));
    }
}

TEST_CASE("greedy needs a path") {
    CHECK_THROWS((void)greedy_paths(make_instance(tree_graph({{0, 1}, {1, 2}, {1, 3}}), {{0, 2}})));
}

}

TEST_SUITE("lwdpa") {

TEST_CASE("length-first order breaks ties towards the left") {
    const auto order = lwdpa_order(*path_graph(5));
    CHECK(order.higher(Request(0, 2), Request(1, 3)));
    CHECK(order.higher(Request(1, 4), Request(0, 2)));
}

TEST_CASE("one long request against three overlapping ones") {
    const auto inst = make_instance(path_graph(15), {{6, 11}, {3, 7}, {7, 10}, {10, 15}});
    const auto sol = greedy_lwdpa(inst);
    CHECK(sol.requests() == requests_of({{6, 11}}));
    const GainPair gp{gain(inst.graph(), sol, GainMode::length), naive_opt(inst, GainMode::length)};
    CHECK(gp.opt == 12);
    CHECK(gp.alg == 5);
    CHECK(*gp.ratio() == Ratio(12, 5));
    CHECK(*gp.ratio() <= lwdpa_greedy_bound(15));
    const auto spans = greedy_union_spans(inst);
    REQUIRE(spans.size() == 1);
    CHECK(spans[0].union_length == 12);
    CHECK(spans[0].bound == 12);
}

TEST_CASE("bound formula") {
    CHECK(lwdpa_greedy_bound(1) == Ratio(1));
    CHECK(lwdpa_greedy_bound(2) == Ratio(3, 2));
    CHECK(lwdpa_greedy_bound(15) == Ratio(14, 5));
}

TEST_CASE("union spans stay within three times the accepted length") {
    Rng rng(5);
    for (int round = 0; round < 500; ++round) {
        const auto inst = random_path_instance(rng, 16, 8);
        for (const auto& s : greedy_union_spans(inst)) {
            CHECK(s.union_length <= s.bound);
        }
        const GainPair gp{gain(inst.graph(), greedy_lwdpa(inst), GainMode::length),
                          naive_opt(inst, GainMode::length)};
        CHECK(*gp.ratio() <= lwdpa_greedy_bound(inst.graph().path_length()));
    }
}

TEST_CASE("staircase geometry") {
    const StaircaseParams small(3, 3);
    CHECK(small.length() == 23);
    std::vector<int> lengths;
    for (int i = 1; i <= small.step_count(); ++i) {
        lengths.push_back(small.step_length(i));
    }
    CHECK(lengths == std::vector<int>{3, 6, 9, 6, 3});
    CHECK(small.step(1) == Request(0, 3));
    CHECK(small.step(2) == Request(2, 8));
    CHECK(small.step(3) == Request(7, 16));
    CHECK(small.step(5) == Request(20, 23));
    CHECK(build_staircase(small).size() == 5 + 23);
    CHECK(StaircaseParams(3, 8).length() == 178);
    CHECK_THROWS_AS(StaircaseParams(2, 3), InvalidParams);
    CHECK_THROWS_AS((void)small.step(6), std::out_of_range);
    const auto fit = largest_staircase(178);
    REQUIRE(fit);
    CHECK(fit->a() == 3);
    CHECK(fit->b() == 8);
    CHECK_FALSE(largest_staircase(177));
}

TEST_CASE("staircase against the length-first greedy") {
    auto alg = make_algorithm("greedy-lwdpa");
    const auto out = staircase_adversary(*alg, StaircaseParams(3, 8));
    CHECK(out.case_label == "peak-step");
    CHECK(out.top == StaircaseParams(3, 8).step(8));
    CHECK(*out.gains.ratio() == Ratio(8, 3));
}

TEST_CASE("staircase against a rejecting algorithm") {
    auto alg = make_algorithm("reject-first-lwdpa");
    const auto out = staircase_adversary(*alg, StaircaseParams(3, 8));
    CHECK(out.gains.unbounded());
    CHECK(out.instance.size() == 1);
}

TEST_CASE("staircase against a unit-first algorithm") {
    auto alg = make_algorithm("greedy-shortest");
    const auto out = staircase_adversary(*alg, StaircaseParams(3, 8));
    CHECK(out.case_label.starts_with("unit"));
    CHECK(*out.gains.ratio() >= Ratio(3));
}

TEST_CASE("start-point codebook") {
    for (int code = 0; code < 8; ++code) {
        CHECK(StartPointBlock::from_code(static_cast<std::uint8_t>(code)).code() == code);
    }
    CHECK(StartPointBlock::from_code(6).offsets == std::vector<int>{0, 3});
    CHECK(lwdpa_advice_bits(12) == 9);
    CHECK(lwdpa_advice_bits(13) == 12);
}

TEST_CASE("single block with one start") {
    const auto inst = make_instance(path_graph(4), {{1, 3}, {1, 2}});
    const auto tape = encode_lwdpa_advice(inst);
    CHECK(tape.size() == 3);
    CHECK(block_codes(tape) == std::vector<int>{2});
}

TEST_CASE("block codes of the bold/thin example") {
    const auto inst = bold_and_thin();
    CHECK(naive_opt(inst, GainMode::length) == 22);
    const auto tape = encode_lwdpa_advice(inst);
    CHECK(tape.size() == 21);
    CHECK(block_codes(tape) == std::vector<int>{2, 4, 2, 2, 1, 6, 0});
    const auto run = decode_run_lwdpa(inst, tape);
    CHECK(as_set(run.solution.requests()) ==
          as_set(requests_of({{1, 6}, {7, 9}, {9, 11}, {11, 12}, {13, 15}, {15, 16}, {16, 20}, {20, 22}, {23, 26}})));
    CHECK(gain(inst.graph(), run.solution, GainMode::length) == 22);
    CHECK(run.bits_consumed == 21);
}

TEST_CASE("decoding reaches the optimum on random paths") {
    Rng rng(99);
    for (int round = 0; round < 300; ++round) {
        const auto inst = random_path_instance(rng, 16, 8);
        const auto tape = encode_lwdpa_advice(inst);
        CHECK(tape.size() == static_cast<std::size_t>(lwdpa_advice_bits(inst.graph().path_length())));
        const auto run = decode_run_lwdpa(inst, tape);
        CHECK(validate_solution(inst, run.solution));
        CHECK(gain(inst.graph(), run.solution, GainMode::length) == naive_opt(inst, GainMode::length));
    }
}

}
