// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "priodpa/battery.hpp"
#include "priodpa/errors.hpp"
#include "priodpa/random.hpp"
#include "priodpa/sgkh.hpp"
#include "support.hpp"

using namespace priodpa;

TEST_SUITE("sgkh-reduction") {

TEST_CASE("entropy bound") {
    CHECK(binary_entropy(0.75) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(std::abs(entropy_lower_bound(0.75, 100) - 18.872187554086717) < 1e-6);
    CHECK(entropy_lower_bound(0.5, 100) == 0.0);
    CHECK_THROWS_AS((void)entropy_lower_bound(1.0, 10), InvalidParams);
    CHECK_THROWS_AS((void)entropy_lower_bound(0.4, 10), InvalidParams);
}

TEST_CASE("aggregate formulas") {
    CHECK(path_guess_ratio(4, 0) == Ratio(1));
    CHECK(path_guess_ratio(4, 4) == Ratio(3, 2));
    CHECK(path_guess_ratio(3, 1) == Ratio(9, 8));
    CHECK(tree_guess_ratio(4, 4) == Ratio(2));
    CHECK(tree_guess_ratio(3, 1) == Ratio(6, 5));
}

TEST_CASE("one segment, correct guess") {
    auto alg = make_algorithm("greedy-lwdpa");
    const auto run = run_guess(*alg, GuessInstance{{true}});
    REQUIRE(run.guesses.size() == 1);
    CHECK(run.guesses[0]);
    CHECK(run.correct == 1);
    CHECK(run.gains.alg == 3);
    CHECK(run.gains.opt == 3);
}

TEST_CASE("all-ones string against the length-first greedy") {
    auto alg = make_algorithm("greedy-lwdpa");
    const auto run = run_guess(*alg, GuessInstance{std::vector<bool>(6, true)});
    CHECK(run.correct == 6);
    for (const auto& g : run.gadgets) {
        CHECK(g.alg_gain == 3);
        CHECK(g.opt_gain == 3);
    }
}

TEST_CASE("wrong guesses cost a third on paths") {
    Rng rng(21);
    for (const auto& name : battery_names()) {
        auto alg = make_algorithm(name);
        for (int round = 0; round < 5; ++round) {
            const GuessInstance g{random_bits(rng, 1 + round * 3)};
            const auto run = run_guess(*alg, g);
            std::int64_t alg_sum = 0;
            for (const auto& acc : run.gadgets) {
                CHECK(acc.opt_gain == 3);
                if (acc.wrong()) {
                    CHECK(acc.alg_gain <= 2);
                }
                alg_sum += acc.alg_gain;
            }
            CHECK(alg_sum == run.gains.alg);
            CHECK(run.gains.opt == 3 * g.n());
            CHECK((run.gains.unbounded() || *run.gains.ratio() >= path_guess_ratio(g.n(), run.wrong())));
        }
    }
}

TEST_CASE("wrong guesses cost half on caterpillars") {
    Rng rng(22);
    for (const auto& name : battery_names()) {
        auto alg = make_algorithm(name);
        for (int n : {1, 3, 6}) {
            auto tree = std::make_shared<const Graph>(caterpillar_tree(n));
            const GuessInstance g{random_bits(rng, n)};
            const auto run = run_tguess(*alg, g, tree);
            std::int64_t alg_sum = 0;
            for (const auto& acc : run.gadgets) {
                CHECK(acc.opt_gain == 2);
                if (acc.wrong()) {
                    CHECK(acc.alg_gain <= 1);
                }
                alg_sum += acc.alg_gain;
            }
            CHECK(alg_sum == run.gains.alg);
            CHECK(run.gains.opt == 2 * n);
            CHECK((run.gains.unbounded() || *run.gains.ratio() >= tree_guess_ratio(n, run.wrong())));
        }
    }
}

TEST_CASE("too few stars") {
    auto alg = make_algorithm("greedy-cat");
    auto tree = std::make_shared<const Graph>(caterpillar_tree(1));
    CHECK_THROWS_AS((void)run_tguess(*alg, GuessInstance{{true, false}}, tree), InvalidTree);
    CHECK_THROWS_AS((void)run_guess(*alg, GuessInstance{{true, false}}, 5), InvalidParams);
}

}
