// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Binary string guessing with known history, driven through a priority algorithm:
// each bit becomes the algorithm's decision on the top request of one small gadget.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "priodpa/engine.hpp"
#include "priodpa/measure.hpp"
#include "priodpa/model.hpp"

namespace priodpa {

[[nodiscard]] double binary_entropy(double p);
// (1 - H(eps)) * n for 1/2 <= eps < 1; throws InvalidParams otherwise.
[[nodiscard]] double entropy_lower_bound(double eps, std::int64_t n);

// The bits to guess, revealed one at a time.
struct GuessInstance {
    std::vector<bool> bits;

    [[nodiscard]] int n() const { return static_cast<int>(bits.size()); }
};

// One gadget: the request the algorithm saw first, the guess it implied and the gains on it.
struct GadgetAccount {
    int gadget = 0;
    Request probe;
    bool guess = false;
    bool truth = false;
    std::int64_t alg_gain = 0;
    std::int64_t opt_gain = 0;

    [[nodiscard]] bool wrong() const { return guess != truth; }
};

struct GuessRun {
    std::vector<bool> guesses;
    int correct = 0;
    Instance instance;
    std::vector<Decision> log;
    std::vector<GadgetAccount> gadgets;
    GainPair gains; // measured algorithm gain, oracle optimum

    [[nodiscard]] int wrong() const { return static_cast<int>(guesses.size()) - correct; }
};

// Gadgets are the four sub-requests of each length-3 segment of a path of length >= 3n.
[[nodiscard]] GuessRun run_guess(PriorityAlgorithm& alg, const GuessInstance& g, std::optional<int> length = std::nullopt);
// Gadgets are the six length-2 paths of edge-disjoint K_{1,4} copies packed into the tree.
// Throws InvalidTree when fewer than n copies fit.
[[nodiscard]] GuessRun run_tguess(PriorityAlgorithm& alg, const GuessInstance& g, std::shared_ptr<const Graph> tree);

// Ratio forced when `wrong` of n gadgets are decided wrongly: 3n / (2w + 3(n - w)) on paths.
[[nodiscard]] Ratio path_guess_ratio(int n, int wrong);
// 2n / (w + 2(n - w)) on trees.
[[nodiscard]] Ratio tree_guess_ratio(int n, int wrong);

// A path of length 2n+1 with two leaves on every inner vertex; its star bound is exactly n.
[[nodiscard]] Graph caterpillar_tree(int n);

} // namespace priodpa
