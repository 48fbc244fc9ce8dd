// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "priodpa/engine.hpp"
#include "priodpa/errors.hpp"
#include "priodpa/io.hpp"
#include "priodpa/measure.hpp"
#include "priodpa/model.hpp"
#include "priodpa/random.hpp"
#include "support.hpp"

using namespace priodpa;
using namespace priodpa::testing;

namespace {

// Smallest AHU string over all roots: a shape id for unrooted trees.
std::string ahu(const Graph& g, VertexId v, VertexId from) {
    std::multiset<std::string> kids;
    for (const auto& inc : g.incident(v)) {
        if (inc.neighbor != from) {
            kids.insert(ahu(g, inc.neighbor, v));
        }
    }
    std::string s = "(";
    for (const auto& k : kids) {
        s += k;
    }
    return s + ")";
}

std::string unrooted_shape(const Graph& g) {
    std::string best;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto s = ahu(g, v, -1);
        if (best.empty() || s < best) {
            best = s;
        }
    }
    return best;
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("unique path in the peak example tree") {
    auto tree = peak_example_tree();
    const auto p = unique_path(*tree, Request(12, 13));
    CHECK(p.edges.size() == 2);
    CHECK(p.edge_set() == EdgeSet{[&] {
              EdgeSet s;
              s.insert(*tree->edge_between(7, 12));
              s.insert(*tree->edge_between(7, 13));
              return s;
          }()});
    CHECK_FALSE(intersects(*tree, Request(6, 8), Request(12, 13)));
    CHECK(intersects(*tree, Request(11, 9), Request(6, 8)) == false);
    CHECK(intersects(*tree, Request(11, 9), Request(5, 3)));
}

TEST_CASE("unique paths agree with breadth-first search") {
    Rng rng(7);
    for (int round = 0; round < 50; ++round) {
        const auto tree = random_tree(rng, 2 + round % 15);
        for (VertexId a = 0; a < tree.vertex_count(); ++a) {
            for (VertexId b = a + 1; b < tree.vertex_count(); ++b) {
                const Request r(a, b);
                const auto p = unique_path(tree, r);
                const auto expect = bfs_path_edges(tree, r);
                CHECK(std::set<EdgeId>(p.edges.begin(), p.edges.end()) == expect);
                CHECK(is_simple_path(tree, r, p.edges));
                CHECK(tree.distance(a, b) == static_cast<int>(expect.size()));
            }
        }
    }
}

TEST_CASE("instances reject bad requests") {
    auto g = path_graph(4);
    CHECK_THROWS_AS(make_instance(g, {{0, 2}, {2, 0}}), InvalidRequest);
    CHECK_THROWS_AS(make_instance(g, {{0, 5}}), InvalidRequest);
    CHECK_THROWS_AS(Request(2, 2), InvalidRequest);
    const auto inst = make_instance(g, {{2, 4}, {0, 1}});
    CHECK(inst.requests()[0] == Request(0, 1));
    CHECK(inst.index_of(Request(4, 2)) == 1U);
}

TEST_CASE("run state refuses overlapping acceptances") {
    auto g = path_graph(5);
    RunState state(g);
    state.apply(Decision{Request(0, 2), Verdict::accept, {}});
    CHECK(state.blocked(Request(1, 3)));
    CHECK_FALSE(state.blocked(Request(2, 5)));
    CHECK_THROWS_AS(state.apply(Decision{Request(1, 3), Verdict::accept, {}}), IllegalAcceptance);
    state.apply(Decision{Request(1, 3), Verdict::reject, {}});
    CHECK(state.solution().size() == 1);
}

TEST_CASE("advice tape fields are read back most significant bit first") {
    AdviceTape tape;
    tape.append(5, 3);
    tape.append(1, 2);
    CHECK(tape.to_string() == "10101");
    AdviceReader reader(&tape);
    CHECK(reader.read(3) == 5);
    CHECK(reader.read(2) == 1);
    CHECK(reader.consumed() == 5);
    CHECK_THROWS_AS((void)reader.read(1), AdviceExhausted);
}

TEST_CASE("max_of detects a comparator that is not a total order") {
    const auto cyclic = PriorityOrder::from_comparator("cyclic", [](const Request&, const Request&) { return true; });
    const std::vector<Request> rs{Request(0, 1), Request(1, 2)};
    CHECK_THROWS_AS((void)cyclic.max_of(rs), InvalidOrder);
    CHECK_THROWS_AS((void)cyclic.max_of(std::span<const Request>{}), std::invalid_argument);
}

TEST_CASE("ratios") {
    CHECK(format_ratio(GainPair{5, 12}.ratio()) == "12/5");
    CHECK(GainPair{0, 3}.unbounded());
    CHECK(format_ratio(GainPair{0, 3}.ratio()) == "inf");
    CHECK(format_ratio(GainPair{0, 0}.ratio()) == "1");
    CHECK(GainPair{5, 12}.ratio_value() == doctest::Approx(2.4));
}

TEST_CASE("json round trips") {
    const auto inst = label_example_instance();
    const auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.graph() == inst.graph());
    CHECK(std::vector<Request>(back.requests().begin(), back.requests().end()) ==
          std::vector<Request>(inst.requests().begin(), inst.requests().end()));
    CHECK(instance_hash(back) == instance_hash(inst));
    CHECK(instance_hash(inst).size() == 16);
    CHECK(instance_hash(inst) != instance_hash(inst.with(Request(0, 2))));

    const auto grid = std::make_shared<const Graph>(Graph::grid(3, 3));
    CHECK(*graph_from_json(graph_to_json(*grid)) == *grid);

    AdviceTape tape;
    tape.append(0b1011001, 7);
    const auto j = tape_to_json(tape);
    CHECK(j["bits"] == 7);
    CHECK(j["hex"] == "b2");
    CHECK(tape_from_json(j) == tape);
    CHECK_THROWS_AS((void)tape_from_json(nlohmann::json{{"bits", 7}, {"hex", "b3"}}), FormatError);
    CHECK_THROWS_AS((void)instance_from_json(nlohmann::json{{"graph", 3}}), FormatError);
}

TEST_CASE("tree enumeration") {
    CHECK(labelled_trees(4).size() == 16);
    CHECK(labelled_trees(5).size() == 125);
    // Unrooted tree counts: 1, 1, 1, 2, 3, 6, 11.
    const std::map<int, std::size_t> shapes{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 6}, {7, 11}};
    for (auto [n, count] : shapes) {
        std::set<std::string> from_shapes;
        for (const auto& t : rooted_tree_shapes(n)) {
            CHECK(t.vertex_count() == n);
            CHECK(t.acyclic());
            from_shapes.insert(unrooted_shape(t));
        }
        CHECK(from_shapes.size() == count);
    }
    std::set<std::string> from_labelled;
    for (const auto& t : labelled_trees(6)) {
        from_labelled.insert(unrooted_shape(t));
    }
    CHECK(from_labelled.size() == 6);
}

TEST_CASE("seeded generators are reproducible") {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_path_instance(a, 16, 8);
        const auto y = random_path_instance(b, 16, 8);
        CHECK(canonical_json(x) == canonical_json(y));
        CHECK_FALSE(x.empty());
        CHECK(x.size() <= 8);
    }
}

}
