#include "doctest.h"

#include "ddisr/generators.hpp"
#include "ddisr/instance.hpp"

using namespace ddisr;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

TEST_CASE("token set canonicalization") {
    CHECK(make_token_set({3, 1, 3, 2}) == TokenSet{1, 2, 3});
    CHECK(token_set_contains({1, 4, 7}, 4));
    CHECK_FALSE(token_set_contains({1, 4, 7}, 5));
}

TEST_CASE("distance-d independence on paths") {
    Graph g = path_graph(6);
    CHECK(is_ddis(g, 2, {0, 2, 4}));
    CHECK_FALSE(is_ddis(g, 3, {0, 2, 4}));
    CHECK(is_ddis(g, 3, {0, 3}));
    CHECK(is_ddis(g, 5, {0, 5}));
    CHECK_FALSE(is_ddis(g, 6, {0, 5}));
    CHECK(is_ddis(g, 100, {}));
    CHECK(is_ddis(g, 100, {3}));
    CHECK_THROWS_AS(is_ddis(g, 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(is_ddis(g, 2, {9}), std::out_of_range);
}

TEST_CASE("separate components are always far apart") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(is_ddis(g, 50, {0, 2}));
}

TEST_CASE("ddis agrees with independence in the power graph") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(7, 0.3, rng);
        for (int d = 2; d <= 5; ++d) {
            std::uniform_int_distribution<int> pick(0, 6);
            TokenSet s = make_token_set({pick(rng), pick(rng), pick(rng)});
            CHECK_NOTHROW(ddis_iff_power_is(g, d, s));
        }
    }
}

TEST_CASE("ddis enumeration on a path") {
    Graph g = path_graph(5);
    // size-2 sets at distance >= 3 in a five-path
    auto sets = collect_ddis(g, 3, 2);
    CHECK(sets == std::vector<TokenSet>{{0, 3}, {0, 4}, {1, 4}});
    CHECK(collect_ddis(g, 2, 0) == std::vector<TokenSet>{{}});
    CHECK(collect_ddis(g, 4, 2) == std::vector<TokenSet>{{0, 4}});
    CHECK(collect_ddis(g, 5, 2).empty());
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
    Rng rng(5);
    Graph g = random_graph(7, 0.3, rng);
    auto sets = collect_ddis(g, 3, 2);
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) CHECK(sets[i] < sets[i + 1]);
}

TEST_CASE("instance construction validates endpoints") {
    Graph g = path_graph(4);
    CHECK_THROWS_AS(make_instance(g, 3, Rule::TS, {0, 2}, {0, 3}), std::invalid_argument);
    DdisInstance inst = make_instance(g, 3, Rule::TS, {3, 0}, {0, 3});
    CHECK(inst.source == TokenSet{0, 3});
    CHECK_FALSE(inst.size_mismatch());
    DdisInstance mismatch = make_instance(g, 3, Rule::TJ, {0}, {0, 3});
    CHECK(mismatch.size_mismatch());
}

TEST_CASE("sequence validation catches each violation") {
    Graph g = path_graph(5);
    DdisInstance inst = make_instance(g, 2, Rule::TS, {0, 2}, {2, 4});

    ReconfSequence good{Rule::TS, {{2, 3}, {3, 4}, {0, 1}, {1, 2}}};
    CHECK_FALSE(validate_sequence(inst, good));

    ReconfSequence wrong_rule{Rule::TJ, {}};
    CHECK(validate_sequence(inst, wrong_rule)->reason ==
          "sequence rule differs from instance rule");

    ReconfSequence missing_token{Rule::TS, {{1, 2}}};
    CHECK(validate_sequence(inst, missing_token)->index == 0);

    ReconfSequence non_edge{Rule::TS, {{2, 4}}};
    CHECK(validate_sequence(inst, non_edge)->index == 0);

    ReconfSequence breaks_distance{Rule::TS, {{2, 1}}};
    CHECK(validate_sequence(inst, breaks_distance)->index == 0);

    ReconfSequence incomplete{Rule::TS, {{2, 3}}};
    CHECK(validate_sequence(inst, incomplete)->index == 1);

    // the same slide sequence read as jumps is fine
    DdisInstance tj = make_instance(g, 2, Rule::TJ, {0, 2}, {2, 4});
    ReconfSequence jumps{Rule::TJ, {{0, 4}}};
    CHECK_FALSE(validate_sequence(tj, jumps));

    // a jump onto an occupied vertex (sliding can never reach this state
    // without first breaking the distance restriction)
    ReconfSequence onto_token{Rule::TJ, {{0, 2}}};
    auto occupied = validate_sequence(tj, onto_token);
    REQUIRE(occupied);
    CHECK(occupied->index == 0);
    CHECK(occupied->reason == "destination 2 occupied");
}
