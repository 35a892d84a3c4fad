#include "doctest.h"

#include "ddisr/generators.hpp"
#include "ddisr/recognition.hpp"

using namespace ddisr;

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// reference chordality for tiny graphs: a chordless cycle of length >= 4
// exists iff some vertex subset induces a cycle, i.e. a connected subgraph
// with every induced degree equal to 2
bool has_chordless_cycle(const Graph& g) {
    int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) subset.push_back(v);
        if (subset.size() < 4) continue;
        bool all_degree_two = true;
        for (int v : subset) {
            int deg = 0;
            for (int u : subset)
                if (u != v && g.has_edge(u, v)) ++deg;
            if (deg != 2) {
                all_degree_two = false;
                break;
            }
        }
        if (!all_degree_two) continue;
        // connectivity of the induced subgraph
        std::vector<int> stack{subset.front()};
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        seen[static_cast<std::size_t>(subset.front())] = true;
        std::size_t visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : subset)
                if (!seen[static_cast<std::size_t>(u)] && g.has_edge(u, v)) {
                    seen[static_cast<std::size_t>(u)] = true;
                    ++visited;
                    stack.push_back(u);
                }
        }
        if (visited == subset.size()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("chordality on fixed graphs") {
    CHECK(is_chordal(Graph(0)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    Graph chorded = cycle_graph(4);
    chorded.add_edge(0, 2);
    CHECK(is_chordal(chorded));
    Graph tree(5);
    for (int v = 1; v < 5; ++v) tree.add_edge(0, v);
    CHECK(is_chordal(tree));
}

TEST_CASE("chordality against chordless-cycle search") {
    Rng rng(20260824);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(7, 0.4, rng);
        CHECK(is_chordal(g) == !has_chordless_cycle(g));
    }
}

TEST_CASE("split recognition") {
    CHECK(is_split(Graph(0)));
    CHECK(is_split(complete_graph(4)));
    Graph independent(4);
    CHECK(is_split(independent));
    CHECK_FALSE(is_split(cycle_graph(4)));
    CHECK_FALSE(is_split(cycle_graph(5)));

    Graph g(5);  // triangle with two pendant vertices
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    auto part = split_partition(g);
    REQUIRE(part);
    CHECK(part->clique.size() + part->independent.size() == 5);
}

TEST_CASE("generated split graphs are recognized") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> pick(1, 4);
        Graph g = random_split_graph(pick(rng), pick(rng), 0.5, rng);
        CHECK(is_split(g));
    }
}

TEST_CASE("split graphs are chordal") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_split_graph(3, 4, 0.5, rng);
        CHECK(is_chordal(g));
    }
}
