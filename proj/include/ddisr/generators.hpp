#ifndef DDISR_GENERATORS_HPP
#define DDISR_GENERATORS_HPP

#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "ddisr/graph.hpp"
#include "ddisr/instance.hpp"

namespace ddisr {

using Rng = std::mt19937_64;

// G(n, p): each pair independently an edge with probability p.
inline Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Random attachment tree: vertex i >= 1 hangs off a uniform earlier vertex.
inline Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    return g;
}

// Spanning tree plus up to `extra` random chords; always connected.
inline Graph random_connected_graph(int n, int extra, Rng& rng) {
    Graph g = random_tree(n, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int u = pick(rng);
        int v = pick(rng);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

// Split graph with shuffled labels: a clique, an independent set, and random
// cross edges.
inline Graph random_split_graph(int clique_size, int independent_size, double p, Rng& rng) {
    int n = clique_size + independent_size;
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j)
            g.add_edge(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
    for (int i = 0; i < clique_size; ++i)
        for (int j = clique_size; j < n; ++j)
            if (coin(rng))
                g.add_edge(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]);
    return g;
}

// Universal vertex plus random extra edges: diameter at most 2.
inline Graph random_small_diameter_graph(int n, double p, Rng& rng) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Random size-k DdIS by shuffled greedy selection, or nullopt if the attempt
// stalls. Callers typically retry with the same rng.
inline std::optional<TokenSet> random_ddis(const Graph& g, int d, int k, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    TokenSet chosen;
    std::vector<bool> blocked(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : order) {
        if (static_cast<int>(chosen.size()) == k) break;
        if (blocked[static_cast<std::size_t>(v)]) continue;
        chosen.push_back(v);
        auto dist = distances_from_bounded(g, v, d - 1);
        for (int u = 0; u < g.vertex_count(); ++u)
            if (is_finite_distance(dist[static_cast<std::size_t>(u)]))
                blocked[static_cast<std::size_t>(u)] = true;
    }
    if (static_cast<int>(chosen.size()) != k) return std::nullopt;
    return make_token_set(std::move(chosen));
}

// A pair of same-size DdIS suitable as reconfiguration endpoints, with a
// bounded number of attempts.
inline std::optional<std::pair<TokenSet, TokenSet>> random_ddis_pair(const Graph& g, int d, int k,
                                                                     Rng& rng, int attempts = 20) {
    for (int i = 0; i < attempts; ++i) {
        auto a = random_ddis(g, d, k, rng);
        auto b = random_ddis(g, d, k, rng);
        if (a && b) return std::make_pair(std::move(*a), std::move(*b));
    }
    return std::nullopt;
}

}  // namespace ddisr

#endif
