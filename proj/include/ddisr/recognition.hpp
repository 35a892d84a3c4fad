#ifndef DDISR_RECOGNITION_HPP
#define DDISR_RECOGNITION_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ddisr/graph.hpp"

namespace ddisr {

// Maximum cardinality search; returns vertices in visit order.
inline std::vector<int> mcs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            if (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)])
                best = v;
        }
        visited[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!visited[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
    }
    return order;
}

// Chordality via MCS: the reverse of an MCS order is a perfect elimination
// ordering iff the graph is chordal, which we verify directly.
inline bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    auto order = mcs_order(g);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    // Eliminate in reverse MCS order: for each v, its already-eliminated
    // neighbors must form a clique, which reduces to checking the latest one.
    for (int i = n - 1; i >= 0; --i) {
        int v = order[static_cast<std::size_t>(i)];
        int follower = -1;
        for (int u : g.neighbors(v)) {
            int pu = pos[static_cast<std::size_t>(u)];
            if (pu < i && (follower == -1 || pu > pos[static_cast<std::size_t>(follower)]))
                follower = u;
        }
        if (follower == -1) continue;
        for (int u : g.neighbors(v)) {
            if (u == follower || pos[static_cast<std::size_t>(u)] >= i) continue;
            if (!g.has_edge(follower, u)) return false;
        }
    }
    return true;
}

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> independent;
};

// Split recognition by the degree-sequence characterization; the witness
// partition is rebuilt and verified before returning.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(verts[static_cast<std::size_t>(i)]) >= i) m = i + 1;
    long long head = 0, tail = 0;
    for (int i = 0; i < m; ++i) head += g.degree(verts[static_cast<std::size_t>(i)]);
    for (int i = m; i < n; ++i) tail += g.degree(verts[static_cast<std::size_t>(i)]);
    if (head != static_cast<long long>(m) * (m - 1) + tail) return std::nullopt;
    SplitPartition part;
    part.clique.assign(verts.begin(), verts.begin() + m);
    part.independent.assign(verts.begin() + m, verts.end());
    std::sort(part.clique.begin(), part.clique.end());
    std::sort(part.independent.begin(), part.independent.end());
    for (std::size_t i = 0; i < part.clique.size(); ++i)
        for (std::size_t j = i + 1; j < part.clique.size(); ++j)
            if (!g.has_edge(part.clique[i], part.clique[j]))
                throw std::logic_error("split witness clique check failed");
    for (std::size_t i = 0; i < part.independent.size(); ++i)
        for (std::size_t j = i + 1; j < part.independent.size(); ++j)
            if (g.has_edge(part.independent[i], part.independent[j]))
                throw std::logic_error("split witness independence check failed");
    return part;
}

inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

}  // namespace ddisr

#endif
