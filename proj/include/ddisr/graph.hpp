#ifndef DDISR_GRAPH_HPP
#define DDISR_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddisr {

// Sentinel for "no path". Kept negative so accidental arithmetic on it is
// loud in tests rather than silently almost-correct.
inline constexpr int kInfiniteDistance = -1;

inline bool is_finite_distance(int d) { return d >= 0; }

// dist >= d with the infinity convention (no path counts as far apart).
inline bool distance_at_least(int dist, int d) {
    return dist == kInfiniteDistance || dist >= d;
}

// Simple undirected graph over dense vertex ids 0..n-1.
// Adjacency lists are kept sorted; self-loops and duplicate edges are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    int edge_count() const {
        std::size_t twice = 0;
        for (const auto& nbrs : adj_) twice += nbrs.size();
        return static_cast<int>(twice / 2);
    }

    // Appends a fresh vertex and returns its id.
    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range 0.." +
                                    std::to_string(vertex_count() - 1));
    }

private:
    static void insert_sorted(std::vector<int>& nbrs, int v) {
        nbrs.insert(std::upper_bound(nbrs.begin(), nbrs.end(), v), v);
    }

    std::vector<std::vector<int>> adj_;
};

// Single-source BFS distances; unreachable entries are kInfiniteDistance.
inline std::vector<int> distances_from(const Graph& g, int s) {
    g.check_vertex(s);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfiniteDistance);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kInfiniteDistance) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

// BFS truncated at the given depth; entries beyond it stay infinite.
inline std::vector<int> distances_from_bounded(const Graph& g, int s, int max_depth) {
    g.check_vertex(s);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kInfiniteDistance);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        int du = dist[static_cast<std::size_t>(u)];
        if (du == max_depth) continue;
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] == kInfiniteDistance) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

// All-pairs shortest-path table, n BFS traversals.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g) {
        table_.reserve(static_cast<std::size_t>(g.vertex_count()));
        for (int s = 0; s < g.vertex_count(); ++s) table_.push_back(distances_from(g, s));
    }

    int operator()(int u, int v) const {
        return table_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }

    int size() const { return static_cast<int>(table_.size()); }

private:
    std::vector<std::vector<int>> table_;
};

// N^s_G(u): vertices at distance exactly s from u. s=0 gives {u}.
inline std::vector<int> s_neighborhood(const Graph& g, int u, int s) {
    if (s < 0) throw std::invalid_argument("negative neighborhood radius");
    auto dist = distances_from_bounded(g, u, s);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[static_cast<std::size_t>(v)] == s) out.push_back(v);
    return out;
}

// G^s: same vertices, edge uv iff 1 <= dist_G(u,v) <= s.
inline Graph graph_power(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("graph power needs s >= 1");
    Graph p(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dist = distances_from_bounded(g, u, s);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            int d = dist[static_cast<std::size_t>(v)];
            if (is_finite_distance(d) && d >= 1) p.add_edge(u, v);
        }
    }
    return p;
}

// Connected components as sorted vertex sets, ordered by minimum element.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    q.push(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Per-component diameter, aligned with components(g). A lone vertex has diameter 0.
inline std::vector<int> component_diameters(const Graph& g) {
    auto comps = components(g);
    std::vector<int> diams;
    diams.reserve(comps.size());
    for (const auto& comp : comps) {
        int diam = 0;
        for (int u : comp) {
            auto dist = distances_from(g, u);
            for (int v : comp) diam = std::max(diam, dist[static_cast<std::size_t>(v)]);
        }
        diams.push_back(diam);
    }
    return diams;
}

inline bool is_tree(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return components(g).size() == 1 && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace ddisr

#endif
