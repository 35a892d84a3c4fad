#ifndef DDISR_SPR_HPP
#define DDISR_SPR_HPP

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddisr/format.hpp"
#include "ddisr/reductions.hpp"

namespace ddisr {

// (G, u, v, P, Q): P and Q are shortest u-v paths given as vertex lists.
struct SprInstance {
    Graph graph;
    int u = 0;
    int v = 0;
    std::vector<int> path_p;
    std::vector<int> path_q;
};

inline bool is_shortest_path(const Graph& g, int u, int v, const std::vector<int>& path) {
    auto dist = distances_from(g, u);
    int k = dist[static_cast<std::size_t>(v)];
    if (!is_finite_distance(k)) return false;
    if (static_cast<int>(path.size()) != k + 1) return false;
    if (path.front() != u || path.back() != v) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

inline void check_spr(const SprInstance& inst) {
    if (!is_shortest_path(inst.graph, inst.u, inst.v, inst.path_p) ||
        !is_shortest_path(inst.graph, inst.u, inst.v, inst.path_q))
        throw std::invalid_argument("P and Q must be shortest u-v paths");
}

namespace detail {

// All shortest u-v paths by DFS over the distance-layered DAG.
inline std::vector<std::vector<int>> all_shortest_paths(const Graph& g, int u, int v) {
    auto du = distances_from(g, u);
    auto dv = distances_from(g, v);
    int k = du[static_cast<std::size_t>(v)];
    std::vector<std::vector<int>> out;
    if (!is_finite_distance(k)) return out;
    std::vector<int> path{u};
    std::function<void()> extend = [&]() {
        int cur = path.back();
        if (cur == v) {
            out.push_back(path);
            return;
        }
        for (int next : g.neighbors(cur)) {
            if (du[static_cast<std::size_t>(next)] == du[static_cast<std::size_t>(cur)] + 1 &&
                is_finite_distance(dv[static_cast<std::size_t>(next)]) &&
                du[static_cast<std::size_t>(next)] + dv[static_cast<std::size_t>(next)] == k) {
                path.push_back(next);
                extend();
                path.pop_back();
            }
        }
    };
    extend();
    return out;
}

}  // namespace detail

// BFS over shortest u-v paths; adjacent paths differ in exactly one vertex.
inline bool spr_bruteforce(const SprInstance& inst) {
    check_spr(inst);
    auto paths = detail::all_shortest_paths(inst.graph, inst.u, inst.v);
    auto differ_in_one = [](const std::vector<int>& a, const std::vector<int>& b) {
        int diff = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) ++diff;
        return diff == 1;
    };
    std::size_t start = paths.size(), goal = paths.size();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths[i] == inst.path_p) start = i;
        if (paths[i] == inst.path_q) goal = i;
    }
    if (start == paths.size() || goal == paths.size())
        throw std::logic_error("endpoint path missing from enumeration");
    std::vector<bool> seen(paths.size(), false);
    std::queue<std::size_t> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop();
        if (cur == goal) return true;
        for (std::size_t next = 0; next < paths.size(); ++next)
            if (!seen[next] && differ_in_one(paths[cur], paths[next])) {
                seen[next] = true;
                queue.push(next);
            }
    }
    return false;
}

// SPR -> DdISR on perfect graphs, both rules, d >= 2. Prune to the union of
// shortest u-v paths, turn each distance layer into a clique, complement the
// inter-layer edges, then (for d >= 3) stretch each inter-layer edge into a
// path of length d-1 and turn each subdivision cell D_i^j into a clique.
// Token sets are the vertices of P and Q.
inline ReductionOutput reduce_spr_to_perfect(const SprInstance& inst, int d) {
    if (d < 2) throw std::invalid_argument("reduction needs d >= 2");
    check_spr(inst);
    const Graph& g = inst.graph;
    auto du = distances_from(g, inst.u);
    auto dv = distances_from(g, inst.v);
    int k = du[static_cast<std::size_t>(inst.v)];

    // Survivors: vertices on some shortest u-v path, renumbered by layer.
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(k + 1));
    int count = 0;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (is_finite_distance(du[static_cast<std::size_t>(x)]) &&
            is_finite_distance(dv[static_cast<std::size_t>(x)]) &&
            du[static_cast<std::size_t>(x)] + dv[static_cast<std::size_t>(x)] == k) {
            new_id[static_cast<std::size_t>(x)] = count++;
            layers[static_cast<std::size_t>(du[static_cast<std::size_t>(x)])].push_back(
                new_id[static_cast<std::size_t>(x)]);
        }
    }
    Graph out(count);
    ReductionOutput result{DdisInstance{}, {}, {}};
    for (int x = 0; x < g.vertex_count(); ++x)
        if (new_id[static_cast<std::size_t>(x)] >= 0)
            result.vertex_map["v:" + std::to_string(x)] = new_id[static_cast<std::size_t>(x)];

    for (const auto& layer : layers)
        for (std::size_t i = 0; i < layer.size(); ++i)
            for (std::size_t j = i + 1; j < layer.size(); ++j) out.add_edge(layer[i], layer[j]);

    // Complemented inter-layer adjacency: x in D_i and y in D_{i+1} are
    // connected in the output iff the pruned graph has no edge between them.
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<int>> cells(static_cast<std::size_t>(std::max(0, d - 2)));
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (new_id[static_cast<std::size_t>(x)] < 0 || du[static_cast<std::size_t>(x)] != i) continue;
            for (int y = 0; y < g.vertex_count(); ++y) {
                if (new_id[static_cast<std::size_t>(y)] < 0 || du[static_cast<std::size_t>(y)] != i + 1)
                    continue;
                if (g.has_edge(x, y)) continue;
                int a = new_id[static_cast<std::size_t>(x)];
                int b = new_id[static_cast<std::size_t>(y)];
                if (d == 2) {
                    out.add_edge(a, b);
                } else {
                    auto internal = detail::add_path(out, a, b, d - 2);
                    for (int j = 0; j < d - 2; ++j) {
                        int z = internal[static_cast<std::size_t>(j)];
                        cells[static_cast<std::size_t>(j)].push_back(z);
                        result.vertex_map["cell:" + std::to_string(a) + "-" + std::to_string(b) +
                                          ":" + std::to_string(j + 1)] = z;
                        result.new_vertices.push_back(z);
                    }
                }
            }
        }
        for (const auto& cell : cells)
            for (std::size_t s = 0; s < cell.size(); ++s)
                for (std::size_t t = s + 1; t < cell.size(); ++t) out.add_edge(cell[s], cell[t]);
    }

    TokenSet source, target;
    for (int x : inst.path_p) source.push_back(new_id[static_cast<std::size_t>(x)]);
    for (int x : inst.path_q) target.push_back(new_id[static_cast<std::size_t>(x)]);
    result.instance = make_instance(std::move(out), d, Rule::TS, make_token_set(std::move(source)),
                                    make_token_set(std::move(target)));
    return result;
}

// Instance graph in the shared edge-list format plus `path_p` / `path_q`
// lines naming the endpoint shortest paths. Endpoints u, v are implied by
// the paths.
//   spr 1
//   vertices <n>
//   edge <u> <v> ...
//   path_p <v...>
//   path_q <v...>
inline SprInstance parse_spr(const std::string& text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header || header->size() != 2 || (*header)[0] != "spr" || (*header)[1] != "1")
        reader.fail("expected header 'spr 1'");
    SprInstance inst;
    bool have_graph = false;
    while (auto fields = reader.next()) {
        const auto& f = *fields;
        if (f[0] == "vertices" && f.size() == 2) {
            inst.graph = Graph(detail::parse_int(reader, f[1]));
            have_graph = true;
        } else if (f[0] == "edge" && f.size() == 3) {
            if (!have_graph) reader.fail("edge before vertices line");
            try {
                inst.graph.add_edge(detail::parse_int(reader, f[1]), detail::parse_int(reader, f[2]));
            } catch (const std::exception& e) {
                reader.fail(e.what());
            }
        } else if (f[0] == "path_p" || f[0] == "path_q") {
            std::vector<int> path;
            for (std::size_t i = 1; i < f.size(); ++i) path.push_back(detail::parse_int(reader, f[i]));
            (f[0] == "path_p" ? inst.path_p : inst.path_q) = std::move(path);
        } else {
            reader.fail("unrecognized directive '" + f[0] + "'");
        }
    }
    if (!have_graph) throw ParseError(reader.line_no, "missing 'vertices' line");
    if (inst.path_p.empty() || inst.path_q.empty())
        throw ParseError(reader.line_no, "missing path_p or path_q line");
    inst.u = inst.path_p.front();
    inst.v = inst.path_p.back();
    try {
        check_spr(inst);
    } catch (const std::exception& e) {
        throw ParseError(reader.line_no, e.what());
    }
    return inst;
}

}  // namespace ddisr

#endif
