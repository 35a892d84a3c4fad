#ifndef DDISR_REDUCTIONS_HPP
#define DDISR_REDUCTIONS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddisr/graph.hpp"
#include "ddisr/instance.hpp"
#include "ddisr/recognition.hpp"

namespace ddisr {

// A constructed instance plus the mapping tying source-problem entities to
// new vertex ids. Keys are textual ("v:3", "x:1-2", "apex", ...); ids of
// vertices with no source counterpart are listed in new_vertices.
struct ReductionOutput {
    DdisInstance instance;
    std::map<std::string, int> vertex_map;
    std::vector<int> new_vertices;
};

namespace detail {

// Connects a and b through `internal` fresh vertices; returns their ids in
// path order from a to b.
inline std::vector<int> add_path(Graph& g, int a, int b, int internal) {
    std::vector<int> added;
    int prev = a;
    for (int i = 0; i < internal; ++i) {
        int v = g.add_vertex();
        g.add_edge(prev, v);
        added.push_back(v);
        prev = v;
    }
    g.add_edge(prev, b);
    return added;
}

inline std::string edge_key(int u, int v) {
    return std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v));
}

}  // namespace detail

// k disjoint paths of length d-1 with endpoints v_i, w_i, plus connector
// paths of length d-1 from each second vertex v_i* to every other endpoint
// v_j (and symmetrically on the w side). Tokens on {v_i} cannot slide at all
// under TS, yet in the (d-1)th power each v_i is adjacent to w_i.
struct TsPowerCounterexample {
    Graph graph;
    TokenSet source;  // the v_i
    TokenSet target;  // the w_i
};

inline TsPowerCounterexample build_ts_power_counterexample(int d, int k) {
    if (d < 3) throw std::invalid_argument("counterexample needs d >= 3");
    if (k < 2) throw std::invalid_argument("counterexample needs k >= 2");
    Graph g(0);
    std::vector<std::vector<int>> paths;  // paths[i][0] = v_i, back() = w_i
    for (int i = 0; i < k; ++i) {
        std::vector<int> path;
        for (int j = 0; j < d; ++j) {
            int v = g.add_vertex();
            if (j > 0) g.add_edge(v - 1, v);
            path.push_back(v);
        }
        paths.push_back(std::move(path));
    }
    for (int i = 0; i < k; ++i) {
        int v_star = paths[static_cast<std::size_t>(i)][1];
        int w_star = paths[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 2)];
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            int v_j = paths[static_cast<std::size_t>(j)].front();
            int w_j = paths[static_cast<std::size_t>(j)].back();
            detail::add_path(g, v_star, v_j, d - 2);
            detail::add_path(g, w_star, w_j, d - 2);
        }
    }
    TsPowerCounterexample out;
    for (int i = 0; i < k; ++i) {
        out.source.push_back(paths[static_cast<std::size_t>(i)].front());
        out.target.push_back(paths[static_cast<std::size_t>(i)].back());
    }
    out.source = make_token_set(out.source);
    out.target = make_token_set(out.target);
    out.graph = std::move(g);
    return out;
}

// ISR -> DdISR on chordal graphs, odd d >= 3, rule TJ. One vertex x_{uv} per
// edge of G, adjacent to u and v, all x vertices forming a clique; a pendant
// path P_v on (d-3)/2 vertices hangs off each original vertex. Token sets
// map through f(v), the far end of P_v (f = identity when d = 3).
inline ReductionOutput reduce_isr_to_chordal_odd(const Graph& g, const TokenSet& source,
                                                 const TokenSet& target, int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("reduction needs odd d >= 3");
    if (!is_ddis(g, 2, source) || !is_ddis(g, 2, target))
        throw std::invalid_argument("endpoints must be independent sets of the source graph");
    Graph out(g.vertex_count());
    ReductionOutput result{DdisInstance{}, {}, {}};
    std::vector<int> x_ids;
    for (auto [u, v] : g.edges()) {
        int x = out.add_vertex();
        out.add_edge(x, u);
        out.add_edge(x, v);
        for (int other : x_ids) out.add_edge(x, other);
        x_ids.push_back(x);
        result.vertex_map["x:" + detail::edge_key(u, v)] = x;
        result.new_vertices.push_back(x);
    }
    std::vector<int> f(static_cast<std::size_t>(g.vertex_count()));
    int pendant_len = (d - 3) / 2;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int tip = v;
        for (int i = 0; i < pendant_len; ++i) {
            int p = out.add_vertex();
            out.add_edge(tip, p);
            tip = p;
            result.new_vertices.push_back(p);
        }
        f[static_cast<std::size_t>(v)] = tip;
        result.vertex_map["v:" + std::to_string(v)] = tip;
    }
    TokenSet mapped_source, mapped_target;
    for (int v : source) mapped_source.push_back(f[static_cast<std::size_t>(v)]);
    for (int v : target) mapped_target.push_back(f[static_cast<std::size_t>(v)]);
    result.instance = make_instance(std::move(out), d, Rule::TJ, std::move(mapped_source),
                                    std::move(mapped_target));
    return result;
}

// Rewrites a TJ-sequence on the chordal-odd output so that every move lands
// on an f-vertex: a jump from an f-vertex into the interior of some P_u + u
// is redirected to f(u), and the later move leaving that interior departs
// from f(u) instead. Assumes token count >= 2, which pins all tokens to
// pendant regions.
inline ReconfSequence normalize_chordal_witness(const Graph& source_graph,
                                                const ReductionOutput& red,
                                                ReconfSequence seq) {
    int n = source_graph.vertex_count();
    // region_of[y] = u when y lies on P_u + u; f_of[u] = f(u).
    std::vector<int> f_of(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) f_of[static_cast<std::size_t>(u)] = red.vertex_map.at("v:" + std::to_string(u));
    std::vector<int> region_of(static_cast<std::size_t>(red.instance.graph.vertex_count()), -1);
    for (int u = 0; u < n; ++u) {
        int cur = u;
        region_of[static_cast<std::size_t>(u)] = u;
        while (cur != f_of[static_cast<std::size_t>(u)]) {
            // pendant chains have strictly increasing ids
            cur = red.instance.graph.neighbors(cur).back();
            region_of[static_cast<std::size_t>(cur)] = u;
        }
    }
    auto is_f_vertex = [&](int y) {
        int u = region_of[static_cast<std::size_t>(y)];
        return u >= 0 && f_of[static_cast<std::size_t>(u)] == y;
    };
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        int y = seq.moves[i].to;
        int u = region_of[static_cast<std::size_t>(y)];
        if (u < 0 || is_f_vertex(y)) continue;
        seq.moves[i].to = f_of[static_cast<std::size_t>(u)];
        for (std::size_t j = i + 1; j < seq.moves.size(); ++j) {
            if (seq.moves[j].from == y) {
                seq.moves[j].from = f_of[static_cast<std::size_t>(u)];
                break;
            }
        }
    }
    return seq;
}

// Maps a normalized witness on the chordal-odd output back to a TJ-sequence
// on the source graph through f^{-1}.
inline ReconfSequence map_back_chordal_witness(const Graph& source_graph,
                                               const ReductionOutput& red,
                                               const ReconfSequence& seq) {
    std::map<int, int> f_inv;
    for (int u = 0; u < source_graph.vertex_count(); ++u)
        f_inv[red.vertex_map.at("v:" + std::to_string(u))] = u;
    ReconfSequence out{Rule::TJ, {}};
    for (const Move& mv : seq.moves) out.moves.push_back(Move{f_inv.at(mv.from), f_inv.at(mv.to)});
    return out;
}

// ISR -> DdISR on general graphs, d >= 3, rule TJ. Every edge uv becomes a
// path of length d-1. Odd d: the midpoints form a clique. Even d: a single
// apex vertex is adjacent to the two middle vertices of every path. Token
// sets are unchanged as vertex sets.
inline ReductionOutput reduce_isr_to_general_tj(const Graph& g, const TokenSet& source,
                                                const TokenSet& target, int d) {
    if (d < 3) throw std::invalid_argument("reduction needs d >= 3");
    if (!is_ddis(g, 2, source) || !is_ddis(g, 2, target))
        throw std::invalid_argument("endpoints must be independent sets of the source graph");
    Graph out(g.vertex_count());
    ReductionOutput result{DdisInstance{}, {}, {}};
    for (int v = 0; v < g.vertex_count(); ++v) result.vertex_map["v:" + std::to_string(v)] = v;
    bool odd = d % 2 == 1;
    int p = odd ? (d - 1) / 2 : (d - 2) / 2;
    std::vector<int> clique_or_hub;  // odd: midpoints; even: apex neighbors
    for (auto [u, v] : g.edges()) {
        auto internal = detail::add_path(out, u, v, d - 2);
        for (int i = 0; i < d - 2; ++i) {
            result.vertex_map["path:" + detail::edge_key(u, v) + ":" + std::to_string(i + 1)] =
                internal[static_cast<std::size_t>(i)];
            result.new_vertices.push_back(internal[static_cast<std::size_t>(i)]);
        }
        // internal[i] is x_{i+1}^{uv} with x_0 = u
        if (odd) {
            clique_or_hub.push_back(internal[static_cast<std::size_t>(p - 1)]);
        } else {
            clique_or_hub.push_back(internal[static_cast<std::size_t>(p - 1)]);
            clique_or_hub.push_back(internal[static_cast<std::size_t>(p)]);
        }
    }
    if (odd) {
        for (std::size_t i = 0; i < clique_or_hub.size(); ++i)
            for (std::size_t j = i + 1; j < clique_or_hub.size(); ++j)
                out.add_edge(clique_or_hub[i], clique_or_hub[j]);
    } else if (!clique_or_hub.empty()) {
        int apex = out.add_vertex();
        result.vertex_map["apex"] = apex;
        result.new_vertices.push_back(apex);
        for (int v : clique_or_hub) out.add_edge(apex, v);
    }
    result.instance = make_instance(std::move(out), d, Rule::TJ, source, target);
    return result;
}

}  // namespace ddisr

#endif
