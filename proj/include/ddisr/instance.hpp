#ifndef DDISR_INSTANCE_HPP
#define DDISR_INSTANCE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddisr/graph.hpp"

namespace ddisr {

enum class Rule { TS, TJ };

inline std::string to_string(Rule r) { return r == Rule::TS ? "TS" : "TJ"; }

// Sorted duplicate-free vertex ids.
using TokenSet = std::vector<int>;

inline TokenSet make_token_set(std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return verts;
}

inline bool token_set_contains(const TokenSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

struct Move {
    int from = 0;
    int to = 0;
    bool operator==(const Move&) const = default;
};

struct ReconfSequence {
    Rule rule = Rule::TS;
    std::vector<Move> moves;
};

// Pairwise distances all >= d. Empty and singleton sets qualify vacuously.
// Per-token BFS truncated at depth d-1: any other token found within the
// horizon is a violation.
inline bool is_ddis(const Graph& g, int d, const TokenSet& s) {
    if (d < 2) throw std::invalid_argument("distance parameter must be >= 2");
    for (int v : s) g.check_vertex(v);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto dist = distances_from_bounded(g, s[i], d - 1);
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!distance_at_least(dist[static_cast<std::size_t>(s[j])], d)) return false;
    }
    return true;
}

// Cross-check helper: the DdIS predicate must agree with plain independence
// in the (d-1)th power. Disagreement means a graph-core bug.
inline bool ddis_iff_power_is(const Graph& g, int d, const TokenSet& s) {
    bool direct = is_ddis(g, d, s);
    Graph power = graph_power(g, d - 1);
    bool via_power = true;
    for (std::size_t i = 0; i < s.size() && via_power; ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (power.has_edge(s[i], s[j])) {
                via_power = false;
                break;
            }
    if (direct != via_power)
        throw std::logic_error("is_ddis disagrees with independence in the power graph");
    return direct;
}

// Every size-k DdIS in lexicographic order, by pruned backtracking: a vertex
// extends a partial set only if it is at distance >= d from all chosen ones.
inline void enumerate_ddis(const Graph& g, int d, int k,
                           const std::function<void(const TokenSet&)>& yield) {
    if (k < 0) throw std::invalid_argument("negative set size");
    if (d < 2) throw std::invalid_argument("distance parameter must be >= 2");
    TokenSet chosen;
    // far[v] counts chosen tokens; a vertex is eligible while no chosen token
    // sees it within distance d-1.
    std::vector<int> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    std::function<void(int)> extend = [&](int start) {
        if (static_cast<int>(chosen.size()) == k) {
            yield(chosen);
            return;
        }
        int remaining = k - static_cast<int>(chosen.size());
        for (int v = start; v + remaining <= g.vertex_count(); ++v) {
            if (blocked[static_cast<std::size_t>(v)] > 0) continue;
            auto dist = distances_from_bounded(g, v, d - 1);
            chosen.push_back(v);
            for (int u = 0; u < g.vertex_count(); ++u)
                if (is_finite_distance(dist[static_cast<std::size_t>(u)]))
                    ++blocked[static_cast<std::size_t>(u)];
            extend(v + 1);
            chosen.pop_back();
            for (int u = 0; u < g.vertex_count(); ++u)
                if (is_finite_distance(dist[static_cast<std::size_t>(u)]))
                    --blocked[static_cast<std::size_t>(u)];
        }
    };
    extend(0);
}

inline std::vector<TokenSet> collect_ddis(const Graph& g, int d, int k) {
    std::vector<TokenSet> out;
    enumerate_ddis(g, d, k, [&](const TokenSet& s) { out.push_back(s); });
    return out;
}

// (graph, d, rule, source, target). Construction checks both endpoint sets.
// Mismatched sizes are representable (the deciders answer NO), flagged here.
struct DdisInstance {
    Graph graph;
    int d = 2;
    Rule rule = Rule::TS;
    TokenSet source;
    TokenSet target;

    bool size_mismatch() const { return source.size() != target.size(); }
};

inline DdisInstance make_instance(Graph g, int d, Rule rule, TokenSet source, TokenSet target) {
    if (d < 2) throw std::invalid_argument("distance parameter must be >= 2");
    source = make_token_set(std::move(source));
    target = make_token_set(std::move(target));
    if (!is_ddis(g, d, source)) throw std::invalid_argument("source is not a DdIS");
    if (!is_ddis(g, d, target)) throw std::invalid_argument("target is not a DdIS");
    return DdisInstance{std::move(g), d, rule, std::move(source), std::move(target)};
}

struct SequenceViolation {
    std::size_t index = 0;
    std::string reason;
};

// Replays the moves from the source set. Each step must take a present token
// to an unoccupied vertex, keep the DdIS property, and (under TS) use an
// edge; the final set must equal the target.
inline std::optional<SequenceViolation> validate_sequence(const DdisInstance& inst,
                                                          const ReconfSequence& seq) {
    if (seq.rule != inst.rule)
        return SequenceViolation{0, "sequence rule differs from instance rule"};
    TokenSet current = inst.source;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        const Move& mv = seq.moves[i];
        inst.graph.check_vertex(mv.from);
        inst.graph.check_vertex(mv.to);
        if (mv.from == mv.to) return SequenceViolation{i, "degenerate move"};
        if (!token_set_contains(current, mv.from))
            return SequenceViolation{i, "no token on vertex " + std::to_string(mv.from)};
        if (token_set_contains(current, mv.to))
            return SequenceViolation{i, "destination " + std::to_string(mv.to) + " occupied"};
        if (inst.rule == Rule::TS && !inst.graph.has_edge(mv.from, mv.to))
            return SequenceViolation{i, "slide along non-edge " + std::to_string(mv.from) + "-" +
                                            std::to_string(mv.to)};
        TokenSet next;
        next.reserve(current.size());
        for (int v : current)
            if (v != mv.from) next.push_back(v);
        next.insert(std::upper_bound(next.begin(), next.end(), mv.to), mv.to);
        if (!is_ddis(inst.graph, inst.d, next))
            return SequenceViolation{i, "move breaks the distance-" + std::to_string(inst.d) +
                                            " restriction"};
        current = std::move(next);
    }
    if (current != inst.target) return SequenceViolation{seq.moves.size(), "final set is not the target"};
    return std::nullopt;
}

}  // namespace ddisr

#endif
