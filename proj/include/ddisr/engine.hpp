#ifndef DDISR_ENGINE_HPP
#define DDISR_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddisr/graph.hpp"
#include "ddisr/instance.hpp"

namespace ddisr {

inline constexpr std::int64_t kDefaultStateBudget = 5'000'000;

class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(std::int64_t states)
        : std::runtime_error("state budget exceeded after " + std::to_string(states) + " states"),
          states_explored(states) {}
    std::int64_t states_explored;
};

enum class DeciderTag { Exact, BoundedDiameter, SplitTsD3, TjPower, TreeNecessary, SizeMismatch };

inline std::string to_string(DeciderTag t) {
    switch (t) {
        case DeciderTag::Exact: return "exact";
        case DeciderTag::BoundedDiameter: return "bounded-diameter";
        case DeciderTag::SplitTsD3: return "split-ts-d3";
        case DeciderTag::TjPower: return "tj-power";
        case DeciderTag::TreeNecessary: return "tree-necessary";
        case DeciderTag::SizeMismatch: return "size-mismatch";
    }
    return "unknown";
}

struct Verdict {
    bool reachable = false;
    std::optional<ReconfSequence> witness;
    DeciderTag decider = DeciderTag::Exact;
    std::int64_t states_explored = 0;
};

namespace detail {

struct TokenSetHash {
    std::size_t operator()(const TokenSet& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Destinations for moving the token on `from` out of `occupied`, ascending.
// TS restricts to graph neighbors; both rules keep the DdIS property.
inline std::vector<int> legal_destinations(const Graph& g, int d, Rule rule,
                                           const TokenSet& occupied, int from) {
    std::vector<int> out;
    auto try_dest = [&](int to) {
        if (to == from || token_set_contains(occupied, to)) return;
        auto dist = distances_from_bounded(g, to, d - 1);
        for (int other : occupied) {
            if (other == from) continue;
            if (!distance_at_least(dist[static_cast<std::size_t>(other)], d)) return;
        }
        out.push_back(to);
    };
    if (rule == Rule::TS) {
        for (int to : g.neighbors(from)) try_dest(to);
    } else {
        for (int to = 0; to < g.vertex_count(); ++to) try_dest(to);
    }
    return out;
}

}  // namespace detail

// Breadth-first search over canonical token sets. Witnesses are shortest by
// construction; neighbor order (tokens ascending, destinations ascending)
// fixes tie-breaking so results are deterministic.
inline Verdict solve_exact(const DdisInstance& inst, bool want_witness = true,
                           std::int64_t state_budget = kDefaultStateBudget) {
    Verdict verdict;
    verdict.decider = DeciderTag::Exact;
    if (inst.size_mismatch()) {
        verdict.reachable = false;
        return verdict;
    }
    if (inst.source == inst.target) {
        verdict.reachable = true;
        verdict.states_explored = 1;
        if (want_witness) verdict.witness = ReconfSequence{inst.rule, {}};
        return verdict;
    }
    std::vector<TokenSet> states;
    std::vector<std::pair<std::int64_t, Move>> parent;  // only filled when want_witness
    std::unordered_map<TokenSet, std::int64_t, detail::TokenSetHash> index;
    auto push_state = [&](TokenSet s, std::int64_t from, Move mv) -> std::int64_t {
        auto [it, inserted] = index.try_emplace(std::move(s), static_cast<std::int64_t>(states.size()));
        if (!inserted) return -1;
        states.push_back(it->first);
        if (want_witness) parent.emplace_back(from, mv);
        if (static_cast<std::int64_t>(states.size()) > state_budget)
            throw BudgetError(static_cast<std::int64_t>(states.size()));
        return it->second;
    };
    push_state(inst.source, -1, Move{});
    for (std::int64_t head = 0; head < static_cast<std::int64_t>(states.size()); ++head) {
        TokenSet current = states[static_cast<std::size_t>(head)];
        for (std::size_t ti = 0; ti < current.size(); ++ti) {
            int from = current[ti];
            for (int to : detail::legal_destinations(inst.graph, inst.d, inst.rule, current, from)) {
                TokenSet next;
                next.reserve(current.size());
                for (int v : current)
                    if (v != from) next.push_back(v);
                next.insert(std::upper_bound(next.begin(), next.end(), to), to);
                std::int64_t id = push_state(std::move(next), head, Move{from, to});
                if (id >= 0 && states[static_cast<std::size_t>(id)] == inst.target) {
                    verdict.reachable = true;
                    verdict.states_explored = static_cast<std::int64_t>(states.size());
                    if (want_witness) {
                        std::vector<Move> moves;
                        for (std::int64_t cur = id; cur > 0; cur = parent[static_cast<std::size_t>(cur)].first)
                            moves.push_back(parent[static_cast<std::size_t>(cur)].second);
                        std::reverse(moves.begin(), moves.end());
                        verdict.witness = ReconfSequence{inst.rule, std::move(moves)};
                    }
                    return verdict;
                }
            }
        }
    }
    verdict.reachable = false;
    verdict.states_explored = static_cast<std::int64_t>(states.size());
    return verdict;
}

struct ReconfGraphStats {
    std::int64_t state_count = 0;
    std::int64_t edge_count = 0;
    std::int64_t component_count = 0;
    std::int64_t largest_component = 0;
};

// Statistics of the full reconfiguration graph over all size-k DdIS.
inline ReconfGraphStats reconf_graph_stats(const Graph& g, int d, int k, Rule rule,
                                           std::int64_t state_budget = kDefaultStateBudget) {
    std::vector<TokenSet> states = collect_ddis(g, d, k);
    if (static_cast<std::int64_t>(states.size()) > state_budget)
        throw BudgetError(static_cast<std::int64_t>(states.size()));
    std::unordered_map<TokenSet, std::int64_t, detail::TokenSetHash> index;
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(states[i], static_cast<std::int64_t>(i));
    ReconfGraphStats stats;
    stats.state_count = static_cast<std::int64_t>(states.size());
    std::vector<std::vector<std::int64_t>> adj(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const TokenSet& current = states[i];
        for (int from : current) {
            for (int to : detail::legal_destinations(g, d, rule, current, from)) {
                TokenSet next;
                for (int v : current)
                    if (v != from) next.push_back(v);
                next.insert(std::upper_bound(next.begin(), next.end(), to), to);
                std::int64_t j = index.at(next);
                if (static_cast<std::int64_t>(i) < j) {
                    ++stats.edge_count;
                    adj[i].push_back(j);
                    adj[static_cast<std::size_t>(j)].push_back(static_cast<std::int64_t>(i));
                }
            }
        }
    }
    std::vector<bool> seen(states.size(), false);
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (seen[s]) continue;
        std::int64_t size = 0;
        std::vector<std::int64_t> stack{static_cast<std::int64_t>(s)};
        seen[s] = true;
        while (!stack.empty()) {
            std::int64_t u = stack.back();
            stack.pop_back();
            ++size;
            for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    stack.push_back(v);
                }
            }
        }
        ++stats.component_count;
        stats.largest_component = std::max(stats.largest_component, size);
    }
    return stats;
}

// Labeled-token BFS under TS. A token is rigid iff no transition anywhere in
// the reachable component moves its label. Works on any graph, not just
// trees, so it can serve as an oracle for the tree characterization.
inline TokenSet rigid_oracle(const Graph& g, const TokenSet& tokens, int d,
                             std::int64_t state_budget = kDefaultStateBudget) {
    TokenSet start = make_token_set(tokens);
    if (!is_ddis(g, d, start)) throw std::invalid_argument("token set is not a DdIS");
    std::size_t k = start.size();
    std::vector<bool> movable(k, false);
    // A labeled state maps label i to a vertex; labels are distinct.
    std::vector<std::vector<int>> states{std::vector<int>(start.begin(), start.end())};
    std::unordered_map<TokenSet, std::int64_t, detail::TokenSetHash> index;
    index.emplace(states[0], 0);
    for (std::size_t head = 0; head < states.size(); ++head) {
        std::vector<int> current = states[head];
        TokenSet occupied = make_token_set(current);
        for (std::size_t label = 0; label < k; ++label) {
            int from = current[label];
            for (int to : detail::legal_destinations(g, d, Rule::TS, occupied, from)) {
                movable[label] = true;
                std::vector<int> next = current;
                next[label] = to;
                auto [it, inserted] = index.try_emplace(next, static_cast<std::int64_t>(states.size()));
                if (inserted) {
                    states.push_back(std::move(next));
                    if (static_cast<std::int64_t>(states.size()) > state_budget)
                        throw BudgetError(static_cast<std::int64_t>(states.size()));
                }
            }
        }
        if (std::all_of(movable.begin(), movable.end(), [](bool b) { return b; })) break;
    }
    TokenSet rigid;
    for (std::size_t label = 0; label < k; ++label)
        if (!movable[label]) rigid.push_back(start[label]);
    return rigid;
}

}  // namespace ddisr

#endif
