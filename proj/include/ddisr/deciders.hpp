#ifndef DDISR_DECIDERS_HPP
#define DDISR_DECIDERS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ddisr/engine.hpp"
#include "ddisr/graph.hpp"
#include "ddisr/instance.hpp"
#include "ddisr/recognition.hpp"

namespace ddisr {

namespace detail {

// Shortest path from `from` to `to`, lowest-id tie-breaking, as a move list.
inline std::vector<Move> slide_path(const Graph& g, int from, int to) {
    if (from == to) return {};
    auto dist = distances_from(g, to);
    std::vector<Move> moves;
    int cur = from;
    while (cur != to) {
        int next = -1;
        for (int v : g.neighbors(cur)) {
            if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(cur)] - 1) {
                next = v;
                break;  // neighbors sorted, so this is the lowest id
            }
        }
        moves.push_back(Move{cur, next});
        cur = next;
    }
    return moves;
}

inline std::vector<int> component_of(const Graph& g) {
    auto comps = components(g);
    std::vector<int> comp_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    return comp_of;
}

}  // namespace detail

// Components with small diameter relative to d carry at most one token each,
// which trivializes the problem: TJ is always YES, TS needs matching
// per-component token counts. Not applicable when d <= max component diameter.
inline std::optional<Verdict> decide_bounded_diameter(const DdisInstance& inst) {
    auto diams = component_diameters(inst.graph);
    int max_diam = 0;
    for (int diam : diams) max_diam = std::max(max_diam, diam);
    if (inst.d < max_diam + 1) return std::nullopt;

    Verdict verdict;
    verdict.decider = DeciderTag::BoundedDiameter;
    if (inst.size_mismatch()) {
        verdict.reachable = false;
        return verdict;
    }
    auto comps = components(inst.graph);
    auto comp_of = detail::component_of(inst.graph);
    std::vector<int> src_in(comps.size(), -1), dst_in(comps.size(), -1);
    for (int v : inst.source) src_in[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])] = v;
    for (int v : inst.target) dst_in[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])] = v;

    if (inst.rule == Rule::TS) {
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if ((src_in[c] >= 0) != (dst_in[c] >= 0)) {
                verdict.reachable = false;  // tokens cannot change components under TS
                return verdict;
            }
        }
        verdict.reachable = true;
        ReconfSequence witness{Rule::TS, {}};
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (src_in[c] < 0) continue;
            auto path = detail::slide_path(inst.graph, src_in[c], dst_in[c]);
            witness.moves.insert(witness.moves.end(), path.begin(), path.end());
        }
        verdict.witness = std::move(witness);
        return verdict;
    }

    // TJ: always reachable. Settle components holding both a token and a
    // target first, then ferry surplus tokens into empty target components.
    verdict.reachable = true;
    ReconfSequence witness{Rule::TJ, {}};
    std::vector<int> surplus, deficit;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (src_in[c] >= 0 && dst_in[c] >= 0) {
            if (src_in[c] != dst_in[c]) witness.moves.push_back(Move{src_in[c], dst_in[c]});
        } else if (src_in[c] >= 0) {
            surplus.push_back(src_in[c]);
        } else if (dst_in[c] >= 0) {
            deficit.push_back(dst_in[c]);
        }
    }
    for (std::size_t i = 0; i < surplus.size(); ++i)
        witness.moves.push_back(Move{surplus[i], deficit[i]});
    verdict.witness = std::move(witness);
    return verdict;
}

// On split graphs at d = 3 under TS, a component with two or more tokens is
// frozen: any slide lands in the clique, within distance two of another
// token. Components are solved independently.
inline std::optional<Verdict> decide_split_ts_d3(const DdisInstance& inst) {
    if (inst.rule != Rule::TS || inst.d != 3) return std::nullopt;
    if (!is_split(inst.graph)) return std::nullopt;

    Verdict verdict;
    verdict.decider = DeciderTag::SplitTsD3;
    if (inst.size_mismatch()) {
        verdict.reachable = false;
        return verdict;
    }
    auto comps = components(inst.graph);
    auto comp_of = detail::component_of(inst.graph);
    std::vector<std::vector<int>> src_in(comps.size()), dst_in(comps.size());
    for (int v : inst.source) src_in[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])].push_back(v);
    for (int v : inst.target) dst_in[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])].push_back(v);

    ReconfSequence witness{Rule::TS, {}};
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (src_in[c].size() != dst_in[c].size()) {
            verdict.reachable = false;
            return verdict;
        }
        if (src_in[c].size() >= 2) {
            if (src_in[c] != dst_in[c]) {
                verdict.reachable = false;
                return verdict;
            }
        } else if (src_in[c].size() == 1 && src_in[c] != dst_in[c]) {
            auto path = detail::slide_path(inst.graph, src_in[c][0], dst_in[c][0]);
            witness.moves.insert(witness.moves.end(), path.begin(), path.end());
        }
    }
    verdict.reachable = true;
    verdict.witness = std::move(witness);
    return verdict;
}

using IsrTjBackend = std::function<Verdict(const DdisInstance&)>;

// Under TJ, the instance on G at distance d is equivalent to the instance on
// G^{d-1} at distance 2; witness moves carry back verbatim since jumps
// ignore edges. The backend solves the power instance and defaults to the
// exact engine.
inline std::optional<Verdict> decide_tj_via_power(const DdisInstance& inst,
                                                  const IsrTjBackend& backend = {}) {
    if (inst.rule != Rule::TJ) return std::nullopt;
    Verdict verdict;
    verdict.decider = DeciderTag::TjPower;
    if (inst.size_mismatch()) {
        verdict.reachable = false;
        return verdict;
    }
    DdisInstance power_inst = make_instance(graph_power(inst.graph, inst.d - 1), 2, Rule::TJ,
                                            inst.source, inst.target);
    Verdict backend_verdict =
        backend ? backend(power_inst) : solve_exact(power_inst, true, kDefaultStateBudget);
    verdict.reachable = backend_verdict.reachable;
    verdict.states_explored = backend_verdict.states_explored;
    if (backend_verdict.witness) verdict.witness = ReconfSequence{Rule::TJ, backend_verdict.witness->moves};
    return verdict;
}

struct DeciderReport {
    Verdict verdict;
    std::vector<DeciderTag> applicable_rules_tried;
};

// Routes an instance to the cheapest applicable decider, exact-engine
// fallback last. First applicable decider wins.
inline DeciderReport dispatch(const DdisInstance& inst, bool want_witness = true,
                              std::int64_t state_budget = kDefaultStateBudget) {
    DeciderReport report;
    if (inst.size_mismatch()) {
        report.applicable_rules_tried.push_back(DeciderTag::SizeMismatch);
        report.verdict.reachable = false;
        report.verdict.decider = DeciderTag::SizeMismatch;
        return report;
    }
    report.applicable_rules_tried.push_back(DeciderTag::BoundedDiameter);
    if (auto v = decide_bounded_diameter(inst)) {
        report.verdict = std::move(*v);
        return report;
    }
    report.applicable_rules_tried.pop_back();
    report.applicable_rules_tried.push_back(DeciderTag::SplitTsD3);
    if (auto v = decide_split_ts_d3(inst)) {
        report.verdict = std::move(*v);
        return report;
    }
    report.applicable_rules_tried.pop_back();
    if (inst.rule == Rule::TJ) {
        report.applicable_rules_tried.push_back(DeciderTag::TjPower);
        auto backend = [&](const DdisInstance& power_inst) {
            return solve_exact(power_inst, want_witness, state_budget);
        };
        report.verdict = std::move(*decide_tj_via_power(inst, backend));
        return report;
    }
    report.applicable_rules_tried.push_back(DeciderTag::Exact);
    report.verdict = solve_exact(inst, want_witness, state_budget);
    return report;
}

}  // namespace ddisr

#endif
