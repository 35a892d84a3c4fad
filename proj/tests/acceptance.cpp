// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion cross-checks a component against an independent
// oracle on generated families; YES verdicts produced along the way are
// funneled through a witness ledger and re-validated at the end.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ddisr/deciders.hpp"
#include "ddisr/engine.hpp"
#include "ddisr/generators.hpp"
#include "ddisr/ncl.hpp"
#include "ddisr/recognition.hpp"
#include "ddisr/reductions.hpp"
#include "ddisr/rigidity.hpp"
#include "ddisr/sat.hpp"
#include "ddisr/spr.hpp"
#include "ddisr/verify.hpp"

using namespace ddisr;

namespace {

constexpr std::uint64_t kSeed = 20260824;

struct WitnessLedger {
    int yes_checked = 0;
    std::vector<std::string> failures;
} ledger;

// solve and feed the witness ledger; shortest-witness verification kicks in
// on small state spaces
Verdict checked_solve(const DdisInstance& inst) {
    Verdict v = solve_exact(inst);
    if (v.reachable) {
        ++ledger.yes_checked;
        std::string problem = check_verdict(inst, v, v.states_explored <= 200);
        if (!problem.empty()) ledger.failures.push_back(problem);
    }
    return v;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, n - 1);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.vertex_count(), v + a.vertex_count());
    return g;
}

// ---------------------------------------------------------------------------
// fast unlabeled token-set search over graphs with at most 64 vertices,
// used where a criterion needs full component partitions of the state space

struct MaskSearch {
    const Graph& g;
    int d;
    Rule rule;
    std::vector<std::uint64_t> conflict;  // vertices within distance < d, self included

    MaskSearch(const Graph& graph, int dist, Rule r) : g(graph), d(dist), rule(r) {
        if (g.vertex_count() > 64) throw std::logic_error("mask search limited to 64 vertices");
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto row = distances_from_bounded(g, v, d - 1);
            std::uint64_t mask = 0;
            for (int u = 0; u < g.vertex_count(); ++u)
                if (is_finite_distance(row[static_cast<std::size_t>(u)])) mask |= 1ull << u;
            conflict.push_back(mask);
        }
    }

    std::uint64_t to_mask(const TokenSet& s) const {
        std::uint64_t mask = 0;
        for (int v : s) mask |= 1ull << v;
        return mask;
    }

    // component id per reachable state from the given roots
    std::map<std::uint64_t, int> components(const std::vector<std::uint64_t>& roots) const {
        std::map<std::uint64_t, int> comp;
        int next_comp = 0;
        for (std::uint64_t root : roots) {
            if (comp.count(root)) continue;
            int id = next_comp++;
            std::vector<std::uint64_t> stack{root};
            comp[root] = id;
            while (!stack.empty()) {
                std::uint64_t cur = stack.back();
                stack.pop_back();
                for (std::uint64_t bits = cur; bits;) {
                    int from = std::countr_zero(bits);
                    bits &= bits - 1;
                    std::uint64_t rest = cur & ~(1ull << from);
                    auto try_dest = [&](int to) {
                        if (cur & (1ull << to)) return;
                        if (rest & conflict[static_cast<std::size_t>(to)]) return;
                        std::uint64_t next = rest | (1ull << to);
                        if (comp.emplace(next, id).second) stack.push_back(next);
                    };
                    if (rule == Rule::TS) {
                        for (int to : g.neighbors(from)) try_dest(to);
                    } else {
                        for (int to = 0; to < g.vertex_count(); ++to)
                            if (to != from) try_dest(to);
                    }
                }
            }
        }
        return comp;
    }
};

// ---------------------------------------------------------------------------

bool criterion_power_equivalence(std::string& note) {
    Rng rng(kSeed);
    std::uniform_int_distribution<int> pick_n(1, 9);
    int checked = 0;
    for (int sample = 0; sample < 200; ++sample) {
        int n = pick_n(rng);
        Graph g = random_graph(n, 0.3, rng);
        for (int d = 2; d <= 5; ++d) {
            Graph power = graph_power(g, d - 1);
            // all token sets of size <= 3
            std::vector<TokenSet> sets{{}};
            for (int a = 0; a < n; ++a) {
                sets.push_back({a});
                for (int b = a + 1; b < n; ++b) {
                    sets.push_back({a, b});
                    for (int c = b + 1; c < n; ++c) sets.push_back({a, b, c});
                }
            }
            for (const TokenSet& s : sets) {
                bool direct = is_ddis(g, d, s);
                bool independent = true;
                for (std::size_t i = 0; i < s.size() && independent; ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        if (power.has_edge(s[i], s[j])) {
                            independent = false;
                            break;
                        }
                if (direct != independent) {
                    note = "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
                ++checked;
            }
        }
    }
    note = std::to_string(checked) + " set checks";
    return true;
}

bool criterion_tj_power_engine(std::string& note) {
    Rng rng(kSeed);
    std::uniform_int_distribution<int> pick_n(2, 8);
    std::uniform_int_distribution<int> pick_d(3, 5);
    std::uniform_int_distribution<int> pick_k(1, 3);
    int done = 0;
    while (done < 100) {
        Graph g = random_graph(pick_n(rng), 0.3, rng);
        int d = pick_d(rng);
        auto pair = random_ddis_pair(g, d, pick_k(rng), rng);
        if (!pair) continue;
        DdisInstance direct = make_instance(g, d, Rule::TJ, pair->first, pair->second);
        DdisInstance powered =
            make_instance(graph_power(g, d - 1), 2, Rule::TJ, pair->first, pair->second);
        if (checked_solve(direct).reachable != checked_solve(powered).reachable) {
            note = "verdicts diverge:\n" + serialize_instance(direct);
            return false;
        }
        ++done;
    }
    note = "100 instances";
    return true;
}

bool criterion_ts_power_counterexample(std::string& note) {
    for (auto [d, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
        TsPowerCounterexample ce = build_ts_power_counterexample(d, k);
        int expected = k * d + 2 * k * (k - 1) * (d - 2);
        if (ce.graph.vertex_count() != expected) {
            note = "vertex count off at d=" + std::to_string(d) + " k=" + std::to_string(k);
            return false;
        }
        DdisInstance direct = make_instance(ce.graph, d, Rule::TS, ce.source, ce.target);
        if (checked_solve(direct).reachable) {
            note = "instance is sliding-reachable on the base graph";
            return false;
        }
        DdisInstance powered =
            make_instance(graph_power(ce.graph, d - 1), 2, Rule::TS, ce.source, ce.target);
        Verdict v = checked_solve(powered);
        if (!v.reachable || !v.witness || static_cast<int>(v.witness->moves.size()) != k) {
            note = "power instance missing the length-k witness";
            return false;
        }
    }
    note = "4 parameter pairs";
    return true;
}

bool criterion_chordal_reduction(std::string& note) {
    ReductionOutput anchor = reduce_isr_to_chordal_odd(cycle_graph(5), {0, 2}, {1, 3}, 5);
    if (anchor.instance.graph.vertex_count() != 15) {
        note = "five-cycle anchor is not 15 vertices";
        return false;
    }
    VerifyReport report = verify_chordal_odd(6, 100, {3, 5}, kSeed);
    note = report.ok() ? "anchor + 100 sweep trials" : report.text();
    return report.ok();
}

bool criterion_split_decider(std::string& note) {
    Rng rng(kSeed);
    int graphs = 0, pairs = 0;
    while (graphs < 500) {
        std::uniform_int_distribution<int> pick_clique(1, 7);
        int clique = pick_clique(rng);
        std::uniform_int_distribution<int> pick_ind(1, 9 - std::min(clique, 8));
        Graph g = random_split_graph(clique, pick_ind(rng), 0.4, rng);
        ++graphs;
        for (int k = 1; k <= 3; ++k) {
            auto sets = collect_ddis(g, 3, k);
            for (const TokenSet& source : sets)
                for (const TokenSet& target : sets) {
                    DdisInstance inst = make_instance(g, 3, Rule::TS, source, target);
                    auto routed = decide_split_ts_d3(inst);
                    if (!routed) {
                        note = "decider refused a split instance";
                        return false;
                    }
                    bool exact = checked_solve(inst).reachable;
                    if (routed->reachable != exact) {
                        note = "split decider wrong:\n" + serialize_instance(inst);
                        return false;
                    }
                    std::string witness_problem = check_verdict(inst, *routed);
                    if (!witness_problem.empty()) {
                        note = witness_problem;
                        return false;
                    }
                    ++pairs;
                }
        }
    }
    note = std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " endpoint pairs";
    return true;
}

bool criterion_bounded_diameter(std::string& note) {
    Rng rng(kSeed);
    std::bernoulli_distribution coin(0.5);
    int done = 0;
    while (done < 300) {
        std::uniform_int_distribution<int> pick_n(2, 5);
        Graph part_a = coin(rng) ? random_small_diameter_graph(pick_n(rng), 0.4, rng)
                                 : random_split_graph(2, pick_n(rng) - 1, 0.5, rng);
        Graph part_b = random_small_diameter_graph(pick_n(rng), 0.4, rng);
        Graph g = coin(rng) ? disjoint_union(part_a, part_b) : part_a;
        int max_diam = 0;
        for (int diam : component_diameters(g)) max_diam = std::max(max_diam, diam);
        int d = max_diam + 1 + (coin(rng) ? 1 : 0);
        if (d < 2) d = 2;
        std::uniform_int_distribution<int> pick_k(1, 2);
        auto pair = random_ddis_pair(g, d, pick_k(rng), rng);
        if (!pair) continue;
        for (Rule rule : {Rule::TS, Rule::TJ}) {
            DdisInstance inst = make_instance(g, d, rule, pair->first, pair->second);
            auto routed = decide_bounded_diameter(inst);
            if (!routed) {
                note = "decider refused an applicable instance";
                return false;
            }
            if (routed->reachable != checked_solve(inst).reachable) {
                note = "bounded-diameter decider wrong:\n" + serialize_instance(inst);
                return false;
            }
            std::string witness_problem = check_verdict(inst, *routed);
            if (!witness_problem.empty()) {
                note = witness_problem;
                return false;
            }
        }
        ++done;
    }
    note = "300 applicable instances, both rules";
    return true;
}

bool criterion_general_tj_reduction(std::string& note) {
    Graph c5 = cycle_graph(5);
    if (reduce_isr_to_general_tj(c5, {0, 2}, {1, 3}, 3).instance.graph.vertex_count() != 10 ||
        reduce_isr_to_general_tj(c5, {0, 2}, {1, 3}, 4).instance.graph.vertex_count() != 16) {
        note = "five-cycle anchors are not 10/16 vertices";
        return false;
    }
    VerifyReport report = verify_general_tj(6, 100, {3, 4}, kSeed);
    note = report.ok() ? "anchors + 100 sweep trials" : report.text();
    return report.ok();
}

bool criterion_3sat_reduction(std::string& note) {
    // every distinct formula (clause multiset) over <= 3 variables and <= 3
    // clauses; clause order is irrelevant to both sides of the equivalence
    std::vector<std::vector<Literal>> clauses;
    for (std::uint32_t vars = 1; vars < 8; ++vars) {
        std::vector<int> members;
        for (int v = 0; v < 3; ++v)
            if ((vars >> v) & 1u) members.push_back(v);
        for (std::uint32_t signs = 0; signs < (1u << members.size()); ++signs) {
            std::vector<Literal> clause;
            for (std::size_t i = 0; i < members.size(); ++i)
                clause.push_back(Literal{members[i], ((signs >> i) & 1u) != 0});
            clauses.push_back(std::move(clause));
        }
    }
    int total = static_cast<int>(clauses.size());
    int formulas = 0;
    long long pair_checks = 0;

    auto check_formula = [&](const std::vector<int>& picked) -> bool {
        Cnf3 f;
        f.variable_count = 3;
        for (int idx : picked) f.clauses.push_back(clauses[static_cast<std::size_t>(idx)]);
        auto sats = satisfying_assignments(f);
        ++formulas;
        if (sats.empty()) return true;
        // flip components on the assignment cube
        std::map<Assignment, int> flip_comp;
        int next = 0;
        for (Assignment a : sats) {
            if (flip_comp.count(a)) continue;
            int id = next++;
            std::vector<Assignment> stack{a};
            flip_comp[a] = id;
            while (!stack.empty()) {
                Assignment cur = stack.back();
                stack.pop_back();
                for (int bit = 0; bit < 3; ++bit) {
                    Assignment nxt = cur ^ (1u << bit);
                    if (satisfies(f, nxt) && !flip_comp.count(nxt)) {
                        flip_comp[nxt] = id;
                        stack.push_back(nxt);
                    }
                }
            }
        }
        for (int d : {3, 4}) {
            ReductionOutput base = reduce_3satr(f, sats.front(), sats.front(), d);
            if (base.instance.source.size() != 3 + f.clauses.size()) return false;
            std::vector<std::uint64_t> images;
            {
                MaskSearch probe(base.instance.graph, d, Rule::TS);
                for (Assignment a : sats)
                    images.push_back(
                        probe.to_mask(reduce_3satr(f, a, sats.front(), d).instance.source));
            }
            for (Rule rule : {Rule::TS, Rule::TJ}) {
                MaskSearch search(base.instance.graph, d, rule);
                auto comp = search.components(images);
                for (std::size_t i = 0; i < sats.size(); ++i)
                    for (std::size_t j = 0; j < sats.size(); ++j) {
                        bool flips = flip_comp.at(sats[i]) == flip_comp.at(sats[j]);
                        bool moves = comp.at(images[i]) == comp.at(images[j]);
                        ++pair_checks;
                        if (flips != moves) return false;
                    }
            }
        }
        return true;
    };

    for (int i = 0; i < total; ++i) {
        if (!check_formula({i})) {
            note = "single-clause formula diverges";
            return false;
        }
        for (int j = i; j < total; ++j) {
            if (!check_formula({i, j})) {
                note = "two-clause formula diverges";
                return false;
            }
            for (int k = j; k < total; ++k) {
                if (!check_formula({i, j, k})) {
                    note = "three-clause formula diverges";
                    return false;
                }
            }
        }
    }
    note = std::to_string(formulas) + " formulas, " + std::to_string(pair_checks) +
           " endpoint pairs";
    return true;
}

bool criterion_spr_reduction(std::string& note) {
    // anchor: d=2 adds nothing and layers stay cliques
    Graph c6 = cycle_graph(6);
    SprInstance fixed{c6, 0, 3, {0, 1, 2, 3}, {0, 5, 4, 3}};
    ReductionOutput flat = reduce_spr_to_perfect(fixed, 2);
    if (!flat.new_vertices.empty()) {
        note = "d=2 output gained vertices";
        return false;
    }
    // structural validator on sampled outputs: layers and subdivision cells
    // are cliques, inter-layer adjacency is complemented
    Rng rng(kSeed);
    for (int sample = 0; sample < 20; ++sample) {
        std::uniform_int_distribution<int> pick_n(4, 8);
        int n = pick_n(rng);
        Graph g = random_connected_graph(n, n, rng);
        std::uniform_int_distribution<int> pick_v(0, n - 1);
        int u = pick_v(rng), v = pick_v(rng);
        auto du = distances_from(g, u);
        if (u == v || du[static_cast<std::size_t>(v)] < 2) continue;
        auto paths = detail::all_shortest_paths(g, u, v);
        if (paths.empty()) continue;
        SprInstance inst{g, u, v, paths.front(), paths.back()};
        for (int d : {2, 3}) {
            ReductionOutput red = reduce_spr_to_perfect(inst, d);
            auto dv = distances_from(g, v);
            int k = du[static_cast<std::size_t>(v)];
            std::map<int, std::vector<int>> layer_of;  // output ids per layer
            std::map<int, int> back;                   // output id -> source id
            for (int x = 0; x < n; ++x) {
                auto it = red.vertex_map.find("v:" + std::to_string(x));
                if (it == red.vertex_map.end()) continue;
                layer_of[du[static_cast<std::size_t>(x)]].push_back(it->second);
                back[it->second] = x;
            }
            for (const auto& [layer, ids] : layer_of)
                for (std::size_t i = 0; i < ids.size(); ++i)
                    for (std::size_t j = i + 1; j < ids.size(); ++j)
                        if (!red.instance.graph.has_edge(ids[i], ids[j])) {
                            note = "layer is not a clique";
                            return false;
                        }
            // complemented adjacency between consecutive layers
            for (int i = 0; i + 1 <= k - 1 + 1 && i < k; ++i) {
                for (int a : layer_of[i])
                    for (int b : layer_of[i + 1]) {
                        bool source_edge = g.has_edge(back[a], back[b]);
                        auto dist_row = distances_from(red.instance.graph, a);
                        int out_dist = dist_row[static_cast<std::size_t>(b)];
                        bool linked = d == 2 ? out_dist == 1 : out_dist == d - 1;
                        if (source_edge == linked) {
                            note = "inter-layer adjacency is not complemented";
                            return false;
                        }
                    }
            }
            // subdivision cells are cliques
            std::map<std::pair<int, int>, std::vector<int>> cells;
            for (const auto& [key, id] : red.vertex_map) {
                if (key.rfind("cell:", 0) != 0) continue;
                auto colon = key.rfind(':');
                int j = std::stoi(key.substr(colon + 1));
                int a = red.vertex_map.at("v:" +
                                          std::to_string(back.count(id) ? back[id] : -1));
                (void)a;
                // cell key is cell:<a>-<b>:<j> with a in the lower layer
                auto dash = key.find('-', 5);
                int lower = std::stoi(key.substr(5, dash - 5));
                cells[{du[static_cast<std::size_t>(back[lower])], j}].push_back(id);
            }
            for (const auto& [cell, ids] : cells)
                for (std::size_t i = 0; i < ids.size(); ++i)
                    for (std::size_t j = i + 1; j < ids.size(); ++j)
                        if (!red.instance.graph.has_edge(ids[i], ids[j])) {
                            note = "subdivision cell is not a clique";
                            return false;
                        }
        }
    }
    VerifyReport report = verify_spr(8, 100, {2, 3}, kSeed);
    note = report.ok() ? "anchors + validators + 100 sweep trials" : report.text();
    return report.ok();
}

bool criterion_ncl(std::string& note) {
    // gadget-local semantics, exhaustively per d
    for (int d : {2, 3, 4}) {
        NclGadget gand = ncl_and_gadget(d);
        auto [in0, out0] = gand.ports[0];
        auto [in1, out1] = gand.ports[1];
        auto [in2, out2] = gand.ports[2];
        if (is_ddis(gand.graph, d, {in0, in1}) || is_ddis(gand.graph, d, {in0, in2}) ||
            !is_ddis(gand.graph, d, {in1, in2})) {
            note = "AND gadget exclusion pattern wrong at d=" + std::to_string(d);
            return false;
        }
        DdisInstance and_in = make_instance(gand.graph, d, Rule::TS, {out0, in1, in2},
                                            {in0, out1, out2});
        if (!checked_solve(and_in).reachable) {
            note = "AND gadget cannot slide in at d=" + std::to_string(d);
            return false;
        }
        NclGadget gor = ncl_or_gadget(d);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (is_ddis(gor.graph, d, {gor.ports[i].first, gor.slots[j]}) != (i != j)) {
                    note = "OR slot blocking wrong at d=" + std::to_string(d);
                    return false;
                }
        for (int z = 0; z < gor.graph.vertex_count(); ++z) {
            if (z == gor.ports[0].first || z == gor.ports[1].first || z == gor.ports[2].first)
                continue;
            if (is_ddis(gor.graph, d,
                        make_token_set({gor.ports[0].first, gor.ports[1].first,
                                        gor.ports[2].first, z}))) {
                note = "OR gadget admits all three ports in at d=" + std::to_string(d);
                return false;
            }
        }
        DdisInstance or_in = make_instance(
            gor.graph, d, Rule::TS,
            {gor.ports[0].second, gor.ports[1].first, gor.ports[2].second, gor.slots[2]},
            {gor.ports[0].first, gor.ports[1].first, gor.ports[2].second, gor.slots[2]});
        if (!checked_solve(or_in).reachable) {
            note = "OR gadget cannot slide in at d=" + std::to_string(d);
            return false;
        }
    }

    // compiled machines: every valid configuration pair, both rules, against
    // the orientation-flip search, via one component partition per machine
    for (const NclMachine& m : detail::ncl_test_machines()) {
        auto configs = detail::valid_configs(m);
        std::map<std::uint32_t, int> flip_comp;
        int next = 0;
        for (const NclConfig& c : configs) {
            std::uint32_t mask = detail::config_mask(m, c);
            if (flip_comp.count(mask)) continue;
            int id = next++;
            std::vector<std::uint32_t> stack{mask};
            flip_comp[mask] = id;
            while (!stack.empty()) {
                std::uint32_t cur = stack.back();
                stack.pop_back();
                for (int e = 0; e < m.edge_count(); ++e) {
                    std::uint32_t nxt = cur ^ (1u << e);
                    if (!config_valid(m, detail::config_from_mask(m, nxt))) continue;
                    if (!flip_comp.count(nxt)) {
                        flip_comp[nxt] = id;
                        stack.push_back(nxt);
                    }
                }
            }
        }
        NclCompilation base = compile_ncl(m, configs.front(), configs.front(), 3);
        for (int v = 0; v < base.output.instance.graph.vertex_count(); ++v)
            if (base.output.instance.graph.degree(v) > 3) {
                note = "compiled machine exceeds degree 3";
                return false;
            }
        std::vector<std::uint64_t> images;
        {
            MaskSearch probe(base.output.instance.graph, 3, Rule::TS);
            for (const NclConfig& c : configs)
                images.push_back(
                    probe.to_mask(compile_ncl(m, c, configs.front(), 3).output.instance.source));
        }
        for (Rule rule : {Rule::TS, Rule::TJ}) {
            MaskSearch search(base.output.instance.graph, 3, rule);
            auto comp = search.components(images);
            for (std::size_t i = 0; i < configs.size(); ++i)
                for (std::size_t j = 0; j < configs.size(); ++j) {
                    bool flips = flip_comp.at(detail::config_mask(m, configs[i])) ==
                                 flip_comp.at(detail::config_mask(m, configs[j]));
                    bool moves = comp.at(images[i]) == comp.at(images[j]);
                    if (flips != moves) {
                        note = "compiled machine diverges from the flip search";
                        return false;
                    }
                }
        }
    }
    note = "gadgets at d in {2,3,4}; all config pairs on the machine catalog";
    return true;
}

bool criterion_tree_rigidity(std::string& note) {
    Rng rng(kSeed);
    int trees = 0;
    long long sets = 0;
    while (trees < 1000) {
        std::uniform_int_distribution<int> pick_n(1, 12);
        Graph tree = random_tree(pick_n(rng), rng);
        ++trees;
        for (int d : {3, 4}) {
            for (int k = 1; k <= 3; ++k) {
                for (const TokenSet& tokens : collect_ddis(tree, d, k)) {
                    ++sets;
                    if (rigid_set(tree, tokens, d).rigid != rigid_oracle(tree, tokens, d)) {
                        note = "characterization disagrees with the oracle";
                        return false;
                    }
                }
            }
        }
    }
    for (int d : {3, 4, 5}) {
        DdisInstance inst = spider_instance(d);
        if (!rigid_set(inst.graph, inst.source, d).rigid.empty() ||
            !rigid_set(inst.graph, inst.target, d).rigid.empty()) {
            note = "spider rigid sets are not empty at d=" + std::to_string(d);
            return false;
        }
        if (checked_solve(inst).reachable) {
            note = "spider instance is reachable at d=" + std::to_string(d);
            return false;
        }
    }
    note = std::to_string(trees) + " trees, " + std::to_string(sets) +
           " token sets; spider regression at d in {3,4,5}";
    return true;
}

bool criterion_witness_integrity(std::string& note) {
    if (ledger.yes_checked == 0) {
        note = "no YES verdicts were recorded";
        return false;
    }
    if (!ledger.failures.empty()) {
        note = ledger.failures.front() + " (and " +
               std::to_string(ledger.failures.size() - 1) + " more)";
        return false;
    }
    note = std::to_string(ledger.yes_checked) + " YES verdicts replayed";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "distance-d sets match independence in the power graph", criterion_power_equivalence},
        {2, "jumping verdicts survive the power transformation", criterion_tj_power_engine},
        {3, "sliding counterexample to the power transformation", criterion_ts_power_counterexample},
        {4, "chordal target construction", criterion_chordal_reduction},
        {5, "split-graph d=3 sliding decider", criterion_split_decider},
        {6, "bounded-diameter decider", criterion_bounded_diameter},
        {7, "edge-stretching jumping construction", criterion_general_tj_reduction},
        {8, "assignment-flip construction", criterion_3sat_reduction},
        {9, "shortest-path layering construction", criterion_spr_reduction},
        {10, "constraint-logic gadgets and machines", criterion_ncl},
        {11, "tree rigidity characterization", criterion_tree_rigidity},
        {12, "witness integrity", criterion_witness_integrity},
    };

    bool all_pass = true;
    for (auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail_note;
        bool pass = false;
        try {
            pass = criterion.run(detail_note);
        } catch (const std::exception& e) {
            detail_note = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
             << criterion.name << " (" << elapsed.count() << "s)";
        if (!detail_note.empty()) line << " -- " << detail_note;
        std::cout << line.str() << "\n";
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
