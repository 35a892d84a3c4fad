#ifndef DDISR_VERIFY_HPP
#define DDISR_VERIFY_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "ddisr/deciders.hpp"
#include "ddisr/engine.hpp"
#include "ddisr/format.hpp"
#include "ddisr/generators.hpp"
#include "ddisr/ncl.hpp"
#include "ddisr/recognition.hpp"
#include "ddisr/reductions.hpp"
#include "ddisr/rigidity.hpp"
#include "ddisr/sat.hpp"
#include "ddisr/spr.hpp"

namespace ddisr {

// Outcome of one verification sweep. Any failure text includes a serialized
// counterexample so the run can be replayed by hand.
struct VerifyReport {
    std::string kind;
    std::uint64_t seed = 0;
    int trials = 0;
    int agreements = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty() && trials > 0; }

    void record(bool agreed, const std::string& failure_text) {
        ++trials;
        if (agreed) ++agreements;
        else failures.push_back(failure_text);
    }

    std::string text() const {
        std::ostringstream out;
        out << "verify " << kind << "\n";
        out << "seed: " << seed << "\n";
        out << "trials: " << trials << "\n";
        out << "agreements: " << agreements << "\n";
        out << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : failures) out << "--- failure ---\n" << f << "\n";
        return out.str();
    }
};

// Witness integrity for a YES verdict: the witness must exist, replay
// cleanly, and (optionally, for small state spaces) be shortest.
inline std::string check_verdict(const DdisInstance& inst, const Verdict& verdict,
                                 bool require_shortest = false) {
    if (!verdict.reachable) return {};
    if (!verdict.witness) return "YES verdict without witness";
    if (auto violation = validate_sequence(inst, *verdict.witness))
        return "witness rejected at move " + std::to_string(violation->index) + ": " +
               violation->reason;
    if (require_shortest) {
        // independent shortest-length computation: full BFS with no early exit
        std::vector<TokenSet> states{inst.source};
        std::vector<std::int64_t> dist{0};
        std::unordered_map<TokenSet, std::int64_t, detail::TokenSetHash> index;
        index.emplace(inst.source, 0);
        std::int64_t target_dist = -1;
        for (std::size_t head = 0; head < states.size(); ++head) {
            TokenSet current = states[head];
            if (current == inst.target) target_dist = dist[head];
            for (int from : current) {
                for (int to : detail::legal_destinations(inst.graph, inst.d, inst.rule, current, from)) {
                    TokenSet next;
                    for (int v : current)
                        if (v != from) next.push_back(v);
                    next.insert(std::upper_bound(next.begin(), next.end(), to), to);
                    if (index.try_emplace(next, static_cast<std::int64_t>(states.size())).second) {
                        states.push_back(std::move(next));
                        dist.push_back(dist[head] + 1);
                    }
                }
            }
        }
        if (target_dist < 0) return "witnessed YES but target unreachable in full search";
        if (static_cast<std::int64_t>(verdict.witness->moves.size()) != target_dist)
            return "witness length " + std::to_string(verdict.witness->moves.size()) +
                   " differs from shortest " + std::to_string(target_dist);
    }
    return {};
}

namespace detail {

inline std::string disagreement_text(const DdisInstance& inst, const std::string& note) {
    return note + "\n" + serialize_instance(inst);
}

}  // namespace detail

// Decider soundness: dispatch verdict equals the exact engine's on random
// instances, and YES witnesses replay.
inline VerifyReport verify_dispatch(int max_n, int trials, const std::vector<int>& d_list,
                                    std::uint64_t seed) {
    VerifyReport report;
    report.kind = "dispatch";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    std::uniform_int_distribution<int> pick_k(1, 3);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    std::bernoulli_distribution coin(0.5);
    while (report.trials < trials) {
        Graph g = random_graph(pick_n(rng), 0.3, rng);
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        auto pair = random_ddis_pair(g, d, pick_k(rng), rng);
        if (!pair) continue;
        Rule rule = coin(rng) ? Rule::TS : Rule::TJ;
        DdisInstance inst = make_instance(g, d, rule, pair->first, pair->second);
        Verdict routed = dispatch(inst).verdict;
        Verdict exact = solve_exact(inst);
        std::string problem;
        if (routed.reachable != exact.reachable)
            problem = "dispatch (" + to_string(routed.decider) + ") disagrees with exact";
        else
            problem = check_verdict(inst, routed);
        report.record(problem.empty(), detail::disagreement_text(inst, problem));
    }
    return report;
}

inline VerifyReport verify_split_ts_d3(int max_n, int trials, std::uint64_t seed) {
    VerifyReport report;
    report.kind = "split-ts-d3";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_clique(1, std::max(1, max_n - 2));
    std::uniform_int_distribution<int> pick_k(1, 3);
    while (report.trials < trials) {
        int clique = pick_clique(rng);
        int independent = std::max(1, max_n - clique);
        Graph g = random_split_graph(clique, independent, 0.4, rng);
        auto pair = random_ddis_pair(g, 3, pick_k(rng), rng);
        if (!pair) continue;
        DdisInstance inst = make_instance(g, 3, Rule::TS, pair->first, pair->second);
        auto routed = decide_split_ts_d3(inst);
        if (!routed) {
            report.record(false, detail::disagreement_text(inst, "decider not applicable on a split graph"));
            continue;
        }
        Verdict exact = solve_exact(inst);
        std::string problem;
        if (routed->reachable != exact.reachable) problem = "split decider disagrees with exact";
        else problem = check_verdict(inst, *routed);
        report.record(problem.empty(), detail::disagreement_text(inst, problem));
    }
    return report;
}

inline VerifyReport verify_bounded_diameter(int max_n, int trials, std::uint64_t seed) {
    VerifyReport report;
    report.kind = "bounded-diameter";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    std::uniform_int_distribution<int> pick_d(3, 5);
    std::bernoulli_distribution coin(0.5);
    while (report.trials < trials) {
        Graph g = random_small_diameter_graph(pick_n(rng), 0.3, rng);
        int d = pick_d(rng);
        auto pair = random_ddis_pair(g, d, 1, rng);
        if (!pair) continue;
        Rule rule = coin(rng) ? Rule::TS : Rule::TJ;
        DdisInstance inst = make_instance(g, d, rule, pair->first, pair->second);
        auto routed = decide_bounded_diameter(inst);
        if (!routed) {
            report.record(false, detail::disagreement_text(inst, "decider not applicable at d >= diameter+1"));
            continue;
        }
        Verdict exact = solve_exact(inst);
        std::string problem;
        if (routed->reachable != exact.reachable) problem = "bounded-diameter decider disagrees with exact";
        else problem = check_verdict(inst, *routed);
        report.record(problem.empty(), detail::disagreement_text(inst, problem));
    }
    return report;
}

inline VerifyReport verify_power_tj(int max_n, int trials, const std::vector<int>& d_list,
                                    std::uint64_t seed) {
    VerifyReport report;
    report.kind = "power-tj";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    std::uniform_int_distribution<int> pick_k(1, 3);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    while (report.trials < trials) {
        Graph g = random_graph(pick_n(rng), 0.3, rng);
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        auto pair = random_ddis_pair(g, d, pick_k(rng), rng);
        if (!pair) continue;
        DdisInstance inst = make_instance(g, d, Rule::TJ, pair->first, pair->second);
        Verdict routed = *decide_tj_via_power(inst);
        Verdict exact = solve_exact(inst);
        std::string problem;
        if (routed.reachable != exact.reachable) problem = "power reduction disagrees with direct solve";
        else problem = check_verdict(inst, routed);
        report.record(problem.empty(), detail::disagreement_text(inst, problem));
    }
    return report;
}

// Tree rigidity characterization against the labeled-search oracle, per token.
inline VerifyReport verify_rigid(int max_n, int trials, const std::vector<int>& d_list,
                                 std::uint64_t seed) {
    VerifyReport report;
    report.kind = "rigid";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_int_distribution<int> pick_k(1, 3);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    while (report.trials < trials) {
        Graph tree = random_tree(pick_n(rng), rng);
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        auto tokens = random_ddis(tree, d, std::min(pick_k(rng), tree.vertex_count()), rng);
        if (!tokens) continue;
        TokenSet characterized = rigid_set(tree, *tokens, d).rigid;
        TokenSet oracle = rigid_oracle(tree, *tokens, d);
        std::ostringstream note;
        if (characterized != oracle) {
            note << "rigid set mismatch: characterization {";
            for (int v : characterized) note << " " << v;
            note << " } vs oracle {";
            for (int v : oracle) note << " " << v;
            note << " }\n";
            note << serialize_instance(DdisInstance{tree, d, Rule::TS, *tokens, *tokens});
        }
        report.record(characterized == oracle, note.str());
    }
    return report;
}

// Reduction sweeps: run the source-problem oracle and the exact engine on the
// constructed instance; any verdict disagreement or structural violation
// fails the trial.

inline VerifyReport verify_chordal_odd(int max_n, int trials, const std::vector<int>& d_list,
                                       std::uint64_t seed) {
    VerifyReport report;
    report.kind = "chordal-odd";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(3, max_n);
    std::uniform_int_distribution<int> pick_k(2, 3);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    while (report.trials < trials) {
        Graph g = random_graph(pick_n(rng), 0.35, rng);
        auto pair = random_ddis_pair(g, 2, pick_k(rng), rng);
        if (!pair) continue;
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        DdisInstance source_inst = make_instance(g, 2, Rule::TJ, pair->first, pair->second);
        ReductionOutput red = reduce_isr_to_chordal_odd(g, pair->first, pair->second, d);

        std::string problem;
        if (!is_chordal(red.instance.graph)) problem = "output graph is not chordal";
        if (problem.empty() && d == 3 && !is_split(red.instance.graph))
            problem = "d=3 output graph is not split";
        if (problem.empty()) {
            // mapped pairs at source distance 2 must land at output distance d
            DistanceMatrix dist(g);
            for (int u = 0; u < g.vertex_count() && problem.empty(); ++u)
                for (int v = u + 1; v < g.vertex_count(); ++v) {
                    if (dist(u, v) != 2) continue;
                    int fu = red.vertex_map.at("v:" + std::to_string(u));
                    int fv = red.vertex_map.at("v:" + std::to_string(v));
                    auto out_dist = distances_from(red.instance.graph, fu);
                    if (out_dist[static_cast<std::size_t>(fv)] != d) {
                        problem = "mapped distance-2 pair not at distance d";
                        break;
                    }
                }
        }
        Verdict source_v = solve_exact(source_inst);
        Verdict reduced_v = solve_exact(red.instance);
        if (problem.empty() && source_v.reachable != reduced_v.reachable)
            problem = "reduction changes the verdict";
        if (problem.empty() && reduced_v.reachable) {
            // round-trip: normalized output witness maps back through f^{-1}
            ReconfSequence normalized =
                normalize_chordal_witness(g, red, *reduced_v.witness);
            if (validate_sequence(red.instance, normalized))
                problem = "normalized witness no longer replays";
            else if (validate_sequence(source_inst, map_back_chordal_witness(g, red, normalized)))
                problem = "mapped-back witness rejected on the source instance";
        }
        report.record(problem.empty(), detail::disagreement_text(red.instance, problem));
    }
    return report;
}

inline VerifyReport verify_general_tj(int max_n, int trials, const std::vector<int>& d_list,
                                      std::uint64_t seed) {
    VerifyReport report;
    report.kind = "general-tj";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(3, max_n);
    std::uniform_int_distribution<int> pick_k(1, 3);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    while (report.trials < trials) {
        Graph g = random_graph(pick_n(rng), 0.35, rng);
        auto pair = random_ddis_pair(g, 2, pick_k(rng), rng);
        if (!pair) continue;
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        DdisInstance source_inst = make_instance(g, 2, Rule::TJ, pair->first, pair->second);
        ReductionOutput red = reduce_isr_to_general_tj(g, pair->first, pair->second, d);

        std::string problem;
        {
            // distance profile: edges close, non-edges far, new vertices near all
            DistanceMatrix dist(red.instance.graph);
            for (int u = 0; u < g.vertex_count() && problem.empty(); ++u)
                for (int v = u + 1; v < g.vertex_count(); ++v) {
                    bool edge = g.has_edge(u, v);
                    int out_d = dist(u, v);
                    if (edge && !(is_finite_distance(out_d) && out_d <= d - 1)) {
                        problem = "edge of the source graph mapped too far apart";
                        break;
                    }
                    if (!edge && !distance_at_least(out_d, d)) {
                        problem = "non-edge of the source graph mapped too close";
                        break;
                    }
                }
            for (int z : red.new_vertices) {
                if (!problem.empty()) break;
                for (int v = 0; v < red.instance.graph.vertex_count(); ++v) {
                    if (v == z) continue;
                    // vertices isolated in the source lie on no replaced edge
                    // and stay in their own component
                    if (v < g.vertex_count() && g.degree(v) == 0) continue;
                    int out_d = dist(z, v);
                    if (!(is_finite_distance(out_d) && out_d <= d - 1)) {
                        problem = "new vertex farther than d-1 from some vertex";
                        break;
                    }
                }
            }
        }
        Verdict source_v = solve_exact(source_inst);
        Verdict reduced_v = solve_exact(red.instance);
        if (problem.empty() && source_v.reachable != reduced_v.reachable)
            problem = "reduction changes the verdict";
        if (problem.empty() && source_v.reachable) {
            // witnesses carry over verbatim: token sets are untouched
            ReconfSequence carried{Rule::TJ, source_v.witness->moves};
            if (validate_sequence(red.instance, carried))
                problem = "source witness rejected on the constructed instance";
        }
        report.record(problem.empty(), detail::disagreement_text(red.instance, problem));
    }
    return report;
}

inline VerifyReport verify_3sat(int trials, const std::vector<int>& d_list, std::uint64_t seed) {
    VerifyReport report;
    report.kind = "3sat";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_vars(1, 3);
    std::uniform_int_distribution<int> pick_clauses(1, 3);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    std::bernoulli_distribution coin(0.5);
    while (report.trials < trials) {
        Cnf3 f;
        f.variable_count = pick_vars(rng);
        int m = pick_clauses(rng);
        std::uniform_int_distribution<int> pick_var(0, f.variable_count - 1);
        std::uniform_int_distribution<int> pick_len(1, 3);
        for (int j = 0; j < m; ++j) {
            std::vector<Literal> clause;
            int len = pick_len(rng);
            std::vector<int> used;
            for (int t = 0; t < len; ++t) {
                int var = pick_var(rng);
                if (std::find(used.begin(), used.end(), var) != used.end()) continue;
                used.push_back(var);
                clause.push_back(Literal{var, coin(rng)});
            }
            f.clauses.push_back(std::move(clause));
        }
        auto sats = satisfying_assignments(f);
        if (sats.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick_a(0, sats.size() - 1);
        Assignment a = sats[pick_a(rng)];
        Assignment b = sats[pick_a(rng)];
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        ReductionOutput red = reduce_3satr(f, a, b, d);
        bool oracle = sat3_reconfig_bruteforce(f, a, b);

        std::string problem;
        if (red.instance.source.size() !=
            static_cast<std::size_t>(f.variable_count) + f.clauses.size())
            problem = "token set size differs from n+m";
        Verdict ts_v = solve_exact(red.instance);
        DdisInstance tj_inst = red.instance;
        tj_inst.rule = Rule::TJ;
        Verdict tj_v = solve_exact(tj_inst);
        if (problem.empty() && (ts_v.reachable != oracle || tj_v.reachable != oracle))
            problem = "constructed instance disagrees with assignment-flip search";
        if (problem.empty()) problem = check_verdict(red.instance, ts_v);
        report.record(problem.empty(), detail::disagreement_text(red.instance, problem));
    }
    return report;
}

inline VerifyReport verify_spr(int max_n, int trials, const std::vector<int>& d_list,
                               std::uint64_t seed) {
    VerifyReport report;
    report.kind = "spr";
    report.seed = seed;
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_n(4, max_n);
    std::uniform_int_distribution<int> pick_d(0, static_cast<int>(d_list.size()) - 1);
    while (report.trials < trials) {
        int n = pick_n(rng);
        Graph g = random_connected_graph(n, n, rng);
        std::uniform_int_distribution<int> pick_v(0, n - 1);
        int u = pick_v(rng);
        int v = pick_v(rng);
        auto dist = distances_from(g, u);
        if (u == v || dist[static_cast<std::size_t>(v)] < 2) continue;
        auto paths = detail::all_shortest_paths(g, u, v);
        if (paths.size() < 2 || paths.size() > 200) continue;
        std::uniform_int_distribution<std::size_t> pick_p(0, paths.size() - 1);
        SprInstance inst{g, u, v, paths[pick_p(rng)], paths[pick_p(rng)]};
        bool oracle = spr_bruteforce(inst);
        int d = d_list[static_cast<std::size_t>(pick_d(rng))];
        ReductionOutput red = reduce_spr_to_perfect(inst, d);

        std::string problem;
        Verdict ts_v = solve_exact(red.instance);
        DdisInstance tj_inst = red.instance;
        tj_inst.rule = Rule::TJ;
        Verdict tj_v = solve_exact(tj_inst);
        if (ts_v.reachable != oracle || tj_v.reachable != oracle)
            problem = "constructed instance disagrees with shortest-path search";
        if (problem.empty()) problem = check_verdict(red.instance, ts_v);
        report.record(problem.empty(), detail::disagreement_text(red.instance, problem));
    }
    return report;
}

namespace detail {

// Small closed machines for compilation sweeps. Closed machines have even
// order (the degree sum is 3n), so the smallest is the two-OR machine.
inline std::vector<NclMachine> ncl_test_machines() {
    std::vector<NclMachine> machines;
    {
        // two OR vertices joined by three parallel weight-2 edges
        NclMachine m;
        m.vertex_types = {NclVertexType::Or, NclVertexType::Or};
        m.edges = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
        machines.push_back(std::move(m));
    }
    {
        // two AND vertices joined by two weight-1 edges and one weight-2 edge
        NclMachine m;
        m.vertex_types = {NclVertexType::And, NclVertexType::And};
        m.edges = {{0, 1, 1}, {0, 1, 1}, {0, 1, 2}};
        machines.push_back(std::move(m));
    }
    {
        // two ANDs sharing a double weight-1 edge, each tied to an OR by a
        // weight-2 edge; the ORs share a double weight-2 edge
        NclMachine m;
        m.vertex_types = {NclVertexType::And, NclVertexType::And, NclVertexType::Or,
                          NclVertexType::Or};
        m.edges = {{0, 1, 1}, {0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}, {2, 3, 2}};
        machines.push_back(std::move(m));
    }
    return machines;
}

inline std::vector<NclConfig> valid_configs(const NclMachine& m) {
    std::vector<NclConfig> out;
    for (std::uint32_t mask = 0; mask < (1u << m.edge_count()); ++mask) {
        NclConfig c = config_from_mask(m, mask);
        if (config_valid(m, c)) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace detail

inline VerifyReport verify_ncl(int trials, int d, std::uint64_t seed) {
    VerifyReport report;
    report.kind = "ncl";
    report.seed = seed;
    Rng rng(seed);
    auto machines = detail::ncl_test_machines();
    std::uniform_int_distribution<std::size_t> pick_m(0, machines.size() - 1);
    while (report.trials < trials) {
        const NclMachine& m = machines[pick_m(rng)];
        auto configs = detail::valid_configs(m);
        std::uniform_int_distribution<std::size_t> pick_c(0, configs.size() - 1);
        const NclConfig& s = configs[pick_c(rng)];
        const NclConfig& t = configs[pick_c(rng)];
        bool oracle = ncl_bruteforce(m, s, t);
        NclCompilation comp = compile_ncl(m, s, t, d);

        std::string problem;
        Verdict ts_v = solve_exact(comp.output.instance);
        DdisInstance tj_inst = comp.output.instance;
        tj_inst.rule = Rule::TJ;
        Verdict tj_v = solve_exact(tj_inst);
        if (ts_v.reachable != oracle || tj_v.reachable != oracle)
            problem = "compiled instance disagrees with orientation-flip search";
        if (problem.empty()) problem = check_verdict(comp.output.instance, ts_v);
        report.record(problem.empty(), detail::disagreement_text(comp.output.instance, problem));
    }
    return report;
}

}  // namespace ddisr

#endif
