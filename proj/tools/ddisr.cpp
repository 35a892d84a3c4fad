#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ddisr/deciders.hpp"
#include "ddisr/format.hpp"
#include "ddisr/ncl.hpp"
#include "ddisr/reductions.hpp"
#include "ddisr/rigidity.hpp"
#include "ddisr/sat.hpp"
#include "ddisr/spr.hpp"
#include "ddisr/verify.hpp"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::int64_t budget_from_env() {
    const char* env = std::getenv("DDISR_STATE_BUDGET");
    if (!env) return ddisr::kDefaultStateBudget;
    return std::stoll(env);
}

std::string vertex_map_sidecar(const ddisr::ReductionOutput& red) {
    std::ostringstream out;
    for (const auto& [key, id] : red.vertex_map) out << key << " " << id << "\n";
    for (int v : red.new_vertices) out << "new " << v << "\n";
    return out.str();
}

void emit_reduction(const ddisr::ReductionOutput& red, const std::string& output) {
    if (output.empty()) {
        std::cout << ddisr::serialize_instance(red.instance);
        return;
    }
    write_file(output, ddisr::serialize_instance(red.instance));
    write_file(output + ".map", vertex_map_sidecar(red));
    std::cerr << "wrote " << output << " and " << output << ".map\n";
}

int run(int argc, char** argv) {
    using namespace ddisr;

    CLI::App app{"distance-d independent set reconfiguration toolkit"};
    app.require_subcommand(1);
    int threads = 1;  // accepted for compatibility; the engine is sequential
    app.add_option("--threads", threads, "worker threads (results are identical for any value)");

    std::int64_t budget = budget_from_env();

    // solve
    auto* solve = app.add_subcommand("solve", "decide an instance file");
    std::string solve_path;
    bool no_witness = false;
    bool exact_only = false;
    solve->add_option("file", solve_path, "instance file")->required();
    solve->add_flag("--no-witness", no_witness, "suppress the move list");
    solve->add_flag("--exact", exact_only, "skip the polynomial deciders");
    solve->add_option("--budget", budget, "state budget for the search engine");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "construct an instance from a source problem");
    std::string reduce_kind, reduce_path, reduce_output;
    int reduce_d = 3;
    std::uint32_t from_assignment = 0, to_assignment = 0;
    reduce->add_option("kind", reduce_kind, "chordal-odd | general-tj | 3sat | spr | ncl")
        ->required();
    reduce->add_option("file", reduce_path, "source problem file")->required();
    reduce->add_option("--d", reduce_d, "distance parameter of the output");
    reduce->add_option("--output", reduce_output, "output path (vertex map goes to <path>.map)");
    reduce->add_option("--from", from_assignment, "source assignment bitmask (3sat)");
    reduce->add_option("--to", to_assignment, "target assignment bitmask (3sat)");

    // gadget
    auto* gadget = app.add_subcommand("gadget", "emit a fixed construction");
    std::string gadget_name, gadget_output;
    int gadget_d = 3, gadget_k = 2;
    gadget->add_option("name", gadget_name, "spider | ts-power | ncl-and | ncl-or")->required();
    gadget->add_option("--d", gadget_d, "distance parameter");
    gadget->add_option("--k", gadget_k, "token count (ts-power)");
    gadget->add_option("--output", gadget_output, "output path");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized cross-checking sweeps");
    std::string verify_kind;
    int verify_trials = 100, verify_n = 7;
    std::vector<int> verify_d{3};
    std::uint64_t verify_seed = 1;
    verify
        ->add_option("kind", verify_kind,
                     "dispatch | split-ts-d3 | bounded-diameter | power-tj | rigid | "
                     "chordal-odd | general-tj | 3sat | spr | ncl")
        ->required();
    verify->add_option("--trials", verify_trials, "trial count");
    verify->add_option("--n", verify_n, "vertex bound");
    verify->add_option("--d", verify_d, "distance parameters")->delimiter(',');
    verify->add_option("--seed", verify_seed, "random seed");

    // rigid
    auto* rigid = app.add_subcommand("rigid", "rigid token analysis on a tree instance");
    std::string rigid_path;
    rigid->add_option("file", rigid_path, "instance file (graph must be a tree)")->required();

    // stats
    auto* stats = app.add_subcommand("stats", "reconfiguration-graph statistics");
    std::string stats_path;
    int stats_k = -1;
    stats->add_option("file", stats_path, "instance file")->required();
    stats->add_option("--k", stats_k, "token count (defaults to the source set size)");
    stats->add_option("--budget", budget, "state budget");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list all size-k distance-d sets");
    std::string enumerate_path;
    int enumerate_k = -1;
    enumerate->add_option("file", enumerate_path, "instance file")->required();
    enumerate->add_option("--k", enumerate_k, "set size (defaults to the source set size)");

    CLI11_PARSE(app, argc, argv);

    if (*solve) {
        DdisInstance inst = parse_instance(read_file(solve_path));
        Verdict verdict;
        if (exact_only) {
            verdict = solve_exact(inst, !no_witness, budget);
        } else {
            verdict = dispatch(inst, !no_witness, budget).verdict;
        }
        std::cout << render_verdict(verdict, !no_witness);
        std::cout << "decider: " << to_string(verdict.decider) << "\n";
        std::cout << "states: " << verdict.states_explored << "\n";
        return verdict.reachable ? kExitYes : kExitNo;
    }

    if (*reduce) {
        std::string text = read_file(reduce_path);
        if (reduce_kind == "chordal-odd" || reduce_kind == "general-tj") {
            DdisInstance src = parse_instance(text);
            if (src.d != 2) throw std::runtime_error("source instance must have d 2");
            ReductionOutput red =
                reduce_kind == "chordal-odd"
                    ? reduce_isr_to_chordal_odd(src.graph, src.source, src.target, reduce_d)
                    : reduce_isr_to_general_tj(src.graph, src.source, src.target, reduce_d);
            emit_reduction(red, reduce_output);
        } else if (reduce_kind == "3sat") {
            Cnf3 f = parse_cnf3(text);
            emit_reduction(reduce_3satr(f, from_assignment, to_assignment, reduce_d),
                           reduce_output);
        } else if (reduce_kind == "spr") {
            emit_reduction(reduce_spr_to_perfect(parse_spr(text), reduce_d), reduce_output);
        } else if (reduce_kind == "ncl") {
            NclProblem prob = parse_ncl(text);
            NclCompilation comp = compile_ncl(prob.machine, prob.source, prob.target, reduce_d);
            emit_reduction(comp.output, reduce_output);
        } else {
            throw std::runtime_error("unknown reduction kind '" + reduce_kind + "'");
        }
        return kExitYes;
    }

    if (*gadget) {
        DdisInstance inst;
        if (gadget_name == "spider") {
            inst = spider_instance(gadget_d);
        } else if (gadget_name == "ts-power") {
            TsPowerCounterexample ce = build_ts_power_counterexample(gadget_d, gadget_k);
            inst = make_instance(std::move(ce.graph), gadget_d, Rule::TS, ce.source, ce.target);
        } else if (gadget_name == "ncl-and" || gadget_name == "ncl-or") {
            // emitted as the canonical slide-in reachability question
            NclGadget gd = gadget_name == "ncl-and" ? ncl_and_gadget(gadget_d)
                                                    : ncl_or_gadget(gadget_d);
            TokenSet source{gd.ports[0].second, gd.ports[1].first};
            TokenSet target{gd.ports[0].first, gd.ports[1].first};
            if (gadget_name == "ncl-and") {
                source.push_back(gd.ports[2].first);
                target.push_back(gd.ports[2].second);
                target[1] = gd.ports[1].second;
            } else {
                source.push_back(gd.ports[2].second);
                target.push_back(gd.ports[2].second);
                source.push_back(gd.slots[2]);
                target.push_back(gd.slots[2]);
            }
            inst = make_instance(gd.graph, gadget_d, Rule::TS, std::move(source),
                                 std::move(target));
        } else {
            throw std::runtime_error("unknown gadget '" + gadget_name + "'");
        }
        std::string text = serialize_instance(inst);
        if (gadget_output.empty()) std::cout << text;
        else write_file(gadget_output, text);
        return kExitYes;
    }

    if (*verify) {
        VerifyReport report;
        if (verify_kind == "dispatch") report = verify_dispatch(verify_n, verify_trials, verify_d, verify_seed);
        else if (verify_kind == "split-ts-d3") report = verify_split_ts_d3(verify_n, verify_trials, verify_seed);
        else if (verify_kind == "bounded-diameter") report = verify_bounded_diameter(verify_n, verify_trials, verify_seed);
        else if (verify_kind == "power-tj") report = verify_power_tj(verify_n, verify_trials, verify_d, verify_seed);
        else if (verify_kind == "rigid") report = verify_rigid(verify_n, verify_trials, verify_d, verify_seed);
        else if (verify_kind == "chordal-odd") report = verify_chordal_odd(verify_n, verify_trials, verify_d, verify_seed);
        else if (verify_kind == "general-tj") report = verify_general_tj(verify_n, verify_trials, verify_d, verify_seed);
        else if (verify_kind == "3sat") report = verify_3sat(verify_trials, verify_d, verify_seed);
        else if (verify_kind == "spr") report = verify_spr(verify_n, verify_trials, verify_d, verify_seed);
        else if (verify_kind == "ncl") report = verify_ncl(verify_trials, verify_d.front(), verify_seed);
        else throw std::runtime_error("unknown verification kind '" + verify_kind + "'");
        std::cout << report.text();
        return report.ok() ? kExitYes : kExitNo;
    }

    if (*rigid) {
        DdisInstance inst = parse_instance(read_file(rigid_path));
        RigiditySet source_set = rigid_set(inst.graph, inst.source, inst.d);
        RigiditySet target_set = rigid_set(inst.graph, inst.target, inst.d);
        auto emit = [](const char* tag, const TokenSet& s) {
            std::cout << tag;
            for (int v : s) std::cout << " " << v;
            std::cout << "\n";
        };
        emit("rigid_source:", source_set.rigid);
        emit("rigid_target:", target_set.rigid);
        bool blocked = source_set.rigid != target_set.rigid;
        std::cout << "necessary-condition: " << (blocked ? "NO" : "inconclusive") << "\n";
        return blocked ? kExitNo : kExitYes;
    }

    if (*stats) {
        DdisInstance inst = parse_instance(read_file(stats_path));
        int k = stats_k >= 0 ? stats_k : static_cast<int>(inst.source.size());
        ReconfGraphStats s = reconf_graph_stats(inst.graph, inst.d, k, inst.rule, budget);
        std::cout << "states: " << s.state_count << "\n";
        std::cout << "edges: " << s.edge_count << "\n";
        std::cout << "components: " << s.component_count << "\n";
        std::cout << "largest-component: " << s.largest_component << "\n";
        return kExitYes;
    }

    if (*enumerate) {
        DdisInstance inst = parse_instance(read_file(enumerate_path));
        int k = enumerate_k >= 0 ? enumerate_k : static_cast<int>(inst.source.size());
        enumerate_ddis(inst.graph, inst.d, k, [](const TokenSet& s) {
            std::cout << "set";
            for (int v : s) std::cout << " " << v;
            std::cout << "\n";
        });
        return kExitYes;
    }

    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ddisr::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
