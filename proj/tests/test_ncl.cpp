#include "doctest.h"

#include <queue>
#include <set>

#include "ddisr/ncl.hpp"
#include "ddisr/verify.hpp"

using namespace ddisr;

namespace {

// all labeled token placements reachable under TS
std::vector<std::vector<int>> labeled_states(const Graph& g, int d, const std::vector<int>& start) {
    std::vector<std::vector<int>> states{start};
    std::set<std::vector<int>> seen{start};
    for (std::size_t head = 0; head < states.size(); ++head) {
        std::vector<int> current = states[head];
        TokenSet occupied = make_token_set(current);
        for (std::size_t label = 0; label < current.size(); ++label) {
            for (int to : detail::legal_destinations(g, d, Rule::TS, occupied, current[label])) {
                std::vector<int> next = current;
                next[label] = to;
                if (seen.insert(next).second) states.push_back(std::move(next));
            }
        }
    }
    return states;
}

NclMachine two_or_machine() {
    NclMachine m;
    m.vertex_types = {NclVertexType::Or, NclVertexType::Or};
    m.edges = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    return m;
}

}  // namespace

TEST_CASE("machine validation") {
    CHECK_NOTHROW(check_machine(two_or_machine()));

    NclMachine self_loop = two_or_machine();
    self_loop.edges[0] = {0, 0, 2};
    CHECK_THROWS_AS(check_machine(self_loop), std::invalid_argument);

    NclMachine degree = two_or_machine();
    degree.edges.pop_back();
    CHECK_THROWS_AS(check_machine(degree), std::invalid_argument);

    NclMachine mistyped = two_or_machine();
    mistyped.vertex_types[0] = NclVertexType::And;
    CHECK_THROWS_AS(check_machine(mistyped), std::invalid_argument);

    NclMachine bad_weight = two_or_machine();
    bad_weight.edges[0].weight = 3;
    CHECK_THROWS_AS(check_machine(bad_weight), std::invalid_argument);
}

TEST_CASE("configuration validity and flip search") {
    NclMachine m = two_or_machine();
    // valid iff each OR has at least one inward weight-2 edge
    CHECK(config_valid(m, NclConfig{{0, 0, 1}}));
    CHECK_FALSE(config_valid(m, NclConfig{{0, 0, 0}}));
    CHECK(detail::valid_configs(m).size() == 6);

    NclConfig s{{0, 0, 1}};
    CHECK(ncl_bruteforce(m, s, s));
    // every valid pair is connected here: flip one edge at a time through
    // the 6-cycle of mixed orientations
    for (const NclConfig& t : detail::valid_configs(m)) CHECK(ncl_bruteforce(m, s, t));

    // the two-AND machine has exactly two valid configs, three flips apart
    NclMachine aa;
    aa.vertex_types = {NclVertexType::And, NclVertexType::And};
    aa.edges = {{0, 1, 1}, {0, 1, 1}, {0, 1, 2}};
    auto configs = detail::valid_configs(aa);
    REQUIRE(configs.size() == 2);
    CHECK_FALSE(ncl_bruteforce(aa, configs[0], configs[1]));
    CHECK_THROWS_AS(ncl_bruteforce(aa, configs[0], NclConfig{{0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("AND gadget semantics") {
    for (int d : {2, 3, 4}) {
        CAPTURE(d);
        NclGadget gadget = ncl_and_gadget(d);
        const auto& [in0, out0] = gadget.ports[0];
        const auto& [in1, out1] = gadget.ports[1];
        const auto& [in2, out2] = gadget.ports[2];

        // the weight-2 token excludes either weight-1 token and vice versa
        CHECK_FALSE(is_ddis(gadget.graph, d, {in0, in1}));
        CHECK_FALSE(is_ddis(gadget.graph, d, {in0, in2}));
        CHECK(is_ddis(gadget.graph, d, {in1, in2}));
        CHECK(is_ddis(gadget.graph, d, {in0, out1, out2}));

        // sliding in the top token once both bottoms are out
        DdisInstance slide_in = make_instance(gadget.graph, d, Rule::TS, {out0, in1, in2},
                                              {in0, out1, out2});
        CHECK(solve_exact(slide_in).reachable);

        // port tokens never leave their port edges
        for (const auto& state : labeled_states(gadget.graph, d, {out0, in1, in2})) {
            CHECK((state[0] == in0 || state[0] == out0));
            CHECK((state[1] == in1 || state[1] == out1));
            CHECK((state[2] == in2 || state[2] == out2));
        }
    }
}

TEST_CASE("OR gadget semantics") {
    for (int d : {2, 3, 4}) {
        CAPTURE(d);
        NclGadget gadget = ncl_or_gadget(d);
        const auto& [in0, out0] = gadget.ports[0];
        const auto& [in1, out1] = gadget.ports[1];
        const auto& [in2, out2] = gadget.ports[2];
        REQUIRE(gadget.slots.size() == 3);

        // each triangle corner blocks exactly its own port
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(is_ddis(gadget.graph, d, {gadget.ports[i].first, gadget.slots[j]}) ==
                      (i != j));

        // with all three port tokens in, the internal token has no home
        for (int z = 0; z < gadget.graph.vertex_count(); ++z) {
            if (z == in0 || z == in1 || z == in2) continue;
            CHECK_FALSE(is_ddis(gadget.graph, d, make_token_set({in0, in1, in2, z})));
        }

        // the top token slides in while one bottom is out
        DdisInstance slide_in =
            make_instance(gadget.graph, d, Rule::TS, {out0, in1, out2, gadget.slots[2]},
                          {in0, in1, out2, gadget.slots[2]});
        CHECK(solve_exact(slide_in).reachable);

        // port tokens never leave their port edges
        for (const auto& state : labeled_states(gadget.graph, d, {out0, in1, out2, gadget.slots[2]})) {
            CHECK((state[0] == in0 || state[0] == out0));
            CHECK((state[1] == in1 || state[1] == out1));
            CHECK((state[2] == in2 || state[2] == out2));
        }
    }
}

TEST_CASE("compiled machines track the flip search") {
    VerifyReport report = verify_ncl(40, 3, 20260824);
    INFO(report.text());
    CHECK(report.ok());
}

TEST_CASE("compiled machines confine port tokens and equate rules") {
    NclMachine m = two_or_machine();
    auto configs = detail::valid_configs(m);
    NclCompilation comp = compile_ncl(m, configs[0], configs[1], 3);
    const DdisInstance& inst = comp.output.instance;
    CHECK(inst.rule == Rule::TS);
    for (int v = 0; v < inst.graph.vertex_count(); ++v) CHECK(inst.graph.degree(v) <= 3);

    // port labels stay on their shared edges
    std::vector<int> start(inst.source.begin(), inst.source.end());
    for (const auto& state : labeled_states(inst.graph, 3, start)) {
        for (std::size_t label = 0; label < start.size(); ++label) {
            int origin = start[label];
            for (std::size_t e = 0; e < comp.port_vertices.size(); ++e) {
                auto [a, b] = comp.port_vertices[e];
                if (origin == a || origin == b) CHECK((state[label] == a || state[label] == b));
            }
        }
    }

    // on compiled graphs every jump is available as a slide
    std::vector<TokenSet> states{inst.source};
    std::set<TokenSet> seen{inst.source};
    for (std::size_t head = 0; head < states.size(); ++head) {
        TokenSet current = states[head];
        for (int from : current) {
            auto slides = detail::legal_destinations(inst.graph, 3, Rule::TS, current, from);
            auto jumps = detail::legal_destinations(inst.graph, 3, Rule::TJ, current, from);
            CHECK(slides == jumps);
            for (int to : jumps) {
                TokenSet next;
                for (int v : current)
                    if (v != from) next.push_back(v);
                next.insert(std::upper_bound(next.begin(), next.end(), to), to);
                if (seen.insert(next).second) states.push_back(std::move(next));
            }
        }
    }
}

TEST_CASE("machine file round trip") {
    NclProblem prob;
    prob.machine = two_or_machine();
    auto configs = detail::valid_configs(prob.machine);
    prob.source = configs[0];
    prob.target = configs[1];
    std::string text = serialize_ncl(prob);
    NclProblem again = parse_ncl(text);
    CHECK(serialize_ncl(again) == text);
    CHECK(again.machine.edge_count() == 3);
    CHECK(again.source.heads == prob.source.heads);

    CHECK_THROWS_AS(parse_ncl("ncl 2\n"), ParseError);
    CHECK_THROWS_AS(parse_ncl("ncl 1\nvertex 0 AND\n"), ParseError);
    CHECK_THROWS_AS(
        parse_ncl("ncl 1\nvertex 0 OR\nvertex 1 OR\nedge 0 0 1 2\nedge 1 0 1 2\nedge 2 0 1 2\n"
                  "config_s 0 0 1 0 2 0\nconfig_t 0 1 1 1 2 1\n"),
        ParseError);
}
