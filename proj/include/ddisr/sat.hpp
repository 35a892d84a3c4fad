#ifndef DDISR_SAT_HPP
#define DDISR_SAT_HPP

#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ddisr/format.hpp"
#include "ddisr/reductions.hpp"

namespace ddisr {

// Literal: variable index 0..n-1, negated or not.
struct Literal {
    int variable = 0;
    bool negated = false;
};

// At most three literals per clause.
struct Cnf3 {
    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;
};

// One bit per variable, bit i = value of variable i.
using Assignment = std::uint32_t;

inline bool satisfies(const Cnf3& f, Assignment a) {
    for (const auto& clause : f.clauses) {
        bool ok = false;
        for (const Literal& lit : clause) {
            bool value = (a >> lit.variable) & 1u;
            if (value != lit.negated) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// Header `cnf3 <n> <m>`, then one clause per line as signed 1-based
// integers terminated by 0.
inline Cnf3 parse_cnf3(const std::string& text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header || header->size() != 3 || (*header)[0] != "cnf3")
        reader.fail("expected header 'cnf3 <variables> <clauses>'");
    Cnf3 f;
    f.variable_count = detail::parse_int(reader, (*header)[1]);
    int m = detail::parse_int(reader, (*header)[2]);
    if (f.variable_count < 0 || f.variable_count > 30) reader.fail("variable count out of range");
    while (auto fields = reader.next()) {
        std::vector<Literal> clause;
        bool terminated = false;
        for (const auto& tok : *fields) {
            int lit = detail::parse_int(reader, tok);
            if (lit == 0) {
                terminated = true;
                break;
            }
            int var = std::abs(lit) - 1;
            if (var >= f.variable_count) reader.fail("literal references undeclared variable");
            clause.push_back(Literal{var, lit < 0});
        }
        if (!terminated) reader.fail("clause not 0-terminated");
        if (clause.size() > 3) reader.fail("clause has more than three literals");
        f.clauses.push_back(std::move(clause));
    }
    if (static_cast<int>(f.clauses.size()) != m) reader.fail("clause count differs from header");
    return f;
}

// BFS over satisfying assignments under single-variable flips.
inline bool sat3_reconfig_bruteforce(const Cnf3& f, Assignment a, Assignment b) {
    if (!satisfies(f, a) || !satisfies(f, b))
        throw std::invalid_argument("endpoints must satisfy the formula");
    if (a == b) return true;
    std::unordered_set<Assignment> seen{a};
    std::queue<Assignment> queue;
    queue.push(a);
    while (!queue.empty()) {
        Assignment cur = queue.front();
        queue.pop();
        for (int i = 0; i < f.variable_count; ++i) {
            Assignment next = cur ^ (1u << i);
            if (!satisfies(f, next) || seen.count(next)) continue;
            if (next == b) return true;
            seen.insert(next);
            queue.push(next);
        }
    }
    return false;
}

inline std::vector<Assignment> satisfying_assignments(const Cnf3& f) {
    std::vector<Assignment> out;
    for (Assignment a = 0; a < (1u << f.variable_count); ++a)
        if (satisfies(f, a)) out.push_back(a);
    return out;
}

// 3SAT-R -> DdISR, both rules, d >= 2. One edge per variable (endpoints =
// the two literals), one clique per clause over its literal occurrences,
// and a path of length d-1 between every pair of opposite literals lying in
// different components. Token sets have size n+m: the true literal endpoint
// per variable plus, per clause, the occurrence of its first satisfied
// literal.
inline ReductionOutput reduce_3satr(const Cnf3& f, Assignment a, Assignment b, int d) {
    if (d < 2) throw std::invalid_argument("reduction needs d >= 2");
    if (!satisfies(f, a) || !satisfies(f, b))
        throw std::invalid_argument("endpoints must satisfy the formula");
    Graph g(0);
    ReductionOutput result{DdisInstance{}, {}, {}};
    std::vector<int> pos(static_cast<std::size_t>(f.variable_count));
    std::vector<int> neg(static_cast<std::size_t>(f.variable_count));
    for (int i = 0; i < f.variable_count; ++i) {
        pos[static_cast<std::size_t>(i)] = g.add_vertex();
        neg[static_cast<std::size_t>(i)] = g.add_vertex();
        g.add_edge(pos[static_cast<std::size_t>(i)], neg[static_cast<std::size_t>(i)]);
        result.vertex_map["pos:" + std::to_string(i)] = pos[static_cast<std::size_t>(i)];
        result.vertex_map["neg:" + std::to_string(i)] = neg[static_cast<std::size_t>(i)];
    }
    std::vector<std::vector<int>> occ(f.clauses.size());
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        for (std::size_t t = 0; t < f.clauses[j].size(); ++t) {
            int v = g.add_vertex();
            occ[j].push_back(v);
            result.vertex_map["cl:" + std::to_string(j) + ":" + std::to_string(t)] = v;
            for (std::size_t s = 0; s < t; ++s) g.add_edge(occ[j][s], v);
        }
    }
    // Opposite literals in different components: variable endpoint vs clause
    // occurrence, and occurrences in distinct clauses.
    auto join = [&](int x, int y) {
        auto internal = detail::add_path(g, x, y, d - 2);
        for (int v : internal) result.new_vertices.push_back(v);
    };
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        for (std::size_t t = 0; t < f.clauses[j].size(); ++t) {
            const Literal& lit = f.clauses[j][t];
            int opposite_endpoint = lit.negated ? pos[static_cast<std::size_t>(lit.variable)]
                                                : neg[static_cast<std::size_t>(lit.variable)];
            join(occ[j][t], opposite_endpoint);
            for (std::size_t j2 = j + 1; j2 < f.clauses.size(); ++j2)
                for (std::size_t t2 = 0; t2 < f.clauses[j2].size(); ++t2) {
                    const Literal& lit2 = f.clauses[j2][t2];
                    if (lit2.variable == lit.variable && lit2.negated != lit.negated)
                        join(occ[j][t], occ[j2][t2]);
                }
        }
    }
    auto tokens_for = [&](Assignment phi) {
        TokenSet tokens;
        for (int i = 0; i < f.variable_count; ++i)
            tokens.push_back(((phi >> i) & 1u) ? pos[static_cast<std::size_t>(i)]
                                               : neg[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            for (std::size_t t = 0; t < f.clauses[j].size(); ++t) {
                const Literal& lit = f.clauses[j][t];
                bool value = (phi >> lit.variable) & 1u;
                if (value != lit.negated) {
                    tokens.push_back(occ[j][t]);  // first satisfied literal holds the token
                    break;
                }
            }
        }
        return make_token_set(std::move(tokens));
    };
    result.instance = make_instance(std::move(g), d, Rule::TS, tokens_for(a), tokens_for(b));
    return result;
}

}  // namespace ddisr

#endif
