#ifndef DDISR_NCL_HPP
#define DDISR_NCL_HPP

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ddisr/format.hpp"
#include "ddisr/reductions.hpp"

namespace ddisr {

enum class NclVertexType { And, Or };

// Parallel edges are allowed (and needed: closed machines are 3-regular, so
// small ones lean on multi-edges); self-loops are not.
struct NclEdge {
    int u = 0;
    int v = 0;
    int weight = 1;
};

struct NclMachine {
    std::vector<NclVertexType> vertex_types;
    std::vector<NclEdge> edges;

    int vertex_count() const { return static_cast<int>(vertex_types.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// heads[e] names the vertex the edge points at.
struct NclConfig {
    std::vector<int> heads;
};

inline void check_machine(const NclMachine& m) {
    std::vector<std::vector<int>> incident_weights(static_cast<std::size_t>(m.vertex_count()));
    for (const NclEdge& e : m.edges) {
        if (e.u < 0 || e.u >= m.vertex_count() || e.v < 0 || e.v >= m.vertex_count())
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop in NCL machine");
        if (e.weight != 1 && e.weight != 2) throw std::invalid_argument("edge weight must be 1 or 2");
        incident_weights[static_cast<std::size_t>(e.u)].push_back(e.weight);
        incident_weights[static_cast<std::size_t>(e.v)].push_back(e.weight);
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto ws = incident_weights[static_cast<std::size_t>(v)];
        if (ws.size() != 3) throw std::invalid_argument("NCL vertex degree must be 3");
        std::sort(ws.begin(), ws.end());
        bool is_and = ws == std::vector<int>{1, 1, 2};
        bool is_or = ws == std::vector<int>{2, 2, 2};
        if (m.vertex_types[static_cast<std::size_t>(v)] == NclVertexType::And ? !is_and : !is_or)
            throw std::invalid_argument("incident weights do not match vertex type");
    }
}

inline bool config_valid(const NclMachine& m, const NclConfig& c) {
    if (static_cast<int>(c.heads.size()) != m.edge_count()) return false;
    std::vector<int> in_weight(static_cast<std::size_t>(m.vertex_count()), 0);
    for (int e = 0; e < m.edge_count(); ++e) {
        int head = c.heads[static_cast<std::size_t>(e)];
        if (head != m.edges[static_cast<std::size_t>(e)].u && head != m.edges[static_cast<std::size_t>(e)].v)
            return false;
        in_weight[static_cast<std::size_t>(head)] += m.edges[static_cast<std::size_t>(e)].weight;
    }
    for (int w : in_weight)
        if (w < 2) return false;
    return true;
}

namespace detail {

inline std::uint32_t config_mask(const NclMachine& m, const NclConfig& c) {
    std::uint32_t mask = 0;
    for (int e = 0; e < m.edge_count(); ++e)
        if (c.heads[static_cast<std::size_t>(e)] == m.edges[static_cast<std::size_t>(e)].v)
            mask |= 1u << e;
    return mask;
}

inline NclConfig config_from_mask(const NclMachine& m, std::uint32_t mask) {
    NclConfig c;
    for (int e = 0; e < m.edge_count(); ++e)
        c.heads.push_back((mask >> e) & 1u ? m.edges[static_cast<std::size_t>(e)].v
                                           : m.edges[static_cast<std::size_t>(e)].u);
    return c;
}

}  // namespace detail

// BFS over valid orientations under single-edge flips.
inline bool ncl_bruteforce(const NclMachine& m, const NclConfig& s, const NclConfig& t) {
    check_machine(m);
    if (m.edge_count() > 30) throw std::invalid_argument("machine too large for brute force");
    if (!config_valid(m, s) || !config_valid(m, t)) throw std::invalid_argument("invalid configuration");
    std::uint32_t start = detail::config_mask(m, s);
    std::uint32_t goal = detail::config_mask(m, t);
    if (start == goal) return true;
    std::unordered_set<std::uint32_t> seen{start};
    std::queue<std::uint32_t> queue;
    queue.push(start);
    while (!queue.empty()) {
        std::uint32_t cur = queue.front();
        queue.pop();
        for (int e = 0; e < m.edge_count(); ++e) {
            std::uint32_t next = cur ^ (1u << e);
            if (seen.count(next)) continue;
            if (!config_valid(m, detail::config_from_mask(m, next))) continue;
            if (next == goal) return true;
            seen.insert(next);
            queue.push(next);
        }
    }
    return false;
}

namespace detail {

// Path of length d-2 between a and b; identifies the endpoints when d = 2
// (the caller passes the already-merged vertex in that case, so this is
// only invoked for d >= 3).
inline void dotted_path(Graph& g, int a, int b, int d) {
    add_path(g, a, b, d - 3);
}

// AND gadget internals around three pre-allocated inner port vertices.
// Port edges themselves are the caller's business. Corner layout: the
// weight-2 inner vertex and two corners joined pairwise by dotted paths,
// each corner hanging over one weight-1 inner vertex.
inline void build_and_internals(Graph& g, int top_inner, int left_inner, int right_inner, int d) {
    if (d == 2) {
        g.add_edge(top_inner, left_inner);
        g.add_edge(top_inner, right_inner);
        return;
    }
    int left_corner = g.add_vertex();
    int right_corner = g.add_vertex();
    dotted_path(g, top_inner, left_corner, d);
    dotted_path(g, top_inner, right_corner, d);
    dotted_path(g, left_corner, right_corner, d);
    g.add_edge(left_corner, left_inner);
    g.add_edge(right_corner, right_inner);
}

// OR gadget internals: a free-floating token lives on a triangle whose
// corner i sits at distance exactly d-1 from inner port vertex i, blocking
// that port. Returns the triangle corners aligned with the ports.
inline std::vector<int> build_or_internals(Graph& g, int inner0, int inner1, int inner2, int d) {
    int t0 = g.add_vertex();
    int t1 = g.add_vertex();
    int t2 = g.add_vertex();
    g.add_edge(t0, t1);
    g.add_edge(t1, t2);
    g.add_edge(t0, t2);
    if (d == 2) {
        g.add_edge(inner0, t0);
        g.add_edge(inner1, t1);
        g.add_edge(inner2, t2);
        return {t0, t1, t2};
    }
    // port 0 reaches its corner dotted-then-solid, ports 1 and 2
    // solid-then-dotted; either way the inner-to-corner distance is d-1
    int mid0 = g.add_vertex();
    dotted_path(g, inner0, mid0, d);
    g.add_edge(mid0, t0);
    int mid1 = g.add_vertex();
    g.add_edge(inner1, mid1);
    dotted_path(g, mid1, t1, d);
    int mid2 = g.add_vertex();
    g.add_edge(inner2, mid2);
    dotted_path(g, mid2, t2, d);
    return {t0, t1, t2};
}

}  // namespace detail

// Standalone gadget with pendant port edges, for gadget-local analysis.
// ports[i] = (inner, outer); for the AND gadget port 0 is the weight-2 one.
struct NclGadget {
    Graph graph;
    NclVertexType type = NclVertexType::And;
    std::vector<std::pair<int, int>> ports;
    std::vector<int> slots;  // OR triangle corners aligned with ports; empty for AND
};

inline NclGadget ncl_and_gadget(int d) {
    if (d < 2) throw std::invalid_argument("gadgets need d >= 2");
    NclGadget gadget;
    gadget.type = NclVertexType::And;
    Graph g(6);
    // 0,2,4 inner; 1,3,5 outer
    for (int p = 0; p < 3; ++p) {
        g.add_edge(2 * p, 2 * p + 1);
        gadget.ports.emplace_back(2 * p, 2 * p + 1);
    }
    detail::build_and_internals(g, 0, 2, 4, d);
    gadget.graph = std::move(g);
    return gadget;
}

inline NclGadget ncl_or_gadget(int d) {
    if (d < 2) throw std::invalid_argument("gadgets need d >= 2");
    NclGadget gadget;
    gadget.type = NclVertexType::Or;
    Graph g(6);
    for (int p = 0; p < 3; ++p) {
        g.add_edge(2 * p, 2 * p + 1);
        gadget.ports.emplace_back(2 * p, 2 * p + 1);
    }
    gadget.slots = detail::build_or_internals(g, 0, 2, 4, d);
    gadget.graph = std::move(g);
    return gadget;
}

struct NclCompilation {
    ReductionOutput output;
    // per machine edge: (vertex on the u side, vertex on the v side)
    std::vector<std::pair<int, int>> port_vertices;
};

// Joins one gadget per machine vertex at the shared port edges. A token on
// the tail-side port vertex encodes the edge's orientation: it is the outer
// vertex of the head's gadget, so "token on outer = inward-directed" holds
// at both ends. Each OR gadget carries one extra token on a free triangle
// corner (lowest index wins when several are free).
inline NclCompilation compile_ncl(const NclMachine& m, const NclConfig& s, const NclConfig& t, int d) {
    if (d < 2) throw std::invalid_argument("compilation needs d >= 2");
    check_machine(m);
    if (!config_valid(m, s) || !config_valid(m, t)) throw std::invalid_argument("invalid configuration");

    Graph g(0);
    NclCompilation comp;
    for (int e = 0; e < m.edge_count(); ++e) {
        int side_u = g.add_vertex();
        int side_v = g.add_vertex();
        g.add_edge(side_u, side_v);
        comp.port_vertices.emplace_back(side_u, side_v);
        comp.output.vertex_map["port:" + std::to_string(e) + ":u"] = side_u;
        comp.output.vertex_map["port:" + std::to_string(e) + ":v"] = side_v;
    }

    // Incident edges per vertex; for ANDs the weight-2 edge takes port 0.
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(m.vertex_count()));
    for (int e = 0; e < m.edge_count(); ++e) {
        incident[static_cast<std::size_t>(m.edges[static_cast<std::size_t>(e)].u)].push_back(e);
        incident[static_cast<std::size_t>(m.edges[static_cast<std::size_t>(e)].v)].push_back(e);
    }
    std::vector<std::vector<int>> gadget_ports(static_cast<std::size_t>(m.vertex_count()));
    std::vector<std::vector<int>> gadget_slots(static_cast<std::size_t>(m.vertex_count()));
    for (int x = 0; x < m.vertex_count(); ++x) {
        auto edges_here = incident[static_cast<std::size_t>(x)];
        if (m.vertex_types[static_cast<std::size_t>(x)] == NclVertexType::And) {
            std::stable_sort(edges_here.begin(), edges_here.end(), [&](int a, int b) {
                return m.edges[static_cast<std::size_t>(a)].weight > m.edges[static_cast<std::size_t>(b)].weight;
            });
        }
        auto inner_of = [&](int e) {
            return m.edges[static_cast<std::size_t>(e)].u == x
                       ? comp.port_vertices[static_cast<std::size_t>(e)].first
                       : comp.port_vertices[static_cast<std::size_t>(e)].second;
        };
        int i0 = inner_of(edges_here[0]);
        int i1 = inner_of(edges_here[1]);
        int i2 = inner_of(edges_here[2]);
        if (m.vertex_types[static_cast<std::size_t>(x)] == NclVertexType::And) {
            detail::build_and_internals(g, i0, i1, i2, d);
        } else {
            auto slots = detail::build_or_internals(g, i0, i1, i2, d);
            for (std::size_t i = 0; i < slots.size(); ++i)
                comp.output.vertex_map["slot:" + std::to_string(x) + ":" + std::to_string(i)] =
                    slots[i];
            gadget_slots[static_cast<std::size_t>(x)] = slots;
        }
        gadget_ports[static_cast<std::size_t>(x)] = edges_here;
    }

    auto tokens_for = [&](const NclConfig& c) {
        TokenSet tokens;
        for (int e = 0; e < m.edge_count(); ++e) {
            bool toward_v = c.heads[static_cast<std::size_t>(e)] == m.edges[static_cast<std::size_t>(e)].v;
            tokens.push_back(toward_v ? comp.port_vertices[static_cast<std::size_t>(e)].first
                                      : comp.port_vertices[static_cast<std::size_t>(e)].second);
        }
        for (int x = 0; x < m.vertex_count(); ++x) {
            if (m.vertex_types[static_cast<std::size_t>(x)] != NclVertexType::Or) continue;
            // slot i is free exactly when port edge i points inward; validity
            // guarantees at least one does
            int chosen = -1;
            for (std::size_t i = 0; i < 3 && chosen < 0; ++i) {
                int e = gadget_ports[static_cast<std::size_t>(x)][i];
                if (c.heads[static_cast<std::size_t>(e)] == x)
                    chosen = gadget_slots[static_cast<std::size_t>(x)][i];
            }
            tokens.push_back(chosen);
        }
        return make_token_set(std::move(tokens));
    };

    TokenSet source = tokens_for(s);
    TokenSet target = tokens_for(t);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) throw std::logic_error("compiled NCL graph exceeds degree 3");
    comp.output.instance = make_instance(std::move(g), d, Rule::TS, std::move(source), std::move(target));
    return comp;
}

// Machine file:
//   ncl 1
//   vertex <id> AND|OR
//   edge <id> <u> <v> <weight>
//   config_s <edge-id> <head> ...
//   config_t <edge-id> <head> ...
struct NclProblem {
    NclMachine machine;
    NclConfig source;
    NclConfig target;
};

inline NclProblem parse_ncl(const std::string& text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header || header->size() != 2 || (*header)[0] != "ncl" || (*header)[1] != "1")
        reader.fail("expected header 'ncl 1'");
    NclProblem prob;
    std::vector<std::pair<int, int>> s_pairs, t_pairs;
    while (auto fields = reader.next()) {
        const auto& f = *fields;
        if (f[0] == "vertex" && f.size() == 3) {
            int id = detail::parse_int(reader, f[1]);
            if (id != prob.machine.vertex_count()) reader.fail("vertex ids must be dense and in order");
            if (f[2] == "AND") prob.machine.vertex_types.push_back(NclVertexType::And);
            else if (f[2] == "OR") prob.machine.vertex_types.push_back(NclVertexType::Or);
            else reader.fail("vertex type must be AND or OR");
        } else if (f[0] == "edge" && f.size() == 5) {
            int id = detail::parse_int(reader, f[1]);
            if (id != prob.machine.edge_count()) reader.fail("edge ids must be dense and in order");
            prob.machine.edges.push_back(NclEdge{detail::parse_int(reader, f[2]),
                                                 detail::parse_int(reader, f[3]),
                                                 detail::parse_int(reader, f[4])});
        } else if ((f[0] == "config_s" || f[0] == "config_t") && f.size() % 2 == 1) {
            auto& pairs = f[0] == "config_s" ? s_pairs : t_pairs;
            for (std::size_t i = 1; i + 1 < f.size(); i += 2)
                pairs.emplace_back(detail::parse_int(reader, f[i]), detail::parse_int(reader, f[i + 1]));
        } else {
            reader.fail("unrecognized directive '" + f[0] + "'");
        }
    }
    auto build_config = [&](const std::vector<std::pair<int, int>>& pairs) {
        NclConfig c;
        c.heads.assign(static_cast<std::size_t>(prob.machine.edge_count()), -1);
        for (auto [e, head] : pairs) {
            if (e < 0 || e >= prob.machine.edge_count())
                throw ParseError(reader.line_no, "config references unknown edge");
            c.heads[static_cast<std::size_t>(e)] = head;
        }
        for (int head : c.heads)
            if (head < 0) throw ParseError(reader.line_no, "config leaves an edge unoriented");
        return c;
    };
    prob.source = build_config(s_pairs);
    prob.target = build_config(t_pairs);
    try {
        check_machine(prob.machine);
    } catch (const std::exception& e) {
        throw ParseError(reader.line_no, e.what());
    }
    if (!config_valid(prob.machine, prob.source) || !config_valid(prob.machine, prob.target))
        throw ParseError(reader.line_no, "configuration violates the in-weight constraint");
    return prob;
}

inline std::string serialize_ncl(const NclProblem& prob) {
    std::ostringstream out;
    out << "ncl 1\n";
    for (int v = 0; v < prob.machine.vertex_count(); ++v)
        out << "vertex " << v << " "
            << (prob.machine.vertex_types[static_cast<std::size_t>(v)] == NclVertexType::And ? "AND"
                                                                                             : "OR")
            << "\n";
    for (int e = 0; e < prob.machine.edge_count(); ++e)
        out << "edge " << e << " " << prob.machine.edges[static_cast<std::size_t>(e)].u << " "
            << prob.machine.edges[static_cast<std::size_t>(e)].v << " "
            << prob.machine.edges[static_cast<std::size_t>(e)].weight << "\n";
    auto emit = [&](const char* tag, const NclConfig& c) {
        out << tag;
        for (int e = 0; e < prob.machine.edge_count(); ++e)
            out << " " << e << " " << c.heads[static_cast<std::size_t>(e)];
        out << "\n";
    };
    emit("config_s", prob.source);
    emit("config_t", prob.target);
    return out.str();
}

}  // namespace ddisr

#endif
