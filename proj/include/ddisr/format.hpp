#ifndef DDISR_FORMAT_HPP
#define DDISR_FORMAT_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddisr/engine.hpp"
#include "ddisr/instance.hpp"

namespace ddisr {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

namespace detail {

// Line-oriented reader: strips '#' comments, skips blank lines, splits on
// whitespace. Shared by the instance, NCL, CNF, and SPR formats.
struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::optional<std::vector<std::string>> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream fields(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (fields >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return tokens;
        }
        return std::nullopt;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no, what); }
};

inline int parse_int(const LineReader& reader, const std::string& tok) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(reader.line_no, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace detail

// Instance file:
//   ddisr 1
//   d <int>
//   rule TS|TJ
//   vertices <n>
//   edge <u> <v>      (zero or more)
//   source <v...>
//   target <v...>
inline DdisInstance parse_instance(const std::string& text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header || header->size() != 2 || (*header)[0] != "ddisr" || (*header)[1] != "1")
        reader.fail("expected header 'ddisr 1'");

    std::optional<int> d;
    std::optional<Rule> rule;
    std::optional<Graph> graph;
    std::vector<std::pair<int, int>> edges;
    std::optional<TokenSet> source, target;

    while (auto fields = reader.next()) {
        const auto& f = *fields;
        if (f[0] == "d" && f.size() == 2) {
            d = detail::parse_int(reader, f[1]);
        } else if (f[0] == "rule" && f.size() == 2) {
            if (f[1] == "TS") rule = Rule::TS;
            else if (f[1] == "TJ") rule = Rule::TJ;
            else reader.fail("rule must be TS or TJ");
        } else if (f[0] == "vertices" && f.size() == 2) {
            int n = detail::parse_int(reader, f[1]);
            if (n < 0) reader.fail("negative vertex count");
            graph = Graph(n);
        } else if (f[0] == "edge" && f.size() == 3) {
            if (!graph) reader.fail("edge before vertices line");
            int u = detail::parse_int(reader, f[1]);
            int v = detail::parse_int(reader, f[2]);
            try {
                graph->add_edge(u, v);
            } catch (const std::exception& e) {
                reader.fail(e.what());
            }
        } else if (f[0] == "source" || f[0] == "target") {
            TokenSet set;
            for (std::size_t i = 1; i < f.size(); ++i) set.push_back(detail::parse_int(reader, f[i]));
            (f[0] == "source" ? source : target) = make_token_set(std::move(set));
        } else {
            reader.fail("unrecognized directive '" + f[0] + "'");
        }
    }
    if (!d) throw ParseError(reader.line_no, "missing 'd' line");
    if (!rule) throw ParseError(reader.line_no, "missing 'rule' line");
    if (!graph) throw ParseError(reader.line_no, "missing 'vertices' line");
    if (!source || !target) throw ParseError(reader.line_no, "missing source or target line");
    try {
        return make_instance(std::move(*graph), *d, *rule, std::move(*source), std::move(*target));
    } catch (const std::exception& e) {
        throw ParseError(reader.line_no, e.what());
    }
}

// Canonical form: fixed directive order, edges sorted, one edge per line.
inline std::string serialize_instance(const DdisInstance& inst) {
    std::ostringstream out;
    out << "ddisr 1\n";
    out << "d " << inst.d << "\n";
    out << "rule " << to_string(inst.rule) << "\n";
    out << "vertices " << inst.graph.vertex_count() << "\n";
    for (auto [u, v] : inst.graph.edges()) out << "edge " << u << " " << v << "\n";
    out << "source";
    for (int v : inst.source) out << " " << v;
    out << "\n";
    out << "target";
    for (int v : inst.target) out << " " << v;
    out << "\n";
    return out.str();
}

// First line YES or NO; one `move <u> <v>` line per witness step.
inline std::string render_verdict(const Verdict& verdict, bool with_witness) {
    std::ostringstream out;
    out << (verdict.reachable ? "YES" : "NO") << "\n";
    if (verdict.reachable && with_witness && verdict.witness)
        for (const Move& mv : verdict.witness->moves) out << "move " << mv.from << " " << mv.to << "\n";
    return out.str();
}

}  // namespace ddisr

#endif
