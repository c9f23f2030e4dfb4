#include "lcf/h3.hpp"

#include <algorithm>
#include <sstream>

namespace lcf {

namespace {

bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(tok[i]))) return false;
    try {
        out = std::stoi(tok);
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

H3Document parse_h3(const std::string& text) {
    H3Document doc;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    std::vector<Edge> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.resize(pos);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "n" || toks.size() != 2)
                throw H3ParseError(lineno, "expected header 'n <count>'");
            if (!parse_int(toks[1], doc.n) || doc.n < 0)
                throw H3ParseError(lineno, "bad vertex count '" + toks[1] + "'");
            have_header = true;
            continue;
        }
        if (toks[0] != "e")
            throw H3ParseError(lineno, "expected edge line 'e <a> <b> <c>'");
        if (toks.size() != 4) throw H3ParseError(lineno, "edge line needs three vertex ids");
        int v[3];
        for (int i = 0; i < 3; ++i) {
            if (!parse_int(toks[i + 1], v[i]))
                throw H3ParseError(lineno, "bad vertex id '" + toks[i + 1] + "'");
            if (v[i] < 0 || v[i] >= doc.n)
                throw H3ParseError(lineno, "vertex id " + std::to_string(v[i]) +
                                               " out of range [0, " + std::to_string(doc.n) + ")");
        }
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2])
            throw H3ParseError(lineno, "repeated vertex in edge");
        Edge e = make_edge(v[0], v[1], v[2]);
        if (std::find(seen.begin(), seen.end(), e) != seen.end()) {
            doc.warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge dropped");
            continue;
        }
        seen.push_back(e);
        doc.edges.push_back(e);
        doc.edge_lines.push_back(lineno);
    }
    if (!have_header) throw H3ParseError(lineno == 0 ? 1 : lineno, "missing 'n <count>' header");
    return doc;
}

std::string serialize_h3(const Hypergraph& h) {
    std::ostringstream os;
    os << "n " << h.vertex_count() << "\n";
    for (const Edge& e : h.edges()) os << "e " << e[0] << " " << e[1] << " " << e[2] << "\n";
    return os.str();
}

}  // namespace lcf
