#pragma once

#include <string>
#include <vector>

#include "lcf/hypergraph.hpp"

namespace lcf {

/// Parse failure with the offending 1-based source line.
struct H3ParseError : std::runtime_error {
    int line;
    H3ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

/// Parsed .h3 text: `#` starts a comment, the first significant line is
/// `n <count>`, every further line is `e <a> <b> <c>`.
struct H3Document {
    int n = 0;
    std::vector<Edge> edges;           // file order, duplicates dropped
    std::vector<int> edge_lines;       // 1-based source line per kept edge
    std::vector<std::string> warnings;

    Hypergraph to_hypergraph() const { return Hypergraph(n, edges); }
};

H3Document parse_h3(const std::string& text);

/// Canonical form: header plus one sorted `e` line per edge.
std::string serialize_h3(const Hypergraph& h);

}  // namespace lcf
