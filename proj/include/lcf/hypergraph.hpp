#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lcf {

/// A hyperedge: three strictly increasing vertex ids.
using Edge = std::array<int, 3>;

/// An unordered vertex pair, stored increasing.
using Pair = std::pair<int, int>;

inline Edge make_edge(int a, int b, int c) {
    Edge e{a, b, c};
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    if (e[1] > e[2]) std::swap(e[1], e[2]);
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    return e;
}

inline Pair make_pair_sorted(int a, int b) {
    return a < b ? Pair{a, b} : Pair{b, a};
}

inline bool edge_contains(const Edge& e, int v) {
    return e[0] == v || e[1] == v || e[2] == v;
}

inline bool edge_contains_pair(const Edge& e, const Pair& p) {
    return edge_contains(e, p.first) && edge_contains(e, p.second);
}

/// The three vertex pairs of an edge, in increasing order.
inline std::array<Pair, 3> edge_pairs(const Edge& e) {
    return {Pair{e[0], e[1]}, Pair{e[0], e[2]}, Pair{e[1], e[2]}};
}

/// The vertex of `e` outside pair `p`; `p` must be a pair of `e`.
inline int edge_third(const Edge& e, const Pair& p) {
    for (int v : e)
        if (v != p.first && v != p.second) return v;
    throw std::logic_error("edge_third: pair equals edge");
}

/// Number of common vertices of two edges (0..3).
inline int edge_intersection_size(const Edge& a, const Edge& b) {
    int k = 0;
    for (int v : a) k += edge_contains(b, v) ? 1 : 0;
    return k;
}

/// The unique common vertex of two edges sharing exactly one.
inline int edge_shared_vertex(const Edge& a, const Edge& b) {
    for (int v : a)
        if (edge_contains(b, v)) return v;
    throw std::logic_error("edge_shared_vertex: disjoint edges");
}

/// Raised by internal consistency checks. Indicates an implementation
/// bug or precondition violation upstream, never a valid input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Five vertices spanning a complete 3-uniform subhypergraph.
struct K53Witness {
    std::array<int, 5> vertices;
};

/// Link of a vertex: the graph of pairs completing it to a hyperedge.
struct LinkGraph {
    int center = -1;
    std::vector<Pair> edges;
};

class Hypergraph;

/// Induced subhypergraph with the relabeling maps.
struct InducedResult {
    std::vector<int> to_old;  // new id -> old id
    std::vector<int> to_new;  // old id -> new id, -1 if dropped
    // the hypergraph itself is returned alongside; see Hypergraph::induced
};

/// Canonical 3-uniform hypergraph on vertices 0..n-1. Immutable after
/// construction; all queries are read-only and safe to share across threads.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Canonicalizes and deduplicates. Rejects triples with a repeated
    /// vertex or an id outside [0, n).
    Hypergraph(int n, const std::vector<Edge>& triples);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(const Edge& e) const;

    /// Number of hyperedges containing v.
    int degree(int v) const;

    LinkGraph link_graph(int v) const;

    /// Third vertices of all edges containing the pair {a, b}.
    std::vector<int> pair_thirds(int a, int b) const;

    bool is_thick_pair(int a, int b) const;
    bool is_thick_pair(const Pair& p) const { return is_thick_pair(p.first, p.second); }

    /// An edge is thick when all three of its pairs are thick.
    bool is_thick_edge(const Edge& e) const;

    /// Subhypergraph induced by S, relabeled to 0..|S|-1.
    std::pair<Hypergraph, InducedResult> induced(const std::vector<int>& S) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted, unique
    // flat pair index: (a, b, third) sorted by (a, b); three rows per edge
    std::vector<std::array<int, 3>> pair_index_;

    void check_vertex(int v) const;
};

/// First complete 5-set in lexicographic order, if any. Candidate 5-sets
/// are pruned to those whose ten pairs are all thick.
std::optional<K53Witness> find_k53(const Hypergraph& h);

}  // namespace lcf
