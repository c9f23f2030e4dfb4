#pragma once

#include <optional>
#include <vector>

#include "lcf/hypergraph.hpp"

namespace lcf {

/// Alternating sequence v_1, h_1, v_2, ..., h_k, v_{k+1}. Length k may be
/// zero, in which case the path is a single vertex with no edges.
struct LinearPath {
    std::vector<int> vertices;  // k+1 entries
    std::vector<Edge> edges;    // k entries

    int length() const { return static_cast<int>(edges.size()); }
};

/// Alternating cyclic sequence v_1, h_1, ..., v_k, h_k with k >= 3.
/// vertices[i] is the vertex shared by edges[(i+k-1) % k] and edges[i].
struct LinearCycleWitness {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    int length() const { return static_cast<int>(edges.size()); }
};

/// Linear tree: edge list in attachment order. attach[i] is the vertex in
/// which edges[i] meets the union of the earlier edges (attach[0] = -1).
/// A tree with no edges is a single root vertex.
struct LinearTree {
    int root = -1;
    std::vector<Edge> edges;
    std::vector<int> attach;
    std::vector<int> vertices;  // sorted V(T)

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool contains_vertex(int v) const;
};

/// A maximal linear tree; produced by the skeleton builders below.
using Skeleton = LinearTree;

/// All pairs covered by the edges of a linear tree.
struct PairGraph {
    std::vector<int> vertices;
    std::vector<Pair> edges;
};

// --- validators -----------------------------------------------------------

/// Re-checks every invariant of the definition against H.
bool validate_linear_path(const Hypergraph& h, const LinearPath& p);
bool validate_linear_cycle(const Hypergraph& h, const LinearCycleWitness& c);
bool validate_linear_tree(const Hypergraph& h, const LinearTree& t);

/// True when no edge of H (restricted to `allowed`, if given) meets V(T)
/// in exactly one vertex.
bool is_maximal_linear_tree(const Hypergraph& h, const LinearTree& t);
bool is_maximal_linear_tree(const Hypergraph& h, const LinearTree& t,
                            const std::vector<char>& allowed);

// --- searches -------------------------------------------------------------

/// Depth-first search over alternating sequences, anchored at each edge in
/// increasing order; candidate extensions are tried in increasing edge
/// order, so the returned witness is deterministic. The witness is
/// re-validated before return; absence means H is linear-cycle-free.
std::optional<LinearCycleWitness> find_linear_cycle(const Hypergraph& h);

/// Linear cycles through a mandatory first edge; used by the incremental
/// generator. All other hypergraph edges are admissible.
std::optional<LinearCycleWitness> find_linear_cycle_through(const Hypergraph& h, const Edge& e);

/// A longest linear path; among maxima, the lexicographically least edge
/// sequence. Throws on an edgeless hypergraph.
LinearPath longest_linear_path(const Hypergraph& h);

/// Greedy maximal linear tree containing the seed edge; each extension step
/// picks the lexicographically least admissible edge.
Skeleton build_skeleton(const Hypergraph& h, const Edge& seed);

/// Greedy maximal linear tree grown from a seed vertex (may stay degenerate).
Skeleton build_skeleton(const Hypergraph& h, int seed_vertex);

/// Same, but restricted to edges entirely inside `allowed` (allowed[v] != 0).
Skeleton build_skeleton(const Hypergraph& h, int seed_vertex, const std::vector<char>& allowed);

/// Exhaustive: a maximum-edge-count maximal linear tree whose edge set
/// contains all edges of P. Guarded to n <= 9.
Skeleton maximum_skeleton_containing(const Hypergraph& h, const LinearPath& p);

/// All maximal linear trees of H (including degenerate single-vertex trees
/// for isolated vertices), deduplicated by edge set. Guarded to n <= 9.
std::vector<Skeleton> enumerate_skeletons(const Hypergraph& h);

/// The minimal linear path in T between vertex sets A and B. Throws when
/// A or B misses V(T).
LinearPath linear_path_between(const LinearTree& t, const std::vector<int>& A,
                               const std::vector<int>& B);

// --- pair-graph utilities ---------------------------------------------------

PairGraph pair_graph(const LinearTree& t);

/// Edges of T incident to v.
std::vector<Edge> star(const LinearTree& t, int v);

/// The unique pair of tree edge e whose two vertices are at equal distance
/// from v in the pair graph of T.
Pair opposite_pair(const LinearTree& t, int v, const Edge& e);

/// Windmill sizes at the second and second-to-last path vertices: the stars
/// there minus the designated path edge. P must lie in T with length >= 3.
std::pair<int, int> windmill_sizes(const LinearTree& t, const LinearPath& p);

}  // namespace lcf
