#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lcf/association.hpp"
#include "lcf/hypergraph.hpp"
#include "lcf/linear.hpp"

namespace lcf {

/// Vertex colors; 0 means unassigned, valid colors are 1 and 2 (or 1..k
/// for the brute-force oracle).
struct Coloring {
    std::vector<int> color;

    Coloring() = default;
    explicit Coloring(int n) : color(n, 0) {}

    int size() const { return static_cast<int>(color.size()); }
    bool assigned(int v) const { return color[v] != 0; }
};

/// Which construction step added an auxiliary edge.
enum class AuxStep { step1a, step1b, step2, step3, step4 };

/// The auxiliary graph on V(T) whose bipartition drives the skeleton
/// coloring. Asserted to be a tree after construction.
struct AuxGraph {
    struct AuxEdge {
        Pair pair;
        AuxStep step;
    };
    std::vector<int> vertices;
    std::vector<AuxEdge> edges;

    bool has_pair(const Pair& p) const;
};

/// A special block with the five maximal subtrees hanging off its vertices.
/// subtrees[i] is anchored at block.vertices[i] (degenerate when nothing
/// hangs there).
struct BlockDecomposition {
    SpecialBlock block;
    std::array<LinearTree, 5> subtrees;
};

/// Thrown when a 5-set that must be colorable turns out to be complete;
/// signals that the global precondition (no K_5^3) failed.
struct K53FoundError : std::runtime_error {
    K53Witness witness;
    explicit K53FoundError(const K53Witness& w)
        : std::runtime_error("complete 5-set found"), witness(w) {}
};

using ColorResult = std::variant<Coloring, LinearCycleWitness, K53Witness>;

/// Splits T along a special block into the five maximal subtrees meeting
/// the block in exactly their anchor vertex.
BlockDecomposition decompose_special_block(const LinearTree& t, const SpecialBlock& b);

/// Proper 2-coloring of the subhypergraph induced on the five block
/// vertices, found by scanning all 32 assignments in fixed binary order.
/// Throws K53FoundError when the induced hypergraph is complete.
Coloring color_block(const Hypergraph& h, const SpecialBlock& b);

/// Construction steps 1a/1b, 2, 3, 4 applied in order over a tree without
/// special blocks. The result is verified to be a spanning tree of V(T).
AuxGraph build_aux_graph(const Hypergraph& h, const LinearTree& t);

/// The skeleton coloring: recursive block decomposition, then auxiliary-graph
/// bipartition; honors an optional fixed vertex color by flipping. The
/// returned coloring is partial, covering exactly V(T).
Coloring color_skeleton(const Hypergraph& h, const LinearTree& t,
                        std::optional<std::pair<int, int>> fixed = std::nullopt);

/// Color for an outside vertex strongly associated to at least one tree
/// edge, safe against every hyperedge vab with a, b in V(T).
int extend_to_outside(const Hypergraph& h, const LinearTree& t, const Coloring& gamma, int v);

/// Full pipeline: witness (linear cycle or K_5^3) or a verified proper
/// 2-coloring via the skeleton sequence.
ColorResult color_hypergraph(const Hypergraph& h);

/// True when no edge is monochromatic. Throws when gamma is partial or uses
/// colors outside 1..k.
bool verify_coloring(const Hypergraph& h, const Coloring& gamma, int k);

}  // namespace lcf
