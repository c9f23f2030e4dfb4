#pragma once

#include <optional>
#include <vector>

#include "lcf/hypergraph.hpp"
#include "lcf/linear.hpp"

namespace lcf {

/// Pairs of hyperedge `edge` that form a hyperedge with the outside
/// vertex `vertex`.
struct Support {
    int vertex = -1;
    Edge edge{};
    std::vector<Pair> pairs;  // sorted
};

enum class AssocKind { none, weak, strong };

struct AssocEntry {
    int vertex;
    AssocKind kind;
    Support support;
};

/// How the associated vertices of a thick hyperedge split up. In a
/// linear-cycle-free host this is always one of the first two shapes.
enum class ProfileCase {
    two_strong,            // exactly two strong associates, no weak ones
    one_strong_aligned,    // one strong associate; all weak supports share one pair
    unclassified,          // anything else (host has a linear cycle)
};

struct AssociationProfile {
    Edge edge{};
    std::vector<AssocEntry> entries;  // associated vertices, ascending
    ProfileCase shape = ProfileCase::unclassified;
};

/// Five vertices spanned by two adjacent tree edges such that no hyperedge
/// meets them in exactly two vertices.
struct SpecialBlock {
    std::array<int, 5> vertices;  // sorted
    Edge first{}, second{};       // the two spanning tree edges
};

Support support(const Hypergraph& h, int v, const Edge& e);

AssocKind association_kind(const Hypergraph& h, int v, const Edge& e);

/// Classifies every associated vertex of a thick hyperedge. Throws when
/// e is missing from H or not thick.
AssociationProfile association_profile(const Hypergraph& h, const Edge& e);

/// Direct definitional check on the union of two tree edges sharing one
/// vertex: no hyperedge of H meets the 5-set in exactly two vertices.
bool is_special_block(const Hypergraph& h, const Edge& e1, const Edge& e2);

/// First special block over adjacent tree-edge pairs, scanning pairs in the
/// tree's construction order.
std::optional<SpecialBlock> find_special_block(const Hypergraph& h, const LinearTree& t);

}  // namespace lcf
