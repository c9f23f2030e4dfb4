#pragma once

#include <cstdint>

#include "lcf/hypergraph.hpp"

namespace lcf {

/// Complete 3-uniform hypergraph on n >= 3 vertices.
Hypergraph complete_k3(int n);

/// The extremal family: a single edge (n odd) or K_4^3 (n even) plus, for
/// every further vertex pair {v_{i+1}, v_{i+2}}, all edges through the
/// earlier vertices. Vertex id i stands for v_{i+1}.
Hypergraph extremal_Hn(int n);

/// Nine vertices, every degree 8, no linear cycles: K_4^3 on {0,1,2,3},
/// K_5^3 on {4..8}, and bridges {0,1,x}, {2,3,x} for x in 4..8.
Hypergraph nine_vertex_example();

/// All pairs through the apex vertex 0: C(n-1,2) edges.
Hypergraph star_construction(int n);

/// k vertex-disjoint copies of K_5^3.
Hypergraph disjoint_k53_union(int k);

/// Seeded incremental generator: keeps sampling triples and accepts one iff
/// the hypergraph stays linear-cycle-free, until the target edge count or a
/// stall bound is reached. Deterministic for fixed arguments.
Hypergraph random_lcf(int n, std::uint64_t seed, int target_edges);

}  // namespace lcf
