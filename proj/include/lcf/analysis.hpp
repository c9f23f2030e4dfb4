#pragma once

#include <optional>
#include <vector>

#include "lcf/coloring.hpp"
#include "lcf/hypergraph.hpp"

namespace lcf {

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness;  // sorted, contains no edge
};

/// Exact maximum independent set via branch and bound: branch on the least
/// undecided vertex, prune when the remainder cannot beat the incumbent.
IndependenceResult independence_number(const Hypergraph& h);

/// The larger color class of a proper coloring (color 1 wins ties).
std::vector<int> independent_set_from_coloring(const Hypergraph& h, const Coloring& gamma);

/// Maximum matching size of the link of v; exhaustive over edge subsets for
/// links with at most 12 edges, exact branch and bound beyond.
int strong_degree(const Hypergraph& h, int v);

/// Least-id vertex of minimum degree.
std::pair<int, int> min_degree_vertex(const Hypergraph& h);

/// Lexicographically least pair {u, v} with uvx in E(H) for every other x.
std::optional<Pair> find_universal_pair(const Hypergraph& h);

struct ReductionStep {
    Hypergraph reduced;
    InducedResult map;
    std::array<int, 4> removed;  // the two universal pairs, sorted
};

/// One degree-reduction round: locate two disjoint universal pairs, drop
/// their four vertices, and return the induced remainder. Every surviving
/// vertex is checked to lose exactly two hyperedges; requires a
/// linear-cycle-free host. Absent when n < 6 or the pairs do not exist.
std::optional<ReductionStep> reduction_step(const Hypergraph& h);

struct DegreeTheoremReport {
    bool applicable = false;  // n >= 10
    bool holds = false;
    int witness_vertex = -1;
    int witness_degree = -1;
    // descent certificate (n_l, s_l) showing the impossibility of a
    // min-degree >= n-1 instance; empty when holds
    std::vector<std::pair<int, int>> descent;
};

/// Checks the n-2 degree bound on a linear-cycle-free host with n >= 10.
DegreeTheoremReport check_degree_theorem(const Hypergraph& h);

}  // namespace lcf
