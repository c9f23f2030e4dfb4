#include "lcf/constructions.hpp"

#include <random>

#include "lcf/linear.hpp"

namespace lcf {

Hypergraph complete_k3(int n) {
    if (n < 3) throw std::invalid_argument("complete_k3: n >= 3 required");
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) es.push_back({a, b, c});
    return Hypergraph(n, es);
}

Hypergraph extremal_Hn(int n) {
    if (n < 3) throw std::invalid_argument("extremal_Hn: n >= 3 required");
    std::vector<Edge> es;
    int base = (n % 2 == 0) ? 4 : 3;
    if (base == 3) {
        es.push_back({0, 1, 2});
    } else {
        es = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    }
    for (int i = base; i + 2 <= n; i += 2) {
        // new vertices i and i+1 pair with every earlier vertex
        for (int j = 0; j < i; ++j) es.push_back(make_edge(i, i + 1, j));
    }
    return Hypergraph(n, es);
}

Hypergraph nine_vertex_example() {
    std::vector<Edge> es = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int a = 4; a < 9; ++a)
        for (int b = a + 1; b < 9; ++b)
            for (int c = b + 1; c < 9; ++c) es.push_back({a, b, c});
    for (int x = 4; x < 9; ++x) {
        es.push_back(make_edge(0, 1, x));
        es.push_back(make_edge(2, 3, x));
    }
    return Hypergraph(9, es);
}

Hypergraph star_construction(int n) {
    if (n < 3) throw std::invalid_argument("star_construction: n >= 3 required");
    std::vector<Edge> es;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.push_back({0, a, b});
    return Hypergraph(n, es);
}

Hypergraph disjoint_k53_union(int k) {
    if (k < 1) throw std::invalid_argument("disjoint_k53_union: k >= 1 required");
    std::vector<Edge> es;
    for (int copy = 0; copy < k; ++copy) {
        int base = 5 * copy;
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c) es.push_back({base + a, base + b, base + c});
    }
    return Hypergraph(5 * k, es);
}

Hypergraph random_lcf(int n, std::uint64_t seed, int target_edges) {
    if (n < 3) throw std::invalid_argument("random_lcf: n >= 3 required");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Edge> acc;
    Hypergraph cur(n, {});
    const int stall_bound = 200 * (target_edges + 1) + 500;
    int stall = 0;
    while (static_cast<int>(acc.size()) < target_edges && stall < stall_bound) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        ++stall;
        if (a == b || b == c || a == c) continue;
        Edge e = make_edge(a, b, c);
        if (cur.contains(e)) continue;
        acc.push_back(e);
        Hypergraph cand(n, acc);
        // any new linear cycle would have to pass through the new edge
        if (find_linear_cycle_through(cand, e)) {
            acc.pop_back();
            continue;
        }
        cur = std::move(cand);
        stall = 0;
    }
    return cur;
}

}  // namespace lcf
