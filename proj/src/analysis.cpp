#include "lcf/analysis.hpp"

#include <algorithm>

namespace lcf {

namespace {

struct AlphaSearch {
    const Hypergraph& h;
    std::vector<std::vector<int>> edges_at;  // edge indices by vertex
    std::vector<char> chosen;
    std::vector<int> current;
    IndependenceResult best;

    explicit AlphaSearch(const Hypergraph& hh) : h(hh), edges_at(hh.vertex_count()), chosen(hh.vertex_count(), 0) {
        for (int i = 0; i < h.edge_count(); ++i)
            for (int v : h.edges()[i]) edges_at[v].push_back(i);
    }

    bool closes_edge(int v) const {
        for (int i : edges_at[v]) {
            const Edge& e = h.edges()[i];
            int k = 0;
            for (int w : e) k += (w == v || chosen[w]) ? 1 : 0;
            if (k == 3) return true;
        }
        return false;
    }

    void run(int v) {
        int n = h.vertex_count();
        if (static_cast<int>(current.size()) + (n - v) <= best.alpha) return;
        if (v == n) {
            best.alpha = static_cast<int>(current.size());
            best.witness = current;
            return;
        }
        if (!closes_edge(v)) {
            chosen[v] = 1;
            current.push_back(v);
            run(v + 1);
            current.pop_back();
            chosen[v] = 0;
        }
        run(v + 1);
    }
};

}  // namespace

IndependenceResult independence_number(const Hypergraph& h) {
    AlphaSearch s(h);
    s.best.alpha = -1;
    s.run(0);
    return s.best;
}

std::vector<int> independent_set_from_coloring(const Hypergraph& h, const Coloring& gamma) {
    if (!verify_coloring(h, gamma, 2))
        throw std::invalid_argument("independent_set_from_coloring: coloring is improper");
    std::vector<int> one, two;
    for (int v = 0; v < h.vertex_count(); ++v)
        (gamma.color[v] == 1 ? one : two).push_back(v);
    return one.size() >= two.size() ? one : two;
}

namespace {

bool pairs_disjoint(const Pair& a, const Pair& b) {
    return a.first != b.first && a.first != b.second && a.second != b.first &&
           a.second != b.second;
}

int matching_exhaustive(const std::vector<Pair>& es) {
    int m = static_cast<int>(es.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        int size = 0;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            ++size;
            for (int j = i + 1; j < m && ok; ++j)
                if ((mask >> j & 1) && !pairs_disjoint(es[i], es[j])) ok = false;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// exact: branch on the least live vertex, either unmatched or matched to
// one of its neighbours
void matching_branch(std::vector<Pair> es, int size, int& best) {
    if (es.empty()) {
        best = std::max(best, size);
        return;
    }
    std::vector<int> live;
    for (const Pair& p : es) {
        live.push_back(p.first);
        live.push_back(p.second);
    }
    std::sort(live.begin(), live.end());
    live.erase(std::unique(live.begin(), live.end()), live.end());
    int bound = std::min(static_cast<int>(es.size()), static_cast<int>(live.size()) / 2);
    if (size + bound <= best) return;
    int v = es[0].first;
    for (const Pair& p : es) v = std::min({v, p.first, p.second});
    std::vector<Pair> without_v;
    for (const Pair& p : es)
        if (p.first != v && p.second != v) without_v.push_back(p);
    std::vector<Pair> at_v;
    for (const Pair& p : es)
        if (p.first == v || p.second == v) at_v.push_back(p);
    for (const Pair& p : at_v) {
        int u = p.first == v ? p.second : p.first;
        std::vector<Pair> rest;
        for (const Pair& q : without_v)
            if (q.first != u && q.second != u) rest.push_back(q);
        matching_branch(std::move(rest), size + 1, best);
    }
    matching_branch(std::move(without_v), size, best);
}

}  // namespace

int strong_degree(const Hypergraph& h, int v) {
    LinkGraph link = h.link_graph(v);
    if (link.edges.size() <= 12) return matching_exhaustive(link.edges);
    int best = 0;
    matching_branch(link.edges, 0, best);
    return best;
}

std::pair<int, int> min_degree_vertex(const Hypergraph& h) {
    if (h.vertex_count() == 0)
        throw std::invalid_argument("min_degree_vertex: empty vertex set");
    int arg = 0, best = h.degree(0);
    for (int v = 1; v < h.vertex_count(); ++v) {
        int d = h.degree(v);
        if (d < best) {
            best = d;
            arg = v;
        }
    }
    return {arg, best};
}

namespace {

bool pair_universal(const Hypergraph& h, int u, int v) {
    for (int x = 0; x < h.vertex_count(); ++x) {
        if (x == u || x == v) continue;
        if (!h.contains(make_edge(u, v, x))) return false;
    }
    return true;
}

}  // namespace

std::optional<Pair> find_universal_pair(const Hypergraph& h) {
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u + 1; v < h.vertex_count(); ++v)
            if (pair_universal(h, u, v)) return Pair{u, v};
    return std::nullopt;
}

std::optional<ReductionStep> reduction_step(const Hypergraph& h) {
    int n = h.vertex_count();
    if (n < 6) return std::nullopt;
    auto first = find_universal_pair(h);
    if (!first) return std::nullopt;
    std::optional<Pair> second;
    for (int x = 0; x < n && !second; ++x) {
        if (x == first->first || x == first->second) continue;
        for (int y = x + 1; y < n && !second; ++y) {
            if (y == first->first || y == first->second) continue;
            if (pair_universal(h, x, y)) second = Pair{x, y};
        }
    }
    if (!second) return std::nullopt;

    std::array<int, 4> removed{first->first, first->second, second->first, second->second};
    std::sort(removed.begin(), removed.end());
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(removed.begin(), removed.end(), v)) keep.push_back(v);
    auto [reduced, map] = h.induced(keep);
    for (int i = 0; i < reduced.vertex_count(); ++i)
        if (reduced.degree(i) != h.degree(map.to_old[i]) - 2)
            throw internal_error("reduction_step: a surviving vertex lost other than two edges");
    return ReductionStep{std::move(reduced), std::move(map), removed};
}

DegreeTheoremReport check_degree_theorem(const Hypergraph& h) {
    DegreeTheoremReport rep;
    rep.applicable = h.vertex_count() >= 10;
    if (!rep.applicable) return rep;
    auto [v, d] = min_degree_vertex(h);
    if (d <= h.vertex_count() - 2) {
        rep.holds = true;
        rep.witness_vertex = v;
        rep.witness_degree = d;
        return rep;
    }
    // a min-degree >= n-1 linear-cycle-free host cannot exist: the descent
    // removes four vertices per round while the slack grows by two
    rep.holds = false;
    int nl = h.vertex_count(), sl = -1;
    rep.descent.push_back({nl, sl});
    while (nl >= 6) {
        nl -= 4;
        sl += 2;
        rep.descent.push_back({nl, sl});
    }
    return rep;
}

}  // namespace lcf
