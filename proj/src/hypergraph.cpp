#include "lcf/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace lcf {

Hypergraph::Hypergraph(int n, const std::vector<Edge>& triples) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    edges_.reserve(triples.size());
    for (const Edge& t : triples) {
        Edge e = make_edge(t[0], t[1], t[2]);
        if (e[0] == e[1] || e[1] == e[2])
            throw std::invalid_argument("repeated vertex in triple {" + std::to_string(t[0]) + "," +
                                        std::to_string(t[1]) + "," + std::to_string(t[2]) + "}");
        if (e[0] < 0 || e[2] >= n_)
            throw std::invalid_argument("vertex id out of range in triple {" + std::to_string(t[0]) +
                                        "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}");
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    pair_index_.reserve(edges_.size() * 3);
    for (const Edge& e : edges_) {
        pair_index_.push_back({e[0], e[1], e[2]});
        pair_index_.push_back({e[0], e[2], e[1]});
        pair_index_.push_back({e[1], e[2], e[0]});
    }
    std::sort(pair_index_.begin(), pair_index_.end());
}

void Hypergraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

bool Hypergraph::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_) d += edge_contains(e, v) ? 1 : 0;
    return d;
}

LinkGraph Hypergraph::link_graph(int v) const {
    check_vertex(v);
    LinkGraph g;
    g.center = v;
    for (const Edge& e : edges_) {
        if (!edge_contains(e, v)) continue;
        int x = -1, y = -1;
        for (int w : e)
            if (w != v) (x < 0 ? x : y) = w;
        g.edges.push_back(make_pair_sorted(x, y));
    }
    return g;
}

std::vector<int> Hypergraph::pair_thirds(int a, int b) const {
    Pair p = make_pair_sorted(a, b);
    std::array<int, 3> lo{p.first, p.second, -1};
    std::array<int, 3> hi{p.first, p.second, n_};
    auto b0 = std::lower_bound(pair_index_.begin(), pair_index_.end(), lo);
    auto b1 = std::upper_bound(pair_index_.begin(), pair_index_.end(), hi);
    std::vector<int> out;
    out.reserve(b1 - b0);
    for (auto it = b0; it != b1; ++it) out.push_back((*it)[2]);
    return out;
}

bool Hypergraph::is_thick_pair(int a, int b) const {
    Pair p = make_pair_sorted(a, b);
    std::array<int, 3> lo{p.first, p.second, -1};
    auto it = std::lower_bound(pair_index_.begin(), pair_index_.end(), lo);
    int count = 0;
    while (it != pair_index_.end() && (*it)[0] == p.first && (*it)[1] == p.second) {
        if (++count >= 2) return true;
        ++it;
    }
    return false;
}

bool Hypergraph::is_thick_edge(const Edge& e) const {
    for (const Pair& p : edge_pairs(e))
        if (!is_thick_pair(p)) return false;
    return true;
}

std::pair<Hypergraph, InducedResult> Hypergraph::induced(const std::vector<int>& S) const {
    InducedResult map;
    map.to_new.assign(n_, -1);
    map.to_old = S;
    std::sort(map.to_old.begin(), map.to_old.end());
    map.to_old.erase(std::unique(map.to_old.begin(), map.to_old.end()), map.to_old.end());
    for (int i = 0; i < static_cast<int>(map.to_old.size()); ++i) {
        check_vertex(map.to_old[i]);
        map.to_new[map.to_old[i]] = i;
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        if (map.to_new[e[0]] < 0 || map.to_new[e[1]] < 0 || map.to_new[e[2]] < 0) continue;
        kept.push_back(make_edge(map.to_new[e[0]], map.to_new[e[1]], map.to_new[e[2]]));
    }
    return {Hypergraph(static_cast<int>(map.to_old.size()), kept), std::move(map)};
}

namespace {

bool all_pairs_thick(const Hypergraph& h, const std::array<int, 5>& s) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!h.is_thick_pair(s[i], s[j])) return false;
    return true;
}

bool all_ten_triples_present(const Hypergraph& h, const std::array<int, 5>& s) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k)
                if (!h.contains(make_edge(s[i], s[j], s[k]))) return false;
    return true;
}

}  // namespace

std::optional<K53Witness> find_k53(const Hypergraph& h) {
    // a complete 5-set forces every internal pair thick, so pruning is sound
    int n = h.vertex_count();
    if (n < 5) return std::nullopt;
    std::array<int, 5> s{};
    for (s[0] = 0; s[0] < n - 4; ++s[0])
        for (s[1] = s[0] + 1; s[1] < n - 3; ++s[1])
            for (s[2] = s[1] + 1; s[2] < n - 2; ++s[2])
                for (s[3] = s[2] + 1; s[3] < n - 1; ++s[3])
                    for (s[4] = s[3] + 1; s[4] < n; ++s[4])
                        if (all_pairs_thick(h, s) && all_ten_triples_present(h, s))
                            return K53Witness{s};
    return std::nullopt;
}

}  // namespace lcf
