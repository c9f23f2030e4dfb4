#include "lcf/association.hpp"

#include <algorithm>

namespace lcf {

Support support(const Hypergraph& h, int v, const Edge& e) {
    if (edge_contains(e, v)) throw std::invalid_argument("support: vertex lies inside the edge");
    Support s;
    s.vertex = v;
    s.edge = e;
    for (const Pair& p : edge_pairs(e))
        if (h.contains(make_edge(v, p.first, p.second))) s.pairs.push_back(p);
    return s;
}

AssocKind association_kind(const Hypergraph& h, int v, const Edge& e) {
    size_t k = support(h, v, e).pairs.size();
    if (k >= 2) return AssocKind::strong;
    if (k == 1) return AssocKind::weak;
    return AssocKind::none;
}

AssociationProfile association_profile(const Hypergraph& h, const Edge& e) {
    if (!h.contains(e)) throw std::invalid_argument("association_profile: edge not in hypergraph");
    if (!h.is_thick_edge(e)) throw std::invalid_argument("association_profile: edge is not thick");
    AssociationProfile prof;
    prof.edge = e;
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (edge_contains(e, v)) continue;
        Support s = support(h, v, e);
        if (s.pairs.empty()) continue;
        AssocKind kind = s.pairs.size() >= 2 ? AssocKind::strong : AssocKind::weak;
        prof.entries.push_back({v, kind, std::move(s)});
    }
    int strong = 0;
    std::vector<Pair> weak_union;
    for (const AssocEntry& a : prof.entries) {
        if (a.kind == AssocKind::strong) {
            ++strong;
        } else {
            for (const Pair& p : a.support.pairs) weak_union.push_back(p);
        }
    }
    std::sort(weak_union.begin(), weak_union.end());
    weak_union.erase(std::unique(weak_union.begin(), weak_union.end()), weak_union.end());
    if (strong == 2 && weak_union.empty())
        prof.shape = ProfileCase::two_strong;
    else if (strong == 1 && weak_union.size() <= 1)
        prof.shape = ProfileCase::one_strong_aligned;
    else
        prof.shape = ProfileCase::unclassified;
    return prof;
}

bool is_special_block(const Hypergraph& h, const Edge& e1, const Edge& e2) {
    if (edge_intersection_size(e1, e2) != 1) return false;
    std::vector<int> five(e1.begin(), e1.end());
    for (int v : e2)
        if (!edge_contains(e1, v)) five.push_back(v);
    for (const Edge& e : h.edges()) {
        int k = 0;
        for (int v : e) k += std::count(five.begin(), five.end(), v) ? 1 : 0;
        if (k == 2) return false;
    }
    return true;
}

std::optional<SpecialBlock> find_special_block(const Hypergraph& h, const LinearTree& t) {
    int m = t.edge_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = t.edges[i];
            const Edge& b = t.edges[j];
            if (edge_intersection_size(a, b) != 1) continue;
            if (!is_special_block(h, a, b)) continue;
            SpecialBlock blk;
            blk.first = a;
            blk.second = b;
            std::vector<int> five(a.begin(), a.end());
            for (int v : b)
                if (!edge_contains(a, v)) five.push_back(v);
            std::sort(five.begin(), five.end());
            std::copy(five.begin(), five.end(), blk.vertices.begin());
            return blk;
        }
    return std::nullopt;
}

}  // namespace lcf
