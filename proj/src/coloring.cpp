#include "lcf/coloring.hpp"

#include <algorithm>
#include <deque>

namespace lcf {

bool AuxGraph::has_pair(const Pair& p) const {
    for (const AuxEdge& e : edges)
        if (e.pair == p) return true;
    return false;
}

// --- special blocks -----------------------------------------------------------

BlockDecomposition decompose_special_block(const LinearTree& t, const SpecialBlock& b) {
    auto i1 = std::find(t.edges.begin(), t.edges.end(), b.first);
    auto i2 = std::find(t.edges.begin(), t.edges.end(), b.second);
    if (i1 == t.edges.end() || i2 == t.edges.end() || i1 == i2)
        throw std::invalid_argument("decompose_special_block: block edges not in tree");
    int removed1 = static_cast<int>(i1 - t.edges.begin());
    int removed2 = static_cast<int>(i2 - t.edges.begin());

    BlockDecomposition dec;
    dec.block = b;
    std::vector<char> edge_taken(t.edges.size(), 0);
    edge_taken[removed1] = edge_taken[removed2] = 1;

    for (int x = 0; x < 5; ++x) {
        int anchor = b.vertices[x];
        // edges reachable from the anchor without crossing the block edges
        std::vector<int> component;
        std::vector<int> frontier{anchor};
        std::vector<char> vertex_seen(t.vertices.size(), 0);
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) -
                                    t.vertices.begin());
        };
        vertex_seen[local(anchor)] = 1;
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            for (size_t i = 0; i < t.edges.size(); ++i) {
                if (edge_taken[i] || !edge_contains(t.edges[i], v)) continue;
                edge_taken[i] = 1;
                component.push_back(static_cast<int>(i));
                for (int w : t.edges[i])
                    if (!vertex_seen[local(w)]) {
                        vertex_seen[local(w)] = 1;
                        frontier.push_back(w);
                    }
            }
        }
        std::sort(component.begin(), component.end());

        LinearTree sub;
        sub.root = anchor;
        sub.vertices = {anchor};
        std::vector<char> added(component.size(), 0);
        for (size_t round = 0; round < component.size(); ++round) {
            bool grew = false;
            for (size_t i = 0; i < component.size(); ++i) {
                if (added[i]) continue;
                const Edge& e = t.edges[component[i]];
                int k = 0, at = -1;
                for (int v : e)
                    if (sub.contains_vertex(v)) {
                        ++k;
                        at = v;
                    }
                if (k != 1) continue;
                sub.edges.push_back(e);
                sub.attach.push_back(at);
                for (int v : e)
                    if (!sub.contains_vertex(v))
                        sub.vertices.insert(
                            std::lower_bound(sub.vertices.begin(), sub.vertices.end(), v), v);
                added[i] = 1;
                grew = true;
            }
            if (!grew) break;
        }
        if (std::count(added.begin(), added.end(), 1) != static_cast<long>(component.size()))
            throw internal_error("decompose_special_block: component is not a linear subtree");
        for (int v : sub.vertices) {
            bool in_block = false;
            for (int bv : b.vertices) in_block |= (v == bv);
            if (in_block && v != anchor)
                throw internal_error("decompose_special_block: subtree meets block beyond anchor");
        }
        dec.subtrees[x] = std::move(sub);
    }

    if (std::count(edge_taken.begin(), edge_taken.end(), 1) !=
        static_cast<long>(t.edges.size()))
        throw internal_error("decompose_special_block: edges left unassigned");
    return dec;
}

Coloring color_block(const Hypergraph& h, const SpecialBlock& b) {
    const auto& vs = b.vertices;
    std::vector<Edge> inside;
    for (const Edge& e : h.edges()) {
        bool in = true;
        for (int v : e) in &= std::find(vs.begin(), vs.end(), v) != vs.end();
        if (in) inside.push_back(e);
    }
    auto color_at = [&](int m, int v) {
        int i = static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
        return 1 + ((m >> i) & 1);
    };
    for (int m = 0; m < 32; ++m) {
        bool proper = true;
        for (const Edge& e : inside) {
            int c0 = color_at(m, e[0]);
            if (c0 == color_at(m, e[1]) && c0 == color_at(m, e[2])) {
                proper = false;
                break;
            }
        }
        if (!proper) continue;
        Coloring g(h.vertex_count());
        for (int v : vs) g.color[v] = color_at(m, v);
        return g;
    }
    if (inside.size() != 10) throw internal_error("color_block: uncolorable non-complete 5-set");
    K53Witness w;
    std::copy(vs.begin(), vs.end(), w.vertices.begin());
    throw K53FoundError(w);
}

// --- auxiliary graph ------------------------------------------------------------

namespace {

void aux_add(AuxGraph& g, const Pair& p, AuxStep step) {
    if (!g.has_pair(p)) g.edges.push_back({p, step});
}

// The two vertices of e other than skip, ascending.
std::array<int, 2> other_two(const Edge& e, int skip) {
    std::array<int, 2> out{};
    int k = 0;
    for (int v : e)
        if (v != skip) out[k++] = v;
    return out;
}

void assert_aux_is_tree(const AuxGraph& g, const LinearTree& t) {
    size_t expected = t.edges.empty() ? 0 : 2 * t.edges.size();
    if (g.edges.size() != expected)
        throw internal_error("auxiliary graph: wrong edge count for a spanning tree");
    for (const Edge& te : t.edges) {
        int present = 0;
        for (const Pair& p : edge_pairs(te)) present += g.has_pair(p) ? 1 : 0;
        if (present != 2)
            throw internal_error("auxiliary graph: hyperedge does not carry exactly two pairs");
    }
    // connected with |V|-1 edges => tree
    if (t.vertices.empty()) throw internal_error("auxiliary graph: empty tree");
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) -
                                t.vertices.begin());
    };
    std::vector<std::vector<int>> adj(t.vertices.size());
    for (const AuxGraph::AuxEdge& e : g.edges) {
        adj[local(e.pair.first)].push_back(local(e.pair.second));
        adj[local(e.pair.second)].push_back(local(e.pair.first));
    }
    std::vector<char> seen(t.vertices.size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push_back(w);
            }
    }
    if (reached != t.vertices.size()) throw internal_error("auxiliary graph: not connected");
}

}  // namespace

AuxGraph build_aux_graph(const Hypergraph& h, const LinearTree& t) {
    AuxGraph g;
    g.vertices = t.vertices;
    int m = t.edge_count();

    // Step 1: tree edges h1 (thick) and h2 sharing b; v in h2 strongly
    // associated to h1 gets vb; the pair of h1 opposite b joins when its
    // supporting hyperedge through v exists.
    for (int i = 0; i < m; ++i) {
        const Edge& e1 = t.edges[i];
        if (!h.is_thick_edge(e1)) continue;
        for (int j = 0; j < m; ++j) {
            if (j == i || edge_intersection_size(e1, t.edges[j]) != 1) continue;
            const Edge& e2 = t.edges[j];
            int b = edge_shared_vertex(e1, e2);
            auto [a, c] = other_two(e1, b);
            for (int v : other_two(e2, b)) {
                if (association_kind(h, v, e1) != AssocKind::strong) continue;
                aux_add(g, make_pair_sorted(v, b), AuxStep::step1a);
                if (h.contains(make_edge(a, c, v)))
                    aux_add(g, make_pair_sorted(a, c), AuxStep::step1b);
            }
        }
    }

    // Step 2: weak associates pin their single support pair.
    for (int i = 0; i < m; ++i) {
        const Edge& te = t.edges[i];
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (edge_contains(te, v)) continue;
            Support s = support(h, v, te);
            if (s.pairs.size() == 1) aux_add(g, s.pairs[0], AuxStep::step2);
        }
    }

    // Step 3: an outside vertex strongly associated to both of two adjacent
    // tree edges pins the opposite pairs its supporting hyperedges cover.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& e1 = t.edges[i];
            const Edge& e2 = t.edges[j];
            if (edge_intersection_size(e1, e2) != 1) continue;
            int b = edge_shared_vertex(e1, e2);
            auto [a, c] = other_two(e1, b);
            auto [d, e] = other_two(e2, b);
            for (int v = 0; v < h.vertex_count(); ++v) {
                if (t.contains_vertex(v)) continue;
                if (association_kind(h, v, e1) != AssocKind::strong) continue;
                if (association_kind(h, v, e2) != AssocKind::strong) continue;
                if (h.contains(make_edge(a, c, v))) aux_add(g, make_pair_sorted(a, c), AuxStep::step3);
                if (h.contains(make_edge(d, e, v))) aux_add(g, make_pair_sorted(d, e), AuxStep::step3);
            }
        }

    // pairs added so far must be thick
    for (const AuxGraph::AuxEdge& ae : g.edges)
        if (!h.is_thick_pair(ae.pair))
            throw internal_error("auxiliary graph: steps 1-3 added a non-thick pair");

    // Step 4: top up every hyperedge to exactly two pairs; a non-thick
    // hyperedge keeps a non-thick pair out.
    for (int i = 0; i < m; ++i) {
        const Edge& te = t.edges[i];
        auto ps = edge_pairs(te);
        int present = 0;
        for (const Pair& p : ps) present += g.has_pair(p) ? 1 : 0;
        if (present > 2) throw internal_error("auxiliary graph: hyperedge already has three pairs");
        if (present == 2) continue;
        if (h.is_thick_edge(te)) {
            for (const Pair& p : ps) {
                if (g.has_pair(p)) continue;
                aux_add(g, p, AuxStep::step4);
                if (++present == 2) break;
            }
        } else {
            Pair excluded{-1, -1};
            for (int k = 2; k >= 0; --k)
                if (!g.has_pair(ps[k]) && !h.is_thick_pair(ps[k])) {
                    excluded = ps[k];
                    break;
                }
            if (excluded.first < 0)
                throw internal_error("auxiliary graph: no non-thick pair left to exclude");
            for (const Pair& p : ps)
                if (p != excluded && !g.has_pair(p)) aux_add(g, p, AuxStep::step4);
        }
    }

    assert_aux_is_tree(g, t);
    return g;
}

// --- skeleton coloring -----------------------------------------------------------

namespace {

Coloring bipartition_coloring(const AuxGraph& g, const LinearTree& t, int n) {
    Coloring out(n);
    if (t.edges.empty()) {
        out.color[t.root] = 1;
        return out;
    }
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) -
                                t.vertices.begin());
    };
    std::vector<std::vector<int>> adj(t.vertices.size());
    for (const AuxGraph::AuxEdge& e : g.edges) {
        adj[local(e.pair.first)].push_back(local(e.pair.second));
        adj[local(e.pair.second)].push_back(local(e.pair.first));
    }
    std::vector<int> side(t.vertices.size(), -1);
    std::deque<int> q{0};
    side[0] = 0;  // least vertex of V(T) gets color 1
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[u])
            if (side[w] < 0) {
                side[w] = 1 - side[u];
                q.push_back(w);
            }
    }
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        if (side[i] < 0) throw internal_error("bipartition: auxiliary graph not connected");
        out.color[t.vertices[i]] = 1 + side[i];
    }
    return out;
}

Coloring color_skeleton_raw(const Hypergraph& h, const LinearTree& t) {
    if (auto blk = find_special_block(h, t)) {
        BlockDecomposition dec = decompose_special_block(t, *blk);
        Coloring bc = color_block(h, *blk);
        Coloring out(h.vertex_count());
        for (int v : blk->vertices) out.color[v] = bc.color[v];
        for (int x = 0; x < 5; ++x) {
            int anchor = blk->vertices[x];
            Coloring sc = color_skeleton(h, dec.subtrees[x], std::pair{anchor, out.color[anchor]});
            for (int v : dec.subtrees[x].vertices) {
                if (out.color[v] != 0 && out.color[v] != sc.color[v])
                    throw internal_error("block subtree coloring conflicts with block coloring");
                out.color[v] = sc.color[v];
            }
        }
        return out;
    }
    AuxGraph g = build_aux_graph(h, t);
    return bipartition_coloring(g, t, h.vertex_count());
}

}  // namespace

Coloring color_skeleton(const Hypergraph& h, const LinearTree& t,
                        std::optional<std::pair<int, int>> fixed) {
    Coloring g = color_skeleton_raw(h, t);
    if (fixed) {
        auto [w, c] = *fixed;
        if (!t.contains_vertex(w))
            throw std::invalid_argument("color_skeleton: fixed vertex not in tree");
        if (c != 1 && c != 2) throw std::invalid_argument("color_skeleton: bad fixed color");
        if (g.color[w] != c)
            for (int v : t.vertices) g.color[v] = 3 - g.color[v];
    }
    for (const Edge& e : h.edges()) {
        if (!t.contains_vertex(e[0]) || !t.contains_vertex(e[1]) || !t.contains_vertex(e[2]))
            continue;
        if (g.color[e[0]] == g.color[e[1]] && g.color[e[1]] == g.color[e[2]])
            throw internal_error("skeleton coloring: induced subhypergraph improperly colored");
    }
    return g;
}

int extend_to_outside(const Hypergraph& h, const LinearTree& t, const Coloring& gamma, int v) {
    if (t.contains_vertex(v))
        throw std::invalid_argument("extend_to_outside: vertex lies in the tree");
    std::vector<Edge> strong;
    for (const Edge& te : t.edges)
        if (association_kind(h, v, te) == AssocKind::strong) strong.push_back(te);
    if (strong.empty())
        throw std::invalid_argument("extend_to_outside: vertex not strongly associated");
    if (strong.size() == 1) {
        const Edge& e = strong[0];
        int c0 = gamma.color[e[0]], c1 = gamma.color[e[1]], c2 = gamma.color[e[2]];
        if (c0 == 0 || c1 == 0 || c2 == 0)
            throw internal_error("extend_to_outside: tree edge not fully colored");
        int dup = (c0 == c1 || c0 == c2) ? c0 : c1;
        return 3 - dup;
    }
    // all strongly associated edges share a single vertex
    std::vector<int> common(strong[0].begin(), strong[0].end());
    for (const Edge& e : strong) {
        std::vector<int> next;
        for (int u : common)
            if (edge_contains(e, u)) next.push_back(u);
        common = std::move(next);
    }
    if (common.size() != 1)
        throw internal_error("extend_to_outside: strong edges lack a single common vertex");
    int o = common[0];
    if (gamma.color[o] == 0) throw internal_error("extend_to_outside: common vertex uncolored");
    return 3 - gamma.color[o];
}

// --- full pipeline -----------------------------------------------------------

namespace {

// Colors one induced level: a skeleton sequence seeded by the frontier of
// strongly associated outside vertices, then recursion on what remains.
void color_level(const Hypergraph& h, Coloring& out) {
    int n = h.vertex_count();
    if (n == 0) return;
    if (h.edge_count() == 0) {
        for (int v = 0; v < n; ++v) out.color[v] = 1;
        return;
    }

    std::vector<LinearTree> trees;
    std::vector<char> colored(n, 0);
    std::vector<char> remaining(n, 1);

    auto adopt = [&](const LinearTree& t, const Coloring& gamma) {
        for (int v : t.vertices) {
            if (colored[v]) throw internal_error("pipeline: recoloring a colored vertex");
            out.color[v] = gamma.color[v];
            colored[v] = 1;
            remaining[v] = 0;
        }
        trees.push_back(t);
    };

    LinearTree t1 = build_skeleton(h, h.edges().front());
    adopt(t1, color_skeleton(h, t1));

    for (;;) {
        // frontier: uncolored vertices strongly associated to a colored tree edge
        int u = -1;
        std::vector<char> in_frontier(n, 0);
        for (int v = 0; v < n; ++v) {
            if (colored[v]) continue;
            for (const LinearTree& t : trees) {
                bool strong = false;
                for (const Edge& te : t.edges)
                    if (association_kind(h, v, te) == AssocKind::strong) {
                        strong = true;
                        break;
                    }
                if (strong) {
                    in_frontier[v] = 1;
                    if (u < 0) u = v;
                    break;
                }
            }
        }
        if (u < 0) break;

        // the chosen vertex must be strongly associated to exactly one tree
        int source_tree = -1;
        for (size_t s = 0; s < trees.size(); ++s) {
            bool strong = false;
            for (const Edge& te : trees[s].edges)
                if (association_kind(h, u, te) == AssocKind::strong) {
                    strong = true;
                    break;
                }
            if (!strong) continue;
            if (source_tree >= 0)
                throw internal_error("pipeline: frontier vertex strongly associated to two trees");
            source_tree = static_cast<int>(s);
        }

        // colored pairs under a frontier edge must sit inside a single tree
        for (const Edge& e : h.edges()) {
            if (!edge_contains(e, u)) continue;
            std::vector<int> cs;
            for (int w : e)
                if (w != u && colored[w]) cs.push_back(w);
            if (cs.size() != 2) continue;
            bool inside_one = false;
            for (const LinearTree& t : trees)
                inside_one |= t.contains_vertex(cs[0]) && t.contains_vertex(cs[1]);
            if (!inside_one)
                throw internal_error("pipeline: frontier edge straddles two trees");
        }

        int cu = extend_to_outside(h, trees[source_tree], out, u);
        LinearTree t = build_skeleton(h, u, remaining);

        // the new skeleton grabs exactly one frontier vertex, u itself
        for (int v : t.vertices)
            if (in_frontier[v] && v != u)
                throw internal_error("pipeline: new skeleton contains a second frontier vertex");

        // vertices strongly associated to the new tree are still uncolored
        for (int v = 0; v < n; ++v) {
            if (!colored[v]) continue;
            for (const Edge& te : t.edges)
                if (association_kind(h, v, te) == AssocKind::strong)
                    throw internal_error("pipeline: colored vertex strongly associated to new tree");
        }

        adopt(t, color_skeleton(h, t, std::pair{u, cu}));
    }

    // frontier exhausted: the colored part must be sealed off
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!colored[v]) rest.push_back(v);
    for (const Edge& e : h.edges()) {
        int k = 0;
        for (int v : e) k += colored[v] ? 1 : 0;
        if (k == 1)
            throw internal_error("pipeline: edge meets the colored region in one vertex");
        if (k == 2) {
            int x = -1, y = -1;
            for (int v : e)
                if (colored[v]) (x < 0 ? x : y) = v;
            bool inside_one = false;
            for (const LinearTree& t : trees)
                inside_one |= t.contains_vertex(x) && t.contains_vertex(y);
            if (!inside_one)
                throw internal_error("pipeline: boundary pair straddles two trees");
            if (out.color[x] == out.color[y])
                throw internal_error("pipeline: boundary pair is monochromatic");
        }
    }

    if (rest.empty()) return;
    auto [sub, map] = h.induced(rest);
    Coloring sub_color(sub.vertex_count());
    color_level(sub, sub_color);
    for (int i = 0; i < sub.vertex_count(); ++i) out.color[map.to_old[i]] = sub_color.color[i];
}

}  // namespace

ColorResult color_hypergraph(const Hypergraph& h) {
    if (auto cyc = find_linear_cycle(h)) return *cyc;
    if (auto k5 = find_k53(h)) return *k5;
    Coloring out(h.vertex_count());
    color_level(h, out);
    if (!verify_coloring(h, out, 2))
        throw internal_error("pipeline produced an improper coloring");
    return out;
}

bool verify_coloring(const Hypergraph& h, const Coloring& gamma, int k) {
    if (gamma.size() != h.vertex_count())
        throw std::invalid_argument("verify_coloring: coloring size mismatch");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (gamma.color[v] < 1 || gamma.color[v] > k)
            throw std::invalid_argument("verify_coloring: coloring is partial or out of range");
    for (const Edge& e : h.edges())
        if (gamma.color[e[0]] == gamma.color[e[1]] && gamma.color[e[1]] == gamma.color[e[2]])
            return false;
    return true;
}

}  // namespace lcf
