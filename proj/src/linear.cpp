#include "lcf/linear.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace lcf {

bool LinearTree::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

void insert_sorted(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

bool all_distinct_ints(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

bool all_distinct_edges(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

}  // namespace

// --- validators -------------------------------------------------------------

bool validate_linear_path(const Hypergraph& h, const LinearPath& p) {
    int k = p.length();
    if (static_cast<int>(p.vertices.size()) != k + 1) return false;
    for (int v : p.vertices)
        if (v < 0 || v >= h.vertex_count()) return false;
    if (!all_distinct_ints(p.vertices)) return false;
    if (!all_distinct_edges(p.edges)) return false;
    if (k == 0) return true;
    for (const Edge& e : p.edges)
        if (!h.contains(e)) return false;
    if (!edge_contains(p.edges.front(), p.vertices.front())) return false;
    if (!edge_contains(p.edges.back(), p.vertices.back())) return false;
    for (int i = 0; i + 1 < k; ++i) {
        if (edge_intersection_size(p.edges[i], p.edges[i + 1]) != 1) return false;
        if (edge_shared_vertex(p.edges[i], p.edges[i + 1]) != p.vertices[i + 1]) return false;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            if (edge_intersection_size(p.edges[i], p.edges[j]) != 0) return false;
    return true;
}

bool validate_linear_cycle(const Hypergraph& h, const LinearCycleWitness& c) {
    int k = c.length();
    if (k < 3) return false;
    if (static_cast<int>(c.vertices.size()) != k) return false;
    for (int v : c.vertices)
        if (v < 0 || v >= h.vertex_count()) return false;
    if (!all_distinct_ints(c.vertices)) return false;
    if (!all_distinct_edges(c.edges)) return false;
    for (const Edge& e : c.edges)
        if (!h.contains(e)) return false;
    for (int i = 0; i < k; ++i) {
        const Edge& prev = c.edges[(i + k - 1) % k];
        const Edge& cur = c.edges[i];
        if (edge_intersection_size(prev, cur) != 1) return false;
        if (edge_shared_vertex(prev, cur) != c.vertices[i]) return false;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int d = std::min(j - i, k - (j - i));
            if (d >= 2 && edge_intersection_size(c.edges[i], c.edges[j]) != 0) return false;
        }
    return true;
}

bool validate_linear_tree(const Hypergraph& h, const LinearTree& t) {
    if (t.edges.size() != t.attach.size()) return false;
    if (t.edges.empty()) {
        if (t.root < 0 || t.root >= h.vertex_count()) return false;
        return t.vertices == std::vector<int>{t.root};
    }
    if (!all_distinct_edges(t.edges)) return false;
    if (!edge_contains(t.edges[0], t.root)) return false;
    std::vector<int> u(t.edges[0].begin(), t.edges[0].end());
    std::sort(u.begin(), u.end());
    for (size_t i = 0; i < t.edges.size(); ++i) {
        if (!h.contains(t.edges[i])) return false;
        if (i == 0) continue;
        int shared = 0, at = -1;
        for (int v : t.edges[i])
            if (std::binary_search(u.begin(), u.end(), v)) { ++shared; at = v; }
        if (shared != 1 || at != t.attach[i]) return false;
        for (int v : t.edges[i])
            if (v != at) insert_sorted(u, v);
    }
    return u == t.vertices;
}

bool is_maximal_linear_tree(const Hypergraph& h, const LinearTree& t,
                            const std::vector<char>& allowed) {
    for (const Edge& e : h.edges()) {
        if (!allowed.empty() && !(allowed[e[0]] && allowed[e[1]] && allowed[e[2]])) continue;
        int k = 0;
        for (int v : e) k += t.contains_vertex(v) ? 1 : 0;
        if (k == 1) return false;
    }
    return true;
}

bool is_maximal_linear_tree(const Hypergraph& h, const LinearTree& t) {
    return is_maximal_linear_tree(h, t, {});
}

// --- cycle search -------------------------------------------------------------

namespace {

// DFS over alternating sequences. Candidates are scanned in increasing edge
// order; a sequence closes into a cycle when the new edge also meets the
// first edge in exactly one vertex.
struct CycleDfs {
    const Hypergraph& h;
    const std::vector<Edge>& es;
    int maxk;           // cycles have at most n/2 edges
    bool anchored_min;  // restrict candidates to indices above the anchor
    std::vector<int> path;
    std::vector<char> used;

    std::optional<LinearCycleWitness> run_from(int anchor) {
        path.assign(1, anchor);
        used.assign(es.size(), 0);
        used[anchor] = 1;
        return dfs();
    }

    std::optional<LinearCycleWitness> try_close(int idx) {
        std::vector<Edge> edges;
        edges.reserve(path.size() + 1);
        for (int i : path) edges.push_back(es[i]);
        edges.push_back(es[idx]);
        int k = static_cast<int>(edges.size());
        std::vector<int> verts(k);
        verts[0] = edge_shared_vertex(edges[k - 1], edges[0]);
        for (int i = 1; i < k; ++i) verts[i] = edge_shared_vertex(edges[i - 1], edges[i]);
        if (!all_distinct_ints(verts)) return std::nullopt;
        LinearCycleWitness w{std::move(verts), std::move(edges)};
        if (!validate_linear_cycle(h, w))
            throw internal_error("cycle search produced an invalid witness");
        return w;
    }

    std::optional<LinearCycleWitness> dfs() {
        const Edge& first = es[path[0]];
        const Edge& last = es[path.back()];
        int lo = anchored_min ? path[0] + 1 : 0;
        for (int idx = lo; idx < static_cast<int>(es.size()); ++idx) {
            if (used[idx]) continue;
            const Edge& e = es[idx];
            if (edge_intersection_size(e, last) != 1) continue;
            bool mid_ok = true;
            for (size_t j = 1; j + 1 < path.size(); ++j)
                if (edge_intersection_size(e, es[path[j]]) != 0) {
                    mid_ok = false;
                    break;
                }
            if (!mid_ok) continue;
            if (path.size() >= 2) {
                int with_first = edge_intersection_size(e, first);
                if (with_first == 1 && path.size() + 1 >= 3) {
                    auto w = try_close(idx);
                    if (w) return w;
                }
                if (with_first != 0) continue;  // can neither extend nor close
            }
            if (static_cast<int>(path.size()) + 2 > maxk) continue;
            path.push_back(idx);
            used[idx] = 1;
            auto w = dfs();
            if (w) return w;
            used[idx] = 0;
            path.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<LinearCycleWitness> find_linear_cycle(const Hypergraph& h) {
    if (h.vertex_count() < 6 || h.edge_count() < 3) return std::nullopt;
    CycleDfs d{h, h.edges(), h.vertex_count() / 2, true, {}, {}};
    for (int anchor = 0; anchor < h.edge_count(); ++anchor) {
        auto w = d.run_from(anchor);
        if (w) return w;
    }
    return std::nullopt;
}

std::optional<LinearCycleWitness> find_linear_cycle_through(const Hypergraph& h, const Edge& e) {
    if (h.vertex_count() < 6 || h.edge_count() < 3) return std::nullopt;
    auto it = std::lower_bound(h.edges().begin(), h.edges().end(), e);
    if (it == h.edges().end() || *it != e)
        throw std::invalid_argument("find_linear_cycle_through: edge not in hypergraph");
    CycleDfs d{h, h.edges(), h.vertex_count() / 2, false, {}, {}};
    return d.run_from(static_cast<int>(it - h.edges().begin()));
}

// --- longest path -------------------------------------------------------------

namespace {

struct PathDfs {
    const std::vector<Edge>& es;
    int target = 0;
    std::vector<int> path;
    std::vector<char> used;

    bool dfs() {
        if (static_cast<int>(path.size()) == target) return true;
        const Edge& last = es[path.back()];
        for (int idx = 0; idx < static_cast<int>(es.size()); ++idx) {
            if (used[idx]) continue;
            const Edge& e = es[idx];
            if (edge_intersection_size(e, last) != 1) continue;
            bool ok = true;
            for (size_t j = 0; j + 1 < path.size(); ++j)
                if (edge_intersection_size(e, es[path[j]]) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            path.push_back(idx);
            used[idx] = 1;
            if (dfs()) return true;
            used[idx] = 0;
            path.pop_back();
        }
        return false;
    }
};

LinearPath path_from_edge_sequence(const Hypergraph& h, const std::vector<Edge>& seq) {
    LinearPath p;
    p.edges = seq;
    int k = static_cast<int>(seq.size());
    p.vertices.resize(k + 1);
    for (int i = 1; i < k; ++i) p.vertices[i] = edge_shared_vertex(seq[i - 1], seq[i]);
    if (k == 1) {
        p.vertices[0] = seq[0][0];
        p.vertices[1] = seq[0][1];
    } else {
        for (int v : seq.front())
            if (v != p.vertices[1]) {
                p.vertices[0] = v;
                break;
            }
        for (int v : seq.back())
            if (v != p.vertices[k - 1]) {
                p.vertices[k] = v;
                break;
            }
    }
    if (!validate_linear_path(h, p)) throw internal_error("constructed linear path is invalid");
    return p;
}

}  // namespace

LinearPath longest_linear_path(const Hypergraph& h) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("longest_linear_path: hypergraph has no edges");
    int maxk = std::max(1, (h.vertex_count() - 1) / 2);
    std::vector<int> best;
    PathDfs d{h.edges(), 0, {}, {}};
    for (int target = 1; target <= maxk; ++target) {
        d.target = target;
        bool found = false;
        for (int s = 0; s < h.edge_count() && !found; ++s) {
            d.path.assign(1, s);
            d.used.assign(h.edge_count(), 0);
            d.used[s] = 1;
            found = d.dfs();
        }
        if (!found) break;
        best = d.path;
    }
    std::vector<Edge> seq;
    seq.reserve(best.size());
    for (int i : best) seq.push_back(h.edges()[i]);
    return path_from_edge_sequence(h, seq);
}

// --- skeletons -------------------------------------------------------------

namespace {

void tree_add_edge(LinearTree& t, const Edge& e, int attach_vertex) {
    t.edges.push_back(e);
    t.attach.push_back(attach_vertex);
    for (int v : e)
        if (!t.contains_vertex(v)) insert_sorted(t.vertices, v);
}

Skeleton grow_greedy(const Hypergraph& h, LinearTree t, const std::vector<char>& allowed) {
    for (;;) {
        bool extended = false;
        for (const Edge& e : h.edges()) {
            if (!allowed.empty() && !(allowed[e[0]] && allowed[e[1]] && allowed[e[2]])) continue;
            int k = 0, shared = -1;
            for (int v : e)
                if (t.contains_vertex(v)) {
                    ++k;
                    shared = v;
                }
            if (k != 1) continue;
            tree_add_edge(t, e, shared);
            extended = true;
            break;
        }
        if (!extended) break;
    }
    return t;
}

}  // namespace

Skeleton build_skeleton(const Hypergraph& h, const Edge& seed) {
    if (!h.contains(seed)) throw std::invalid_argument("build_skeleton: seed edge not in hypergraph");
    LinearTree t;
    t.root = seed[0];
    tree_add_edge(t, seed, -1);
    return grow_greedy(h, std::move(t), {});
}

Skeleton build_skeleton(const Hypergraph& h, int seed_vertex) {
    return build_skeleton(h, seed_vertex, {});
}

Skeleton build_skeleton(const Hypergraph& h, int seed_vertex, const std::vector<char>& allowed) {
    if (seed_vertex < 0 || seed_vertex >= h.vertex_count())
        throw std::invalid_argument("build_skeleton: seed vertex out of range");
    LinearTree t;
    t.root = seed_vertex;
    t.vertices = {seed_vertex};
    return grow_greedy(h, std::move(t), allowed);
}

namespace {

// Exhaustive DFS over linear subtrees; fires the callback on each maximal
// state. States are deduplicated by edge-index set, so every maximal tree is
// reported exactly once.
struct TreeEnumerator {
    const Hypergraph& h;
    std::set<std::vector<int>> visited;
    std::function<void(const LinearTree&)> on_maximal;

    int edge_index(const Edge& e) const {
        auto it = std::lower_bound(h.edges().begin(), h.edges().end(), e);
        return static_cast<int>(it - h.edges().begin());
    }

    void explore(const LinearTree& t) {
        std::vector<int> key;
        key.reserve(t.edges.size());
        for (const Edge& e : t.edges) key.push_back(edge_index(e));
        std::sort(key.begin(), key.end());
        if (!visited.insert(std::move(key)).second) return;

        bool maximal = true;
        for (const Edge& e : h.edges()) {
            int k = 0, shared = -1;
            for (int v : e)
                if (t.contains_vertex(v)) {
                    ++k;
                    shared = v;
                }
            if (k != 1) continue;
            maximal = false;
            LinearTree next = t;
            tree_add_edge(next, e, shared);
            explore(next);
        }
        if (maximal) on_maximal(t);
    }
};

LinearTree tree_from_path(const LinearPath& p) {
    LinearTree t;
    if (p.length() == 0) {
        t.root = p.vertices[0];
        t.vertices = {p.vertices[0]};
        return t;
    }
    t.root = p.edges[0][0];
    tree_add_edge(t, p.edges[0], -1);
    for (int i = 1; i < p.length(); ++i) tree_add_edge(t, p.edges[i], p.vertices[i]);
    return t;
}

}  // namespace

Skeleton maximum_skeleton_containing(const Hypergraph& h, const LinearPath& p) {
    if (h.vertex_count() > 9)
        throw std::invalid_argument("maximum_skeleton_containing: size guard exceeded (n <= 9)");
    if (!validate_linear_path(h, p))
        throw std::invalid_argument("maximum_skeleton_containing: invalid linear path");
    std::optional<LinearTree> best;
    TreeEnumerator en{h, {}, [&](const LinearTree& t) {
                          if (!best || t.edge_count() > best->edge_count()) best = t;
                      }};
    en.explore(tree_from_path(p));
    return *best;
}

std::vector<Skeleton> enumerate_skeletons(const Hypergraph& h) {
    if (h.vertex_count() > 9)
        throw std::invalid_argument("enumerate_skeletons: size guard exceeded (n <= 9)");
    std::vector<Skeleton> out;
    TreeEnumerator en{h, {}, [&](const LinearTree& t) { out.push_back(t); }};
    for (const Edge& e : h.edges()) {
        LinearTree t;
        t.root = e[0];
        tree_add_edge(t, e, -1);
        en.explore(t);
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (h.degree(v) > 0) continue;
        LinearTree t;
        t.root = v;
        t.vertices = {v};
        out.push_back(t);
    }
    return out;
}

// --- paths inside trees -------------------------------------------------------

namespace {

std::vector<std::vector<int>> vertex_edge_incidence(const LinearTree& t) {
    std::vector<std::vector<int>> inc(t.vertices.size());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) -
                                t.vertices.begin());
    };
    for (size_t i = 0; i < t.edges.size(); ++i)
        for (int v : t.edges[i]) inc[local(v)].push_back(static_cast<int>(i));
    return inc;
}

}  // namespace

LinearPath linear_path_between(const LinearTree& t, const std::vector<int>& A,
                               const std::vector<int>& B) {
    std::vector<int> in_a, in_b;
    for (int v : A)
        if (t.contains_vertex(v)) in_a.push_back(v);
    for (int v : B)
        if (t.contains_vertex(v)) in_b.push_back(v);
    std::sort(in_a.begin(), in_a.end());
    in_a.erase(std::unique(in_a.begin(), in_a.end()), in_a.end());
    std::sort(in_b.begin(), in_b.end());
    in_b.erase(std::unique(in_b.begin(), in_b.end()), in_b.end());
    if (in_a.empty() || in_b.empty())
        throw std::invalid_argument("linear_path_between: a set misses the tree");

    for (int v : in_a)
        if (std::binary_search(in_b.begin(), in_b.end(), v)) return LinearPath{{v}, {}};

    auto inc = vertex_edge_incidence(t);
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), v) -
                                t.vertices.begin());
    };

    std::optional<LinearPath> best;
    for (int a : in_a) {
        // BFS over the tree's vertices, counting hyperedge hops
        std::vector<int> dist(t.vertices.size(), -1), prev_vertex(t.vertices.size(), -1),
            via_edge(t.vertices.size(), -1);
        std::deque<int> q{local(a)};
        dist[local(a)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int ei : inc[u])
                for (int w : t.edges[ei]) {
                    int lw = local(w);
                    if (dist[lw] >= 0) continue;
                    dist[lw] = dist[u] + 1;
                    prev_vertex[lw] = u;
                    via_edge[lw] = ei;
                    q.push_back(lw);
                }
        }
        for (int b : in_b) {
            int lb = local(b);
            if (dist[lb] < 0) throw internal_error("linear tree is not connected");
            if (best && dist[lb] >= best->length()) continue;
            LinearPath p;
            for (int cur = lb; cur >= 0; cur = prev_vertex[cur]) {
                p.vertices.push_back(t.vertices[cur]);
                if (via_edge[cur] >= 0) p.edges.push_back(t.edges[via_edge[cur]]);
            }
            std::reverse(p.vertices.begin(), p.vertices.end());
            std::reverse(p.edges.begin(), p.edges.end());
            best = std::move(p);
        }
    }
    for (int i = 0; i + 1 < best->length(); ++i) {
        if (edge_intersection_size(best->edges[i], best->edges[i + 1]) != 1 ||
            edge_shared_vertex(best->edges[i], best->edges[i + 1]) != best->vertices[i + 1])
            throw internal_error("linear_path_between: broken consecutive intersection");
        for (int j = i + 2; j < best->length(); ++j)
            if (edge_intersection_size(best->edges[i], best->edges[j]) != 0)
                throw internal_error("linear_path_between: non-consecutive edges intersect");
    }
    // minimality makes the interior avoid A and B
    for (int i = 0; i < best->length(); ++i) {
        const Edge& e = best->edges[i];
        for (int v : e) {
            if (i >= 1 && std::binary_search(in_a.begin(), in_a.end(), v))
                throw internal_error("linear_path_between: interior edge meets A");
            if (i + 1 < best->length() && std::binary_search(in_b.begin(), in_b.end(), v))
                throw internal_error("linear_path_between: interior edge meets B");
        }
    }
    return *best;
}

// --- pair graph, stars, opposite pairs, windmills ------------------------------

PairGraph pair_graph(const LinearTree& t) {
    PairGraph g;
    g.vertices = t.vertices;
    for (const Edge& e : t.edges)
        for (const Pair& p : edge_pairs(e)) g.edges.push_back(p);
    return g;
}

std::vector<Edge> star(const LinearTree& t, int v) {
    if (!t.contains_vertex(v)) throw std::invalid_argument("star: vertex not in tree");
    std::vector<Edge> out;
    for (const Edge& e : t.edges)
        if (edge_contains(e, v)) out.push_back(e);
    return out;
}

namespace {

std::vector<int> pair_graph_distances(const LinearTree& t, int v) {
    auto inc = vertex_edge_incidence(t);
    auto local = [&](int u) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), u) -
                                t.vertices.begin());
    };
    std::vector<int> dist(t.vertices.size(), -1);
    std::deque<int> q{local(v)};
    dist[local(v)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int ei : inc[u])
            for (int w : t.edges[ei]) {
                int lw = local(w);
                if (dist[lw] >= 0) continue;
                dist[lw] = dist[u] + 1;
                q.push_back(lw);
            }
    }
    return dist;
}

}  // namespace

Pair opposite_pair(const LinearTree& t, int v, const Edge& e) {
    if (!t.contains_vertex(v)) throw std::invalid_argument("opposite_pair: vertex not in tree");
    if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end())
        throw std::invalid_argument("opposite_pair: edge not in tree");
    auto dist = pair_graph_distances(t, v);
    auto local = [&](int u) {
        return static_cast<int>(std::lower_bound(t.vertices.begin(), t.vertices.end(), u) -
                                t.vertices.begin());
    };
    std::optional<Pair> found;
    for (const Pair& p : edge_pairs(e)) {
        if (dist[local(p.first)] != dist[local(p.second)]) continue;
        if (found) throw internal_error("opposite_pair: not unique");
        found = p;
    }
    if (!found) throw internal_error("opposite_pair: none equidistant");
    return *found;
}

std::pair<int, int> windmill_sizes(const LinearTree& t, const LinearPath& p) {
    int k = p.length();
    if (k < 3) throw std::invalid_argument("windmill_sizes: path too short (length >= 3)");
    for (const Edge& e : p.edges)
        if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end())
            throw std::invalid_argument("windmill_sizes: path not contained in tree");
    int at_front = static_cast<int>(star(t, p.vertices[1]).size()) - 1;
    int at_back = static_cast<int>(star(t, p.vertices[k - 1]).size()) - 1;
    return {at_front, at_back};
}

}  // namespace lcf
