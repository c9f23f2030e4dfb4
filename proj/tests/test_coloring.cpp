#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "lcf/analysis.hpp"
#include "lcf/coloring.hpp"
#include "lcf/constructions.hpp"
#include "lcf/verification.hpp"

using namespace lcf;

namespace {

// The three guarantees of a skeleton coloring, checked directly.
void check_skeleton_coloring_postconditions(const Hypergraph& h, const Skeleton& t,
                                            const Coloring& g) {
    // induced properness
    for (const Edge& e : h.edges()) {
        if (!t.contains_vertex(e[0]) || !t.contains_vertex(e[1]) || !t.contains_vertex(e[2]))
            continue;
        CHECK(!(g.color[e[0]] == g.color[e[1]] && g.color[e[1]] == g.color[e[2]]));
    }
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (t.contains_vertex(v)) continue;
        bool strong = false;
        for (const Edge& te : t.edges)
            if (association_kind(h, v, te) == AssocKind::strong) strong = true;
        if (strong) {
            // some color for v keeps every covered edge proper
            int c = extend_to_outside(h, t, g, v);
            for (const Edge& e : h.edges()) {
                if (!edge_contains(e, v)) continue;
                int a = -1, b = -1;
                for (int w : e)
                    if (w != v) (a < 0 ? a : b) = w;
                if (!t.contains_vertex(a) || !t.contains_vertex(b)) continue;
                CHECK(!(c == g.color[a] && c == g.color[b]));
            }
        } else {
            // covered pairs are bichromatic no matter how v gets colored
            for (const Edge& e : h.edges()) {
                if (!edge_contains(e, v)) continue;
                int a = -1, b = -1;
                for (int w : e)
                    if (w != v) (a < 0 ? a : b) = w;
                if (!t.contains_vertex(a) || !t.contains_vertex(b)) continue;
                CHECK(g.color[a] != g.color[b]);
            }
        }
    }
}

}  // namespace

TEST_CASE("block decomposition") {
    Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
    Skeleton t = build_skeleton(h, make_edge(0, 1, 2));
    auto blk = find_special_block(h, t);
    REQUIRE(blk.has_value());
    BlockDecomposition dec = decompose_special_block(t, *blk);
    for (int x = 0; x < 5; ++x) {
        CHECK(dec.subtrees[x].edge_count() == 0);
        CHECK(dec.subtrees[x].vertices == std::vector<int>{blk->vertices[x]});
    }

    // one subtree hangs off a block vertex
    Hypergraph h2(7, {{0, 1, 2}, {2, 3, 4}, {0, 5, 6}});
    Skeleton t2 = build_skeleton(h2, make_edge(0, 1, 2));
    REQUIRE(t2.edge_count() == 3);
    auto blk2 = find_special_block(h2, t2);
    REQUIRE(blk2.has_value());
    CHECK(blk2->first == make_edge(0, 1, 2));
    CHECK(blk2->second == make_edge(0, 5, 6));  // added before {2,3,4}
    BlockDecomposition dec2 = decompose_special_block(t2, *blk2);
    // the leftover edge hangs at block vertex 2
    CHECK(dec2.subtrees[2].edge_count() == 1);
    CHECK(dec2.subtrees[2].edges[0] == make_edge(2, 3, 4));
    for (int x : {0, 1, 3, 4}) CHECK(dec2.subtrees[x].edge_count() == 0);

    // vertex sets are disjoint and the edges partition E(T)
    size_t edge_sum = 2;
    std::vector<int> all_vertices;
    for (int x = 0; x < 5; ++x) {
        edge_sum += dec2.subtrees[x].edges.size();
        for (int v : dec2.subtrees[x].vertices) all_vertices.push_back(v);
    }
    CHECK(edge_sum == t2.edges.size());
    std::sort(all_vertices.begin(), all_vertices.end());
    CHECK(std::adjacent_find(all_vertices.begin(), all_vertices.end()) == all_vertices.end());
}

TEST_CASE("block coloring scans assignments in binary order") {
    Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}});
    SpecialBlock blk{{0, 1, 2, 3, 4}, make_edge(0, 1, 2), make_edge(2, 3, 4)};
    Coloring g = color_block(h, blk);
    // first proper assignment: vertex 2 flips to color 2, everything else 1
    CHECK(g.color == std::vector<int>{1, 1, 2, 1, 1});

    Hypergraph empty5(5, {});
    Coloring ge = color_block(empty5, blk);
    CHECK(ge.color == std::vector<int>{1, 1, 1, 1, 1});

    Hypergraph k5 = complete_k3(5);
    CHECK_THROWS_AS(color_block(k5, blk), K53FoundError);
    try {
        color_block(k5, blk);
    } catch (const K53FoundError& e) {
        CHECK(e.witness.vertices == std::array<int, 5>{0, 1, 2, 3, 4});
    }
}

TEST_CASE("auxiliary graph golden cases") {
    // single non-thick edge: step 4 keeps the largest pair out
    Hypergraph single(3, {{0, 1, 2}});
    Skeleton t = build_skeleton(single, make_edge(0, 1, 2));
    AuxGraph g = build_aux_graph(single, t);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].pair == Pair{0, 1});
    CHECK(g.edges[0].step == AuxStep::step4);
    CHECK(g.edges[1].pair == Pair{0, 2});
    CHECK(g.edges[1].step == AuxStep::step4);
}

namespace {

// Common setup for the hand-built auxiliary graph instances: assert the
// instance is linear-cycle-free and yields a block-free two-edge skeleton.
Skeleton two_edge_block_free_skeleton(const Hypergraph& h) {
    REQUIRE(!find_linear_cycle(h).has_value());
    REQUIRE(!brute_linear_cycle(h).has_value());
    Skeleton t = build_skeleton(h, make_edge(0, 1, 2));
    REQUIRE(t.edge_count() == 2);
    REQUIRE(t.edges[1] == make_edge(2, 3, 4));
    REQUIRE(!find_special_block(h, t).has_value());
    return t;
}

}  // namespace

TEST_CASE("auxiliary graph steps 1a and 1b") {
    // vertex 4 is strongly associated to the thick tree edge {0,1,2} and
    // its supporting hyperedge {0,1,4} covers the pair opposite the shared
    // vertex; {0,1,5} spoils the special block
    Hypergraph h(6, {{0, 1, 2}, {2, 3, 4}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 5}});
    Skeleton t = two_edge_block_free_skeleton(h);
    AuxGraph g = build_aux_graph(h, t);
    REQUIRE(g.edges.size() == 4);
    CHECK(g.edges[0].pair == Pair{2, 4});
    CHECK(g.edges[0].step == AuxStep::step1a);
    CHECK(g.edges[1].pair == Pair{0, 1});
    CHECK(g.edges[1].step == AuxStep::step1b);
    CHECK(g.edges[2].pair == Pair{0, 2});
    CHECK(g.edges[2].step == AuxStep::step4);
    CHECK(g.edges[3].pair == Pair{2, 3});
    CHECK(g.edges[3].step == AuxStep::step4);
}

TEST_CASE("auxiliary graph step 2") {
    // without {0,1,4} the supporting hyperedge of step 1b disappears and
    // the weak associate 5 pins {0,1} instead
    Hypergraph h(6, {{0, 1, 2}, {2, 3, 4}, {0, 2, 4}, {1, 2, 4}, {0, 1, 5}});
    Skeleton t = two_edge_block_free_skeleton(h);
    AuxGraph g = build_aux_graph(h, t);
    REQUIRE(g.edges.size() == 4);
    CHECK(g.edges[0].pair == Pair{2, 4});
    CHECK(g.edges[0].step == AuxStep::step1a);
    CHECK(g.edges[1].pair == Pair{0, 1});
    CHECK(g.edges[1].step == AuxStep::step2);
    CHECK(g.edges[2].pair == Pair{0, 2});
    CHECK(g.edges[2].step == AuxStep::step4);
    CHECK(g.edges[3].pair == Pair{2, 3});
    CHECK(g.edges[3].step == AuxStep::step4);
}

TEST_CASE("auxiliary graph step 3") {
    // the outside vertex 5 is strongly associated to both tree edges; its
    // supporting hyperedges pin both pairs opposite the shared vertex
    Hypergraph h(6, {{0, 1, 2}, {2, 3, 4}, {0, 1, 5}, {0, 2, 5}, {2, 3, 5}, {3, 4, 5}});
    Skeleton t = two_edge_block_free_skeleton(h);
    AuxGraph g = build_aux_graph(h, t);
    REQUIRE(g.edges.size() == 4);
    CHECK(g.edges[0].pair == Pair{0, 1});
    CHECK(g.edges[0].step == AuxStep::step3);
    CHECK(g.edges[1].pair == Pair{3, 4});
    CHECK(g.edges[1].step == AuxStep::step3);
    CHECK(g.edges[2].pair == Pair{0, 2});
    CHECK(g.edges[2].step == AuxStep::step4);
    CHECK(g.edges[3].pair == Pair{2, 3});
    CHECK(g.edges[3].step == AuxStep::step4);
}

TEST_CASE("auxiliary graph is a tree across a seeded corpus") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 5 + static_cast<int>(seed % 5);
        Hypergraph h = random_lcf(n, seed * 41 + 13, 4 + static_cast<int>(seed % 14));
        if (h.edge_count() == 0 || find_k53(h)) continue;
        Skeleton t = build_skeleton(h, h.edges().front());
        if (find_special_block(h, t)) continue;
        AuxGraph g = build_aux_graph(h, t);  // throws on any violation
        CHECK(g.edges.size() == 2 * t.edges.size());
        for (const AuxGraph::AuxEdge& ae : g.edges) {
            bool covered = false;
            for (const Edge& te : t.edges) covered |= edge_contains_pair(te, ae.pair);
            CHECK(covered);
        }
    }
}

TEST_CASE("skeleton coloring honors a fixed vertex") {
    Hypergraph single(3, {{0, 1, 2}});
    Skeleton t = build_skeleton(single, make_edge(0, 1, 2));
    Coloring g = color_skeleton(single, t, std::pair{2, 2});
    CHECK(g.color == std::vector<int>{1, 2, 2});

    Hypergraph empty(3, {});
    Skeleton tv = build_skeleton(empty, 1);
    Coloring gv = color_skeleton(empty, tv, std::pair{1, 1});
    CHECK(gv.color[1] == 1);
}

TEST_CASE("skeleton coloring postconditions across all n=5 instances") {
    for (long mask = 0; mask < 1024; ++mask) {
        Hypergraph h = testing::mask_instance(5, mask);
        if (h.edge_count() == 0) continue;
        if (find_linear_cycle(h) || find_k53(h)) continue;
        for (const Skeleton& t : enumerate_skeletons(h)) {
            Coloring g = color_skeleton(h, t);
            check_skeleton_coloring_postconditions(h, t, g);
        }
    }
}

TEST_CASE("skeleton coloring postconditions on seeded n=6..8 instances") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        int n = 6 + static_cast<int>(seed % 3);
        Hypergraph h = random_lcf(n, seed * 53 + 29, 4 + static_cast<int>(seed % 12));
        if (h.edge_count() == 0 || find_k53(h)) continue;
        Skeleton t = build_skeleton(h, h.edges().front());
        Coloring g = color_skeleton(h, t);
        check_skeleton_coloring_postconditions(h, t, g);
    }
}

TEST_CASE("outside extension picks the forced color") {
    // one strong edge, colored (1,2,1): the duplicated color is 1
    Hypergraph h(5, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}});
    Skeleton t = build_skeleton(h, make_edge(0, 1, 2));
    REQUIRE(t.edge_count() == 1);
    Coloring g(5);
    g.color[0] = 1;
    g.color[1] = 2;
    g.color[2] = 1;
    CHECK(association_kind(h, 3, make_edge(0, 1, 2)) == AssocKind::strong);
    CHECK(extend_to_outside(h, t, g, 3) == 2);

    g.color[0] = 2;
    g.color[1] = 1;
    g.color[2] = 2;
    CHECK(extend_to_outside(h, t, g, 3) == 1);

    CHECK_THROWS_AS(extend_to_outside(h, t, g, 4), std::invalid_argument);
}

TEST_CASE("outside extension avoids the hub color when two edges meet") {
    // vertex 5 strongly associated to both tree edges through vertex 2
    Hypergraph h(6,
                 {{0, 1, 2}, {2, 3, 4}, {0, 1, 5}, {0, 2, 5}, {2, 3, 5}, {3, 4, 5}});
    Skeleton t(build_skeleton(h, make_edge(0, 1, 2)));
    REQUIRE(t.edge_count() == 2);
    CHECK(association_kind(h, 5, make_edge(0, 1, 2)) == AssocKind::strong);
    CHECK(association_kind(h, 5, make_edge(2, 3, 4)) == AssocKind::strong);
    Coloring g(6);
    g.color[0] = 1;
    g.color[1] = 2;
    g.color[2] = 1;
    g.color[3] = 2;
    g.color[4] = 2;
    CHECK(extend_to_outside(h, t, g, 5) == 2);  // hub vertex 2 wears color 1
}

TEST_CASE("chains and star trees recurse through nested blocks") {
    // a path of four edges: the first block decomposition leaves a subtree
    // that itself contains a block
    Hypergraph chain(9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}});
    ColorResult res = color_hypergraph(chain);
    REQUIRE(std::holds_alternative<Coloring>(res));
    CHECK(verify_coloring(chain, std::get<Coloring>(res), 2));

    // a star-shaped tree: the shared vertex keeps a third edge after the
    // two block edges leave
    Hypergraph star_tree(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    Skeleton t = build_skeleton(star_tree, make_edge(0, 1, 2));
    REQUIRE(t.edge_count() == 3);
    auto blk = find_special_block(star_tree, t);
    REQUIRE(blk.has_value());
    BlockDecomposition dec = decompose_special_block(t, *blk);
    CHECK(dec.subtrees[0].edge_count() == 1);  // the third edge hangs at 0
    ColorResult res2 = color_hypergraph(star_tree);
    REQUIRE(std::holds_alternative<Coloring>(res2));
    CHECK(verify_coloring(star_tree, std::get<Coloring>(res2), 2));

    // three edges through one vertex, shared vertex inside the block pair
    Hypergraph bundle(7, {{0, 1, 2}, {2, 3, 4}, {2, 5, 6}});
    ColorResult res3 = color_hypergraph(bundle);
    REQUIRE(std::holds_alternative<Coloring>(res3));
    CHECK(verify_coloring(bundle, std::get<Coloring>(res3), 2));
}

TEST_CASE("pipeline grows a second skeleton for the frontier vertex") {
    // vertex 4 is strongly associated to the first skeleton {0,1,2} but
    // cannot join it; its own skeleton picks up {4,5,6}
    Hypergraph h(7, {{0, 1, 2}, {0, 1, 4}, {0, 2, 4}, {4, 5, 6}});
    CHECK(!find_linear_cycle(h).has_value());
    CHECK(!brute_linear_cycle(h).has_value());
    ColorResult res = color_hypergraph(h);
    REQUIRE(std::holds_alternative<Coloring>(res));
    CHECK(std::get<Coloring>(res).color == std::vector<int>{1, 2, 2, 1, 1, 2, 2});
}

TEST_CASE("pipeline recurses on untouched components") {
    Hypergraph h(6, {{0, 1, 2}, {3, 4, 5}});
    ColorResult res = color_hypergraph(h);
    REQUIRE(std::holds_alternative<Coloring>(res));
    CHECK(std::get<Coloring>(res).color == std::vector<int>{1, 2, 2, 1, 2, 2});
}

TEST_CASE("full pipeline on the named families") {
    for (int n = 3; n <= 20; ++n) {
        ColorResult res = color_hypergraph(extremal_Hn(n));
        REQUIRE(std::holds_alternative<Coloring>(res));
        const Coloring& g = std::get<Coloring>(res);
        CHECK(verify_coloring(extremal_Hn(n), g, 2));
        // flipping every color keeps the coloring proper
        Coloring flipped = g;
        for (int& c : flipped.color) c = 3 - c;
        CHECK(verify_coloring(extremal_Hn(n), flipped, 2));
        // the larger class reaches the sharp bound
        CHECK(2 * static_cast<int>(independent_set_from_coloring(extremal_Hn(n), g).size()) >= n);
    }

    ColorResult k5res = color_hypergraph(complete_k3(5));
    REQUIRE(std::holds_alternative<K53Witness>(k5res));

    ColorResult u2 = color_hypergraph(disjoint_k53_union(2));
    REQUIRE(std::holds_alternative<K53Witness>(u2));

    ColorResult nine = color_hypergraph(nine_vertex_example());
    REQUIRE(std::holds_alternative<K53Witness>(nine));

    ColorResult cyc = color_hypergraph(complete_k3(6));
    REQUIRE(std::holds_alternative<LinearCycleWitness>(cyc));
}

TEST_CASE("pipeline matches the brute 2-coloring oracle on all n=5 instances") {
    for (long mask = 0; mask < 1024; ++mask) {
        Hypergraph h = testing::mask_instance(5, mask);
        if (find_linear_cycle(h)) continue;
        bool pipeline = std::holds_alternative<Coloring>(color_hypergraph(h));
        bool oracle = brute_k_colorable(h, 2).has_value();
        CHECK(pipeline == oracle);
    }
}

TEST_CASE("pipeline matches the brute 2-coloring oracle on seeded instances up to n=10") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 3 + static_cast<int>(seed % 8);  // 3..10
        Hypergraph h = random_lcf(n, seed * 607 + 3, 3 + static_cast<int>(seed % (2 * n)));
        ColorResult res = color_hypergraph(h);
        bool pipeline = std::holds_alternative<Coloring>(res);
        CHECK(pipeline == brute_k_colorable(h, 2).has_value());
        if (pipeline) CHECK(verify_coloring(h, std::get<Coloring>(res), 2));
    }
}

TEST_CASE("coloring verifier") {
    Hypergraph single(3, {{0, 1, 2}});
    Coloring mono(3);
    mono.color = {1, 1, 1};
    CHECK(!verify_coloring(single, mono, 2));
    Coloring ok(3);
    ok.color = {1, 1, 2};
    CHECK(verify_coloring(single, ok, 2));

    Coloring partial(3);
    partial.color = {1, 0, 2};
    CHECK_THROWS_AS(verify_coloring(single, partial, 2), std::invalid_argument);

    // no 2-coloring of K_5^3 avoids a monochromatic triple
    Hypergraph k5 = complete_k3(5);
    for (int m = 0; m < 32; ++m) {
        Coloring g(5);
        for (int v = 0; v < 5; ++v) g.color[v] = 1 + (m >> v & 1);
        CHECK(!verify_coloring(k5, g, 2));
    }
}
