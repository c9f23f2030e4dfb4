#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "lcf/constructions.hpp"
#include "lcf/hypergraph.hpp"
#include "lcf/verification.hpp"

using namespace lcf;

TEST_CASE("construction canonicalizes and rejects bad triples") {
    Hypergraph k5 = complete_k3(5);
    CHECK(k5.edge_count() == 10);

    Hypergraph dedup(4, {{0, 1, 2}, {2, 1, 0}});
    CHECK(dedup.edge_count() == 1);
    CHECK(dedup.contains(make_edge(0, 1, 2)));

    CHECK_THROWS_AS(Hypergraph(3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{-1, 1, 2}}), std::invalid_argument);
}

TEST_CASE("degree") {
    Hypergraph nine = nine_vertex_example();
    for (int v = 0; v < 9; ++v) CHECK(nine.degree(v) == 8);

    Hypergraph empty(5, {});
    CHECK(empty.degree(3) == 0);

    CHECK(star_construction(10).degree(0) == 36);
}

TEST_CASE("link graph") {
    Hypergraph k5 = complete_k3(5);
    LinkGraph link = k5.link_graph(0);
    CHECK(link.edges.size() == 6);  // complete graph on {1,2,3,4}

    Hypergraph single(3, {{0, 1, 2}});
    LinkGraph l0 = single.link_graph(0);
    REQUIRE(l0.edges.size() == 1);
    CHECK(l0.edges[0] == Pair{1, 2});

    // in H_8 the last vertex pairs with its partner against all earlier ones
    Hypergraph h8 = extremal_Hn(8);
    LinkGraph l7 = h8.link_graph(7);
    REQUIRE(l7.edges.size() == 6);
    for (int j = 0; j < 6; ++j) CHECK(l7.edges[j] == Pair{j, 6});
}

TEST_CASE("induced subhypergraphs relabel") {
    Hypergraph k5 = complete_k3(5);
    auto [k4, map] = k5.induced({0, 1, 2, 3});
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 4);
    CHECK(map.to_old == std::vector<int>{0, 1, 2, 3});

    auto [none, m2] = k5.induced({});
    CHECK(none.vertex_count() == 0);
    CHECK(none.edge_count() == 0);

    Hypergraph nine = nine_vertex_example();
    auto [block, m3] = nine.induced({4, 5, 6, 7, 8});
    CHECK(block.edge_count() == 10);
    CHECK(block.vertex_count() == 5);

    // identity relabeling reproduces the hypergraph
    Hypergraph h8 = extremal_Hn(8);
    std::vector<int> all;
    for (int v = 0; v < 8; ++v) all.push_back(v);
    auto [same, m4] = h8.induced(all);
    CHECK(same.edges() == h8.edges());
}

TEST_CASE("thick pairs and edges") {
    Hypergraph k5 = complete_k3(5);
    CHECK(k5.is_thick_pair(0, 1));
    CHECK(k5.is_thick_edge(make_edge(0, 1, 2)));

    Hypergraph single(3, {{0, 1, 2}});
    CHECK(!single.is_thick_pair(0, 1));
    CHECK(!single.is_thick_edge(make_edge(0, 1, 2)));

    Hypergraph h7 = extremal_Hn(7);
    CHECK(h7.pair_thirds(5, 6).size() == 5);
    CHECK(h7.is_thick_pair(5, 6));
}

TEST_CASE("find_k53") {
    auto w = find_k53(complete_k3(5));
    REQUIRE(w.has_value());
    CHECK(w->vertices == std::array<int, 5>{0, 1, 2, 3, 4});

    CHECK(!find_k53(extremal_Hn(8)).has_value());

    auto wn = find_k53(nine_vertex_example());
    REQUIRE(wn.has_value());
    CHECK(wn->vertices == std::array<int, 5>{4, 5, 6, 7, 8});
}

TEST_CASE("degree equals link size and degree sum is 3m") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Hypergraph h = testing::random_hypergraph(7, seed, 12);
        long sum = 0;
        for (int v = 0; v < h.vertex_count(); ++v) {
            CHECK(h.degree(v) == static_cast<int>(h.link_graph(v).edges.size()));
            sum += h.degree(v);
        }
        CHECK(sum == 3L * h.edge_count());
    }
}

TEST_CASE("pruned k53 search agrees with the unpruned scan") {
    // exhaustively at n = 5, seeded above
    for (long mask = 0; mask < 1024; ++mask) {
        Hypergraph h = testing::mask_instance(5, mask);
        CHECK(find_k53(h).has_value() == brute_k53(h).has_value());
    }
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        int n = 6 + static_cast<int>(seed % 2);
        Hypergraph h = testing::random_hypergraph(n, seed, 8 + static_cast<int>(seed % 22));
        auto pruned = find_k53(h);
        auto plain = brute_k53(h);
        REQUIRE(pruned.has_value() == plain.has_value());
        if (pruned) CHECK(pruned->vertices == plain->vertices);
    }
}
