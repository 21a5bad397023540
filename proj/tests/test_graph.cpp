#include "doctest.h"
#include <set>

#include "support.hpp"
#include "zsf/graph.hpp"

using namespace zsf;

TEST_CASE("edge list parsing") {
    Graph p3 = parse_graph("3; 0-1,1-2");
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK(!p3.has_edge(0, 2));

    CHECK(parse_graph("4;").edge_count() == 0);
    CHECK_THROWS_AS(parse_graph("2; 0-0"), std::invalid_argument);       // loop
    CHECK_THROWS_AS(parse_graph("2; 0-1,1-0"), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(parse_graph("2; 0-3"), std::invalid_argument);       // out of range
    CHECK_THROWS_AS(parse_graph("x; 1-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("3; 0.1"), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("graph6 decoding matches an independent reader") {
    // 'D' = 5 vertices; '?' = 000000, '{' = 111100 in column order: the last
    // four pairs (0,4),(1,4),(2,4),(3,4) are the edges, a star centered at 4
    Graph g = parse_graph6("D?{");
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 4);
    for (int i = 0; i < 4; ++i) CHECK(g.has_edge(i, 4));

    auto edge_set = [](const Graph& g) {
        std::set<std::pair<int, int>> s(g.edges().begin(), g.edges().end());
        return s;
    };
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph r = oracle::random_graph(n, 0.4, rng);
        std::string enc = to_graph6(r);
        Graph back = parse_graph6(enc);
        Graph indep = oracle::decode_graph6(enc);
        CHECK(back.n() == r.n());
        CHECK(edge_set(back) == edge_set(r));
        CHECK(edge_set(indep) == edge_set(r));
    }

    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D?"), std::invalid_argument);    // too short
    CHECK_THROWS_AS(parse_graph6("D?{?"), std::invalid_argument);  // too long
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);   // long form
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), std::invalid_argument);  // sparse6
    CHECK_THROWS_AS(parse_graph6("B@"), std::invalid_argument);    // nonzero padding
    CHECK(parse_graph6("?").n() == 0);
    CHECK(parse_graph6("@").n() == 1);
}

TEST_CASE("graph6 rejects malformed input without crashing") {
    std::mt19937 rng(1234);
    int parsed = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s;
        int len = static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i) s.push_back(static_cast<char>(rng() % 256));
        try {
            Graph g = parse_graph6(s);
            ++parsed;
            CHECK(g.n() <= 62);  // accepted inputs stay inside the short form
        } catch (const std::invalid_argument&) {
        }
    }
    CHECK(parsed >= 0);
}

TEST_CASE("graph families") {
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK(complete_graph(4).edge_count() == 6);
    Graph star = star_graph(3);
    CHECK(star.n() == 4);
    CHECK(star.degree(0) == 3);
    Graph grid = grid_graph(3, 3);
    CHECK(grid.n() == 9);
    CHECK(grid.edge_count() == 12);
    CHECK(grid.has_edge(0, 1));
    CHECK(grid.has_edge(0, 3));
    CHECK(!grid.has_edge(0, 4));
}

TEST_CASE("connectivity and components") {
    Graph p3 = path_graph(3);
    CHECK(is_connected_set(p3, VertexSet::of({0, 1})));
    CHECK(!is_connected_set(p3, VertexSet::of({0, 2})));
    CHECK(is_connected_set(p3, VertexSet::single(1)));
    CHECK(!is_connected_set(p3, VertexSet{}));  // empty is not connected
    CHECK(is_connected(p3));

    auto comps = components_within(p3, VertexSet::of({0, 2}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet::single(0));
    CHECK(comps[1] == VertexSet::single(2));

    Graph two = parse_graph("5; 0-1,2-3,3-4");
    CHECK(!is_connected(two));
    CHECK(components(two).size() == 2);

    // random graphs: library connectivity agrees with union-find
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 7), 0.45, rng);
        std::uint64_t subset = rng() & g.vertex_bits();
        CHECK(is_connected_set(g, VertexSet{subset}) == oracle::uf_connected(g, subset));
    }
}

TEST_CASE("trees and induced subgraphs") {
    CHECK(is_tree(path_graph(4)));
    CHECK(is_tree(star_graph(5)));
    CHECK(!is_tree(cycle_graph(4)));
    CHECK(!is_tree(parse_graph("4; 0-1,2-3")));

    std::vector<int> orig;
    Graph sub = induced_subgraph(grid_graph(2, 2), VertexSet::of({0, 1, 3}), &orig);
    CHECK(sub.n() == 3);
    CHECK(orig == std::vector<int>{0, 1, 3});
    CHECK(sub.has_edge(0, 1));  // 0-1
    CHECK(sub.has_edge(1, 2));  // 1-3
    CHECK(!sub.has_edge(0, 2)); // 0-3 not an edge of the grid
}

TEST_CASE("edge list round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
        Graph back = parse_graph(to_edge_list(g));
        CHECK(back.n() == g.n());
        CHECK(back.edges() == g.edges());
    }
}
