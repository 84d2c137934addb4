#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <diamcrit/constructions.hpp>
#include <diamcrit/errors.hpp>
#include <diamcrit/metric.hpp>
#include <diamcrit/search.hpp>

#include "oracles.hpp"

using namespace diamcrit;

namespace {

void check_against_oracle(const Graph& g) {
    auto want = oracle::distances(g);
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto got = bfs_distances(g, s);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (want[s][v] >= oracle::kInf)
                CHECK(got[static_cast<std::size_t>(v)].is_infinite());
            else
                CHECK(got[static_cast<std::size_t>(v)] ==
                      ExtDist(static_cast<std::uint32_t>(want[s][v])));
        }
    }
}

}  // namespace

TEST_CASE("ExtDist ordering and saturation") {
    CHECK(ExtDist::infinity() > ExtDist(1000000));
    CHECK(ExtDist(3) < ExtDist(4));
    CHECK((ExtDist(2) + ExtDist(3)) == ExtDist(5));
    CHECK((ExtDist(2) + ExtDist::infinity()).is_infinite());
    CHECK(ExtDist::infinity().exceeds(1LL << 60));
    CHECK(ExtDist::infinity().to_string() == "inf");
}

TEST_CASE("bfs basics") {
    Graph c5 = oracle::cycle(5);
    auto d = bfs_distances(c5, 0);
    CHECK(d == std::vector<ExtDist>{ExtDist(0), ExtDist(1), ExtDist(2), ExtDist(2), ExtDist(1)});

    Graph two_edges = Graph::build(4, {{0, 1}, {2, 3}});
    auto d2 = bfs_distances(two_edges, 0);
    CHECK(d2[0] == ExtDist(0));
    CHECK(d2[1] == ExtDist(1));
    CHECK(d2[2].is_infinite());
    CHECK(d2[3].is_infinite());

    // Petersen: three neighbours, six at distance two.
    Graph pet = oracle::petersen();
    for (int s = 0; s < 10; ++s) {
        auto dp = bfs_distances(pet, s);
        int ones = 0, twos = 0;
        for (int v = 0; v < 10; ++v) {
            if (dp[static_cast<std::size_t>(v)] == ExtDist(1)) ++ones;
            if (dp[static_cast<std::size_t>(v)] == ExtDist(2)) ++twos;
        }
        CHECK(ones == 3);
        CHECK(twos == 6);
    }
}

TEST_CASE("bfs agrees with the quadratic oracle exhaustively for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask)
            check_against_oracle(graph_from_mask(n, mask));
    }
}

TEST_CASE("bfs agrees with the oracle on random graphs") {
    for (int i = 0; i < 1000; ++i) {
        double p = (i % 10) / 10.0;
        check_against_oracle(oracle::random_graph(4 + i % 12, p, 777 + static_cast<std::uint64_t>(i)));
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(Graph::build(1, {})) == ExtDist(0));
    CHECK(diameter(oracle::path_graph(4)) == ExtDist(3));
    CHECK(diameter(oracle::complete_bipartite(2, 3)) == ExtDist(2));
    CHECK(diameter(oracle::complete_bipartite(3, 4)) == ExtDist(2));
    CHECK(diameter(Graph::build(3, {{0, 1}})).is_infinite());
    CHECK(diameter(build_layered_dk(3, 1, 2, 3)) == ExtDist(3));
}

TEST_CASE("distance_without_edge") {
    Graph c5 = oracle::cycle(5);
    int e01 = c5.edge_index(0, 1);
    CHECK(distance_without_edge(c5, 0, 1, e01) == ExtDist(4));

    Graph k23 = oracle::complete_bipartite(2, 3);
    int e = k23.edge_index(0, 2);
    CHECK(distance_without_edge(k23, 0, 2, e) == ExtDist(3));

    Graph k4 = oracle::complete(4);
    CHECK(distance_without_edge(k4, 0, 1, k4.edge_index(0, 1)) == ExtDist(2));

    // The graph itself is untouched.
    CHECK(c5.has_edge(0, 1));
}

TEST_CASE("edge_on_all_shortest") {
    Graph p3 = oracle::path_graph(3);
    CHECK(edge_on_all_shortest(p3, 0, 2, p3.edge_index(0, 1)));

    Graph c4 = oracle::cycle(4);
    CHECK(edge_on_all_shortest(c4, 0, 1, c4.edge_index(0, 1)));

    // K4 minus the edge {2,3}: that pair keeps two 2-paths, so no single
    // edge lies on all of them.
    Graph k4me = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(oracle::all_paths(k4me, 2, 3, 2).size() == 2);
    for (int eid = 0; eid < k4me.edge_count(); ++eid)
        CHECK_FALSE(edge_on_all_shortest(k4me, 2, 3, eid));
}

TEST_CASE("canonical shortest path is the lexicographic greedy walk") {
    Graph c5 = oracle::cycle(5);
    CHECK(canonical_shortest_path(c5, 0, 2) == std::vector<int>{0, 1, 2});
    CHECK(canonical_shortest_path(c5, 0, 1) == std::vector<int>{0, 1});

    Graph c6 = oracle::cycle(6);
    CHECK(canonical_shortest_path(c6, 0, 3) == std::vector<int>{0, 1, 2, 3});

    Graph split = Graph::build(2, {});
    CHECK_THROWS_AS(canonical_shortest_path(split, 0, 1), Unreachable);

    // Always a shortest path, on a pile of random graphs.
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(10, 0.35, 31000 + static_cast<std::uint64_t>(i));
        auto d = oracle::distances(g);
        for (int x = 0; x < 10; ++x)
            for (int y = x + 1; y < 10; ++y) {
                if (d[x][y] >= oracle::kInf) continue;
                auto p = canonical_shortest_path(g, x, y);
                REQUIRE(static_cast<int>(p.size()) - 1 == d[x][y]);
                for (std::size_t s = 0; s + 1 < p.size(); ++s)
                    REQUIRE(g.has_edge(p[s], p[s + 1]));
            }
    }
}

TEST_CASE("deletion never shrinks distances") {
    for (int i = 0; i < 30; ++i) {
        Graph g = oracle::random_graph(9, 0.4, 555 + static_cast<std::uint64_t>(i));
        auto base = oracle::distances(g);
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            for (int x = 0; x < 9; ++x)
                for (int y = x + 1; y < 9; ++y) {
                    ExtDist del = distance_without_edge(g, x, y, eid);
                    if (base[x][y] >= oracle::kInf)
                        CHECK(del.is_infinite());
                    else
                        CHECK(del >= ExtDist(static_cast<std::uint32_t>(base[x][y])));
                }
        }
    }
}

TEST_CASE("triangle inequality on sampled triples") {
    Graph g = oracle::random_graph(20, 0.25, 999);
    DistanceMatrix m = all_pairs_distances(g);
    for (int a = 0; a < 20; ++a)
        for (int b = 0; b < 20; ++b)
            for (int c = 0; c < 20; ++c) {
                if (m.at(a, b) == kUnreached || m.at(b, c) == kUnreached) continue;
                REQUIRE(m.at(a, c) <= m.at(a, b) + m.at(b, c));
            }
}

TEST_CASE("all-pairs matches per-source BFS and is thread independent") {
    Graph g = oracle::random_graph(30, 0.2, 2024);
    DistanceMatrix one = all_pairs_distances(g, 1);
    DistanceMatrix four = all_pairs_distances(g, 4);
    for (int u = 0; u < 30; ++u)
        for (int v = 0; v < 30; ++v) CHECK(one.at(u, v) == four.at(u, v));
}
