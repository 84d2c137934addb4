#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include <diamcrit/constructions.hpp>
#include <diamcrit/criticality.hpp>
#include <diamcrit/errors.hpp>
#include <diamcrit/search.hpp>

#include "oracles.hpp"

using namespace diamcrit;

namespace {

// Library association vs the path-enumeration oracle, all pairs x all edges.
void cross_check_association(const Graph& g, long long k) {
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = x + 1; y < g.vertex_count(); ++y)
            for (int eid = 0; eid < g.edge_count(); ++eid) {
                const Edge& e = g.edge(eid);
                REQUIRE(k_associated(g, k, x, y, eid) ==
                        oracle::k_associated(g, k, x, y, e.u, e.v));
            }
}

}  // namespace

TEST_CASE("k_associated basics on C5 and K4") {
    Graph c5 = oracle::cycle(5);
    int e01 = c5.edge_index(0, 1);
    CHECK(k_associated(c5, 2, 0, 1, e01));
    CHECK(k_associated(c5, 2, 0, 2, e01));
    CHECK_FALSE(k_associated(c5, 2, 0, 3, e01));

    Graph k4 = oracle::complete(4);
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            for (int eid = 0; eid < 6; ++eid) CHECK_FALSE(k_associated(k4, 2, x, y, eid));

    cross_check_association(c5, 2);
    cross_check_association(oracle::complete_bipartite(2, 3), 2);
}

TEST_CASE("association agrees with the oracle on random graphs") {
    for (int i = 0; i < 40; ++i) {
        Graph g = oracle::random_graph(8, 0.35, 4200 + static_cast<std::uint64_t>(i));
        cross_check_association(g, 2);
        cross_check_association(g, 3);
    }
}

TEST_CASE("is_diameter_k_critical verdicts") {
    CHECK(is_diameter_k_critical(oracle::complete_bipartite(2, 3), 2).critical);
    CHECK(is_diameter_k_critical(oracle::petersen(), 2).critical);
    CHECK(is_diameter_k_critical(oracle::cycle(5), 2).critical);
    CHECK(is_diameter_k_critical(oracle::path_graph(3), 2).critical);
}

TEST_CASE("is_diameter_k_critical witnesses") {
    Graph k4me = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CriticalityWitness w = is_diameter_k_critical(k4me, 2);
    CHECK_FALSE(w.critical);
    REQUIRE(w.slack_edge.has_value());
    CHECK(k4me.edge(*w.slack_edge) == Edge{0, 1});  // the edge between the degree-3 vertices

    Graph k4 = oracle::complete(4);
    CriticalityWitness wd = is_diameter_k_critical(k4, 2);
    CHECK_FALSE(wd.critical);
    REQUIRE(wd.wrong_diameter.has_value());
    CHECK(*wd.wrong_diameter == ExtDist(1));
}

TEST_CASE("verifier agrees with the oracle exhaustively on n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int k = 1; k <= n; ++k)
                REQUIRE(is_diameter_k_critical(g, k).critical ==
                        oracle::is_diameter_k_critical(g, k));
        }
    }
}

TEST_CASE("critical structure of C5 at k = 2") {
    Graph c5 = oracle::cycle(5);
    CriticalStructure s = critical_structure(c5, 2);
    // Each edge is associated with its endpoints plus the two stretched pairs.
    int e01 = c5.edge_index(0, 1);
    std::set<std::array<int, 2>> pairs;
    for (int idx : s.edge_records[static_cast<std::size_t>(e01)])
        pairs.insert(s.records[static_cast<std::size_t>(idx)].pair);
    CHECK(pairs == std::set<std::array<int, 2>>{{0, 1}, {1, 4}, {0, 2}});
    for (const auto& rec : s.records) {
        // Associated edges sit on the canonical path.
        for (int eid : rec.assoc_edges) {
            const Edge& e = c5.edge(eid);
            bool on = false;
            for (std::size_t i = 0; i + 1 < rec.path.size(); ++i)
                if ((rec.path[i] == e.u && rec.path[i + 1] == e.v) ||
                    (rec.path[i] == e.v && rec.path[i + 1] == e.u))
                    on = true;
            CHECK(on);
        }
    }
    // Determinism: same graph, same bytes.
    CriticalStructure s2 = critical_structure(c5, 2, 4);
    REQUIRE(s.records.size() == s2.records.size());
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        CHECK(s.records[i].pair == s2.records[i].pair);
        CHECK(s.records[i].path == s2.records[i].path);
        CHECK(s.records[i].assoc_edges == s2.records[i].assoc_edges);
    }
}

TEST_CASE("critical structure via oracle on K23 and clique-matching") {
    Graph k23 = oracle::complete_bipartite(2, 3);
    CriticalStructure s = critical_structure(k23, 2);
    for (int eid = 0; eid < k23.edge_count(); ++eid) {
        const Edge& e = k23.edge(eid);
        REQUIRE(s.edge_records[static_cast<std::size_t>(eid)].size() == 1);
        const auto& rec = s.records[static_cast<std::size_t>(
            s.edge_records[static_cast<std::size_t>(eid)][0])];
        CHECK(rec.pair == std::array<int, 2>{e.u, e.v});
    }

    Graph cm = build_clique_matching(8);
    CriticalStructure s3 = critical_structure(cm, 3);
    // Matching edge (0,4): the pendant 4 pairs with every other vertex.
    int m04 = cm.edge_index(0, 4);
    std::set<std::array<int, 2>> got;
    for (int idx : s3.edge_records[static_cast<std::size_t>(m04)])
        got.insert(s3.records[static_cast<std::size_t>(idx)].pair);
    for (int w = 1; w < 8; ++w)
        if (w != 4) CHECK(got.count({std::min(4, w), std::max(4, w)}) == 1);
    CHECK(got.count({0, 4}) == 1);

    // Full oracle cross-check of the association relation behind the records.
    std::map<std::array<int, 2>, std::set<int>> want;
    for (int x = 0; x < 8; ++x)
        for (int y = x + 1; y < 8; ++y)
            for (int eid = 0; eid < cm.edge_count(); ++eid)
                if (oracle::k_associated(cm, 3, x, y, cm.edge(eid).u, cm.edge(eid).v))
                    want[{x, y}].insert(eid);
    std::map<std::array<int, 2>, std::set<int>> have;
    for (const auto& rec : s3.records)
        have[rec.pair] = std::set<int>(rec.assoc_edges.begin(), rec.assoc_edges.end());
    CHECK(want == have);
}

TEST_CASE("two-critical pairs") {
    Graph p3 = oracle::path_graph(3);
    auto records = two_critical_paths(p3);
    REQUIRE(records.size() == 3);
    CHECK(records[0].pair == std::array<int, 2>{0, 1});
    CHECK(records[1].pair == std::array<int, 2>{0, 2});
    CHECK(records[1].path == std::vector<int>{0, 1, 2});
    CHECK(records[2].pair == std::array<int, 2>{1, 2});

    Graph c4 = oracle::cycle(4);
    auto rc4 = two_critical_paths(c4);
    REQUIRE(rc4.size() == 4);  // the four edges; diagonals have two 2-paths
    for (const auto& r : rc4) CHECK(r.path.size() == 2);
}

TEST_CASE("multiplicities on clique-plus-matching") {
    Graph cm = build_clique_matching(8);
    auto mult = multiplicities(cm, 3);
    // Matching edge (0,4): critical paths from the pendant to everything,
    // plus the edge itself and the three w-0-4 two-critical paths.
    int m04 = cm.edge_index(0, 4);
    CHECK(mult[static_cast<std::size_t>(m04)].p1 == 7);
    CHECK(mult[static_cast<std::size_t>(m04)].p2 == 4);
    // Clique edge (0,1): one long pair (4,5), and two-critical paths
    // 4-0-1 and 0-1-5.
    int c01 = cm.edge_index(0, 1);
    CHECK(mult[static_cast<std::size_t>(c01)].p1 == 1);
    CHECK(mult[static_cast<std::size_t>(c01)].p2 == 2);
}

TEST_CASE("feet and feet triples") {
    // C5 is triangle-free: the operation rejects non-triangles.
    Graph c5 = oracle::cycle(5);
    CriticalStructure s5 = critical_structure(c5, 2);
    CHECK_THROWS_AS(feet(c5, {0, 1, 2}, s5), NotATriangle);

    // Verified diameter-2-critical graph with triangles: doubled Petersen
    // (the complement half is the line graph of K5, full of triangles).
    Graph g = build_d2_bip(oracle::petersen());
    REQUIRE(is_diameter_k_critical(g, 2).critical);
    CriticalStructure s = critical_structure(g, 2);
    int triangles = 0;
    std::set<std::array<int, 3>> all_triples;
    long long total_triples = 0;
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.vertex_count(); ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                ++triangles;
                auto f = feet(g, {a, b, c}, s);
                CHECK(f.size() >= 2);
                auto trips = feet_triples(g, {a, b, c}, s);
                CHECK(trips.size() == f.size());
                for (const auto& t : trips) {
                    CHECK(all_triples.insert(t).second);  // disjoint across triangles
                    ++total_triples;
                }
            }
        }
    CHECK(triangles > 0);
    CHECK(static_cast<long long>(all_triples.size()) == total_triples);
}

TEST_CASE("arms") {
    Graph c5 = oracle::cycle(5);
    CriticalStructure s = critical_structure(c5, 2);
    CHECK(arms(c5, c5.edge_index(0, 1), s) == std::vector<int>{2, 4});

    Graph k23 = oracle::complete_bipartite(2, 3);
    CriticalStructure sk = critical_structure(k23, 2);
    for (int eid = 0; eid < k23.edge_count(); ++eid)
        CHECK(arms(k23, eid, sk).empty());

    std::vector<int> empty_set;
    CHECK(arms(c5, c5.edge_index(0, 1), s, &empty_set).empty());
}

TEST_CASE("matched pairs and counts") {
    Graph p3 = oracle::path_graph(3);
    CHECK(matched(p3, 0, 2, p3.edge_index(0, 1)));

    // Adjacent pairs always match exactly their own edge.
    Graph k4 = oracle::complete(4);
    MatchedCounts mc = matched_counts(k4, 2);
    CHECK(mc.max_per_pair == 1);
    for (int c : mc.per_edge) CHECK(c == 1);

    Graph lay = build_layered_dk(6, 1, 1, 14);
    REQUIRE(is_diameter_k_critical(lay, 6).critical);
    MatchedCounts ml = matched_counts(lay, 6, true);  // enforces >= ceil(6/3) = 2
    CHECK(ml.max_per_pair <= 2);
    for (int c : ml.per_edge) CHECK(c >= 2);

    // Lower bound enforcement trips on a non-critical graph where some edge
    // is matched with fewer pairs than ceil(k/3): every K4 edge matches only
    // its own endpoints.
    Graph k4b = oracle::complete(4);
    CHECK_THROWS_AS(matched_counts(k4b, 6, true), CountingViolation);
}

TEST_CASE("find_k3_associated_path") {
    // k = 3 degenerates to the edge itself.
    Graph cm = build_clique_matching(8);
    for (int eid = 0; eid < cm.edge_count(); ++eid) {
        auto p = find_k3_associated_path(cm, 3, eid);
        REQUIRE(p.size() == 2);
        CHECK(cm.edge_index(p[0], p[1]) == eid);
    }

    Graph lay = build_layered_dk(6, 1, 1, 4);
    REQUIRE(is_diameter_k_critical(lay, 6).critical);
    for (int eid = 0; eid < lay.edge_count(); ++eid) {
        auto p = find_k3_associated_path(lay, 6, eid);
        REQUIRE(static_cast<long long>(p.size()) - 1 == 2);  // ceil(6/3)
        bool contains = false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (lay.edge_index(p[i], p[i + 1]) == eid) contains = true;
        CHECK(contains);
        CHECK(oracle::k_associated(lay, 2, p.front(), p.back(), lay.edge(eid).u,
                                   lay.edge(eid).v));
    }

    // Non-critical diameter-6 graph: a triangle hanging off a long path has
    // a redundant edge with no 2-associated pair.
    Graph tail = Graph::build(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    REQUIRE(diameter(tail) == ExtDist(6));
    CHECK_THROWS_AS(find_k3_associated_path(tail, 6, tail.edge_index(1, 2)), NotFound);
}

TEST_CASE("triangle charging on clique-plus-matching") {
    for (int n : {8, 10, 12}) {
        Graph cm = build_clique_matching(n);
        ChargingReport rep = verify_triangle_charging(cm, 3);
        CHECK(rep.triangles == static_cast<long long>(n / 2) * (n / 2 - 1) * (n / 2 - 2) / 6);
        CHECK(rep.min_per_triangle >= 3);
        CHECK(rep.charged_triples >= 3 * rep.triangles);
        CHECK(rep.t1_ge_k_t3);
        CHECK(rep.sum_dsq_le_nm);
    }
}

TEST_CASE("triangle charging is vacuous on bipartite layered graphs") {
    Graph lay = build_layered_dk(3, 1, 2, 3);
    ChargingReport rep = verify_triangle_charging(lay, 3);
    CHECK(rep.triangles == 0);
    CHECK(rep.charged_triples == 0);
    CHECK(rep.sum_dsq_le_nm);
}

TEST_CASE("count_paths_upto") {
    Graph c5 = oracle::cycle(5);
    CHECK(count_paths_upto(c5, 0, 2, 2) == 1);
    CHECK(count_paths_upto(c5, 0, 2, 3) == 2);
    Graph k4 = oracle::complete(4);
    CHECK(count_paths_upto(k4, 0, 1, 2) == 3);
}
