#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <diamcrit/constructions.hpp>
#include <diamcrit/errors.hpp>
#include <diamcrit/search.hpp>
#include <diamcrit/stats.hpp>

#include "oracles.hpp"

using namespace diamcrit;

TEST_CASE("triple counts on fixtures") {
    TripleCounts c5 = triple_counts(oracle::cycle(5));
    CHECK(c5.t0 == 0);
    CHECK(c5.t1 == 5);
    CHECK(c5.t2 == 5);
    CHECK(c5.t3 == 0);

    TripleCounts k23 = triple_counts(oracle::complete_bipartite(2, 3));
    CHECK(k23.t0 == 1);
    CHECK(k23.t1 == 0);
    CHECK(k23.t2 == 9);
    CHECK(k23.t3 == 0);

    TripleCounts k4 = triple_counts(oracle::complete(4));
    CHECK(k4.t0 == 0);
    CHECK(k4.t1 == 0);
    CHECK(k4.t2 == 0);
    CHECK(k4.t3 == 4);
}

TEST_CASE("triple counts match the brute-force histogram") {
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(5 + i % 14, (i % 9 + 1) / 10.0,
                                       8800 + static_cast<std::uint64_t>(i));
        if (g.vertex_count() < 3) continue;
        auto want = oracle::triple_histogram(g);
        TripleCounts got = triple_counts(g);
        CHECK(got.t0 == want[0]);
        CHECK(got.t1 == want[1]);
        CHECK(got.t2 == want[2]);
        CHECK(got.t3 == want[3]);
    }
}

TEST_CASE("triple identities hold exhaustively for n <= 5") {
    for (int n = 3; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            TripleCounts t = triple_counts(g);  // throws if any identity fails
            CHECK(t.t0 + t.t1 + t.t2 + t.t3 ==
                  static_cast<long long>(n) * (n - 1) * (n - 2) / 6);
        }
    }
}

TEST_CASE("ratio is isomorphism invariant") {
    Graph g = oracle::random_graph(12, 0.4, 31337);
    Fraction base(g.degree_square_sum(), g.vertex_count() * g.edge_count());
    std::vector<int> perm(12);
    for (int i = 0; i < 12; ++i) perm[static_cast<std::size_t>(i)] = i;
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        for (int i = 11; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)))]);
        Graph h = oracle::relabel(g, perm);
        CHECK(Fraction(h.degree_square_sum(), h.vertex_count() * h.edge_count()) == base);
    }
}

TEST_CASE("edge degree bounds") {
    Graph pet = oracle::petersen();
    BoundVerdicts v = check_edge_degree_bounds(pet, 2);
    CHECK(v.sum_dsq_le_nm);          // 90 <= 150
    CHECK(v.sum_dsq_le_6_5_nm);
    CHECK(v.m_le_n2_over_4);

    Graph lay = build_layered_dk(3, 1, 2, 3);
    BoundVerdicts vl = check_edge_degree_bounds(lay, 3, true);
    CHECK(vl.sum_dsq_le_nm);         // 56 <= 80

    // A verified-critical flag with k >= 3 and a violation must throw;
    // K4 (diameter 1) violates sum d^2 <= nm.
    Graph k4 = oracle::complete(4);
    CHECK(k4.degree_square_sum() > 4 * k4.edge_count());
    CHECK_THROWS_AS(check_edge_degree_bounds(k4, 3, true), TheoremViolation);
    CHECK_NOTHROW(check_edge_degree_bounds(k4, 3, false));
}

TEST_CASE("edge count bounds") {
    Graph cm = build_clique_matching(8);
    BoundVerdicts v = check_edge_count_bounds(cm, 3);
    CHECK(v.m_le_3n2_over_k);  // 10 <= 64
    CHECK(v.m_le_n2_over_4);   // 10 <= 16

    Graph k55 = oracle::complete_bipartite(5, 5);
    CHECK(k55.edge_count() == 25);  // n^2/4 exactly, the conjectured extremum
    BoundVerdicts v55 = check_edge_count_bounds(k55, 2);
    CHECK(v55.m_le_n2_over_4);

    Graph lay = build_layered_dk(4, 1, 3, 5);
    CHECK(check_edge_count_bounds(lay, 4).m_le_3n2_over_k);
}

TEST_CASE("disjoint neighborhood pairs") {
    DisjointPairs kn = disjoint_neighborhood_pairs(oracle::complete(6));
    CHECK(kn.count == 0);

    DisjointPairs empty = disjoint_neighborhood_pairs(Graph::build(6, {}));
    CHECK(empty.count == 15);

    // C5: exactly the adjacent pairs have disjoint neighbourhoods.
    DisjointPairs c5 = disjoint_neighborhood_pairs(oracle::cycle(5));
    CHECK(c5.count == 5);
    for (const auto& pr : c5.pairs) CHECK(oracle::cycle(5).has_edge(pr[0], pr[1]));

    // m + di <= n^2 / 2 exhaustively on n <= 5.
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            DisjointPairs dp = disjoint_neighborhood_pairs(g);  // throws on violation
            CHECK(2 * (g.edge_count() + dp.count) <= static_cast<long long>(n) * n);
        }
    }
}

TEST_CASE("t-light paths") {
    Graph cm = build_clique_matching(8);
    auto two = two_critical_paths(cm);
    auto mult = multiplicities(cm, 3, nullptr, &two);

    // t = 1: multiplicity below 1 is impossible.
    CHECK(t_light_paths(cm, mult, two, 1).empty());

    // Huge t: every length-2 two-critical path qualifies.
    long long len2 = 0;
    for (const auto& r : two)
        if (r.path.size() == 3) ++len2;
    CHECK(static_cast<long long>(t_light_paths(cm, mult, two, 1 << 20).size()) == len2);

    // t = 2: every length-2 two-critical path here touches a matching edge
    // (multiplicity 11) or a clique edge (multiplicity 3); none qualifies.
    CHECK(t_light_paths(cm, mult, two, 2).empty());
}

TEST_CASE("stats report") {
    Graph k23 = oracle::complete_bipartite(2, 3);
    StatsReport r = stats_report(k23, 2);
    CHECK(r.n == 5);
    CHECK(r.m == 6);
    CHECK(r.sum_deg_sq == 30);
    CHECK(r.ratio == Fraction(1, 1));
    CHECK(r.avg_edge_degree == Fraction(5, 1));
    CHECK_FALSE(r.t3_star.has_value());

    CriticalStructure s2 = critical_structure(k23, 2);
    StatsReport r2 = stats_report(k23, 2, &s2);
    REQUIRE(r2.t3_star.has_value());
    CHECK(*r2.t3_star == 0);  // bipartite, no triangles

    // Doubled Petersen: every triangle has at least 3 feet here.
    Graph dp = build_d2_bip(oracle::petersen());
    CriticalStructure sdp = critical_structure(dp, 2);
    StatsReport rdp = stats_report(dp, 2, &sdp);
    REQUIRE(rdp.t3_star.has_value());
    CHECK(*rdp.t3_star >= 0);
    CHECK(rdp.triples.t3 > 0);
}
