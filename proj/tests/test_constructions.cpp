#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <diamcrit/constructions.hpp>
#include <diamcrit/criticality.hpp>
#include <diamcrit/errors.hpp>
#include <diamcrit/metric.hpp>

#include "oracles.hpp"

using namespace diamcrit;

TEST_CASE("doubled generator") {
    Graph g = build_d2_bip(oracle::cycle(5));
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);  // C(5,2) + 5
    CHECK(is_diameter_k_critical(g, 2).critical);

    // Degenerate generator: accepted, the verifier reports non-criticality.
    Graph k1 = Graph::build(1, {});
    Graph k2 = build_d2_bip(k1);
    CHECK(k2.vertex_count() == 2);
    CHECK_FALSE(is_diameter_k_critical(k2, 2).critical);

    // P3's complement is disconnected: rejected with the failing side named.
    CHECK_THROWS_AS(build_d2_bip(oracle::path_graph(3)), PreconditionFailed);
    try {
        build_d2_bip(oracle::path_graph(3));
    } catch (const PreconditionFailed& e) {
        CHECK(std::string(e.what()).find("complement") != std::string::npos);
    }
}

TEST_CASE("three-block generator") {
    Graph g = build_d2_trip(oracle::cycle(5), 2);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 25);  // 15 + 5*2
    CHECK(is_diameter_k_critical(g, 2).critical);

    Graph g5 = build_d2_trip(oracle::cycle(5), 5);
    CHECK(g5.vertex_count() == 15);
    CHECK(g5.edge_count() == 40);  // C(5,2) + 5 + 5*5
    CHECK(is_diameter_k_critical(g5, 2).critical);

    // r = 0 collapses to the doubled construction.
    CHECK(build_d2_trip(oracle::cycle(5), 0) == build_d2_bip(oracle::cycle(5)));
}

TEST_CASE("layered family") {
    Graph g = build_layered_dk(3, 1, 2, 3);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 10);  // ab + b(k-2) + bc = 2 + 2 + 6
    CHECK(g.degree_square_sum() == 56);
    CHECK(diameter(g) == ExtDist(3));
    CHECK(is_diameter_k_critical(g, 3).critical);

    Graph t = build_layered_dk(3, 1, 1, 97);
    CHECK(t.vertex_count() == 100);
    CHECK(t.edge_count() == 99);
    CHECK(t.degree_square_sum() == 9706);

    for (auto [k, a, b, c] : std::vector<std::array<int, 4>>{
             {3, 1, 1, 10}, {4, 1, 3, 5}, {6, 1, 1, 14}, {6, 2, 2, 8}}) {
        Graph lg = build_layered_dk(k, a, b, c);
        CHECK(lg.edge_count() == static_cast<long long>(a) * b + b * (k - 2) + b * c);
        CHECK(is_diameter_k_critical(lg, k).critical);
    }

    CHECK_THROWS_AS(build_layered_dk(2, 1, 1, 1), BadParams);
    CHECK_THROWS_AS(build_layered_dk(3, 0, 1, 1), BadParams);
}

TEST_CASE("clique plus matching") {
    for (int n : {6, 8, 10}) {
        Graph g = build_clique_matching(n);
        CHECK(g.edge_count() == static_cast<long long>(n / 2) * (n / 2 - 1) / 2 + n / 2);
        CHECK(is_diameter_k_critical(g, 3).critical);
    }
    CHECK_THROWS_AS(build_clique_matching(4), BadParams);
    CHECK_THROWS_AS(build_clique_matching(7), BadParams);
}

TEST_CASE("gnp sampling is deterministic and seed-sensitive") {
    Graph a = sample_gnp(30, 0.3, 42);
    Graph b = sample_gnp(30, 0.3, 42);
    CHECK(a == b);
    Graph c = sample_gnp(30, 0.3, 43);
    CHECK_FALSE(a == c);

    CHECK(sample_gnp(20, 0.0, 1).edge_count() == 0);
    CHECK(sample_gnp(20, 1.0, 1).edge_count() == 190);
}

TEST_CASE("lemma23 checks on degenerate p") {
    Graph empty = sample_gnp(40, 0.0, 7);
    Lemma23Checks c0 = check_lemma23(empty, 0.0);
    CHECK_FALSE(c0.diam_g_le_2);
    CHECK(c0.diam_comp_le_2);

    Graph full = sample_gnp(40, 1.0, 7);
    Lemma23Checks c1 = check_lemma23(full, 1.0);
    CHECK(c1.diam_g_le_2);
    CHECK_FALSE(c1.diam_comp_le_2);
}

TEST_CASE("lemma23 pass rate at n = 400") {
    const int n = 400;
    const double p = 2.0 * std::sqrt(std::log(n) / n);
    int passes = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Graph g = sample_gnp(n, p, seed);
        if (check_lemma23(g, p).pass()) ++passes;
    }
    CHECK(passes >= 45);  // >= 0.9 of 50
}

TEST_CASE("counterexample, explicit small run") {
    CounterexampleResult res = build_counterexample(300, 1.0, 1);
    CHECK(res.explicit_mode);
    REQUIRE(res.graph.has_value());
    CHECK(res.total_n == 900);
    CHECK(res.graph->vertex_count() == 900);
    CHECK(res.graph->edge_count() == res.total_m);
    CHECK(res.graph->degree_square_sum() == res.sum_deg_sq);

    // Finite-size ratio sits below 1 here, near the closed-form estimate
    // (p^2 + (2-p)^2 + 1) / 4.5 with p = 2 sqrt(ln n / n).
    const double p = 2.0 * std::sqrt(std::log(300.0) / 300.0);
    const double closed_form = (p * p + (2 - p) * (2 - p) + 1.0) / 4.5;
    CHECK(res.ratio.to_double() > closed_form - 0.03);
    CHECK(res.ratio.to_double() < closed_form + 0.03);
    CHECK(res.ratio < Fraction(1, 1));
}

TEST_CASE("counterexample explicit output is diameter-2-critical") {
    CounterexampleResult res = build_counterexample(150, 1.0, 5);
    REQUIRE(res.graph.has_value());
    CHECK(is_diameter_k_critical(*res.graph, 2).critical);
}

TEST_CASE("implicit stats equal explicit stats at the same seed") {
    CounterexampleOptions exp_opt;
    CounterexampleResult expl = build_counterexample(500, 1.0, 11, exp_opt);
    CounterexampleOptions imp_opt;
    imp_opt.n_explicit = 100;  // force implicit mode, same sampling path
    CounterexampleResult impl = build_counterexample(500, 1.0, 11, imp_opt);
    CHECK_FALSE(impl.graph.has_value());
    CHECK(impl.seed_used == expl.seed_used);
    CHECK(impl.sum_deg_sq == expl.sum_deg_sq);
    CHECK(impl.total_m == expl.total_m);
    CHECK(impl.ratio == expl.ratio);
    REQUIRE(expl.graph.has_value());
    CHECK(expl.graph->degree_square_sum() == expl.sum_deg_sq);
}

TEST_CASE("counterexample parameter validation") {
    CHECK_THROWS_AS(build_counterexample(20, 1.0, 1), BadParams);
    CHECK_THROWS_AS(build_counterexample(300, -1.0, 1), BadParams);
    CHECK_THROWS_AS(build_counterexample(301, 0.4995, 1), BadParams);  // x*n not integral
}
