#include <diamcrit/stats.hpp>

#include <string>

#include <diamcrit/errors.hpp>

namespace diamcrit {

TripleCounts triple_counts(const Graph& g) {
    const long long n = g.vertex_count();
    if (n < 3) throw BadParams("triple counts need n >= 3");
    const long long m = g.edge_count();
    TripleCounts t;
    long long cherries3 = 0;  // 3*t3, via common neighbours over edges
    long long one_sided2 = 0; // 2*t2
    for (const Edge& e : g.edges()) {
        long long cn = static_cast<long long>(intersection_count(g.row(e.u), g.row(e.v)));
        long long du = g.degree(e.u), dv = g.degree(e.v);
        cherries3 += cn;
        one_sided2 += du + dv - 2 - 2 * cn;
        t.t1 += n - du - dv + cn;
    }
    t.t3 = cherries3 / 3;
    t.t2 = one_sided2 / 2;
    t.t0 = n * (n - 1) * (n - 2) / 6 - t.t1 - t.t2 - t.t3;
    if (cherries3 % 3 != 0 || one_sided2 % 2 != 0 || t.t0 < 0)
        throw InternalInvariant("triple classification out of balance");

    // Independent identity checks over the degree sequence.
    long long choose2 = 0, dsq = 0;
    for (int d : g.degrees()) {
        choose2 += static_cast<long long>(d) * (d - 1) / 2;
        dsq += static_cast<long long>(d) * d;
    }
    if (m * (n - 2) != 3 * t.t3 + 2 * t.t2 + t.t1)
        throw InternalInvariant("identity m(n-2) = 3t3 + 2t2 + t1 failed");
    if (choose2 != 3 * t.t3 + t.t2)
        throw InternalInvariant("identity sum C(d,2) = 3t3 + t2 failed");
    if (dsq - m * n != 3 * t.t3 - t.t1)
        throw InternalInvariant("identity sum d^2 - mn = 3t3 - t1 failed");
    return t;
}

BoundVerdicts check_edge_degree_bounds(const Graph& g, long long k, bool verified_critical) {
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    const long long dsq = g.degree_square_sum();
    BoundVerdicts v;
    v.sum_dsq_le_nm = dsq <= n * m;
    v.sum_dsq_le_6_5_nm = 5 * dsq <= 6 * n * m;
    v.m_le_3n2_over_k = k > 0 ? (k * m <= 3 * n * n) : true;
    v.m_le_n2_over_4 = 4 * m <= n * n;
    if (verified_critical && k >= 3 && !v.sum_dsq_le_nm)
        throw TheoremViolation("sum d^2 > nm on a verified diameter-" + std::to_string(k) +
                               "-critical graph");
    return v;
}

BoundVerdicts check_edge_count_bounds(const Graph& g, long long k) {
    return check_edge_degree_bounds(g, k, false);
}

DisjointPairs disjoint_neighborhood_pairs(const Graph& g) {
    const int n = g.vertex_count();
    DisjointPairs out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!intersects(g.row(u), g.row(v))) {
                ++out.count;
                out.pairs.push_back({u, v});
            }
    const long long nn = static_cast<long long>(n) * n;
    if (2 * (g.edge_count() + out.count) > nn)
        throw LemmaViolation("m + di exceeds n^2/2, impossible for any graph");
    return out;
}

std::vector<TwoCriticalRecord> t_light_paths(const Graph& g,
                                             const std::vector<EdgeMultiplicity>& mult,
                                             const std::vector<TwoCriticalRecord>& two,
                                             long long t) {
    std::vector<TwoCriticalRecord> out;
    for (const auto& rec : two) {
        if (rec.path.size() != 3) continue;
        int e1 = g.edge_index(rec.path[0], rec.path[1]);
        int e2 = g.edge_index(rec.path[1], rec.path[2]);
        if (mult[static_cast<std::size_t>(e1)].total() < t &&
            mult[static_cast<std::size_t>(e2)].total() < t)
            out.push_back(rec);
    }
    return out;
}

long long t3_star_count(const Graph& g, const CriticalStructure& s2) {
    const int n = g.vertex_count();
    long long count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                if (feet(g, {a, b, c}, s2).size() >= 3) ++count;
            }
        }
    return count;
}

StatsReport stats_report(const Graph& g, long long k, const CriticalStructure* s2,
                         bool verified_critical) {
    StatsReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.sum_deg_sq = g.degree_square_sum();
    if (r.m > 0) r.avg_edge_degree = Fraction(r.sum_deg_sq, r.m);
    if (r.n > 0 && r.m > 0) r.ratio = Fraction(r.sum_deg_sq, r.n * r.m);
    if (r.n >= 3) r.triples = triple_counts(g);
    r.di = disjoint_neighborhood_pairs(g).count;
    if (s2) r.t3_star = t3_star_count(g, *s2);
    r.degree_bounds = check_edge_degree_bounds(g, k, verified_critical);
    r.edge_bounds = r.degree_bounds;
    return r;
}

}  // namespace diamcrit
