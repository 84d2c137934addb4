#ifndef DIAMCRIT_STATS_HPP
#define DIAMCRIT_STATS_HPP

#include <optional>
#include <vector>

#include <diamcrit/criticality.hpp>
#include <diamcrit/fraction.hpp>
#include <diamcrit/graph.hpp>

namespace diamcrit {

// Counts of 3-vertex subsets by number of induced edges.  Computed from one
// edge scan (triangles, one-sided and zero-sided neighbours), then re-checked
// against the three counting identities
//   m(n-2)            = 3*t3 + 2*t2 + t1
//   sum_v C(d_v, 2)   = 3*t3 + t2
//   sum_v d_v^2 - mn  = 3*t3 - t1
// with exact integer arithmetic; a mismatch throws InternalInvariant.
struct TripleCounts {
    long long t0 = 0, t1 = 0, t2 = 0, t3 = 0;
};

TripleCounts triple_counts(const Graph& g);

struct BoundVerdicts {
    bool sum_dsq_le_nm = false;       // average edge-degree at most n
    bool sum_dsq_le_6_5_nm = false;   // the classical 6/5 bound
    bool m_le_3n2_over_k = false;     // 3n^2/k edge bound
    bool m_le_n2_over_4 = false;      // quarter-square edge bound
};

// Exact comparisons of sum d^2 against nm and (6/5)nm, and of m against
// 3n^2/k and n^2/4.  When `verified_critical` is set and k >= 3, a failure of
// sum d^2 <= nm throws TheoremViolation: that bound is proven for every
// diameter-critical graph of diameter at least 3.
BoundVerdicts check_edge_degree_bounds(const Graph& g, long long k,
                                       bool verified_critical = false);
BoundVerdicts check_edge_count_bounds(const Graph& g, long long k);

struct DisjointPairs {
    long long count = 0;                          // di(g)
    std::vector<std::array<int, 2>> pairs;        // Di(g)
};

// Pairs of vertices with disjoint (open) neighbourhoods.  Also asserts
// m + di <= n^2/2, which holds for every graph; LemmaViolation otherwise.
DisjointPairs disjoint_neighborhood_pairs(const Graph& g);

// Length-2 two-critical paths both of whose edges have multiplicity < t.
std::vector<TwoCriticalRecord> t_light_paths(const Graph& g,
                                             const std::vector<EdgeMultiplicity>& mult,
                                             const std::vector<TwoCriticalRecord>& two,
                                             long long t);

struct StatsReport {
    long long n = 0, m = 0;
    long long sum_deg_sq = 0;
    Fraction avg_edge_degree;          // sum d^2 / m
    Fraction ratio;                    // sum d^2 / (n m)
    TripleCounts triples;
    long long di = 0;
    std::optional<long long> t3_star;  // triangles with >= 3 feet; diameter-2 mode only
    BoundVerdicts degree_bounds;
    BoundVerdicts edge_bounds;
};

// k <= 0 skips the k-dependent verdicts.  t3_star is filled only when
// diameter(g) == 2 and a critical structure for k = 2 is supplied.
StatsReport stats_report(const Graph& g, long long k,
                         const CriticalStructure* s2 = nullptr,
                         bool verified_critical = false);

// Triangles of g with at least three feet (diameter-2 structure required).
long long t3_star_count(const Graph& g, const CriticalStructure& s2);

}  // namespace diamcrit

#endif  // DIAMCRIT_STATS_HPP
