#ifndef DIAMCRIT_CONSTRUCTIONS_HPP
#define DIAMCRIT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <diamcrit/fraction.hpp>
#include <diamcrit/graph.hpp>

namespace diamcrit {

// Doubled-generator family: A = 0..n-1 carries g, B = n..2n-1 carries the
// complement of g, and i is matched to n+i.  Requires both g and its
// complement to have diameter at most 2 (PreconditionFailed names the side
// that fails); the output is diameter-2-critical for every such generator.
// Degenerate generators (n <= 2) are accepted and flagged by the verifier.
Graph build_d2_bip(const Graph& g);

// The same with a third block C = 2n..2n+r-1 joined completely to B.
// r = 0 collapses to build_d2_bip and is accepted.
Graph build_d2_trip(const Graph& g, long long r);

// Layered family: blocks V_0 (a), V_1..V_{k-1} (b each), V_k (c), complete
// bipartite joins V_0 x V_1 and V_{k-1} x V_k, and b disjoint chains through
// the middle layers.  Vertices are numbered block by block in that order.
// Diameter-k-critical; m = ab + b(k-2) + bc.
Graph build_layered_dk(int k, int a, int b, int c);

// Clique on 0..n/2-1 plus the perfect matching i <-> i+n/2.
// Diameter-3-critical for even n >= 6.
Graph build_clique_matching(int n);

// Seeded G(n,p): pair (u,v), u < v, with lexicographic index i is included
// iff splitmix64(seed, i) clears the 53-bit threshold for p.  Identical
// output for identical (n, p, seed) on every platform.
Graph sample_gnp(int n, double p, std::uint64_t seed);

struct Lemma23Checks {
    bool diam_g_le_2 = false;
    bool diam_comp_le_2 = false;
    bool max_degree_le_2np = false;
    int max_degree = 0;
    bool pass() const { return diam_g_le_2 && diam_comp_le_2 && max_degree_le_2np; }
};

// The three almost-sure events behind the random construction, verified
// deterministically on the sample.
Lemma23Checks check_lemma23(const Graph& g, double p);

struct CounterexampleResult {
    bool explicit_mode = false;
    std::optional<Graph> graph;        // explicit mode only
    std::uint64_t seed_used = 0;       // seed whose sample passed
    int attempts = 0;
    Lemma23Checks checks;              // for the accepted sample
    bool diam_checks_skipped = false;  // generator too large for exact diameter checks
    bool complement_certified_by_degree = false;  // 2*max_deg + 2 < n
    long long generator_n = 0;
    long long r = 0;
    long long total_n = 0;             // 2n + r
    long long total_m = 0;
    long long sum_deg_sq = 0;
    Fraction ratio;                    // sum_deg_sq / (total_n * total_m)
};

struct CounterexampleOptions {
    long long n_explicit = 2000;       // build the explicit graph up to this generator size
    long long n_full_checks = 25000;   // adjacency-based generator checks up to this size
    int max_attempts = 100;
};

// Random diameter-2-critical graphs with average edge-degree above the vertex
// count: sample G(n, p) with p = 2*sqrt(ln n / n), retry seed+1 while the
// sample fails its checks, then attach the third block of r = x*n vertices.
// Explicit mode returns the graph; implicit mode computes the exact degree
// statistics without materialising the B x C join.  Above n_full_checks the
// generator's diameter checks are skipped (degree bounds still verified) and
// the degree sequence is streamed without building adjacency rows.
CounterexampleResult build_counterexample(long long n, double x, std::uint64_t seed,
                                          const CounterexampleOptions& opt = {});

}  // namespace diamcrit

#endif  // DIAMCRIT_CONSTRUCTIONS_HPP
