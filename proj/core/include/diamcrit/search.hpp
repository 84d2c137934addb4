#ifndef DIAMCRIT_SEARCH_HPP
#define DIAMCRIT_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <diamcrit/fraction.hpp>
#include <diamcrit/graph.hpp>

namespace diamcrit {

// Upper-triangle bit mask of a small graph, pairs (i,j), i < j, in
// lexicographic order.  Usable for n <= 11 (55 bits).
std::uint64_t graph_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

// Permutation-minimal adjacency mask: the canonical form used for
// isomorphism deduplication (n <= 8).
std::uint64_t canonical_mask(int n, std::uint64_t mask);

struct SearchResult {
    int n = 0;
    long long k = 0;
    std::string mode;                       // "exhaustive" or "local"
    long long best_m = 0;
    Fraction best_ratio;                    // sum d^2 / (nm) over found graphs
    std::vector<std::string> witnesses;     // graph6, re-verified critical
    long long total_critical = 0;           // exhaustive: iso classes found
    bool quarter_bound_alarm = false;       // k=2 witness above n^2/4 (verified)
    long long steps_taken = 0;              // local mode
};

// Complete isomorphism-free enumeration of diameter-k-critical graphs.
// n <= 7 filters all labelled graphs and deduplicates by canonical form;
// n = 8 runs canonical augmentation level by level.  TooLarge beyond that.
SearchResult enumerate_critical(int n, long long k, int threads = 0);

enum class SearchObjective { Edges, Ratio };

struct LocalSearchOptions {
    int n = 0;
    long long k = 0;
    SearchObjective objective = SearchObjective::Edges;
    std::uint64_t seed = 0;
    long long budget = 0;     // flip proposals
    int threads = 0;
};

// Seeded hill climb over edge flips with deletion-only repair: after each
// flip, non-critical edges are removed greedily until the verifier passes,
// and the candidate replaces the current point when its score does not drop.
// Every reported graph re-verifies as diameter-k-critical.  A verified k=2
// witness above n^2/4 edges raises the alarm flag; a verified k>=3 witness
// above 3n^2/k is impossible and throws LemmaViolation.
SearchResult local_search(const LocalSearchOptions& opt);

}  // namespace diamcrit

#endif  // DIAMCRIT_SEARCH_HPP
