#ifndef DIAMCRIT_CRITICALITY_HPP
#define DIAMCRIT_CRITICALITY_HPP

#include <array>
#include <optional>
#include <vector>

#include <diamcrit/graph.hpp>
#include <diamcrit/metric.hpp>

namespace diamcrit {

// A pair {x,y} and an edge e are k-associated when d(x,y) <= k but deleting e
// pushes their distance above k.  A pair with at least one associated edge is
// k-critical; it gets one deterministic canonical path (see
// canonical_shortest_path).  Every associated edge lies on every shortest
// path of the pair, hence on the canonical one.
bool k_associated(const Graph& g, long long k, int x, int y, int edge_id);

struct CriticalPathRecord {
    std::array<int, 2> pair;        // x < y
    std::vector<int> path;          // canonical vertex sequence from x to y
    std::vector<int> assoc_edges;   // ids of edges k-associated with the pair
};

struct CriticalStructure {
    long long k = 0;
    std::vector<CriticalPathRecord> records;        // sorted by pair
    std::vector<std::vector<int>> edge_records;     // edge id -> record indices
};

// All critical pairs, their canonical paths, and the edge->pairs inverse map.
// Requires diameter(g) >= k only in the sense that pairs farther than k never
// qualify; the usual call has diameter(g) == k.
CriticalStructure critical_structure(const Graph& g, long long k, int threads = 0);

struct CriticalityWitness {
    bool critical = false;
    // When !critical, exactly one of these is set:
    std::optional<ExtDist> wrong_diameter;  // diameter(g) != k
    std::optional<int> slack_edge;          // deleting this edge keeps diameter <= k
};

// diameter(g) == k and every single-edge deletion pushes the diameter above
// k, each edge checked exhaustively.
CriticalityWitness is_diameter_k_critical(const Graph& g, long long k, int threads = 0);

struct TwoCriticalRecord {
    std::array<int, 2> pair;   // x < y
    std::vector<int> path;     // the unique (x,y)-path of length <= 2
};

// Pairs with exactly one path of length at most 2 between them: either an
// edge whose endpoints share no common neighbour, or a nonadjacent pair with
// exactly one common neighbour.
std::vector<TwoCriticalRecord> two_critical_paths(const Graph& g);

struct EdgeMultiplicity {
    int p1 = 0;  // critical paths associated with the edge
    int p2 = 0;  // two-critical paths containing the edge
    int total() const { return p1 + p2; }
};

std::vector<EdgeMultiplicity> multiplicities(const Graph& g, long long k,
                                             const CriticalStructure* precomputed = nullptr,
                                             const std::vector<TwoCriticalRecord>* two = nullptr);

// Feet of a triangle (diameter-2 structure): v is a foot of T when some
// length-2 critical path v-x-y runs into an edge xy of T.  Each foot is
// adjacent to exactly one vertex of T (checked; LemmaViolation otherwise).
std::vector<int> feet(const Graph& g, std::array<int, 3> triangle,
                      const CriticalStructure& s2);

// The single-edge triples charged to T: {v} plus the two T-vertices the foot
// v is not adjacent to.
std::vector<std::array<int, 3>> feet_triples(const Graph& g, std::array<int, 3> triangle,
                                             const CriticalStructure& s2);

// Outside vertices x' whose length-2 critical path x'-x-y is associated with
// the edge xy.  With `inside`, reproduces the subgraph-relative variant: both
// endpoints must lie in the subset and the arm outside it.
std::vector<int> arms(const Graph& g, int edge_id, const CriticalStructure& s2,
                      const std::vector<int>* inside = nullptr);

// A pair {x,y} and edge e are matched when e touches x or y and lies on all
// shortest (x,y)-paths.  Each pair matches at most two edges (one per side).
bool matched(const Graph& g, int x, int y, int edge_id);

struct MatchedCounts {
    std::vector<int> per_edge;                       // edge id -> matched pairs
    std::vector<std::array<int, 3>> pair_counts;     // {x, y, count}, count > 0 only
    int max_per_pair = 0;
};

// When enforce_lower_bound is set (critical input), a per-edge count below
// ceil(k/3) throws CountingViolation: that bound holds for every
// diameter-k-critical graph.
MatchedCounts matched_counts(const Graph& g, long long k, bool enforce_lower_bound = false);

// A path of length ceil(k/3) through the edge whose endpoints are
// ceil(k/3)-associated with it.  Exists in every diameter-k-critical graph;
// NotFound signals a violated precondition.
std::vector<int> find_k3_associated_path(const Graph& g, long long k, int edge_id);

struct ChargingReport {
    long long triangles = 0;
    long long charged_triples = 0;          // sum over triangles, all distinct
    long long min_per_triangle = 0;         // >= k on valid input
    long long t1 = 0;                       // single-edge triples in the graph
    long long t3 = 0;                       // triangles
    bool t1_ge_k_t3 = false;
    bool sum_dsq_le_nm = false;
};

// Per-triangle charging certificate: for every triangle, k distinct
// single-edge triples, disjoint across triangles, built from the canonical
// critical paths of the triangle's edges.  Requires a diameter-k-critical
// graph with k >= 3; any failed step throws ChargingViolation naming the
// triangle.
ChargingReport verify_triangle_charging(const Graph& g, long long k,
                                        const CriticalStructure* precomputed = nullptr,
                                        int threads = 0);

// Number of simple (x,y)-paths of length <= cap, counting stops at `limit`.
// Test-friendly uniqueness helper used by the unique-path assertions.
int count_paths_upto(const Graph& g, int x, int y, int cap, int limit = 4);

}  // namespace diamcrit

#endif  // DIAMCRIT_CRITICALITY_HPP
