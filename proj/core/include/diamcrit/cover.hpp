#ifndef DIAMCRIT_COVER_HPP
#define DIAMCRIT_COVER_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <diamcrit/criticality.hpp>
#include <diamcrit/graph.hpp>

namespace diamcrit {

// The covering machinery runs on any diameter-critical graph of diameter at
// least 3 and always works with 3-association: "critical path" below means
// the canonical path of a pair whose distance some deletion pushes above 3.
// Every edge of such a graph carries at least one of these paths.

// Everything the run needs, computed once on the input and then frozen; only
// the unsettled set evolves during the algorithm.
struct CoverContext {
    Graph g;
    CriticalStructure crit;                       // 3-association structure
    std::vector<TwoCriticalRecord> two_crit;
    std::vector<EdgeMultiplicity> mult;
    std::vector<std::vector<int>> edge_paths;     // edge -> record ids, (length, lex) order
    std::vector<std::vector<int>> edge_two;       // edge -> two-critical record ids
    long long diameter = 0;
};

CoverContext make_cover_context(const Graph& g, int threads = 0);

// Edge types 1..6 against the current unsettled set U (indexed by edge id):
//   1  some critical path of the edge carries >= 2 unsettled associated edges
//   2  some length-3 critical path has the edge in the middle
//   3  together with another unsettled edge it forms a two-critical path
//   4  some length-3 critical path has the edge at an end
//   5  some critical path of the edge has length 2
//   6  none of the above (its only critical path is the edge itself)
int edge_type(const CoverContext& ctx, const std::vector<char>& unsettled, int edge_id);

enum class CoverCase { C1, C2, C31, C32, C4, C5, C6 };
const char* cover_case_name(CoverCase c);

struct CoverIteration {
    int index = 0;                                 // 1-based
    CoverCase kase = CoverCase::C1;
    int type = 0;                                  // t_i
    std::vector<std::vector<int>> paths;           // P(i), canonical vertex sequences
    std::vector<std::vector<int>> two_paths;       // P2(i)
    std::vector<int> settled;                      // edge ids settled here
    long long unsettled_after = 0;
};

struct CoverTrace {
    std::vector<CoverIteration> iterations;
    std::vector<std::vector<int>> family;          // all paths added, in order
    std::vector<int> settled_at;                   // edge id -> iteration index
    long long iterations_with_single_path = 0;
};

// The greedy covering run.  Deterministic: edges are scanned in index order,
// paths in (length, lex) order, and case C3-1 maximises |P| + |P'| over all
// valid choices with lexicographic tie-breaking.  Verifies its own
// bookkeeping as it goes; violations abort with InternalInvariant.
CoverTrace run_cover(const CoverContext& ctx);

// Convenience: context + run + full post-verification.
CoverTrace run_cover(const Graph& g, int threads = 0);

// Re-checks a finished trace against the frozen structure: every edge covered
// by the family, every P(i) critical and every P2(i) two-critical with the
// settlement conditions, global disjointness, the single-path-iteration count
// at most n/2, and nondecreasing types.  Throws LemmaViolation on failure.
void verify_cover_trace(const CoverContext& ctx, const CoverTrace& trace);

struct G0Result {
    Graph g0;
    std::vector<int> deleted_heavy;   // edge ids with multiplicity >= t
    std::vector<int> deleted_light;   // edge ids on a t-light two-critical path
};

// Prune: drop edges of multiplicity >= t and edges of t-light length-2
// two-critical paths.  Asserts that every length-2 two-critical path loses an
// edge and that every critical or two-critical pair has disjoint
// neighbourhoods afterwards (LemmaViolation otherwise).
G0Result build_g0(const CoverContext& ctx, long long t);

// Critical paths associated with >= 2 edges, of length 3, middle edge
// multiplicity >= t and end multiplicities < t.  Each is checked to be the
// unique path of length <= 3 between its endpoints.
std::vector<std::vector<int>> extract_p_t(const CoverContext& ctx, long long t);

struct SBoundReport {
    std::vector<std::vector<int>> settled_in_g0;   // S(i) per iteration, edge ids
    long long g0_edges = 0;
    long long exceptional_iterations = 0;          // |S(i)| = 2 cases
    long long s = 0;                               // iteration count
    long long sum_path_sets = 0;                   // sum |P(i) u P2(i)|
    long long di_g0 = 0;
    bool s_bound_holds = false;                    // e(G0) <= s + exceptions
    bool disjoint_pair_bound_holds = false;        // di(G0) >= 2s - n/2
};

// Settlement accounting on the pruned graph: S(i) partitions E(G0), at most
// one edge per iteration except C1 iterations whose path lies in the
// middle-heavy family for t, and the disjoint-pair count of G0 dominates
// 2s - n/2.  Violations throw LemmaViolation.
SBoundReport verify_s_bound(const CoverContext& ctx, const CoverTrace& trace,
                            const G0Result& g0, long long t);

// 3-uniform hypergraph with per-edge centre/handle annotations and an
// optional 3-part vertex labelling.
struct Hypergraph3 {
    struct Tri {
        std::array<int, 3> verts;  // sorted
        int center = -1;
        int handle = -1;
    };
    int n = 0;
    std::vector<Tri> edges;
    std::vector<int> part;         // vertex -> 0/1/2, empty when unpartitioned
};

bool is_linear(const Hypergraph3& h);
// Indices of three 3-edges forming the pattern {{1,2,3},{3,4,5},{5,6,1}}, if any.
std::optional<std::array<int, 3>> find_hypergraph_triangle(const Hypergraph3& h);

struct ChainReport {
    Hypergraph3 h1, h2, h3, h4;
    long long p_t_size = 0;
    int partition_attempts = 0;
    bool h2_linear = false;
    bool h2_bound = false;        // 2t |E(H2)| >= |E(H1)|
    bool h3_partite = false;
    bool h3_bound = false;        // 9 |E(H3)| >= 2 |E(H2)|
    bool h4_bound = false;        // 6 |E(H4)| >= |E(H3)|
    bool h4_linear = false;
    bool h4_triangle_free = false;
};

// The four-stage reduction from middle-heavy paths to a linear triangle-free
// triple system: H1 takes {x,a,y} from each path x-a-b-y (centre a, handle x);
// H2 is the greedy linear subfamily in input order; H3 keeps the rainbow
// 3-edges of a seeded random 3-partition, resampled until it reaches the 2/9
// expectation bound; H4 is the largest (centre-part, handle-part) class.
// Any failed stage bound throws BoundViolation.
ChainReport hypergraph_chain(int n, const std::vector<std::vector<int>>& p_t_paths,
                             long long t, std::uint64_t seed);

}  // namespace diamcrit

#endif  // DIAMCRIT_COVER_HPP
