#ifndef DIAMCRIT_METRIC_HPP
#define DIAMCRIT_METRIC_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <diamcrit/graph.hpp>

namespace diamcrit {

// Distance in edges, or Infinity.  Infinity compares above every finite
// value and addition saturates, so "deletion disconnects" needs no special
// cases anywhere downstream.
class ExtDist {
public:
    constexpr ExtDist() : raw_(kInfRaw) {}
    constexpr explicit ExtDist(std::uint32_t d) : raw_(d) {}
    static constexpr ExtDist infinity() { return ExtDist(); }

    bool is_infinite() const { return raw_ == kInfRaw; }
    bool is_finite() const { return raw_ != kInfRaw; }
    std::uint32_t value() const { return raw_; }  // callers check finiteness

    friend constexpr auto operator<=>(ExtDist a, ExtDist b) { return a.raw_ <=> b.raw_; }
    friend constexpr bool operator==(ExtDist, ExtDist) = default;

    friend ExtDist operator+(ExtDist a, ExtDist b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        std::uint64_t s = std::uint64_t{a.raw_} + b.raw_;
        return s >= kInfRaw ? infinity() : ExtDist(static_cast<std::uint32_t>(s));
    }

    bool exceeds(long long k) const { return is_infinite() || raw_ > k; }

    std::string to_string() const {
        return is_infinite() ? "inf" : std::to_string(raw_);
    }

private:
    static constexpr std::uint32_t kInfRaw = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t raw_;
};

// Raw hop counts used by the kernels; 0xFFFF marks an unreached vertex.
// Graphs passed to the BFS kernels must have fewer than 65535 vertices.
inline constexpr std::uint16_t kUnreached = 0xFFFF;

// Reusable BFS scratch (frontier/visited bitsets plus the distance row);
// sized by the kernel itself.
struct BfsScratch {
    std::vector<Word> frontier, next, visited;
    std::vector<std::uint16_t> dist;
};

// Level-synchronised bit-parallel BFS.  skip_u/skip_v, when >= 0, name one
// edge treated as absent (the graph itself is not touched).  Stops early once
// `target` (if >= 0) has been reached, or once the level exceeds `cap`
// (if >= 0); distances beyond the stopping point stay kUnreached.
void bfs_into(const Graph& g, int source, BfsScratch& s,
              int skip_u = -1, int skip_v = -1, int target = -1, long long cap = -1);

std::vector<ExtDist> bfs_distances(const Graph& g, int source);

ExtDist diameter(const Graph& g, int threads = 0);

// d_{G-e}(x, y), exact; G is not mutated.
ExtDist distance_without_edge(const Graph& g, int x, int y, int edge_id);

// True iff every shortest (x,y)-path uses the edge, i.e. removing it makes
// the pair strictly more distant.  Requires d(x,y) finite.
bool edge_on_all_shortest(const Graph& g, int x, int y, int edge_id);

// The deterministic shortest (x,y)-path: starting from x, repeatedly take the
// smallest-index neighbour that moves closer to y.  Every "pick any shortest
// path" in this project resolves to this choice.  Callers pass x < y.
// Throws Unreachable when d(x,y) is infinite.
std::vector<int> canonical_shortest_path(const Graph& g, int x, int y);

// Full n x n hop-count table (uint16, kUnreached for disconnected pairs).
class DistanceMatrix {
public:
    DistanceMatrix() : n_(0) {}
    DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreached) {}
    std::uint16_t* row(int v) { return d_.data() + static_cast<std::size_t>(v) * n_; }
    const std::uint16_t* row(int v) const { return d_.data() + static_cast<std::size_t>(v) * n_; }
    std::uint16_t at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int size() const { return n_; }

private:
    int n_;
    std::vector<std::uint16_t> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g, int threads = 0);

}  // namespace diamcrit

#endif  // DIAMCRIT_METRIC_HPP
