#ifndef DIAMCRIT_GRAPH_HPP
#define DIAMCRIT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <diamcrit/bits.hpp>

namespace diamcrit {

struct Edge {
    int u, v;  // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Simple undirected graph on vertices 0..n-1.  Adjacency is kept as one bit
// row per vertex (n^2 bits, O(n^2/64) words) because common-neighbour and
// BFS frontier operations dominate everything downstream; a lexicographically
// sorted edge list is kept alongside so edge indices are stable identifiers
// within one Graph value.  A built Graph is immutable and safe to share
// across threads.
class Graph {
public:
    Graph() : n_(0), stride_(0) {}

    // Deduplicates and sorts the input pairs; either orientation accepted.
    // Throws OutOfRange / SelfLoop on bad pairs.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    bool has_edge(int u, int v) const { return test_bit(row(u), v); }

    std::span<const Word> row(int v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * stride_, stride_};
    }
    std::size_t row_words() const { return stride_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    // Index of edge {u,v} in the sorted list, or -1.
    int edge_index(int u, int v) const;

    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    long long degree_square_sum() const;

    // Neighbours in ascending vertex order.
    std::vector<int> neighbors(int v) const;

    Graph complement() const;

    // New graph without the given edge (vertex set unchanged).
    Graph without_edge(int edge_id) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::size_t stride_;
    std::vector<Word> adj_;      // n_ * stride_ words
    std::vector<Edge> edges_;    // sorted, u < v
    std::vector<int> degrees_;

    void finalize_from_edges();  // fills adj_/degrees_, checks invariants
};

}  // namespace diamcrit

#endif  // DIAMCRIT_GRAPH_HPP
