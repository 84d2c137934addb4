#include <diamcrit/graph.hpp>

#include <algorithm>
#include <string>

#include <diamcrit/errors.hpp>

namespace diamcrit {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw BadParams("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.stride_ = words_for(static_cast<std::size_t>(n));
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw OutOfRange("edge endpoint out of range: (" + std::to_string(a) + "," +
                             std::to_string(b) + ") with n=" + std::to_string(n));
        if (a == b) throw SelfLoop("self-loop at vertex " + std::to_string(a));
        g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.finalize_from_edges();
    return g;
}

void Graph::finalize_from_edges() {
    adj_.assign(static_cast<std::size_t>(n_) * stride_, 0);
    degrees_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        set_bit({adj_.data() + static_cast<std::size_t>(e.u) * stride_, stride_}, e.v);
        set_bit({adj_.data() + static_cast<std::size_t>(e.v) * stride_, stride_}, e.u);
        ++degrees_[static_cast<std::size_t>(e.u)];
        ++degrees_[static_cast<std::size_t>(e.v)];
    }
    // Symmetry and loop-freedom hold by construction; recheck the bit count
    // so any future mutation path cannot silently break them.
    std::size_t bits = popcount({adj_.data(), adj_.size()});
    if (bits != 2 * edges_.size())
        throw InternalInvariant("adjacency bit count does not match edge list");
}

int Graph::edge_index(int u, int v) const {
    Edge key = u < v ? Edge{u, v} : Edge{v, u};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || !(*it == key)) return -1;
    return static_cast<int>(it - edges_.begin());
}

long long Graph::degree_square_sum() const {
    long long s = 0;
    for (int d : degrees_) s += static_cast<long long>(d) * d;
    return s;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for_each_bit(row(v), n_, [&](int w) { out.push_back(w); });
    return out;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp;
    comp.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2 - edges_.size());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) comp.emplace_back(u, v);
    return build(n_, comp);
}

Graph Graph::without_edge(int edge_id) const {
    Graph g;
    g.n_ = n_;
    g.stride_ = stride_;
    g.edges_ = edges_;
    g.edges_.erase(g.edges_.begin() + edge_id);
    g.finalize_from_edges();
    return g;
}

}  // namespace diamcrit
