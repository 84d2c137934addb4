#include <diamcrit/metric.hpp>

#include <algorithm>
#include <atomic>

#include <diamcrit/errors.hpp>
#include <diamcrit/parallel.hpp>

namespace diamcrit {

void bfs_into(const Graph& g, int source, BfsScratch& s,
              int skip_u, int skip_v, int target, long long cap) {
    const int n = g.vertex_count();
    const std::size_t words = g.row_words();
    if (n >= 65535) throw TooLarge("BFS kernel supports n < 65535");
    s.frontier.assign(words, 0);
    s.next.assign(words, 0);
    s.visited.assign(words, 0);
    s.dist.assign(static_cast<std::size_t>(n), kUnreached);

    set_bit(s.frontier, source);
    set_bit(s.visited, source);
    s.dist[static_cast<std::size_t>(source)] = 0;
    if (source == target) return;

    std::uint16_t level = 0;
    for (;;) {
        if (cap >= 0 && level >= cap) return;  // deeper levels not needed
        std::fill(s.next.begin(), s.next.end(), 0);
        bool any = false;
        for_each_bit(std::span<const Word>(s.frontier), n, [&](int v) {
            any = true;
            auto row = g.row(v);
            if (v == skip_u || v == skip_v) {
                const int other = (v == skip_u) ? skip_v : skip_u;
                const std::size_t ow = static_cast<std::size_t>(other) / kWordBits;
                const Word omask = ~(Word{1} << (static_cast<std::size_t>(other) % kWordBits));
                for (std::size_t i = 0; i < words; ++i)
                    s.next[i] |= (i == ow) ? (row[i] & omask) : row[i];
            } else {
                for (std::size_t i = 0; i < words; ++i) s.next[i] |= row[i];
            }
        });
        if (!any) return;
        ++level;
        bool reached_any = false;
        for (std::size_t i = 0; i < words; ++i) {
            Word fresh = s.next[i] & ~s.visited[i];
            s.next[i] = fresh;
            s.visited[i] |= fresh;
            if (fresh) reached_any = true;
        }
        if (!reached_any) return;
        for_each_bit(std::span<const Word>(s.next), n,
                     [&](int v) { s.dist[static_cast<std::size_t>(v)] = level; });
        if (target >= 0 && s.dist[static_cast<std::size_t>(target)] != kUnreached) return;
        std::swap(s.frontier, s.next);
    }
}

std::vector<ExtDist> bfs_distances(const Graph& g, int source) {
    BfsScratch s;
    bfs_into(g, source, s);
    std::vector<ExtDist> out(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < out.size(); ++i)
        if (s.dist[i] != kUnreached) out[i] = ExtDist(s.dist[i]);
    return out;
}

ExtDist diameter(const Graph& g, int threads) {
    const int n = g.vertex_count();
    if (n == 0) throw BadParams("diameter of the empty graph is undefined");
    if (n == 1) return ExtDist(0);
    std::atomic<std::uint32_t> best{0};
    std::atomic<bool> disconnected{false};
    // Per-source eccentricities are independent; take the max.
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t src) {
        thread_local BfsScratch s;
        bfs_into(g, static_cast<int>(src), s);
        std::uint32_t ecc = 0;
        for (int v = 0; v < n; ++v) {
            std::uint16_t d = s.dist[static_cast<std::size_t>(v)];
            if (d == kUnreached) { disconnected.store(true); return; }
            ecc = std::max<std::uint32_t>(ecc, d);
        }
        std::uint32_t cur = best.load();
        while (ecc > cur && !best.compare_exchange_weak(cur, ecc)) {}
    });
    if (disconnected.load()) return ExtDist::infinity();
    return ExtDist(best.load());
}

ExtDist distance_without_edge(const Graph& g, int x, int y, int edge_id) {
    const Edge& e = g.edge(edge_id);
    BfsScratch s;
    bfs_into(g, x, s, e.u, e.v, y);
    std::uint16_t d = s.dist[static_cast<std::size_t>(y)];
    return d == kUnreached ? ExtDist::infinity() : ExtDist(d);
}

bool edge_on_all_shortest(const Graph& g, int x, int y, int edge_id) {
    BfsScratch s;
    bfs_into(g, x, s, -1, -1, y);
    std::uint16_t d = s.dist[static_cast<std::size_t>(y)];
    if (d == kUnreached) throw BadParams("edge_on_all_shortest requires a connected pair");
    const Edge& e = g.edge(edge_id);
    bfs_into(g, x, s, e.u, e.v, y, d);  // only need "still reachable within d"
    std::uint16_t del = s.dist[static_cast<std::size_t>(y)];
    return del == kUnreached || del > d;
}

std::vector<int> canonical_shortest_path(const Graph& g, int x, int y) {
    BfsScratch s;
    bfs_into(g, y, s);  // distance-to-y field
    if (s.dist[static_cast<std::size_t>(x)] == kUnreached)
        throw Unreachable("no path between " + std::to_string(x) + " and " + std::to_string(y));
    std::vector<int> path{x};
    int cur = x;
    while (cur != y) {
        const std::uint16_t here = s.dist[static_cast<std::size_t>(cur)];
        int step = -1;
        for_each_bit(g.row(cur), g.vertex_count(), [&](int w) {
            if (step < 0 && s.dist[static_cast<std::size_t>(w)] + 1 == here) step = w;
        });
        cur = step;
        path.push_back(cur);
    }
    return path;
}

DistanceMatrix all_pairs_distances(const Graph& g, int threads) {
    const int n = g.vertex_count();
    DistanceMatrix m(n);
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t src) {
        thread_local BfsScratch s;
        bfs_into(g, static_cast<int>(src), s);
        std::copy(s.dist.begin(), s.dist.end(), m.row(static_cast<int>(src)));
    });
    return m;
}

}  // namespace diamcrit
