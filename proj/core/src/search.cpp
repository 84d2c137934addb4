#include <diamcrit/search.hpp>

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include <diamcrit/constructions.hpp>
#include <diamcrit/criticality.hpp>
#include <diamcrit/errors.hpp>
#include <diamcrit/graph_io.hpp>
#include <diamcrit/metric.hpp>
#include <diamcrit/parallel.hpp>
#include <diamcrit/rng.hpp>

namespace diamcrit {

namespace {

// Pair (u,v), u < v, in column order: independent of the vertex count, so a
// mask extends in place when a vertex is appended.
constexpr int pair_bit(int u, int v) { return v * (v - 1) / 2 + u; }

// Byte-row adjacency for n <= 8; fast enough to scan millions of masks.
struct SmallGraph {
    int n = 0;
    std::uint8_t row[8] = {0};

    static SmallGraph from_mask(int n, std::uint64_t mask) {
        SmallGraph g;
        g.n = n;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if ((mask >> pair_bit(u, v)) & 1) {
                    g.row[u] |= static_cast<std::uint8_t>(1u << v);
                    g.row[v] |= static_cast<std::uint8_t>(1u << u);
                }
        return g;
    }

    // Eccentricity of s, or -1 when s does not reach everyone.
    int ecc(int s) const {
        std::uint8_t visited = static_cast<std::uint8_t>(1u << s);
        std::uint8_t frontier = visited;
        const std::uint8_t all = static_cast<std::uint8_t>((1u << n) - 1);
        int d = 0;
        while (visited != all) {
            std::uint8_t next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1) next |= row[v];
            next &= static_cast<std::uint8_t>(~visited);
            if (!next) return -1;
            visited |= next;
            frontier = next;
            ++d;
        }
        return d;
    }

    int diameter() const {
        int best = 0;
        for (int s = 0; s < n; ++s) {
            int e = ecc(s);
            if (e < 0) return -1;
            best = std::max(best, e);
        }
        return best;
    }

    // Some pair farther apart than k (or disconnected)?
    bool some_pair_beyond(int k) const {
        for (int s = 0; s < n; ++s) {
            int e = ecc(s);
            if (e < 0 || e > k) return true;
        }
        return false;
    }
};

bool mask_is_critical(int n, std::uint64_t mask, long long k) {
    SmallGraph g = SmallGraph::from_mask(n, mask);
    if (g.diameter() != k) return false;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            int b = pair_bit(u, v);
            if (!((mask >> b) & 1)) continue;
            SmallGraph h = SmallGraph::from_mask(n, mask ^ (std::uint64_t{1} << b));
            if (!h.some_pair_beyond(static_cast<int>(k))) return false;
        }
    return true;
}

}  // namespace

std::uint64_t graph_mask(const Graph& g) {
    if (g.vertex_count() > 11) throw TooLarge("mask form supports n <= 11");
    std::uint64_t mask = 0;
    for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << pair_bit(e.u, e.v);
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_bit(u, v)) & 1) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

namespace {

void canon_recurse(int n, const std::vector<std::vector<int>>& classes, std::size_t ci,
                   std::vector<int>& pos, std::vector<int>& slot,
                   const std::vector<std::pair<int, int>>& edge_list, std::uint64_t& best) {
    if (ci == classes.size()) {
        std::uint64_t mask = 0;
        for (const auto& [u, v] : edge_list) {
            int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
            mask |= std::uint64_t{1} << pair_bit(std::min(a, b), std::max(a, b));
        }
        best = std::min(best, mask);
        return;
    }
    std::vector<int> members = classes[ci];
    std::sort(members.begin(), members.end());
    do {
        int base = slot[ci];
        for (std::size_t i = 0; i < members.size(); ++i)
            pos[static_cast<std::size_t>(members[i])] = base + static_cast<int>(i);
        canon_recurse(n, classes, ci + 1, pos, slot, edge_list, best);
    } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    if (n > 8) throw TooLarge("canonical form supports n <= 8");
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_list;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_bit(u, v)) & 1) {
                edge_list.emplace_back(u, v);
                ++deg[static_cast<std::size_t>(u)];
                ++deg[static_cast<std::size_t>(v)];
            }
    // Vertices grouped by degree, high to low; the minimum is taken over all
    // placements respecting that order, which every isomorphic copy shares.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
    });
    std::vector<std::vector<int>> classes;
    std::vector<int> slot;
    int taken = 0;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() &&
               deg[static_cast<std::size_t>(order[j])] == deg[static_cast<std::size_t>(order[i])])
            ++j;
        classes.emplace_back(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
        slot.push_back(taken);
        taken += static_cast<int>(j - i);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    canon_recurse(n, classes, 0, pos, slot, edge_list, best);
    return best;
}

namespace {

// All isomorphism classes on exactly n vertices, grown one vertex at a time.
std::set<std::uint64_t> iso_classes(int n) {
    std::set<std::uint64_t> level{0};  // single vertex, no edges
    for (int sz = 2; sz <= n; ++sz) {
        std::set<std::uint64_t> next;
        for (std::uint64_t parent : level) {
            const int newv = sz - 1;
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << newv); ++nb) {
                std::uint64_t child = parent;
                for (int u = 0; u < newv; ++u)
                    if ((nb >> u) & 1) child |= std::uint64_t{1} << pair_bit(u, newv);
                next.insert(canonical_mask(sz, child));
            }
        }
        level = std::move(next);
    }
    return level;
}

Fraction ratio_of(const Graph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return Fraction(0, 1);
    return Fraction(g.degree_square_sum(),
                    static_cast<long long>(g.vertex_count()) * g.edge_count());
}

}  // namespace

SearchResult enumerate_critical(int n, long long k, int threads) {
    if (n < 2) throw BadParams("enumeration needs n >= 2");
    if (n > 8) throw TooLarge("exhaustive enumeration capped at n = 8");
    SearchResult res;
    res.n = n;
    res.k = k;
    res.mode = "exhaustive";

    std::set<std::uint64_t> classes;
    if (n <= 7) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        std::mutex mu;
        parallel_for(static_cast<std::size_t>(total), threads, [&](std::size_t mask) {
            if (!mask_is_critical(n, mask, k)) return;
            std::uint64_t canon = canonical_mask(n, mask);
            std::lock_guard<std::mutex> lock(mu);
            classes.insert(canon);
        });
    } else {
        for (std::uint64_t canon : iso_classes(n))
            if (mask_is_critical(n, canon, k)) classes.insert(canon);
    }

    res.total_critical = static_cast<long long>(classes.size());
    std::vector<std::uint64_t> extremal;
    for (std::uint64_t mask : classes) {
        Graph g = graph_from_mask(n, mask);
        long long m = g.edge_count();
        if (m > res.best_m) {
            res.best_m = m;
            extremal.clear();
        }
        if (m == res.best_m) extremal.push_back(mask);
        Fraction r = ratio_of(g);
        if (r > res.best_ratio) res.best_ratio = r;
    }
    for (std::uint64_t mask : extremal) {
        Graph g = graph_from_mask(n, mask);
        CriticalityWitness w = is_diameter_k_critical(g, k);
        if (!w.critical) throw InternalInvariant("enumerated witness fails re-verification");
        res.witnesses.push_back(to_graph6(g));
    }
    std::sort(res.witnesses.begin(), res.witnesses.end());
    if (k == 2 && 4 * res.best_m > static_cast<long long>(n) * n) res.quarter_bound_alarm = true;
    return res;
}

namespace {

Graph seed_construction(int n, long long k) {
    if (k == 2) {
        std::vector<std::pair<int, int>> edges;
        int half = n / 2;
        for (int u = 0; u < half; ++u)
            for (int v = half; v < n; ++v) edges.emplace_back(u, v);
        return Graph::build(n, edges);
    }
    if (k == 3 && n % 2 == 0 && n >= 6) return build_clique_matching(n);
    // Layered fallback: a = 1, b sized to roughly n / 2(k-1), c the rest.
    int kk = static_cast<int>(k);
    if (n < kk + 2) throw BadParams("n too small for a diameter-" + std::to_string(k) + " seed");
    int b = std::max(1, static_cast<int>(n / (2 * (kk - 1))));
    while (b > 1 && 1 + b * (kk - 1) + 1 > n) --b;
    int c = n - 1 - b * (kk - 1);
    return build_layered_dk(kk, 1, b, c);
}

}  // namespace

SearchResult local_search(const LocalSearchOptions& opt) {
    SearchResult res;
    res.n = opt.n;
    res.k = opt.k;
    res.mode = "local";

    Graph cur = seed_construction(opt.n, opt.k);
    if (!is_diameter_k_critical(cur, opt.k, opt.threads).critical)
        throw InternalInvariant("seed construction fails its own verification");

    auto score = [&](const Graph& g) -> Fraction {
        if (opt.objective == SearchObjective::Edges) return Fraction(g.edge_count(), 1);
        return ratio_of(g);
    };

    Graph best = cur;
    Fraction cur_score = score(cur);
    Fraction best_score = cur_score;
    SplitMix64 rng(opt.seed);

    for (long long step = 0; step < opt.budget; ++step) {
        ++res.steps_taken;
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opt.n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(opt.n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);

        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : cur.edges())
            if (!(e.u == u && e.v == v)) edges.emplace_back(e.u, e.v);
        if (!cur.has_edge(u, v)) edges.emplace_back(u, v);
        Graph cand = Graph::build(opt.n, edges);

        // Deletion-only repair: drop slack edges until the verifier passes.
        bool ok = false;
        for (;;) {
            CriticalityWitness w = is_diameter_k_critical(cand, opt.k, opt.threads);
            if (w.critical) { ok = true; break; }
            if (w.wrong_diameter) break;
            cand = cand.without_edge(*w.slack_edge);
        }
        if (!ok) continue;
        Fraction s = score(cand);
        if (s >= cur_score) {
            cur = cand;
            cur_score = s;
        }
        if (s > best_score) {
            best = cur;
            best_score = s;
        }
    }

    if (!is_diameter_k_critical(best, opt.k, opt.threads).critical)
        throw InternalInvariant("best graph fails re-verification");
    res.best_m = best.edge_count();
    res.best_ratio = ratio_of(best);
    res.witnesses.push_back(to_graph6(best));
    if (opt.k >= 3 && opt.k * res.best_m > 3LL * opt.n * opt.n)
        throw LemmaViolation("verified diameter-k-critical graph above the 3n^2/k edge bound");
    if (opt.k == 2 && 4 * res.best_m > static_cast<long long>(opt.n) * opt.n)
        res.quarter_bound_alarm = true;
    return res;
}

}  // namespace diamcrit
