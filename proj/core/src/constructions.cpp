#include <diamcrit/constructions.hpp>

#include <atomic>
#include <cmath>
#include <string>

#include <diamcrit/errors.hpp>
#include <diamcrit/metric.hpp>
#include <diamcrit/parallel.hpp>
#include <diamcrit/rng.hpp>

namespace diamcrit {

namespace {

void require_generator(const Graph& g) {
    if (g.vertex_count() < 1) throw PreconditionFailed("generator graph is empty");
    ExtDist dg = diameter(g);
    if (dg.exceeds(2))
        throw PreconditionFailed("generator has diameter " + dg.to_string() + " > 2");
    ExtDist dc = diameter(g.complement());
    if (dc.exceeds(2))
        throw PreconditionFailed("generator complement has diameter " + dc.to_string() + " > 2");
}

// diameter(g) <= 2, checked as "every vertex covers V within two steps".
bool diameter_le_2(const Graph& g, int threads = 0) {
    const int n = g.vertex_count();
    const std::size_t words = g.row_words();
    std::vector<Word> full(words, 0);
    for (int v = 0; v < n; ++v) set_bit(full, v);
    std::atomic<bool> fail{false};
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t u) {
        thread_local std::vector<Word> cover;
        cover.assign(words, 0);
        auto ru = g.row(static_cast<int>(u));
        for (std::size_t i = 0; i < words; ++i) cover[i] = ru[i];
        set_bit(cover, static_cast<int>(u));
        for_each_bit(ru, n, [&](int w) {
            auto rw = g.row(w);
            for (std::size_t i = 0; i < words; ++i) cover[i] |= rw[i];
        });
        for (std::size_t i = 0; i < words; ++i)
            if ((~cover[i]) & full[i]) { fail.store(true); return; }
    }, &fail);
    return !fail.load();
}

// diameter(complement g) <= 2 without materialising the complement: each
// G-edge needs a common non-neighbour.
bool complement_diameter_le_2(const Graph& g, int threads = 0) {
    const int n = g.vertex_count();
    std::atomic<bool> fail{false};
    parallel_for(static_cast<std::size_t>(g.edge_count()), threads, [&](std::size_t eid) {
        const Edge& e = g.edge(static_cast<int>(eid));
        long long cn = static_cast<long long>(intersection_count(g.row(e.u), g.row(e.v)));
        if (n - g.degree(e.u) - g.degree(e.v) + cn <= 0) fail.store(true);
    }, &fail);
    return !fail.load();
}

}  // namespace

Graph build_d2_bip(const Graph& g) {
    require_generator(g);
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 + n);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(n + u, n + v);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return Graph::build(2 * n, edges);
}

Graph build_d2_trip(const Graph& g, long long r) {
    if (r < 0) throw BadParams("r must be nonnegative");
    Graph base = build_d2_bip(g);
    const int n = g.vertex_count();
    if (2LL * n + r >= 65535) throw TooLarge("output graph too large for the BFS kernels");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(base.edge_count()) +
                  static_cast<std::size_t>(n) * static_cast<std::size_t>(r));
    for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v);
    for (long long c = 0; c < r; ++c)
        for (int b = 0; b < n; ++b)
            edges.emplace_back(n + b, static_cast<int>(2 * n + c));
    return Graph::build(static_cast<int>(2 * n + r), edges);
}

Graph build_layered_dk(int k, int a, int b, int c) {
    if (k < 3) throw BadParams("layered construction needs k >= 3");
    if (a < 1 || b < 1 || c < 1) throw BadParams("layered construction needs a,b,c >= 1");
    const long long n = static_cast<long long>(a) + static_cast<long long>(b) * (k - 1) + c;
    if (n >= 65535) throw TooLarge("layered construction too large");
    auto layer_start = [&](int i) -> int {  // first vertex of V_i
        return i == 0 ? 0 : a + (i - 1) * b;
    };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int j = 0; j < b; ++j) edges.emplace_back(u, layer_start(1) + j);
    for (int j = 0; j < b; ++j)
        for (int w = 0; w < c; ++w)
            edges.emplace_back(layer_start(k - 1) + j, layer_start(k) + w);
    for (int j = 0; j < b; ++j)
        for (int i = 1; i + 1 <= k - 1; ++i)
            edges.emplace_back(layer_start(i) + j, layer_start(i + 1) + j);
    return Graph::build(static_cast<int>(n), edges);
}

Graph build_clique_matching(int n) {
    if (n < 6 || n % 2 != 0)
        throw BadParams("clique-plus-matching needs even n >= 6 (diameter 3 fails below that)");
    const int h = n / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v) edges.emplace_back(u, v);
    for (int i = 0; i < h; ++i) edges.emplace_back(i, h + i);
    return Graph::build(n, edges);
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw BadParams("p must lie in [0,1]");
    const std::uint64_t threshold = bernoulli_threshold53(p);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if (bernoulli_hit(SplitMix64::at(seed, idx), threshold)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Lemma23Checks check_lemma23(const Graph& g, double p) {
    Lemma23Checks out;
    out.diam_g_le_2 = diameter_le_2(g);
    out.diam_comp_le_2 = complement_diameter_le_2(g);
    for (int d : g.degrees()) out.max_degree = std::max(out.max_degree, d);
    out.max_degree_le_2np = out.max_degree <= 2.0 * g.vertex_count() * p;
    return out;
}

CounterexampleResult build_counterexample(long long n, double x, std::uint64_t seed,
                                          const CounterexampleOptions& opt) {
    if (n < 50) throw BadParams("counterexample construction needs n >= 50");
    if (x <= 0.0) throw BadParams("x must be positive");
    const double rn = x * static_cast<double>(n);
    const long long r = std::llround(rn);
    if (std::fabs(rn - static_cast<double>(r)) > 1e-9 || r < 1)
        throw BadParams("x*n must be a positive integer");

    const double p = 2.0 * std::sqrt(std::log(static_cast<double>(n)) / static_cast<double>(n));
    CounterexampleResult res;
    res.generator_n = n;
    res.r = r;
    res.explicit_mode = n <= opt.n_explicit;
    const bool stream_only = n > opt.n_full_checks;

    std::vector<int> degs;
    for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        if (!stream_only) {
            Graph g = sample_gnp(static_cast<int>(n), p, s);
            res.checks = check_lemma23(g, p);
            if (!res.checks.pass()) continue;
            degs = g.degrees();
            res.complement_certified_by_degree = 2LL * res.checks.max_degree + 2 < n;
            res.seed_used = s;
            res.attempts = attempt + 1;
            if (res.explicit_mode) res.graph = build_d2_trip(g, r);
        } else {
            // Degree sequence streamed straight from the pair draws.  The
            // generator's own diameter is not evaluated at this size; the
            // complement side is certified by the degree bound instead.
            degs.assign(static_cast<std::size_t>(n), 0);
            const std::uint64_t threshold = bernoulli_threshold53(p);
            std::uint64_t idx = 0;
            for (long long u = 0; u < n; ++u)
                for (long long v = u + 1; v < n; ++v, ++idx)
                    if (bernoulli_hit(SplitMix64::at(s, idx), threshold)) {
                        ++degs[static_cast<std::size_t>(u)];
                        ++degs[static_cast<std::size_t>(v)];
                    }
            res.checks = Lemma23Checks{};
            for (int d : degs) res.checks.max_degree = std::max(res.checks.max_degree, d);
            res.checks.max_degree_le_2np =
                res.checks.max_degree <= 2.0 * static_cast<double>(n) * p;
            res.complement_certified_by_degree = 2LL * res.checks.max_degree + 2 < n;
            res.checks.diam_comp_le_2 = res.complement_certified_by_degree;
            res.diam_checks_skipped = true;
            if (!res.checks.max_degree_le_2np || !res.complement_certified_by_degree) continue;
            res.seed_used = s;
            res.attempts = attempt + 1;
        }

        long long sum_dsq = 0;
        for (int d : degs) {
            sum_dsq += (static_cast<long long>(d) + 1) * (d + 1);  // A copy, +1 matching edge
            sum_dsq += (n - d + r) * (n - d + r);                  // B copy: n-1-d +1 +r
        }
        sum_dsq += r * n * n;                                      // C block, degree n each
        res.total_n = 2 * n + r;
        res.total_m = n * (n - 1) / 2 + n + n * r;
        res.sum_deg_sq = sum_dsq;
        res.ratio = Fraction(sum_dsq, res.total_n * res.total_m);
        return res;
    }
    throw SamplingExhausted("no acceptable sample in " + std::to_string(opt.max_attempts) +
                            " attempts");
}

}  // namespace diamcrit
