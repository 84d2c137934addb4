#include <diamcrit/cover.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <diamcrit/errors.hpp>
#include <diamcrit/rng.hpp>
#include <diamcrit/stats.hpp>

namespace diamcrit {

namespace {

std::vector<int> canon_path(std::vector<int> p) {
    if (!p.empty() && p.front() > p.back()) std::reverse(p.begin(), p.end());
    return p;
}

bool path_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<int> path_edge_ids(const Graph& g, const std::vector<int>& path) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int id = g.edge_index(path[i], path[i + 1]);
        if (id < 0) throw InternalInvariant("path step is not an edge");
        out.push_back(id);
    }
    return out;
}

std::string path_str(const std::vector<int>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace

const char* cover_case_name(CoverCase c) {
    switch (c) {
        case CoverCase::C1: return "C1";
        case CoverCase::C2: return "C2";
        case CoverCase::C31: return "C3-1";
        case CoverCase::C32: return "C3-2";
        case CoverCase::C4: return "C4";
        case CoverCase::C5: return "C5";
        case CoverCase::C6: return "C6";
    }
    return "?";
}

CoverContext make_cover_context(const Graph& g, int threads) {
    ExtDist d = diameter(g, threads);
    if (d.is_infinite() || d.value() < 3)
        throw NotDiameterCritical("covering run needs a finite diameter of at least 3, got " +
                                  d.to_string());
    CriticalityWitness w = is_diameter_k_critical(g, d.value(), threads);
    if (!w.critical) {
        std::string msg = "input is not diameter-critical";
        if (w.slack_edge) {
            const Edge& e = g.edge(*w.slack_edge);
            msg += ": deleting edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   ") keeps the diameter";
        }
        throw NotDiameterCritical(msg);
    }

    CoverContext ctx;
    ctx.g = g;
    ctx.diameter = d.value();
    ctx.crit = critical_structure(g, 3, threads);
    ctx.two_crit = two_critical_paths(g);
    ctx.mult = multiplicities(g, 3, &ctx.crit, &ctx.two_crit);

    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    ctx.edge_paths.assign(m, {});
    for (std::size_t e = 0; e < m; ++e) {
        ctx.edge_paths[e] = ctx.crit.edge_records[e];
        std::sort(ctx.edge_paths[e].begin(), ctx.edge_paths[e].end(), [&](int a, int b) {
            return path_order(ctx.crit.records[static_cast<std::size_t>(a)].path,
                              ctx.crit.records[static_cast<std::size_t>(b)].path);
        });
        if (ctx.edge_paths[e].empty())
            throw InternalInvariant("edge of a diameter-critical graph with no critical path");
    }
    ctx.edge_two.assign(m, {});
    for (std::size_t i = 0; i < ctx.two_crit.size(); ++i)
        for (int eid : path_edge_ids(g, ctx.two_crit[i].path))
            ctx.edge_two[static_cast<std::size_t>(eid)].push_back(static_cast<int>(i));
    return ctx;
}

namespace {

// Unsettled edges associated with a record's pair.
int count_unsettled_assoc(const CoverContext& ctx, const std::vector<char>& u, int rec_idx) {
    int c = 0;
    for (int eid : ctx.crit.records[static_cast<std::size_t>(rec_idx)].assoc_edges)
        if (u[static_cast<std::size_t>(eid)]) ++c;
    return c;
}

bool is_middle_edge(const Graph& g, const std::vector<int>& path, int eid) {
    const Edge& e = g.edge(eid);
    return path.size() == 4 &&
           ((path[1] == e.u && path[2] == e.v) || (path[1] == e.v && path[2] == e.u));
}

}  // namespace

int edge_type(const CoverContext& ctx, const std::vector<char>& unsettled, int edge_id) {
    const auto& paths = ctx.edge_paths[static_cast<std::size_t>(edge_id)];
    for (int idx : paths)
        if (count_unsettled_assoc(ctx, unsettled, idx) >= 2) return 1;
    for (int idx : paths)
        if (is_middle_edge(ctx.g, ctx.crit.records[static_cast<std::size_t>(idx)].path, edge_id))
            return 2;
    for (int ti : ctx.edge_two[static_cast<std::size_t>(edge_id)]) {
        const auto& rec = ctx.two_crit[static_cast<std::size_t>(ti)];
        if (rec.path.size() != 3) continue;
        for (int eid : path_edge_ids(ctx.g, rec.path))
            if (eid != edge_id && unsettled[static_cast<std::size_t>(eid)]) return 3;
    }
    for (int idx : paths)
        if (ctx.crit.records[static_cast<std::size_t>(idx)].path.size() == 4) return 4;
    for (int idx : paths)
        if (ctx.crit.records[static_cast<std::size_t>(idx)].path.size() == 3) return 5;
    // Only the edge's own unit path remains.
    const Edge& e = ctx.g.edge(edge_id);
    for (int idx : paths) {
        const auto& p = ctx.crit.records[static_cast<std::size_t>(idx)].path;
        if (p.size() != 2 || p[0] != e.u || p[1] != e.v)
            throw InternalInvariant("type-6 edge carries a critical path other than itself");
    }
    return 6;
}

CoverTrace run_cover(const CoverContext& ctx) {
    const Graph& g = ctx.g;
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    std::vector<char> unsettled(m, 1);
    long long remaining = static_cast<long long>(m);

    CoverTrace trace;
    trace.settled_at.assign(m, -1);
    std::vector<int> last_type(m, 0);
    int last_ti = 1;

    auto settle_for_paths = [&](const std::vector<int>& rec_ids) {
        std::vector<int> settled;
        for (int idx : rec_ids)
            for (int eid : ctx.crit.records[static_cast<std::size_t>(idx)].assoc_edges)
                if (unsettled[static_cast<std::size_t>(eid)]) {
                    unsettled[static_cast<std::size_t>(eid)] = 0;
                    settled.push_back(eid);
                }
        std::sort(settled.begin(), settled.end());
        return settled;
    };

    while (remaining > 0) {
        CoverIteration it;
        it.index = static_cast<int>(trace.iterations.size()) + 1;

        int ti = 7;
        std::vector<int> types(m, 0);
        for (std::size_t e = 0; e < m; ++e) {
            if (!unsettled[e]) continue;
            types[e] = edge_type(ctx, unsettled, static_cast<int>(e));
            if (types[e] < last_type[e])
                throw InternalInvariant("edge type decreased across iterations");
            ti = std::min(ti, types[e]);
        }
        if (ti < last_ti) throw InternalInvariant("iteration type decreased");
        last_ti = ti;
        last_type = types;
        it.type = ti;

        std::vector<int> chosen_recs;   // records whose associated edges settle now
        auto rec_path = [&](int idx) -> const std::vector<int>& {
            return ctx.crit.records[static_cast<std::size_t>(idx)].path;
        };

        if (ti == 1) {
            it.kase = CoverCase::C1;
            int pick = -1;
            for (std::size_t e = 0; e < m && pick < 0; ++e) {
                if (!unsettled[e] || types[e] != 1) continue;
                for (int idx : ctx.edge_paths[e])
                    if (count_unsettled_assoc(ctx, unsettled, idx) >= 2) { pick = idx; break; }
            }
            if (pick < 0) throw InternalInvariant("type-1 iteration without a candidate");
            it.paths = {rec_path(pick)};
            const auto& p = rec_path(pick);
            it.two_paths = {canon_path({p.begin() + 1, p.end()}),
                            canon_path({p.begin(), p.end() - 1})};
            chosen_recs = {pick};
        } else if (ti == 2) {
            it.kase = CoverCase::C2;
            int pick = -1, pick_e = -1;
            for (std::size_t e = 0; e < m && pick < 0; ++e) {
                if (!unsettled[e] || types[e] != 2) continue;
                for (int idx : ctx.edge_paths[e])
                    if (is_middle_edge(g, rec_path(idx), static_cast<int>(e))) {
                        pick = idx;
                        pick_e = static_cast<int>(e);
                        break;
                    }
            }
            if (pick < 0) throw InternalInvariant("type-2 iteration without a candidate");
            const auto& p = rec_path(pick);
            it.paths = {p};
            it.two_paths = {canon_path({p.begin() + 1, p.end()}),
                            canon_path({p.begin(), p.end() - 1})};
            chosen_recs = {pick};
            if (count_unsettled_assoc(ctx, unsettled, pick) != 1 ||
                !unsettled[static_cast<std::size_t>(pick_e)])
                throw InternalInvariant("C2 path settles more than its chosen edge");
        } else if (ti == 3) {
            // C3-1 candidates: unsettled e whose critical path is itself a
            // two-edge path e u f with f unsettled; pick the quadruple
            // maximising |P| + |P'|, scanning order breaking ties.
            struct Cand { int e, f, rec, rec2; };
            std::vector<Cand> cands;
            for (std::size_t e = 0; e < m; ++e) {
                if (!unsettled[e]) continue;
                for (int idx : ctx.edge_paths[e]) {
                    const auto& p = rec_path(idx);
                    if (p.size() != 3) continue;
                    for (int fe : path_edge_ids(g, p)) {
                        if (fe == static_cast<int>(e) || !unsettled[static_cast<std::size_t>(fe)])
                            continue;
                        for (int idx2 : ctx.edge_paths[static_cast<std::size_t>(fe)])
                            cands.push_back({static_cast<int>(e), fe, idx, idx2});
                    }
                }
            }
            if (!cands.empty()) {
                it.kase = CoverCase::C31;
                std::size_t best_len = 0;
                for (const Cand& c : cands)
                    best_len = std::max(best_len, rec_path(c.rec2).size());
                const Cand* pick = nullptr;
                for (const Cand& c : cands)
                    if (rec_path(c.rec2).size() == best_len) { pick = &c; break; }
                if (pick->rec == pick->rec2)
                    throw InternalInvariant("C3-1 picked one path twice");
                it.paths = {rec_path(pick->rec), rec_path(pick->rec2)};
                chosen_recs = {pick->rec, pick->rec2};
            } else {
                it.kase = CoverCase::C32;
                int pe = -1, pf = -1, ptwo = -1;
                for (std::size_t e = 0; e < m && pe < 0; ++e) {
                    if (!unsettled[e] || types[e] != 3) continue;
                    for (int tix : ctx.edge_two[e]) {
                        const auto& rec = ctx.two_crit[static_cast<std::size_t>(tix)];
                        if (rec.path.size() != 3) continue;
                        for (int fe : path_edge_ids(g, rec.path))
                            if (fe != static_cast<int>(e) &&
                                unsettled[static_cast<std::size_t>(fe)]) {
                                pe = static_cast<int>(e);
                                pf = fe;
                                ptwo = tix;
                                break;
                            }
                        if (pe >= 0) break;
                    }
                }
                if (pe < 0) throw InternalInvariant("type-3 iteration without a candidate");
                int r1 = ctx.edge_paths[static_cast<std::size_t>(pe)].front();
                int r2 = ctx.edge_paths[static_cast<std::size_t>(pf)].front();
                it.paths = {rec_path(r1), rec_path(r2)};
                it.two_paths = {ctx.two_crit[static_cast<std::size_t>(ptwo)].path};
                chosen_recs = {r1, r2};
            }
        } else if (ti == 4) {
            it.kase = CoverCase::C4;
            int pick = -1, pick_e = -1;
            for (std::size_t e = 0; e < m && pick < 0; ++e) {
                if (!unsettled[e] || types[e] != 4) continue;
                for (int idx : ctx.edge_paths[e]) {
                    const auto& p = rec_path(idx);
                    if (p.size() == 4 && !is_middle_edge(g, p, static_cast<int>(e))) {
                        pick = idx;
                        pick_e = static_cast<int>(e);
                        break;
                    }
                }
            }
            if (pick < 0) throw InternalInvariant("type-4 iteration without a candidate");
            const auto& p = rec_path(pick);
            const Edge& e = g.edge(pick_e);
            bool at_front = (p[0] == e.u && p[1] == e.v) || (p[0] == e.v && p[1] == e.u);
            it.paths = {p};
            it.two_paths = {at_front ? canon_path({p.begin(), p.end() - 1})
                                     : canon_path({p.begin() + 1, p.end()})};
            chosen_recs = {pick};
        } else if (ti == 5) {
            it.kase = CoverCase::C5;
            int pick = -1, pick_e = -1;
            for (std::size_t e = 0; e < m && pick < 0; ++e) {
                if (!unsettled[e] || types[e] != 5) continue;
                for (int idx : ctx.edge_paths[e])
                    if (rec_path(idx).size() == 3) { pick = idx; pick_e = static_cast<int>(e); break; }
            }
            if (pick < 0) throw InternalInvariant("type-5 iteration without a candidate");
            const Edge& e = g.edge(pick_e);
            it.paths = {rec_path(pick)};
            it.two_paths = {{e.u, e.v}};
            chosen_recs = {pick};
        } else if (ti == 6) {
            it.kase = CoverCase::C6;
            // All unsettled edges are unit critical paths and must form a
            // matching: sharing a vertex would leave a two-critical pair.
            std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
            int pick_e = -1;
            for (std::size_t e = 0; e < m; ++e) {
                if (!unsettled[e]) continue;
                if (pick_e < 0) pick_e = static_cast<int>(e);
                const Edge& ed = g.edge(static_cast<int>(e));
                if (touched[static_cast<std::size_t>(ed.u)] ||
                    touched[static_cast<std::size_t>(ed.v)])
                    throw InternalInvariant("type-6 edges do not form a matching");
                touched[static_cast<std::size_t>(ed.u)] = 1;
                touched[static_cast<std::size_t>(ed.v)] = 1;
            }
            chosen_recs = {ctx.edge_paths[static_cast<std::size_t>(pick_e)].front()};
            it.paths = {rec_path(chosen_recs[0])};
        } else {
            throw InternalInvariant("no applicable edge type");
        }

        it.settled = settle_for_paths(chosen_recs);
        if (it.settled.empty()) throw InternalInvariant("iteration settled nothing");
        switch (it.kase) {
            case CoverCase::C1:
                if (it.settled.size() < 2)
                    throw InternalInvariant("C1 must settle at least two edges");
                break;
            case CoverCase::C31:
            case CoverCase::C32:
                if (it.settled.size() != 2)
                    throw InternalInvariant("C3 must settle exactly the pair of edges");
                break;
            default:
                if (it.settled.size() != 1)
                    throw InternalInvariant("single-edge case settled more than one edge");
        }
        for (int eid : it.settled) trace.settled_at[static_cast<std::size_t>(eid)] = it.index;
        remaining -= static_cast<long long>(it.settled.size());
        it.unsettled_after = remaining;
        if (it.paths.size() + it.two_paths.size() == 1) ++trace.iterations_with_single_path;
        for (const auto& p : it.paths) trace.family.push_back(p);
        trace.iterations.push_back(std::move(it));
    }
    return trace;
}

CoverTrace run_cover(const Graph& g, int threads) {
    CoverContext ctx = make_cover_context(g, threads);
    CoverTrace t = run_cover(ctx);
    verify_cover_trace(ctx, t);
    return t;
}

void verify_cover_trace(const CoverContext& ctx, const CoverTrace& trace) {
    const Graph& g = ctx.g;
    const std::size_t m = static_cast<std::size_t>(g.edge_count());

    std::map<std::vector<int>, int> crit_paths;  // path -> record
    for (std::size_t i = 0; i < ctx.crit.records.size(); ++i)
        crit_paths[ctx.crit.records[i].path] = static_cast<int>(i);
    std::set<std::vector<int>> two_paths;
    for (const auto& rec : ctx.two_crit) two_paths.insert(rec.path);

    // Family covers every edge through association.
    std::vector<char> covered(m, 0);
    for (const auto& p : trace.family) {
        auto itr = crit_paths.find(p);
        if (itr == crit_paths.end())
            throw LemmaViolation("family contains a non-critical path " + path_str(p));
        for (int eid : ctx.crit.records[static_cast<std::size_t>(itr->second)].assoc_edges)
            covered[static_cast<std::size_t>(eid)] = 1;
    }
    for (std::size_t e = 0; e < m; ++e)
        if (!covered[e])
            throw LemmaViolation("edge not associated with any family path");

    // Settlement must partition the edge set.
    std::vector<char> seen_edge(m, 0);
    for (const auto& it : trace.iterations)
        for (int eid : it.settled) {
            if (seen_edge[static_cast<std::size_t>(eid)])
                throw LemmaViolation("edge settled twice");
            seen_edge[static_cast<std::size_t>(eid)] = 1;
            if (trace.settled_at[static_cast<std::size_t>(eid)] != it.index)
                throw LemmaViolation("settled_at disagrees with the iteration log");
        }
    for (std::size_t e = 0; e < m; ++e)
        if (!seen_edge[e]) throw LemmaViolation("edge never settled");

    std::set<std::vector<int>> all_paths;
    int prev_type = 1;
    for (const auto& it : trace.iterations) {
        if (it.type < prev_type) throw LemmaViolation("iteration type decreased");
        prev_type = it.type;

        auto settled_here = [&](const std::vector<int>& p) {
            int cnt = 0;
            for (int eid : path_edge_ids(g, p))
                if (trace.settled_at[static_cast<std::size_t>(eid)] == it.index) ++cnt;
            return cnt;
        };
        for (const auto& p : it.paths) {
            if (!crit_paths.count(p))
                throw LemmaViolation("P(" + std::to_string(it.index) + ") path not critical");
            if (settled_here(p) == 0)
                throw LemmaViolation("P(i) path without an edge settled this iteration");
            if (!all_paths.insert(p).second)
                throw LemmaViolation("path appears in two iterations: " + path_str(p));
        }
        for (const auto& p : it.two_paths) {
            if (!two_paths.count(p))
                throw LemmaViolation("P2(" + std::to_string(it.index) + ") path not two-critical");
            if (settled_here(p) == 0)
                throw LemmaViolation("P2(i) path without an edge settled this iteration");
            if (!all_paths.insert(p).second)
                throw LemmaViolation("path appears in two iterations: " + path_str(p));
            // Every edge settled here, or length 2 with the other edge older.
            bool all_now = true, any_old = false;
            for (int eid : path_edge_ids(g, p)) {
                int at = trace.settled_at[static_cast<std::size_t>(eid)];
                if (at != it.index) all_now = false;
                if (at < it.index) any_old = true;
                if (at > it.index)
                    throw LemmaViolation("P2(i) edge settled after its iteration");
            }
            if (!all_now && !(p.size() == 3 && any_old))
                throw LemmaViolation("P2(i) settlement pattern invalid for " + path_str(p));
        }
    }

    if (2 * trace.iterations_with_single_path > g.vertex_count())
        throw LemmaViolation("more than n/2 single-path iterations");
}

G0Result build_g0(const CoverContext& ctx, long long t) {
    if (t < 1) throw BadParams("t must be at least 1");
    const Graph& g = ctx.g;
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    std::vector<char> drop(m, 0);
    G0Result out;
    for (std::size_t e = 0; e < m; ++e)
        if (ctx.mult[e].total() >= t) {
            drop[e] = 1;
            out.deleted_heavy.push_back(static_cast<int>(e));
        }
    for (const auto& rec : t_light_paths(g, ctx.mult, ctx.two_crit, t))
        for (int eid : path_edge_ids(g, rec.path))
            if (!drop[static_cast<std::size_t>(eid)]) {
                drop[static_cast<std::size_t>(eid)] = 1;
                out.deleted_light.push_back(eid);
            }

    std::vector<std::pair<int, int>> kept;
    for (std::size_t e = 0; e < m; ++e)
        if (!drop[e]) kept.emplace_back(g.edge(static_cast<int>(e)).u, g.edge(static_cast<int>(e)).v);
    out.g0 = Graph::build(g.vertex_count(), kept);

    // Every length-2 two-critical path must have lost an edge.
    for (const auto& rec : ctx.two_crit) {
        if (rec.path.size() != 3) continue;
        bool lost = false;
        for (int eid : path_edge_ids(g, rec.path))
            if (drop[static_cast<std::size_t>(eid)]) lost = true;
        if (!lost)
            throw LemmaViolation("two-critical path survived the pruning: " + path_str(rec.path));
    }
    // Every critical or two-critical pair has disjoint neighbourhoods in G0.
    auto check_pair = [&](int x, int y) {
        if (intersects(out.g0.row(x), out.g0.row(y)))
            throw LemmaViolation("pair (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") keeps a common neighbour after pruning");
    };
    for (const auto& rec : ctx.crit.records) check_pair(rec.pair[0], rec.pair[1]);
    for (const auto& rec : ctx.two_crit) check_pair(rec.pair[0], rec.pair[1]);
    return out;
}

std::vector<std::vector<int>> extract_p_t(const CoverContext& ctx, long long t) {
    std::vector<std::vector<int>> out;
    for (const auto& rec : ctx.crit.records) {
        if (rec.assoc_edges.size() < 2 || rec.path.size() != 4) continue;
        auto ids = path_edge_ids(ctx.g, rec.path);
        if (ctx.mult[static_cast<std::size_t>(ids[1])].total() < t) continue;
        if (ctx.mult[static_cast<std::size_t>(ids[0])].total() >= t) continue;
        if (ctx.mult[static_cast<std::size_t>(ids[2])].total() >= t) continue;
        if (count_paths_upto(ctx.g, rec.pair[0], rec.pair[1], 3, 2) != 1)
            throw InternalInvariant("middle-heavy path is not the unique short path: " +
                                    path_str(rec.path));
        out.push_back(rec.path);
    }
    return out;
}

SBoundReport verify_s_bound(const CoverContext& ctx, const CoverTrace& trace,
                            const G0Result& g0, long long t) {
    SBoundReport rep;
    rep.s = static_cast<long long>(trace.iterations.size());
    rep.g0_edges = g0.g0.edge_count();

    std::set<std::vector<int>> pt;
    for (auto& p : extract_p_t(ctx, t)) pt.insert(p);

    long long total = 0;
    std::set<std::array<int, 2>> family_pairs;
    rep.settled_in_g0.reserve(trace.iterations.size());
    for (const auto& it : trace.iterations) {
        std::vector<int> s_i;
        for (int eid : it.settled) {
            const Edge& e = ctx.g.edge(eid);
            if (g0.g0.edge_index(e.u, e.v) >= 0) s_i.push_back(eid);
        }
        total += static_cast<long long>(s_i.size());
        if (s_i.size() >= 2) {
            bool excused = it.kase == CoverCase::C1 && it.paths.size() == 1 &&
                           pt.count(it.paths[0]) > 0 && s_i.size() == 2;
            if (!excused)
                throw LemmaViolation("iteration " + std::to_string(it.index) + " kept " +
                                     std::to_string(s_i.size()) +
                                     " settled edges in the pruned graph");
            ++rep.exceptional_iterations;
        }
        rep.settled_in_g0.push_back(std::move(s_i));

        rep.sum_path_sets += static_cast<long long>(it.paths.size() + it.two_paths.size());
        for (const auto& p : it.paths) {
            std::array<int, 2> pr{std::min(p.front(), p.back()), std::max(p.front(), p.back())};
            if (!family_pairs.insert(pr).second)
                throw LemmaViolation("two logged paths share an endpoint pair");
        }
        for (const auto& p : it.two_paths) {
            std::array<int, 2> pr{std::min(p.front(), p.back()), std::max(p.front(), p.back())};
            if (!family_pairs.insert(pr).second)
                throw LemmaViolation("two logged paths share an endpoint pair");
        }
    }
    if (total != rep.g0_edges)
        throw LemmaViolation("settled edges in the pruned graph do not partition its edge set");
    rep.s_bound_holds = rep.g0_edges <= rep.s + rep.exceptional_iterations;

    DisjointPairs di = disjoint_neighborhood_pairs(g0.g0);
    rep.di_g0 = di.count;
    std::set<std::array<int, 2>> di_set(di.pairs.begin(), di.pairs.end());
    for (const auto& pr : family_pairs)
        if (!di_set.count(pr))
            throw LemmaViolation("logged pair lacks disjoint neighbourhoods in the pruned graph");
    rep.disjoint_pair_bound_holds =
        rep.di_g0 >= rep.sum_path_sets &&
        2 * rep.sum_path_sets >= 4 * rep.s - ctx.g.vertex_count();
    if (!rep.disjoint_pair_bound_holds)
        throw LemmaViolation("disjoint-pair count fails the 2s - n/2 bound");
    return rep;
}

bool is_linear(const Hypergraph3& h) {
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            int shared = 0;
            for (int a : h.edges[i].verts)
                for (int b : h.edges[j].verts)
                    if (a == b) ++shared;
            if (shared > 1) return false;
        }
    return true;
}

std::optional<std::array<int, 3>> find_hypergraph_triangle(const Hypergraph3& h) {
    const std::size_t ne = h.edges.size();
    auto shared_vertex = [&](std::size_t i, std::size_t j) -> int {
        int found = -1;
        int count = 0;
        for (int a : h.edges[i].verts)
            for (int b : h.edges[j].verts)
                if (a == b) { found = a; ++count; }
        return count == 1 ? found : -2;  // -2: zero or more than one shared
    };
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = i + 1; j < ne; ++j) {
            int sij = shared_vertex(i, j);
            if (sij < 0) continue;
            for (std::size_t k = j + 1; k < ne; ++k) {
                int sik = shared_vertex(i, k);
                int sjk = shared_vertex(j, k);
                if (sik < 0 || sjk < 0) continue;
                if (sij != sik && sij != sjk && sik != sjk)
                    return std::array<int, 3>{static_cast<int>(i), static_cast<int>(j),
                                              static_cast<int>(k)};
            }
        }
    return std::nullopt;
}

ChainReport hypergraph_chain(int n, const std::vector<std::vector<int>>& p_t_paths,
                             long long t, std::uint64_t seed) {
    if (t < 1) throw BadParams("t must be at least 1");
    ChainReport rep;
    rep.p_t_size = static_cast<long long>(p_t_paths.size());

    // H1: one triple per path x-a-b-y, always the one keeping the interior
    // vertex next to the smaller endpoint; centre a, handle x.
    rep.h1.n = n;
    std::set<std::array<int, 3>> h1_keys;
    for (const auto& p : p_t_paths) {
        if (p.size() != 4) throw BadParams("middle-heavy paths must have length 3");
        Hypergraph3::Tri tri;
        tri.verts = {p[0], p[1], p[3]};
        std::sort(tri.verts.begin(), tri.verts.end());
        tri.center = p[1];
        tri.handle = p[0];
        if (!h1_keys.insert(tri.verts).second)
            throw InternalInvariant("two paths produced the same triple");
        rep.h1.edges.push_back(tri);
    }

    // H2: greedy linear subfamily in input order.
    rep.h2.n = n;
    for (const auto& e : rep.h1.edges) {
        bool ok = true;
        for (const auto& kept : rep.h2.edges) {
            int shared = 0;
            for (int a : e.verts)
                for (int b : kept.verts)
                    if (a == b) ++shared;
            if (shared >= 2) { ok = false; break; }
        }
        if (ok) rep.h2.edges.push_back(e);
    }
    rep.h2_linear = is_linear(rep.h2);
    rep.h2_bound = 2 * t * static_cast<long long>(rep.h2.edges.size()) >=
                   static_cast<long long>(rep.h1.edges.size());
    if (!rep.h2_linear || !rep.h2_bound)
        throw BoundViolation("greedy linear subfamily lost too many triples");

    // H3: seeded random 3-partition, resampled until the rainbow family
    // reaches its 2/9 expectation bound.
    const long long h2_size = static_cast<long long>(rep.h2.edges.size());
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> part(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            part[static_cast<std::size_t>(v)] =
                static_cast<int>(SplitMix64::at(seed + static_cast<std::uint64_t>(attempt),
                                                static_cast<std::uint64_t>(v)) % 3);
        Hypergraph3 h3;
        h3.n = n;
        h3.part = part;
        for (const auto& e : rep.h2.edges) {
            int p0 = part[static_cast<std::size_t>(e.verts[0])];
            int p1 = part[static_cast<std::size_t>(e.verts[1])];
            int p2 = part[static_cast<std::size_t>(e.verts[2])];
            if (p0 != p1 && p0 != p2 && p1 != p2) h3.edges.push_back(e);
        }
        if (9 * static_cast<long long>(h3.edges.size()) >= 2 * h2_size) {
            rep.h3 = std::move(h3);
            rep.partition_attempts = attempt + 1;
            break;
        }
    }
    if (rep.partition_attempts == 0)
        throw BoundViolation("no 3-partition reached the rainbow expectation bound");
    rep.h3_partite = true;  // rainbow by construction
    rep.h3_bound = true;

    // H4: largest (centre part, handle part) class.
    std::array<std::vector<int>, 9> classes;
    for (std::size_t i = 0; i < rep.h3.edges.size(); ++i) {
        const auto& e = rep.h3.edges[i];
        int c = rep.h3.part[static_cast<std::size_t>(e.center)];
        int hnd = rep.h3.part[static_cast<std::size_t>(e.handle)];
        if (c == hnd) throw InternalInvariant("rainbow triple with centre and handle together");
        classes[static_cast<std::size_t>(c * 3 + hnd)].push_back(static_cast<int>(i));
    }
    std::size_t best = 0;
    for (std::size_t ci = 1; ci < classes.size(); ++ci)
        if (classes[ci].size() > classes[best].size()) best = ci;
    rep.h4.n = n;
    rep.h4.part = rep.h3.part;
    for (int idx : classes[best]) rep.h4.edges.push_back(rep.h3.edges[static_cast<std::size_t>(idx)]);
    rep.h4_bound = 6 * static_cast<long long>(rep.h4.edges.size()) >=
                   static_cast<long long>(rep.h3.edges.size());
    rep.h4_linear = is_linear(rep.h4);
    rep.h4_triangle_free = !find_hypergraph_triangle(rep.h4).has_value();
    if (!rep.h4_bound || !rep.h4_linear || !rep.h4_triangle_free)
        throw BoundViolation("final triple system failed its guarantees");
    return rep;
}

}  // namespace diamcrit
