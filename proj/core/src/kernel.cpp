#include "edskit/kernel.hpp"

#include <algorithm>
#include <functional>

#include "edskit/errors.hpp"
#include "edskit/fixtures.hpp"
#include "edskit/iso.hpp"
#include "edskit/matching.hpp"

namespace edskit {
namespace {

struct Comp {
    VSet verts;   // original ids, sorted
    Graph local;  // relabeled in order of verts
    int meds = 0;
    VSet W, U;    // original ids
    std::vector<CostedSet> sb;  // original ids
};

std::vector<Comp> components_of(const ModInstance& inst, const Limits& lim, bool with_profiles) {
    FamilyAssignment fa = validate_instance(inst, lim);
    ProfileCache cache(lim);
    std::map<std::string, int> meds_by_key;
    std::vector<Comp> out;
    for (const VSet& verts : fa.components) {
        Comp c;
        c.verts = verts;
        c.local = induced_subgraph(inst.graph, verts).graph;
        auto map_back = [&](const VSet& s) {
            VSet r;
            for (int v : s) r.push_back(verts[v]);
            return r;
        };
        if (with_profiles) {
            HProfile p = cache.get(c.local);
            c.meds = p.meds;
            c.W = map_back(p.W);
            c.U = map_back(p.U);
            for (const auto& s : p.strongly_beneficial) c.sb.push_back({map_back(s.set), s.cost});
        } else {
            std::string key = canonical_key(c.local);
            auto it = meds_by_key.find(key);
            if (it == meds_by_key.end()) it = meds_by_key.emplace(key, meds(c.local, lim).size).first;
            c.meds = it->second;
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool adjacent_to_any(const Graph& g, int x, const VSet& s) {
    return std::any_of(s.begin(), s.end(), [&](int v) { return g.adjacent(x, v); });
}

EdgeSet trivial_certificate(const ModInstance& inst, const std::vector<Comp>& comps, const Limits& lim) {
    EdgeSet f;
    for (const auto& c : comps)
        for (auto [u, v] : meds(c.local, lim).witness) f.push_back(make_edge(c.verts[u], c.verts[v]));
    for (int x : inst.modulator)
        if (inst.graph.degree(x) > 0) f.push_back(make_edge(x, inst.graph.neighbors(x).front()));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

int total_meds(const std::vector<Comp>& comps) {
    int s = 0;
    for (const auto& c : comps) s += c.meds;
    return s;
}

KernelReport trivial_yes(const ModInstance& inst, const std::vector<Comp>& comps, const std::string& algo,
                         const Limits& lim) {
    KernelReport r;
    r.kind = KernelReport::Kind::TrivialYes;
    r.algorithm = algo;
    r.n_before = r.n_after = inst.graph.n();
    r.m_before = r.m_after = inst.graph.m();
    r.certificate = trivial_certificate(inst, comps, lim);
    r.counts["meds_G_minus_X"] = total_meds(comps);
    return r;
}

std::vector<Graph> family_with_k1(const std::vector<Graph>& family) {
    Graph k1(1);
    for (const Graph& h : family)
        if (h.n() == 1) return family;
    std::vector<Graph> out = family;
    out.push_back(k1);
    return out;
}

void require_family(const ModInstance& inst) {
    if (inst.family.empty()) throw InvalidInput("kernelization needs a nonempty family");
}

// Rules 3 and 4 plus the bookkeeping shared by the basic and general kernels.
struct Marking {
    VSet xw_h, xw_l, xu_h, xu_l;
    std::vector<char> in_cw_l, in_cu_l;
};

Marking mark_w_and_u(const ModInstance& inst, const std::vector<Comp>& comps, int copies,
                     std::map<std::string, long>& counts) {
    const Graph& g = inst.graph;
    const int nx = static_cast<int>(inst.modulator.size());
    const int nc = static_cast<int>(comps.size());
    Marking mk;
    mk.in_cw_l.assign(nc, 0);
    mk.in_cu_l.assign(nc, 0);

    VSet xw;
    std::vector<std::vector<int>> w_nbrs;  // per x in xw: components whose W meets N(x)
    for (int x : inst.modulator) {
        std::vector<int> cs;
        for (int c = 0; c < nc; ++c)
            if (adjacent_to_any(g, x, comps[c].W)) cs.push_back(c);
        if (!cs.empty()) {
            xw.push_back(x);
            w_nbrs.push_back(std::move(cs));
        }
    }
    std::vector<int> cw;  // components in C_W, right side order
    std::vector<int> right_of(nc, -1);
    for (const auto& cs : w_nbrs)
        for (int c : cs)
            if (right_of[c] == -1) {
                right_of[c] = 0;
                cw.push_back(c);
            }
    std::sort(cw.begin(), cw.end());
    for (int i = 0; i < static_cast<int>(cw.size()); ++i) right_of[cw[i]] = i;

    Bipartite gw;
    gw.left = static_cast<int>(xw.size()) * copies;
    gw.right = static_cast<int>(cw.size());
    for (int i = 0; i < static_cast<int>(xw.size()); ++i)
        for (int j = 0; j < copies; ++j)
            for (int c : w_nbrs[i]) gw.edges.emplace_back(i * copies + j, right_of[c]);
    SaturationResult sw = saturate_or_deficiency(gw);
    std::vector<char> low(xw.size(), 0);
    for (int r : sw.deficient)
        if (r % copies == 0) low[r / copies] = 1;
    for (int i = 0; i < static_cast<int>(xw.size()); ++i) {
        (low[i] ? mk.xw_l : mk.xw_h).push_back(xw[i]);
        if (low[i])
            for (int c : w_nbrs[i]) mk.in_cw_l[c] = 1;
    }

    // X_U over the modulator left after rule 3.
    std::vector<char> gone(g.n(), 0);
    for (int x : mk.xw_h) gone[x] = 1;
    for (int x : inst.modulator) {
        if (gone[x]) continue;
        std::vector<int> cs;
        for (int c = 0; c < nc; ++c)
            if (adjacent_to_any(g, x, comps[c].U)) cs.push_back(c);
        if (cs.empty()) continue;
        if (static_cast<int>(cs.size()) >= nx + 1) {
            mk.xu_h.push_back(x);
        } else {
            mk.xu_l.push_back(x);
            for (int c : cs) mk.in_cu_l[c] = 1;
        }
    }
    counts["X_W"] = static_cast<long>(xw.size());
    counts["X_W^h"] = static_cast<long>(mk.xw_h.size());
    counts["X_W^l"] = static_cast<long>(mk.xw_l.size());
    counts["C_W"] = static_cast<long>(cw.size());
    counts["C_W^l"] = std::count(mk.in_cw_l.begin(), mk.in_cw_l.end(), 1);
    counts["X_U^h"] = static_cast<long>(mk.xu_h.size());
    counts["X_U^l"] = static_cast<long>(mk.xu_l.size());
    counts["C_U^l"] = std::count(mk.in_cu_l.begin(), mk.in_cu_l.end(), 1);
    counts["C_S"] = static_cast<long>(mk.xu_h.size());
    return mk;
}

void check_no_poly(const std::vector<Graph>& family, const Limits& lim) {
    Verdict v = classify_family(family, lim);
    if (v.tag == VerdictTag::NoPolyKernel) throw NoPolyKernelFamily(v);
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

KernelReport finish(const ModInstance& inst, std::vector<RuleStep> trace, std::vector<Graph> family,
                    const std::string& algo, std::map<std::string, long> counts) {
    KernelReport r = replay_trace(inst, trace, std::move(family));
    r.algorithm = algo;
    r.counts = std::move(counts);
    r.counts["components_after"] = static_cast<long>(
        connected_components(delete_vertices(r.reduced.graph, r.reduced.modulator).graph).size());
    r.counts["X_after"] = static_cast<long>(r.reduced.modulator.size());
    return r;
}

}  // namespace

bool family_is_p5(const std::vector<Graph>& family) {
    if (family.empty()) return false;
    const std::string p5 = canonical_key(fixtures::path(5));
    return std::all_of(family.begin(), family.end(),
                       [&](const Graph& h) { return h.n() == 5 && canonical_key(h) == p5; });
}

KernelReport replay_trace(const ModInstance& original, const std::vector<RuleStep>& trace,
                          std::vector<Graph> family) {
    const Graph& g = original.graph;
    std::vector<char> alive(g.n(), 1);
    VSet pendants;
    int k = original.k;
    for (const auto& step : trace) {
        for (int v : step.deleted) {
            if (v < 0 || v >= g.n()) throw InvalidInput("trace deletes unknown vertex " + std::to_string(v));
            alive[v] = 0;
        }
        for (int x : step.pendant_for) pendants.push_back(x);
        k += step.k_delta;
    }
    KernelReport r;
    std::vector<int> new_id(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (alive[v]) {
            new_id[v] = static_cast<int>(r.origin.size());
            r.origin.push_back(v);
        }
    GraphBuilder b(static_cast<int>(r.origin.size()));
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v]) b.add_edge(new_id[u], new_id[v]);
    for (int x : pendants) {
        if (!alive[x]) throw InvalidInput("pendant attached to deleted vertex " + std::to_string(x));
        int p = b.add_vertex();
        b.add_edge(new_id[x], p);
        r.origin.push_back(-1);
    }
    r.reduced.graph = b.build();
    r.reduced.k = k;
    for (int x : original.modulator)
        if (alive[x]) r.reduced.modulator.push_back(new_id[x]);
    r.reduced.family = std::move(family);
    r.trace = trace;
    r.n_before = g.n();
    r.m_before = g.m();
    r.n_after = r.reduced.graph.n();
    r.m_after = r.reduced.graph.m();
    r.budget_delta = original.k - k;
    return r;
}

KernelReport kernelize_p5(const ModInstance& inst, const Limits& lim) {
    require_family(inst);
    if (!family_is_p5(inst.family)) throw InvalidInput("kernelize_p5 needs the family {P5}");
    const Graph& g = inst.graph;
    auto comps = components_of(inst, lim, false);
    const int nx = static_cast<int>(inst.modulator.size());
    const int nc = static_cast<int>(comps.size());

    Bipartite gb;
    gb.left = nx;
    gb.right = nc;
    std::vector<VSet> outer(nc);  // non-middle vertices
    for (int c = 0; c < nc; ++c) {
        const Graph& p = comps[c].local;
        for (int v = 0; v < p.n(); ++v) {
            bool middle = p.degree(v) == 2 && p.degree(p.neighbors(v)[0]) == 2 && p.degree(p.neighbors(v)[1]) == 2;
            if (!middle) outer[c].push_back(comps[c].verts[v]);
        }
    }
    for (int i = 0; i < nx; ++i)
        for (int c = 0; c < nc; ++c)
            if (adjacent_to_any(g, inst.modulator[i], outer[c])) gb.edges.emplace_back(i, c);
    SaturationResult sr = saturate_or_deficiency(gb);

    VSet x1, x2;
    std::vector<char> in_y(nx, 0);
    for (int r : sr.deficient) in_y[r] = 1;
    for (int i = 0; i < nx; ++i) (in_y[i] ? x2 : x1).push_back(inst.modulator[i]);
    std::vector<char> in_c2(nc, 0);
    for (int s : right_neighbors(gb, sr.deficient)) in_c2[s] = 1;

    std::vector<RuleStep> trace;
    trace.push_back({"1", x1, {}, 0, "delete X1 (modulator vertices matched into components)"});
    RuleStep r2{"2", {}, {}, 0, "delete components of C1"};
    int deleted = 0;
    for (int c = 0; c < nc; ++c)
        if (!in_c2[c]) {
            r2.deleted.insert(r2.deleted.end(), comps[c].verts.begin(), comps[c].verts.end());
            r2.k_delta -= comps[c].meds;
            ++deleted;
        }
    std::sort(r2.deleted.begin(), r2.deleted.end());
    trace.push_back(std::move(r2));

    std::map<std::string, long> counts{{"X1", static_cast<long>(x1.size())},
                                       {"X2", static_cast<long>(x2.size())},
                                       {"C1", deleted},
                                       {"C2", nc - deleted},
                                       {"saturated", sr.saturated ? 1 : 0}};
    return finish(inst, std::move(trace), inst.family, "p5", std::move(counts));
}

KernelReport kernelize_basic(const ModInstance& inst, const Limits& lim) {
    require_family(inst);
    ProfileCache cache(lim);
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
        const Graph& h = inst.family[i];
        if (!is_connected(h)) continue;
        HProfile p = cache.get(h);
        if (!p.strongly_beneficial.empty())
            throw InvalidInput("family member " + std::to_string(i) +
                               " has beneficial sets; use the general kernelization");
        std::uint64_t covered = set_to_mask(p.W) | set_to_mask(p.U);
        for (int w : p.W) covered |= h.nbr_mask(w);
        if (__builtin_popcountll(covered) != h.n())
            throw InvalidInput("family member " + std::to_string(i) + " has a vertex outside N[W] and U");
    }
    auto comps = components_of(inst, lim, true);
    const int nx = static_cast<int>(inst.modulator.size());
    if (inst.k - total_meds(comps) >= nx) return trivial_yes(inst, comps, "basic", lim);

    std::map<std::string, long> counts;
    Marking mk = mark_w_and_u(inst, comps, 1, counts);
    std::vector<RuleStep> trace;
    trace.push_back({"3", mk.xw_h, {}, 0, "delete X_W^h"});
    trace.push_back({"4", {}, mk.xu_h, 0, "pendant for every vertex of X_U^h"});
    RuleStep r5{"5", {}, {}, 0, "delete components of C_D"};
    long cd = 0;
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (!mk.in_cw_l[c] && !mk.in_cu_l[c]) {
            r5.deleted.insert(r5.deleted.end(), comps[c].verts.begin(), comps[c].verts.end());
            r5.k_delta -= comps[c].meds;
            ++cd;
        }
    std::sort(r5.deleted.begin(), r5.deleted.end());
    trace.push_back(std::move(r5));
    counts["C_D"] = cd;
    auto family = mk.xu_h.empty() ? inst.family : family_with_k1(inst.family);
    return finish(inst, std::move(trace), std::move(family), "basic", std::move(counts));
}

KernelReport kernelize_general(const ModInstance& inst, int d, const Limits& lim) {
    require_family(inst);
    check_no_poly(inst.family, lim);
    ProfileCache cache(lim);
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
        if (!is_connected(inst.family[i])) continue;
        HProfile p = cache.get(inst.family[i]);
        if (p.d > d)
            throw InvalidInput("family member " + std::to_string(i) + " has a strongly beneficial set of size " +
                               std::to_string(p.d) + " > d=" + std::to_string(d));
    }
    const Graph& g = inst.graph;
    auto comps = components_of(inst, lim, true);
    const int nx = static_cast<int>(inst.modulator.size());
    if (inst.k - total_meds(comps) >= nx) return trivial_yes(inst, comps, "general", lim);

    std::map<std::string, long> counts;
    Marking mk = mark_w_and_u(inst, comps, std::max(nx, 1), counts);

    std::vector<char> gone(g.n(), 0), in_x(g.n(), 0);
    for (int x : mk.xw_h) gone[x] = 1;
    for (int x : inst.modulator) in_x[x] = 1;

    // Auxiliary graph over components that carry a strongly beneficial set.
    std::vector<int> cb;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        if (!mk.in_cw_l[c] && !mk.in_cu_l[c] && !comps[c].sb.empty()) cb.push_back(c);
    std::map<std::pair<VSet, int>, int> r_index;
    Bipartite ga;
    ga.right = static_cast<int>(cb.size());
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < static_cast<int>(cb.size()); ++j) {
        const Comp& c = comps[cb[j]];
        for (const auto& s : c.sb) {
            const int size = static_cast<int>(s.set.size());
            if (size < 2 || size > d || s.cost < 1 || s.cost > size - 1) continue;
            VSet z;
            for (int x : inst.modulator)
                if (!gone[x] && adjacent_to_any(g, x, s.set)) z.push_back(x);
            if (static_cast<int>(z.size()) < size) continue;
            // Every size-|B| subset Y of Z with a perfect matching to B.
            VSet y;
            std::function<void(int)> pick = [&](int from) {
                if (static_cast<int>(y.size()) == size) {
                    Bipartite yb;
                    yb.left = yb.right = size;
                    for (int a = 0; a < size; ++a)
                        for (int b2 = 0; b2 < size; ++b2)
                            if (g.adjacent(y[a], s.set[b2])) yb.edges.emplace_back(a, b2);
                    if (max_matching(yb).size != size) return;
                    auto key = std::make_pair(y, s.cost);
                    auto it = r_index.find(key);
                    if (it == r_index.end()) it = r_index.emplace(key, static_cast<int>(r_index.size())).first;
                    edges.emplace_back(it->second, j);
                    return;
                }
                for (int i = from; i < static_cast<int>(z.size()); ++i) {
                    y.push_back(z[i]);
                    pick(i + 1);
                    y.pop_back();
                }
            };
            pick(0);
        }
    }
    // Renumber R in key order so the result does not depend on discovery order.
    std::vector<int> renum(r_index.size());
    {
        int next = 0;
        for (auto& [key, idx] : r_index) renum[idx] = next++;
    }
    ga.left = static_cast<int>(r_index.size());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [r, s] : edges) ga.edges.emplace_back(renum[r], s);
    SaturationResult sa = saturate_or_deficiency(ga);
    std::vector<char> in_cb_l(comps.size(), 0), in_cb_h(comps.size(), 0);
    for (int s : right_neighbors(ga, sa.deficient)) in_cb_l[cb[s]] = 1;
    for (int r = 0; r < ga.left; ++r)
        if (sa.matching.mate_left[r] != -1) in_cb_h[cb[sa.matching.mate_left[r]]] = 1;

    long r_full = 0;
    for (int i = 2; i <= d; ++i) r_full += binom(nx, i) * (i - 1);
    counts["C_B"] = static_cast<long>(cb.size());
    counts["R_full"] = r_full;
    counts["R_materialized"] = ga.left;
    counts["C_B^l"] = std::count(in_cb_l.begin(), in_cb_l.end(), 1);
    counts["C_B^h"] = std::count(in_cb_h.begin(), in_cb_h.end(), 1);
    counts["d"] = d;

    std::vector<RuleStep> trace;
    trace.push_back({"3", mk.xw_h, {}, 0, "delete X_W^h (copied auxiliary graph)"});
    trace.push_back({"4", {}, mk.xu_h, 0, "pendant for every vertex of X_U^h"});
    RuleStep r5{"5", {}, {}, 0, "delete components of C_D"};
    long cd = 0;
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (!mk.in_cw_l[c] && !mk.in_cu_l[c] && !in_cb_l[c] && !in_cb_h[c]) {
            r5.deleted.insert(r5.deleted.end(), comps[c].verts.begin(), comps[c].verts.end());
            r5.k_delta -= comps[c].meds;
            ++cd;
        }
    std::sort(r5.deleted.begin(), r5.deleted.end());
    trace.push_back(std::move(r5));
    counts["C_D"] = cd;
    auto family = mk.xu_h.empty() ? inst.family : family_with_k1(inst.family);
    return finish(inst, std::move(trace), std::move(family), "general", std::move(counts));
}

KernelReport kernelize(const ModInstance& inst, const KernelOptions& opt, const Limits& lim) {
    require_family(inst);
    if (opt.p5_fast_path && family_is_p5(inst.family)) return kernelize_p5(inst, lim);
    Verdict v = classify_family(inst.family, lim);
    switch (v.tag) {
        case VerdictTag::NoPolyKernel: throw NoPolyKernelFamily(v);
        case VerdictTag::PolyKernel: return kernelize_general(inst, v.d, lim);
        case VerdictTag::Quadratic: break;
    }
    return kernelize_basic(inst, lim);
}

}  // namespace edskit
