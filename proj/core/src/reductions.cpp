#include "edskit/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "edskit/errors.hpp"
#include "edskit/fixtures.hpp"

namespace edskit {
namespace {

long binom2(long k) { return k * (k - 1) / 2; }

int pair_index(int p, int q, int k) { return p * k - p * (p + 1) / 2 + (q - p - 1); }

struct Prepared {
    int k = 0, n = 0;
    std::vector<std::vector<Edge>> edges;  // cross-class edges per kept instance
    std::vector<int> dropped;
    int t_input = 0;
};

Prepared prepare(const std::vector<MccInstance>& in) {
    if (in.empty()) throw InvalidInput("composition needs at least one instance");
    Prepared p;
    p.k = in.front().k;
    p.n = in.front().n;
    p.t_input = static_cast<int>(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        const MccInstance& m = in[i];
        validate_mcc(m);
        if (m.k != p.k || m.n != p.n)
            throw InvalidInput("instance " + std::to_string(i) + " has k=" + std::to_string(m.k) + ", n=" +
                               std::to_string(m.n) + " but instance 0 has k=" + std::to_string(p.k) +
                               ", n=" + std::to_string(p.n));
        std::vector<Edge> cross;
        std::vector<char> seen(binom2(p.k), 0);
        for (auto e : m.graph.edges()) {
            int a = m.color(e.first), b = m.color(e.second);
            if (a == b) continue;
            cross.push_back(e);
            seen[pair_index(std::min(a, b), std::max(a, b), p.k)] = 1;
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
            p.dropped.push_back(static_cast<int>(i));
            continue;
        }
        p.edges.push_back(std::move(cross));
    }
    if (p.edges.empty()) throw InvalidInput("every instance misses edges between some pair of colour classes");
    return p;
}

long total_edges(const Prepared& p) {
    long s = 0;
    for (const auto& e : p.edges) s += static_cast<long>(e.size());
    return s;
}

// Pads to the next power of two; returns s = log2 of the padded count.
int pad_pow2(Prepared& p) {
    int s = 0;
    while ((std::size_t{1} << s) < p.edges.size()) ++s;
    while (p.edges.size() < (std::size_t{1} << s)) p.edges.push_back(p.edges.back());
    return s;
}

// First `count` s-subsets of {0..2s-1} in lexicographic order.
std::vector<VSet> w_subsets(int s, int count) {
    std::vector<VSet> out;
    VSet cur(s);
    for (int i = 0; i < s; ++i) cur[i] = i;
    while (static_cast<int>(out.size()) < count) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[i] == 2 * s - s + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// Shared selection frame of the two W-encoded compositions.
struct Frame {
    int v0, t0, tp0, z0, zp0, w0;
};

Frame add_frame(GraphBuilder& b, int k, int n, int s) {
    Frame f;
    f.v0 = b.add_vertices(k * n);
    f.t0 = b.add_vertices(k);
    f.tp0 = b.add_vertices(k);
    f.z0 = b.add_vertices(s);
    f.zp0 = b.add_vertices(s);
    f.w0 = b.add_vertices(2 * s);
    for (int j = 0; j < k; ++j) {
        b.add_edge(f.t0 + j, f.tp0 + j);
        for (int v = j * n; v < (j + 1) * n; ++v) b.add_edge(f.t0 + j, f.v0 + v);
    }
    for (int i = 0; i < s; ++i) {
        b.add_edge(f.z0 + i, f.zp0 + i);
        for (int w = 0; w < 2 * s; ++w) b.add_edge(f.z0 + i, f.w0 + w);
    }
    return f;
}

Composition finish(GraphBuilder& b, int modulator_end, Graph member, const Prepared& p, int s, int t_kept) {
    Composition c;
    c.instance.graph = b.build();
    for (int v = 0; v < modulator_end; ++v) c.instance.modulator.push_back(v);
    c.instance.family = {std::move(member)};
    c.t_input = p.t_input;
    c.t_kept = t_kept;
    c.t_padded = static_cast<int>(p.edges.size());
    c.s = s;
    c.dropped = p.dropped;
    return c;
}

}  // namespace

void validate_mcc(const MccInstance& m) {
    if (m.k < 1 || m.n < 1) throw InvalidInput("MCC instance needs k >= 1 and n >= 1");
    if (m.graph.n() != m.k * m.n)
        throw InvalidInput("MCC graph has " + std::to_string(m.graph.n()) + " vertices, expected k*n=" +
                           std::to_string(m.k * m.n));
}

bool solve_mcc_brute(const MccInstance& m) {
    validate_mcc(m);
    double combos = std::pow(static_cast<double>(m.n), m.k);
    if (combos > double(1 << 24)) throw CapExceeded("MCC brute force over n^k > 2^24 transversals");
    std::vector<int> pick(m.k, 0);
    while (true) {
        bool clique = true;
        for (int a = 0; a < m.k && clique; ++a)
            for (int b = a + 1; b < m.k && clique; ++b)
                clique = m.graph.adjacent(a * m.n + pick[a], b * m.n + pick[b]);
        if (clique) return true;
        int i = m.k - 1;
        while (i >= 0 && ++pick[i] == m.n) pick[i--] = 0;
        if (i < 0) return false;
    }
}

bool solve_3sat_brute(const CnfFormula& f) {
    if (f.n > 20) throw CapExceeded("3-SAT brute force is limited to 20 variables");
    for (const auto& cl : f.clauses)
        for (const auto& l : cl)
            if (l.var < 0 || l.var >= f.n) throw InvalidInput("literal references unknown variable");
    for (std::uint32_t a = 0; a < (1U << f.n); ++a) {
        bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& cl) {
            return std::any_of(cl.begin(), cl.end(), [&](const Literal& l) { return ((a >> l.var) & 1U) == l.positive; });
        });
        if (ok) return true;
    }
    return false;
}

Composition compose_p3(const std::vector<MccInstance>& instances) {
    Prepared p = prepare(instances);
    const int t_kept = static_cast<int>(p.edges.size());
    const int s = pad_pow2(p);
    const int k = p.k, n = p.n, pairs = static_cast<int>(binom2(k));
    auto wsets = w_subsets(s, static_cast<int>(p.edges.size()));

    GraphBuilder b;
    Frame f = add_frame(b, k, n, s);
    const int s0 = b.add_vertices(pairs);
    const int sp0 = b.add_vertices(pairs);
    for (int i = 0; i < pairs; ++i) b.add_edge(s0 + i, sp0 + i);
    const int x_end = b.n();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        for (auto [x, y] : p.edges[i]) {
            int u1 = b.add_vertex(), u = b.add_vertex(), u2 = b.add_vertex();
            b.add_edge(u1, u);
            b.add_edge(u, u2);
            b.add_edge(u1, f.v0 + x);
            b.add_edge(u1, f.v0 + y);
            for (int w : wsets[i]) b.add_edge(u1, f.w0 + w);
            int cx = x / n, cy = y / n;
            b.add_edge(u, s0 + pair_index(std::min(cx, cy), std::max(cx, cy), k));
        }
    }
    Composition c = finish(b, x_end, fixtures::path(3), p, s, t_kept);
    const long sum_e = total_edges(p);
    c.instance.k = static_cast<int>(k + s + sum_e);
    c.formulas["modulator_size"] = 4L * s + static_cast<long>(k) * n + 2L * k + 2 * binom2(k);
    c.formulas["k_prime"] = k + s + sum_e;
    c.formulas["components"] = sum_e;
    return c;
}

Composition compose_control_pair(const Graph& h, const ControlPair& cp, const std::vector<MccInstance>& instances,
                                 const Limits& lim) {
    ProfileEngine eng(h, lim);
    std::string why = eng.check_control_pair(cp);
    if (!why.empty()) throw InvalidInput("not a control pair: " + why);
    const int meds_h = eng.meds();
    const int cost_b = eng.cost(cp.B);
    const int d = static_cast<int>(cp.B.size());

    Prepared p = prepare(instances);
    const int t_kept = static_cast<int>(p.edges.size());
    const int s = pad_pow2(p);
    const int k = p.k, n = p.n, pairs = static_cast<int>(binom2(k));
    auto wsets = w_subsets(s, static_cast<int>(p.edges.size()));

    GraphBuilder b;
    Frame f = add_frame(b, k, n, s);
    const int s0 = b.add_vertices(pairs * d);   // S_{p,q} is the block of d at pair_index * d
    const int sp0 = b.add_vertices(pairs * d);
    for (int i = 0; i < pairs * d; ++i) b.add_edge(s0 + i, sp0 + i);
    const int x_end = b.n();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        for (auto [x, y] : p.edges[i]) {
            const int off = b.add_vertices(h.n());
            for (auto [u, v] : h.edges()) b.add_edge(off + u, off + v);
            for (int c : cp.C) {
                b.add_edge(off + c, f.v0 + x);
                b.add_edge(off + c, f.v0 + y);
                for (int w : wsets[i]) b.add_edge(off + c, f.w0 + w);
            }
            int cx = x / n, cy = y / n;
            int base = s0 + pair_index(std::min(cx, cy), std::max(cx, cy), k) * d;
            for (int j = 0; j < d; ++j) b.add_edge(off + cp.B[j], base + j);
        }
    }
    Composition c = finish(b, x_end, h, p, s, t_kept);
    const long sum_e = total_edges(p);
    c.instance.k = static_cast<int>(s + k + sum_e * meds_h + binom2(k) * cost_b);
    c.formulas["modulator_size"] = static_cast<long>(k) * n + 2L * k + 4L * s + 2 * binom2(k) * d;
    c.formulas["k_prime"] = s + k + sum_e * meds_h + binom2(k) * cost_b;
    c.formulas["components"] = sum_e;
    return c;
}

Composition compose_cost(const Graph& h, const VSet& bset, const std::vector<MccInstance>& instances,
                         const Limits& lim) {
    ProfileEngine eng(h, lim);
    if (bset.empty() || !std::is_sorted(bset.begin(), bset.end()))
        throw InvalidInput("B must be a nonempty sorted vertex set");
    using Mask = ProfileEngine::Mask;
    const Mask bm = set_to_mask(bset);
    if (bm & eng.W()) throw InvalidInput("B meets the free set W(H)");
    if (!eng.strongly_beneficial_mask(bm)) throw InvalidInput("B is not strongly beneficial");
    const Mask w = eng.W(), nw = eng.N_of(w);
    if ((w | nw | eng.U()) != eng.all()) throw InvalidInput("H has a vertex outside N[W] and U");
    if ((bm & ~nw) != 0) throw InvalidInput("B is not contained in N(W)");
    const Mask need = nw & ~bm;
    const auto& cov = eng.covers(bm);
    if (std::none_of(cov.begin(), cov.end(), [&](Mask c) { return (c & need) == need; }))
        throw InvalidInput("no minimum EDS of H - B covers N(W) minus B");
    const int meds_h = eng.meds();
    const int cost_b = eng.cost(bm);
    const int d = static_cast<int>(bset.size());

    Prepared p = prepare(instances);
    const int t_kept = static_cast<int>(p.edges.size());
    int s = 1;
    auto power = [&](long base) {
        long r = 1;
        for (int i = 0; i < d; ++i) r *= base;
        return r;
    };
    while (power(s) < t_kept) s += 2;
    const long t_pad = power(s);
    if (t_pad > 4096) throw CapExceeded("composition would need " + std::to_string(t_pad) + " instance slots");
    while (static_cast<long>(p.edges.size()) < t_pad) p.edges.push_back(p.edges.back());

    const int k = p.k, n = p.n;
    const int pairs = static_cast<int>(binom2(k));
    const int big = 2 * pairs * d;  // size of each X'_{i,j} and T'_j

    GraphBuilder b;
    auto complete_between = [&](int a0, int na, int b0, int nb) {
        for (int x = 0; x < na; ++x)
            for (int y = 0; y < nb; ++y) b.add_edge(a0 + x, b0 + y);
    };
    // d-1 selection gadgets of size C(k,2): X_{i,j} then X'_{i,j}.
    std::vector<std::vector<int>> xs(d - 1, std::vector<int>(s)), xps(d - 1, std::vector<int>(s));
    for (int i = 0; i < d - 1; ++i) {
        for (int j = 0; j < s; ++j) xs[i][j] = b.add_vertices(pairs);
        for (int j = 0; j < s; ++j) xps[i][j] = b.add_vertices(big);
        for (int j = 0; j < s; ++j) {
            complete_between(xps[i][j], big, xs[i][j], pairs);
            for (int j2 = j + 1; j2 < s; ++j2) complete_between(xps[i][j], big, xps[i][j2], big);
        }
    }
    // Clique gadgets. Y_j indexes the cross-class pairs {u,v}, u<v, in lexicographic order.
    std::vector<Edge> possible;
    for (int u = 0; u < k * n; ++u)
        for (int v = u + 1; v < k * n; ++v)
            if (u / n != v / n) possible.emplace_back(u, v);
    auto y_index = [&](int u, int v) {
        return static_cast<int>(std::lower_bound(possible.begin(), possible.end(), make_edge(u, v)) - possible.begin());
    };
    std::vector<int> tj(s), yj(s);
    for (int j = 0; j < s; ++j) {
        tj[j] = b.add_vertices(k * (k - 1));  // T_{j,c} is the block of k-1 at c*(k-1)
        const int z0 = b.add_vertices(k * n * (k - 1));
        const int zp0 = b.add_vertices(k * n * (k - 1));
        yj[j] = b.add_vertices(static_cast<int>(possible.size()));
        for (int v = 0; v < k * n; ++v) {
            const int zv = z0 + v * (k - 1), zpv = zp0 + v * (k - 1);
            complete_between(zv, k - 1, zpv, k - 1);
            complete_between(tj[j] + (v / n) * (k - 1), k - 1, zpv, k - 1);
            for (int u = 0; u < k * n; ++u)
                if (u / n != v / n)
                    for (int z = 0; z < k - 1; ++z) b.add_edge(zv + z, yj[j] + y_index(u, v));
        }
    }
    // Last selection gadget of size k(k-1) with X_j = T_j.
    std::vector<int> tpj(s);
    for (int j = 0; j < s; ++j) tpj[j] = b.add_vertices(big);
    for (int j = 0; j < s; ++j) {
        complete_between(tpj[j], big, tj[j], k * (k - 1));
        for (int j2 = j + 1; j2 < s; ++j2) complete_between(tpj[j], big, tpj[j2], big);
    }
    const int x_end = b.n();
    // One H copy per edge per index vector h, instance index = rank of h with h_1 most significant.
    for (long idx = 0; idx < t_pad; ++idx) {
        std::vector<int> hv(d);
        long r = idx;
        for (int i = d - 1; i >= 0; --i) {
            hv[i] = static_cast<int>(r % s);
            r /= s;
        }
        for (auto [x, y] : p.edges[idx]) {
            const int off = b.add_vertices(h.n());
            for (auto [u, v] : h.edges()) b.add_edge(off + u, off + v);
            const int cx = x / n, cy = y / n;
            const int pq = pair_index(std::min(cx, cy), std::max(cx, cy), k);
            for (int i = 0; i < d - 1; ++i) b.add_edge(off + bset[i], xs[i][hv[i]] + pq);
            b.add_edge(off + bset[d - 1], yj[hv[d - 1]] + y_index(x, y));
        }
    }
    Composition c = finish(b, x_end, h, p, s, t_kept);
    const long sum_e = total_edges(p);
    const long kp = static_cast<long>(d) * big * (s - 1) / 2 + static_cast<long>(s) * k * n * (k - 1) +
                    sum_e * meds_h + binom2(k) * cost_b;
    c.instance.k = static_cast<int>(kp);
    c.formulas["k_prime"] = kp;
    c.formulas["modulator_size"] = static_cast<long>(d - 1) * s * pairs * (1 + 2 * d) +
                                   static_cast<long>(s) * ((k + 2L * k * n) * (k - 1) + pairs * 1L * n * n) +
                                   static_cast<long>(s) * big;
    c.formulas["components"] = sum_e;
    c.formulas["selection_part_size"] = big;
    c.formulas["clique_gadget_Y_size"] = static_cast<long>(possible.size());
    return c;
}

SatReduction sat_to_eds(const CnfFormula& f) {
    const int n = f.n, m = static_cast<int>(f.clauses.size());
    if (n < 0) throw InvalidInput("negative variable count");
    for (const auto& cl : f.clauses)
        for (const auto& l : cl)
            if (l.var < 0 || l.var >= n) throw InvalidInput("literal references unknown variable");
    SatReduction r;
    GraphBuilder b(4 * n + 8 * m);
    auto lit = [&](const Literal& l) { return 4 * l.var + (l.positive ? 0 : 1); };
    for (int x = 0; x < n; ++x) {
        int v = 4 * x, nv = v + 1, c = v + 2, d = v + 3;
        b.add_edge(v, nv);
        b.add_edge(v, c);
        b.add_edge(nv, c);
        b.add_edge(c, d);
        r.matching.push_back(make_edge(v, nv));
        r.matching.push_back(make_edge(c, d));
    }
    for (int j = 0; j < m; ++j) {
        const int base = 4 * n + 8 * j;
        const int a = base, bb = base + 3, s = base + 6, t = base + 7;
        b.add_edge(a, a + 1);
        b.add_edge(a, a + 2);
        b.add_edge(a + 1, a + 2);
        for (int i = 0; i < 3; ++i) {
            b.add_edge(a + i, bb + i);
            b.add_edge(t, bb + i);
            b.add_edge(lit(f.clauses[j][i]), a + i);
            r.matching.push_back(make_edge(a + i, bb + i));
        }
        b.add_edge(s, t);
        r.matching.push_back(make_edge(s, t));
    }
    r.graph = b.build();
    std::sort(r.matching.begin(), r.matching.end());
    r.target = n + 2 * m;
    return r;
}

VcReduction vc_to_eds(const Graph& g, int k) {
    if (k < 0 || k > g.n()) throw InvalidInput("vc_to_eds needs 0 <= k <= n");
    GraphBuilder b(g.n() + 2 * k);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int i = 0; i < k; ++i) {
        const int u = g.n() + i;
        b.add_edge(u, g.n() + k + i);
        for (int v = 0; v < g.n(); ++v) b.add_edge(u, v);
    }
    return {b.build(), k};
}

ModInstance gen_random_instance(const std::vector<Graph>& family, int x_size, int n_components, double density,
                                std::uint64_t seed, const Limits& lim) {
    if (family.empty()) throw InvalidInput("empty family");
    if (!(density >= 0.0 && density <= 1.0)) throw InvalidInput("density must lie in [0, 1]");
    if (x_size < 0 || n_components < 0) throw InvalidInput("sizes must be nonnegative");
    for (const Graph& h : family)
        if (h.n() > lim.max_component_size)
            throw CapExceeded("family member with " + std::to_string(h.n()) + " vertices exceeds the cap");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution internal(0.5), wire(density);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);

    GraphBuilder b(x_size);
    for (int u = 0; u < x_size; ++u)
        for (int v = u + 1; v < x_size; ++v)
            if (internal(rng)) b.add_edge(u, v);
    std::vector<int> meds_of(family.size(), -1);
    long base = 0;
    for (int c = 0; c < n_components; ++c) {
        const std::size_t idx = pick(rng);
        const Graph& h = family[idx];
        if (meds_of[idx] < 0) meds_of[idx] = meds(h, lim).size;
        base += meds_of[idx];
        const int off = b.add_vertices(h.n());
        for (auto [u, v] : h.edges()) b.add_edge(off + u, off + v);
        for (int x = 0; x < x_size; ++x)
            for (int v = 0; v < h.n(); ++v)
                if (wire(rng)) b.add_edge(x, off + v);
    }
    ModInstance inst;
    inst.graph = b.build();
    for (int x = 0; x < x_size; ++x) inst.modulator.push_back(x);
    inst.family = family;
    inst.k = static_cast<int>(base + std::uniform_int_distribution<int>(0, x_size)(rng));
    return inst;
}

}  // namespace edskit
