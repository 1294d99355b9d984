#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

Mask bit(int v) { return Mask{1} << v; }
int popcount(Mask m) { return __builtin_popcountll(m); }

Host host(const Graph& g) {
    Host h;
    h.n = g.n();
    h.adj.assign(h.n, 0);
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (g.adjacent(u, v)) {
                h.adj[u] |= bit(v);
                h.adj[v] |= bit(u);
                h.edges.emplace_back(u, v);
            }
    h.all = h.n == 64 ? ~Mask{0} : bit(h.n) - 1;
    return h;
}

namespace {

std::vector<Edge> alive_edges(const Host& h, Mask alive) {
    std::vector<Edge> out;
    for (auto e : h.edges)
        if ((alive & bit(e.first)) && (alive & bit(e.second))) out.push_back(e);
    return out;
}

bool covers_all(const std::vector<Edge>& es, Mask vf) {
    for (auto [u, v] : es)
        if (!(vf & bit(u)) && !(vf & bit(v))) return false;
    return true;
}

// Calls f(vertex mask, chosen) for each size-k subset of es that dominates es.
template <class F>
void each_eds(const std::vector<Edge>& es, int k, F&& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    const int m = static_cast<int>(es.size());
    if (k > m) return;
    while (true) {
        Mask vf = 0;
        for (int i : idx) vf |= bit(es[i].first) | bit(es[i].second);
        if (covers_all(es, vf)) f(vf, idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

int meds(const Host& h, Mask alive) {
    auto es = alive_edges(h, alive);
    for (int k = 0;; ++k) {
        bool found = false;
        each_eds(es, k, [&](Mask, const std::vector<int>&) { found = true; });
        if (found) return k;
    }
}

std::vector<std::vector<Edge>> min_eds(const Host& h, Mask alive) {
    auto es = alive_edges(h, alive);
    std::vector<std::vector<Edge>> out;
    for (int k = 0; out.empty(); ++k)
        each_eds(es, k, [&](Mask, const std::vector<int>& idx) {
            std::vector<Edge> f;
            for (int i : idx) f.push_back(es[i]);
            out.push_back(f);
        });
    return out;
}

std::vector<Mask> min_eds_vertex_sets(const Host& h, Mask alive) {
    std::set<Mask> s;
    for (const auto& f : min_eds(h, alive)) {
        Mask vf = 0;
        for (auto [u, v] : f) vf |= bit(u) | bit(v);
        s.insert(vf);
    }
    return {s.begin(), s.end()};
}

bool is_eds(const Host& h, const std::vector<Edge>& f) {
    Mask vf = 0;
    for (auto [u, v] : f) {
        if (!(h.adj[u] & bit(v))) return false;
        vf |= bit(u) | bit(v);
    }
    return covers_all(h.edges, vf);
}

int max_matching_size(const Host& h) {
    int best = 0;
    const int m = static_cast<int>(h.edges.size());
    std::vector<int> idx;
    auto rec = [&](auto&& self, int i, Mask used, int size) -> void {
        best = std::max(best, size);
        if (size + (h.n - popcount(used)) / 2 <= best) return;
        for (int j = i; j < m; ++j) {
            auto [u, v] = h.edges[j];
            if ((used & bit(u)) || (used & bit(v))) continue;
            self(self, j + 1, used | bit(u) | bit(v), size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

int min_vertex_cover(const Host& h) {
    int best = h.n;
    for (Mask s = 0; s <= h.all; ++s)
        if (popcount(s) < best && covers_all(h.edges, s)) best = popcount(s);
    return best;
}

Brute::Brute(const Graph& g) : h_(oracle::host(g)) {
    memo_.assign(std::size_t{1} << h_.n, 0);
    for (Mask y = 0; y <= h_.all; ++y) memo_[y] = meds(h_, h_.all & ~y);
    cover_memo_.resize(memo_.size());
    cover_done_.assign(memo_.size(), 0);
    for (int v = 0; v < h_.n; ++v)
        if (memo_[bit(v)] + 1 == memo_[0]) q_ |= bit(v);
    Mask touched = 0;
    for (Mask vf : covers(0)) touched |= vf;
    u_ = h_.all & ~touched;
    // Union of every free subset of Q.
    for (Mask y = q_;; y = (y - 1) & q_) {
        if (free_literal(y)) w_ |= y;
        if (y == 0) break;
    }
}

const std::vector<Mask>& Brute::covers(Mask y) const {
    if (!cover_done_[y]) {
        cover_memo_[y] = min_eds_vertex_sets(h_, h_.all & ~y);
        cover_done_[y] = 1;
    }
    return cover_memo_[y];
}

bool Brute::free_literal(Mask y) const {
    if (y & ~q_) return false;
    for (int v = 0; v < h_.n; ++v) {
        if (!(y & bit(v))) continue;
        if (memo_[bit(v)] != memo_[0] - 1) return false;
        for (Mask vf : covers(0)) {
            bool ok = false;
            for (Mask vf2 : covers(bit(v)))
                if (((vf & ~y) & ~vf2) == 0) ok = true;
            if (!ok) return false;
        }
    }
    return true;
}

Mask Brute::N(Mask s) const {
    Mask out = 0;
    for (int v = 0; v < h_.n; ++v)
        if (s & bit(v)) out |= h_.adj[v];
    return out & ~s;
}

bool Brute::beneficial(Mask b) const {
    if (b == 0 || (b & w_)) return false;
    for (Mask t = (b - 1) & b;; t = (t - 1) & b) {
        if (memo_[b] >= memo_[t]) return false;
        if (t == 0) break;
    }
    return true;
}

bool Brute::strongly_beneficial(Mask b) const {
    if (!beneficial(b)) return false;
    // best[T] = cheapest way to cover T with proper subsets of b (overlaps allowed).
    std::map<Mask, int> best;
    std::vector<Mask> subs;
    for (Mask t = (b - 1) & b; t; t = (t - 1) & b) subs.push_back(t);
    std::vector<Mask> order;
    for (Mask t = b;; t = (t - 1) & b) {
        order.push_back(t);
        if (t == 0) break;
    }
    std::reverse(order.begin(), order.end());  // increasing
    best[0] = 0;
    for (Mask t : order) {
        if (t == 0) continue;
        int v = 1 << 20;
        for (Mask s : subs)
            if (s & t) v = std::min(v, cost(s) + best[t & ~s]);
        best[t] = v;
    }
    return cost(b) < best[b];
}

bool Brute::partition_condition(Mask b) const {
    int target = cost(b);
    bool ok = true;
    // Enumerate set partitions of b with at least two blocks.
    auto rec = [&](auto&& self, Mask rest, int sum, int blocks) -> void {
        if (!ok) return;
        if (rest == 0) {
            if (blocks >= 2 && sum <= target) ok = false;
            return;
        }
        Mask low = rest & (~rest + 1);
        Mask others = rest & ~low;
        for (Mask s = others;; s = (s - 1) & others) {
            Mask part = s | low;
            self(self, rest & ~part, sum + cost(part), blocks + 1);
            if (s == 0) break;
        }
    };
    rec(rec, b, 0, 0);
    return ok;
}

Profile Brute::profile() const {
    Profile p;
    p.meds = memo_[0];
    p.Q = q_;
    p.W = w_;
    p.U = u_;
    for (Mask b = 1; b <= h_.all; ++b)
        if (strongly_beneficial(b)) p.strongly_beneficial.emplace_back(b, cost(b));
    Mask nw = N(w_);
    if (q_ != w_) {
        p.item = "1a";
        return p;
    }
    for (auto [b, c] : p.strongly_beneficial)
        if (b & u_) {
            p.item = "1b";
            return p;
        }
    if (h_.all & ~(nw | w_ | u_)) {
        p.item = "1c";
        return p;
    }
    for (auto [b, c] : p.strongly_beneficial) {
        if (b & ~nw) continue;
        Mask need = nw & ~b;
        bool some = false;
        for (Mask vf : covers(b))
            if ((need & ~vf) == 0) some = true;
        if (!some) {
            p.item = "1d";
            return p;
        }
    }
    p.item = p.strongly_beneficial.empty() ? "3" : "2";
    return p;
}

bool Brute::control_pair(Mask c, Mask b) const {
    if ((c & q_) || (c & b)) return false;
    if (!strongly_beneficial(b)) return false;
    // No c is extendable in H - B.
    for (int v = 0; v < h_.n; ++v)
        if ((c & bit(v)) && memo_[b | bit(v)] + 1 == memo_[b]) return false;
    bool in_h = false;
    for (Mask vf : covers(0))
        if ((c & ~vf) == 0) in_h = true;
    if (!in_h) return false;
    for (Mask vf : covers(b))
        if ((c & ~vf) == 0) return false;
    return true;
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::map<std::pair<int, int>, int> slot_of;
    for (int i = 0; i < static_cast<int>(slots.size()); ++i) slot_of[slots[i]] = i;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    // perm_slot[k][i]: where slot i goes under permutation k.
    std::vector<std::vector<int>> perm_slot(perms.size(), std::vector<int>(slots.size()));
    for (std::size_t k = 0; k < perms.size(); ++k)
        for (std::size_t i = 0; i < slots.size(); ++i) {
            int a = perms[k][slots[i].first], b = perms[k][slots[i].second];
            perm_slot[k][i] = slot_of[{std::min(a, b), std::max(a, b)}];
        }
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    const std::uint32_t total = std::uint32_t{1} << slots.size();
    for (std::uint32_t em = 0; em < total; ++em) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (em >> i & 1U) es.push_back(slots[i]);
        if (connected_only) {
            if (n == 0) continue;
            Mask reach = 1, prev = 0;
            while (reach != prev) {
                prev = reach;
                for (auto [u, v] : es) {
                    if (reach & bit(u)) reach |= bit(v);
                    if (reach & bit(v)) reach |= bit(u);
                }
            }
            if (reach != bit(n) - 1) continue;
        }
        std::uint32_t canon = ~std::uint32_t{0};
        for (const auto& ps : perm_slot) {
            std::uint32_t img = 0;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (em >> i & 1U) img |= std::uint32_t{1} << ps[i];
            canon = std::min(canon, img);
        }
        if (seen.insert(canon).second) out.push_back(Graph::from_edges(n, es));
    }
    return out;
}

bool mcc_brute(const Graph& g, int k, int n) {
    std::vector<int> pick(k, 0);
    while (true) {
        bool clique = true;
        for (int a = 0; a < k && clique; ++a)
            for (int b = a + 1; b < k && clique; ++b)
                if (!g.adjacent(a * n + pick[a], b * n + pick[b])) clique = false;
        if (clique) return true;
        int i = 0;
        while (i < k && ++pick[i] == n) pick[i++] = 0;
        if (i == k) return false;
    }
}

bool sat_brute(int n, const std::vector<std::vector<Lit>>& clauses) {
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
        bool all = true;
        for (const auto& c : clauses) {
            bool any = false;
            for (auto l : c)
                if (((a >> l.var) & 1U) == static_cast<std::uint32_t>(l.pos)) any = true;
            if (!any) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

}  // namespace oracle
