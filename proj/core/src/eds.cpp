#include "edskit/eds.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "edskit/errors.hpp"

namespace edskit {
namespace {

using Mask = std::uint64_t;

inline int popc(Mask m) { return __builtin_popcountll(m); }
inline int lowbit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int v) { return Mask{1} << v; }

// Edmonds' blossom algorithm on an adjacency-list graph.
class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), match_(n_, -1), p_(n_), base_(n_), used_(n_), bl_(n_) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1)
                for (int u : adj_[v])
                    if (match_[u] == -1) {
                        match_[u] = v;
                        match_[v] = u;
                        break;
                    }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u = find_path(v); u != -1;) {
                int pv = p_[u], ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = p_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = p_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            bl_[base_[v]] = bl_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(bl_.begin(), bl_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (bl_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, bl_;
};

// Maximum matching of g[s] as partner array over g's ids (-1 = unmatched).
std::vector<int> matching_in_mask(const Graph& g, Mask s) {
    std::vector<int> ids = mask_to_set(s), local(g.n(), -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) local[ids[i]] = i;
    std::vector<std::vector<int>> adj(ids.size());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        for (Mask m = g.nbr_mask(ids[i]) & s; m; m &= m - 1) adj[i].push_back(local[lowbit(m)]);
    std::vector<int> mate = Blossom(adj).solve();
    std::vector<int> out(g.n(), -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        if (mate[i] != -1) out[ids[i]] = ids[mate[i]];
    return out;
}

int nu_in_mask(const Graph& g, Mask s) {
    if (popc(s) < 2) return 0;
    auto mate = matching_in_mask(g, s);
    int c = 0;
    for (int v : mask_to_set(s))
        if (mate[v] != -1) ++c;
    return c / 2;
}

int greedy_matching(const Graph& g, Mask s) {
    int c = 0;
    for (Mask rest = s; rest;) {
        int v = lowbit(rest);
        rest &= ~bit(v);
        Mask nb = g.nbr_mask(v) & rest;
        if (nb) {
            rest &= ~bit(lowbit(nb));
            ++c;
        }
    }
    return c;
}

// MEDS = min over vertex covers S of |S| - nu(G[S]); that quantity only grows
// when S grows, so branching on vertices in/out with forced neighbours is
// enough.
class VertexBranch {
public:
    VertexBranch(const Graph& g, Mask alive) : g_(g), alive_(alive) {}

    int run() {
        // A maximal matching is an EDS.
        best_ = 0;
        Mask cover = 0;
        for (Mask rest = alive_; rest;) {
            int v = lowbit(rest);
            rest &= ~bit(v);
            Mask nb = g_.nbr_mask(v) & rest;
            if (nb) {
                int u = lowbit(nb);
                rest &= ~bit(u);
                cover |= bit(v) | bit(u);
                ++best_;
            }
        }
        best_set_ = cover;
        go(0, 0);
        return best_;
    }

    Mask best_set() const { return best_set_; }

private:
    void go(Mask in, Mask out) {
        Mask und = alive_ & ~in & ~out;
        int lb_half = (popc(in) + greedy_matching(g_, und) + 1) / 2;
        if (lb_half >= best_) return;
        int cost_in = popc(in) - nu_in_mask(g_, in);
        if (cost_in >= best_) return;
        int pick = -1, pick_deg = 0;
        for (Mask m = und; m; m &= m - 1) {
            int v = lowbit(m);
            int d = popc(g_.nbr_mask(v) & und);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick == -1) {
            best_ = cost_in;
            best_set_ = in;
            return;
        }
        go(in | (g_.nbr_mask(pick) & und), out | bit(pick));
        go(in | bit(pick), out);
    }

    const Graph& g_;
    Mask alive_;
    int best_ = 0;
    Mask best_set_ = 0;
};

// Witness from an optimal vertex cover: max matching inside S plus one edge
// per unmatched vertex of S.
EdgeSet witness_from_cover(const Graph& g, Mask s) {
    EdgeSet f;
    auto mate = matching_in_mask(g, s);
    for (int v : mask_to_set(s)) {
        if (mate[v] != -1) {
            if (v < mate[v]) f.push_back({v, mate[v]});
        } else if (g.degree(v) > 0) {
            f.push_back(make_edge(v, g.neighbors(v).front()));
        }
    }
    std::sort(f.begin(), f.end());
    return f;
}

void require_masks(const Graph& g) {
    if (g.n() > 64) throw CapExceeded("mask-based routine needs at most 64 vertices");
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

// DFS over the sorted edge list of g[alive], include-first.
class MinEnum {
public:
    MinEnum(const Graph& g, Mask alive, int target) : g_(g), target_(target) {
        for (auto e : g.edges())
            if ((alive >> e.first & 1) && (alive >> e.second & 1)) edges_.push_back(e);
        const int m = static_cast<int>(edges_.size());
        ends_.resize(m);
        for (int i = 0; i < m; ++i) ends_[i] = bit(edges_[i].first) | bit(edges_[i].second);
        // due[i]: edges whose last possible dominator has index i
        due_.assign(m, {});
        for (int j = 0; j < m; ++j) {
            int last = j;
            for (int i = 0; i < m; ++i)
                if (ends_[i] & ends_[j]) last = std::max(last, i);
            due_[last].push_back(j);
        }
    }

    std::vector<EdgeSet> run() {
        if (edges_.empty()) {
            if (target_ == 0) out_.push_back({});
            return out_;
        }
        go(0, 0);
        return out_;
    }

private:
    bool all_dominated(Mask cov) const {
        for (Mask e : ends_)
            if (!(e & cov)) return false;
        return true;
    }

    int undominated_matching(Mask cov) const {
        Mask used = 0;
        int c = 0;
        for (Mask e : ends_)
            if (!(e & cov) && !(e & used)) {
                used |= e;
                ++c;
            }
        return c;
    }

    void go(int i, Mask cov) {
        int have = static_cast<int>(chosen_.size());
        if (have == target_) {
            if (all_dominated(cov)) {
                EdgeSet f;
                for (int idx : chosen_) f.push_back(edges_[idx]);
                out_.push_back(std::move(f));
            }
            return;
        }
        if (i == static_cast<int>(edges_.size())) return;
        if (have + (undominated_matching(cov) + 1) / 2 > target_) return;
        chosen_.push_back(i);
        if (due_ok(i, cov | ends_[i])) go(i + 1, cov | ends_[i]);
        chosen_.pop_back();
        if (due_ok(i, cov)) go(i + 1, cov);
    }

    bool due_ok(int i, Mask cov) const {
        for (int j : due_[i])
            if (!(ends_[j] & cov)) return false;
        return true;
    }

    const Graph& g_;
    int target_;
    std::vector<Edge> edges_;
    std::vector<Mask> ends_;
    std::vector<std::vector<int>> due_;
    std::vector<int> chosen_;
    std::vector<EdgeSet> out_;
};

}  // namespace

bool is_eds(const Graph& g, const EdgeSet& f) {
    std::vector<char> cov(g.n(), 0);
    for (auto [u, v] : f) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v))
            throw InvalidInput("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
        cov[u] = cov[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!cov[u] && !cov[v]) return false;
    return true;
}

int meds_in_mask(const Graph& g, std::uint64_t alive) {
    require_masks(g);
    return VertexBranch(g, alive).run();
}

MedsWitness meds(const Graph& g, const Limits& lim) {
    MedsWitness out;
    for (const auto& c : connected_components(g)) {
        if (c.local.m() == 0) continue;
        if (c.local.n() > lim.exact_cap || c.local.n() > 64)
            throw CapExceeded("component with " + std::to_string(c.local.n()) +
                              " vertices exceeds exact solver cap " + std::to_string(lim.exact_cap));
        VertexBranch vb(c.local, full_mask(c.local.n()));
        out.size += vb.run();
        for (auto [u, v] : witness_from_cover(c.local, vb.best_set()))
            out.witness.push_back(make_edge(c.back[u], c.back[v]));
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

std::vector<EdgeSet> enumerate_min_eds(const Graph& g, const Limits& lim) {
    if (g.n() > lim.enum_cap || g.n() > 64)
        throw CapExceeded("enumeration limited to " + std::to_string(lim.enum_cap) + " vertices");
    Mask all = full_mask(g.n());
    return MinEnum(g, all, meds_in_mask(g, all)).run();
}

std::vector<std::uint64_t> min_eds_covers(const Graph& g, std::uint64_t alive) {
    require_masks(g);
    std::vector<std::uint64_t> out;
    for (const auto& f : MinEnum(g, alive, meds_in_mask(g, alive)).run()) {
        Mask c = 0;
        for (auto [u, v] : f) c |= bit(u) | bit(v);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Decision decide_eds(const Graph& g, int k, const Limits& lim) {
    if (g.n() > lim.oracle_cap)
        throw CapExceeded("decision oracle limited to " + std::to_string(lim.oracle_cap) + " vertices, got " +
                          std::to_string(g.n()));
    Limits inner = lim;
    inner.exact_cap = std::max(lim.exact_cap, lim.oracle_cap);
    if (k < 0) return {};
    MedsWitness w = meds(g, inner);
    if (w.size > k) return {};
    return {true, w.witness};
}

EdgeSet maximum_matching(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    auto mate = Blossom(adj).solve();
    EdgeSet out;
    for (int v = 0; v < g.n(); ++v)
        if (mate[v] > v) out.push_back({v, mate[v]});
    return out;
}

}  // namespace edskit
