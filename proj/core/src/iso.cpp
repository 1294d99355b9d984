#include "edskit/iso.hpp"

#include <algorithm>
#include <map>

#include "edskit/errors.hpp"

namespace edskit {
namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement. Cells are split by neighbour counts into every
// current cell; order of the new cells depends only on invariant data.
void refine(const Graph& g, Cells& cells) {
    const int n = g.n();
    std::vector<int> cell_of(n);
    for (bool changed = true; changed;) {
        changed = false;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (int v : cells[c]) cell_of[v] = c;
        Cells next;
        next.reserve(n);
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (int u : g.neighbors(v)) ++sig[cell_of[u]];
                groups[std::move(sig)].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, members] : groups) next.push_back(std::move(members));
        }
        cells = std::move(next);
    }
}

bool twins(const Graph& g, int u, int v) {
    std::vector<int> a, b;
    for (int x : g.neighbors(u))
        if (x != v) a.push_back(x);
    for (int x : g.neighbors(v))
        if (x != u) b.push_back(x);
    return a == b;
}

struct Search {
    const Graph& g;
    std::string best_code;
    std::vector<int> best_order;

    void run(const Cells& cells) {
        auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (it == cells.end()) {
            std::vector<int> order;
            for (const auto& c : cells) order.push_back(c[0]);
            std::string code = to_graph6(relabel(g, order));
            if (best_order.empty() || code < best_code) {
                best_code = std::move(code);
                best_order = std::move(order);
            }
            return;
        }
        const auto idx = static_cast<std::size_t>(it - cells.begin());
        std::vector<int> tried;
        for (int v : *it) {
            // Swapping twins is an automorphism fixing the partition.
            bool dup = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); });
            if (dup) continue;
            tried.push_back(v);
            Cells next(cells.begin(), cells.begin() + idx);
            next.push_back({v});
            std::vector<int> rest;
            for (int u : *it)
                if (u != v) rest.push_back(u);
            next.push_back(std::move(rest));
            next.insert(next.end(), cells.begin() + idx + 1, cells.end());
            refine(g, next);
            run(next);
        }
    }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
    if (g.n() == 0) return {};
    Cells cells(1);
    for (int v = 0; v < g.n(); ++v) cells[0].push_back(v);
    refine(g, cells);
    Search s{g, {}, {}};
    s.run(cells);
    return s.best_order;
}

std::string canonical_key(const Graph& g) { return to_graph6(relabel(g, canonical_order(g))); }

Graph relabel(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.push_back(make_edge(pos[u], pos[v]));
    return Graph::from_edges(g.n(), e);
}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63)));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = bits = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty graph6 string");
    std::size_t p = 0;
    int n;
    if (s[0] != '~') {
        n = s[0] - 63;
        p = 1;
    } else {
        if (s.size() < 4) throw InvalidInput("truncated graph6 header");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        p = 4;
    }
    if (n < 0) throw InvalidInput("bad graph6 header");
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != p + need) throw InvalidInput("graph6 length mismatch");
    std::vector<Edge> e;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[p + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw InvalidInput("bad graph6 character");
            if ((byte >> (5 - bit % 6)) & 1) e.emplace_back(i, j);
        }
    return Graph::from_edges(n, e);
}

bool is_isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.n() > cap || b.n() > cap)
        throw CapExceeded("isomorphism test limited to " + std::to_string(cap) + " vertices");
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace edskit
