#include "edskit/graph.hpp"

#include <algorithm>
#include <string>

#include "edskit/errors.hpp"

namespace edskit {

Graph::Graph(int n) : adj_(n) { finalize(); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

bool Graph::adjacent(int u, int v) const {
    if (!mask_.empty()) return (mask_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::finalize() {
    m_ = 0;
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        m_ += static_cast<int>(a.size());
    }
    m_ /= 2;
    mask_.clear();
    if (n() <= 64) {
        mask_.assign(n(), 0);
        for (int u = 0; u < n(); ++u)
            for (int v : adj_[u]) mask_[u] |= std::uint64_t{1} << v;
    }
}

GraphBuilder::GraphBuilder(int n) : adj_(n) {}

int GraphBuilder::add_vertex() {
    adj_.emplace_back();
    return n() - 1;
}

int GraphBuilder::add_vertices(int count) {
    int first = n();
    adj_.resize(adj_.size() + count);
    return first;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw InvalidInput("vertex id out of range in edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw InvalidInput("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool GraphBuilder::has_edge(int u, int v) const {
    const auto& a = adj_[u].size() < adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() < adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

Graph GraphBuilder::build() const {
    Graph g;
    g.adj_ = adj_;
    g.finalize();
    return g;
}

Induced induced_subgraph(const Graph& g, const VSet& keep) {
    Induced r;
    r.to_new.assign(g.n(), -1);
    for (int v : keep) {
        if (v < 0 || v >= g.n()) throw InvalidInput("unknown vertex id " + std::to_string(v));
        if (r.to_new[v] != -1) continue;
        r.to_new[v] = static_cast<int>(r.to_old.size());
        r.to_old.push_back(v);
    }
    GraphBuilder b(static_cast<int>(r.to_old.size()));
    for (int nv = 0; nv < b.n(); ++nv) {
        int v = r.to_old[nv];
        for (int u : g.neighbors(v)) {
            int nu = r.to_new[u];
            if (nu > nv) b.add_edge(nv, nu);
        }
    }
    r.graph = b.build();
    return r;
}

Induced delete_vertices(const Graph& g, const VSet& s) {
    std::vector<char> drop(g.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw InvalidInput("unknown vertex id " + std::to_string(v));
        drop[v] = 1;
    }
    VSet keep;
    for (int v = 0; v < g.n(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<ComponentView> connected_components(const Graph& g) {
    std::vector<ComponentView> out;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VSet comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        Induced ind = induced_subgraph(g, comp);
        out.push_back({comp, std::move(ind.graph), std::move(ind.to_old)});
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() > 0 && connected_components(g).size() == 1; }

Graph disjoint_union(const std::vector<Graph>& parts) {
    GraphBuilder b;
    for (const Graph& p : parts) {
        int off = b.add_vertices(p.n());
        for (auto [u, v] : p.edges()) b.add_edge(off + u, off + v);
    }
    return b.build();
}

VSet mask_to_set(std::uint64_t mask) {
    VSet s;
    while (mask) {
        s.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return s;
}

std::uint64_t set_to_mask(const VSet& s) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace edskit
