#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace edskit {

using Edge = std::pair<int, int>;  // always first < second
using VSet = std::vector<int>;     // sorted vertex ids

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws InvalidInput on self-loops, duplicates or out-of-range ids.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;  // lexicographically sorted

    // Only valid when n() <= 64.
    bool has_masks() const { return !mask_.empty() || adj_.empty(); }
    std::uint64_t nbr_mask(int v) const { return mask_[v]; }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    friend class GraphBuilder;
    void finalize();

    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
    int m_ = 0;
};

// Mutable construction helper; build() yields the immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0);
    int add_vertex();
    int add_vertices(int count);  // returns first new id
    void add_edge(int u, int v);  // throws on loop / duplicate / range
    bool has_edge(int u, int v) const;
    int n() const { return static_cast<int>(adj_.size()); }
    Graph build() const;

private:
    std::vector<std::vector<int>> adj_;
};

struct Induced {
    Graph graph;
    std::vector<int> to_old;  // new id -> old id
    std::vector<int> to_new;  // old id -> new id or -1
};

Induced delete_vertices(const Graph& g, const VSet& s);
Induced induced_subgraph(const Graph& g, const VSet& keep);

struct ComponentView {
    VSet vertices;             // original ids, sorted
    Graph local;               // relabeled 0..|C|-1 in order of vertices
    std::vector<int> back;     // local -> original
};

// Ordered by smallest original id.
std::vector<ComponentView> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph disjoint_union(const std::vector<Graph>& parts);

VSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const VSet& s);

}  // namespace edskit
