#pragma once

// Brute-force reference implementations. Nothing here calls into the solver,
// profile, isomorphism or matching code of the library; only the Graph
// container is shared. Everything is exponential and meant for tiny inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "edskit/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;
using edskit::Edge;
using edskit::Graph;

struct Host {
    int n = 0;
    std::vector<Mask> adj;
    std::vector<Edge> edges;
    Mask all = 0;
};

Host host(const Graph& g);
Mask bit(int v);
int popcount(Mask m);

// Edge subsets of the alive subgraph, tried by increasing size.
int meds(const Host& h, Mask alive);
inline int meds(const Host& h) { return meds(h, h.all); }
// Every minimum EDS of h[alive] as an edge list.
std::vector<std::vector<Edge>> min_eds(const Host& h, Mask alive);
std::vector<Mask> min_eds_vertex_sets(const Host& h, Mask alive);
bool is_eds(const Host& h, const std::vector<Edge>& f);

int max_matching_size(const Host& h);
int min_vertex_cover(const Host& h);

struct Profile {
    int meds = 0;
    Mask Q = 0, W = 0, U = 0;
    std::vector<std::pair<Mask, int>> strongly_beneficial;  // sorted by mask
    std::string item;  // "1a".."1d", "2", "3"
};

class Brute {
public:
    explicit Brute(const Graph& g);
    const Host& host() const { return h_; }
    int meds_without(Mask y) const { return memo_[y]; }
    int cost(Mask y) const { return popcount(y) + memo_[y] - memo_[0]; }
    Mask Q() const { return q_; }
    Mask W() const { return w_; }
    Mask U() const { return u_; }
    bool free_literal(Mask y) const;
    bool beneficial(Mask b) const;
    // Cover form: cost(B) < sum cost(B_i) for every cover of B by proper subsets.
    bool strongly_beneficial(Mask b) const;
    // Partition form, for comparing the two.
    bool partition_condition(Mask b) const;
    const std::vector<Mask>& covers(Mask y) const;  // V(F) over min EDS of H - y
    Mask N(Mask s) const;
    Profile profile() const;
    // Definition of a control pair, each condition checked directly.
    bool control_pair(Mask c, Mask b) const;

private:
    Host h_;
    std::vector<int> memo_;
    mutable std::vector<std::vector<Mask>> cover_memo_;
    mutable std::vector<char> cover_done_;
    Mask q_ = 0, w_ = 0, u_ = 0;
};

// Isomorphism classes by minimum edge bitmask over all n! relabelings.
// n <= 7.
std::vector<Graph> all_graphs(int n, bool connected_only);

bool mcc_brute(const Graph& g, int k, int n);

struct Lit {
    int var;
    bool pos;
};
bool sat_brute(int n, const std::vector<std::vector<Lit>>& clauses);

}  // namespace oracle
