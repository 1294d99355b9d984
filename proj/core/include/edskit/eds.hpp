#pragma once

#include <cstdint>
#include <vector>

#include "edskit/graph.hpp"
#include "edskit/limits.hpp"

namespace edskit {

using EdgeSet = std::vector<Edge>;  // sorted

struct MedsWitness {
    int size = 0;
    EdgeSet witness;
};

// Throws InvalidInput if F contains a non-edge.
bool is_eds(const Graph& g, const EdgeSet& f);

// Solved per connected component; a component above lim.exact_cap throws
// CapExceeded.
MedsWitness meds(const Graph& g, const Limits& lim = {});

// MEDS of the subgraph induced by `alive`. Requires g.n() <= 64.
int meds_in_mask(const Graph& g, std::uint64_t alive);

// Every minimum EDS, lexicographic order. n above lim.enum_cap throws.
std::vector<EdgeSet> enumerate_min_eds(const Graph& g, const Limits& lim = {});

// Distinct vertex sets V(F) over all minimum EDS F of g[alive], as masks in
// g's ids, sorted ascending. Requires g.n() <= 64.
std::vector<std::uint64_t> min_eds_covers(const Graph& g, std::uint64_t alive);

struct Decision {
    bool yes = false;
    EdgeSet witness;  // filled when yes
};

// Whole-instance oracle; n above lim.oracle_cap throws CapExceeded.
Decision decide_eds(const Graph& g, int k, const Limits& lim = {});

// Maximum matching in a general graph (Edmonds).
EdgeSet maximum_matching(const Graph& g);

}  // namespace edskit
