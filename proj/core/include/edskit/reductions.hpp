#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edskit/eds.hpp"
#include "edskit/instance.hpp"
#include "edskit/profile.hpp"

namespace edskit {

// k colour classes of n vertices each; class c is the id block [c*n, (c+1)*n).
struct MccInstance {
    Graph graph;
    int k = 0;
    int n = 0;

    int color(int v) const { return v / n; }
};

void validate_mcc(const MccInstance& inst);
bool solve_mcc_brute(const MccInstance& inst);

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;
};

struct CnfFormula {
    int n = 0;
    std::vector<std::array<Literal, 3>> clauses;
};

bool solve_3sat_brute(const CnfFormula& f);

// Output of a cross-composition. `formulas` holds the closed-form sizes the
// construction promises (modulator size, budget, component count).
struct Composition {
    ModInstance instance;
    int t_input = 0;     // instances received
    int t_kept = 0;      // after dropping trivial no-instances
    int t_padded = 0;    // after duplicating the last kept instance
    int s = 0;
    std::vector<int> dropped;  // input indices with an empty colour-pair edge set
    std::map<std::string, long> formulas;
};

// Edges inside one colour class are ignored by every composition.
Composition compose_p3(const std::vector<MccInstance>& instances);
Composition compose_control_pair(const Graph& h, const ControlPair& cp, const std::vector<MccInstance>& instances,
                                 const Limits& lim = {});
Composition compose_cost(const Graph& h, const VSet& b, const std::vector<MccInstance>& instances,
                         const Limits& lim = {});

struct SatReduction {
    Graph graph;
    EdgeSet matching;  // perfect matching of size 2n+4m
    int target = 0;    // n+2m
};

// Per variable: x, x̄, c, d. Per clause: a1, a2, a3, b1, b2, b3, s, t.
SatReduction sat_to_eds(const CnfFormula& f);

struct VcReduction {
    Graph graph;  // the input copy, then u_1..u_k, then u'_1..u'_k
    int k = 0;
};

VcReduction vc_to_eds(const Graph& g, int k);

ModInstance gen_random_instance(const std::vector<Graph>& family, int x_size, int n_components, double density,
                                std::uint64_t seed, const Limits& lim = {});

}  // namespace edskit
