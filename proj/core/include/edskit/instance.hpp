#pragma once

#include <vector>

#include "edskit/graph.hpp"
#include "edskit/limits.hpp"

namespace edskit {

// (G, k, X). An empty family means "unchecked". k may drop below zero after
// budget-reducing rules; such an instance is a no-instance.
struct ModInstance {
    Graph graph;
    int k = 0;
    VSet modulator;
    std::vector<Graph> family;
};

struct FamilyAssignment {
    std::vector<VSet> components;  // components of G - X in original ids
    std::vector<int> member;       // family index per component
};

// Throws InvalidInput naming the first component that matches no member.
FamilyAssignment validate_instance(const ModInstance& inst, const Limits& lim = {});

}  // namespace edskit
