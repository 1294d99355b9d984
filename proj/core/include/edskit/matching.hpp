#pragma once

#include <utility>
#include <vector>

namespace edskit {

// Left side R = 0..left-1, right side S = 0..right-1.
struct Bipartite {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;  // (r, s)
};

struct BipartiteMatching {
    std::vector<int> mate_left;   // r -> s or -1
    std::vector<int> mate_right;  // s -> r or -1
    int size = 0;
};

// Hopcroft-Karp. Throws InvalidInput on bad indices or duplicate edges.
BipartiteMatching max_matching(const Bipartite& b);

struct SaturationResult {
    bool saturated = false;
    std::vector<int> deficient;   // Y, sorted; empty when saturated
    BipartiteMatching matching;   // saturates R minus Y, avoids N[Y]
};

// Either a matching saturating R, or the set Y of left vertices reachable by
// alternating paths from unmatched left vertices. |N(Y)| < |Y| and the
// returned matching restricted to R minus Y never touches N(Y).
SaturationResult saturate_or_deficiency(const Bipartite& b);

// Right-side neighbourhood of a set of left vertices, sorted.
std::vector<int> right_neighbors(const Bipartite& b, const std::vector<int>& left_set);

}  // namespace edskit
