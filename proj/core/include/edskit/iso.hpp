#pragma once

#include <string>
#include <vector>

#include "edskit/graph.hpp"

namespace edskit {

// graph6 string of a canonical relabeling. Two graphs get the same key iff
// they are isomorphic. Exponential in the worst case; intended for small
// components.
std::string canonical_key(const Graph& g);

// canon[i] = original vertex placed at position i.
std::vector<int> canonical_order(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& order);

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Throws CapExceeded if either graph has more than cap vertices.
bool is_isomorphic(const Graph& a, const Graph& b, int cap = 12);

}  // namespace edskit
