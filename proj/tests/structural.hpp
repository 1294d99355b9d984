#pragma once

#include <string>
#include <vector>

#include "edskit/graph.hpp"

namespace oracle {

// The fourteen structural properties of Q, W, U, cost and (strongly)
// beneficial sets, each checked by brute force on one connected host.
// Returns "<item>: <detail>" for every violation; empty means all hold.
std::vector<std::string> structural_violations(const edskit::Graph& h);

// Library profile against the brute-force profile (meds, Q, W, U, strongly
// beneficial sets with costs, verdict item). Empty means identical.
std::vector<std::string> profile_mismatches(const edskit::Graph& h);

}  // namespace oracle
