#pragma once

#include <string>

#include "edskit/graph.hpp"

namespace edskit::fixtures {

Graph path(int n);      // P_n: 0-1-...-(n-1)
Graph cycle(int n);
Graph complete(int n);
Graph e_graph();        // path 0-1-2-3-4 with vertex 5 hanging off 2

// K_{3,4} with parts {4,5,6} and {0,1,2,3} plus the edge 2-3. Smallest
// connected graph whose only strongly beneficial set has size two ({2,3}).
Graph k34e();

// Twelve vertices a..l mapped to 0..11.
Graph worked_example();
int example_id(char name);
VSet example_set(const std::string& names);

// Resolves "P5", "K4", "C6", "E", "K34E", "EXAMPLE12" and similar names.
Graph by_name(const std::string& name);

}  // namespace edskit::fixtures
