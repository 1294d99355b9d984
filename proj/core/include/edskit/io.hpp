#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edskit/graph.hpp"
#include "edskit/instance.hpp"

namespace edskit {

Graph parse_graph(std::string_view text);

struct ParsedInstance {
    ModInstance instance;
    std::vector<Edge> witness;  // optional `f u v` lines
};

// Requires `k` and `x` lines in addition to the graph part.
ParsedInstance parse_instance(std::string_view text);

std::string write_graph(const Graph& g, const std::string& comment = {});
std::string write_instance(const ModInstance& inst, const std::vector<Edge>& witness = {},
                           const std::string& comment = {});

std::string read_file(const std::string& path);

}  // namespace edskit
