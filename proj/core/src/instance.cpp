#include "edskit/instance.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "edskit/errors.hpp"
#include "edskit/iso.hpp"

namespace edskit {

FamilyAssignment validate_instance(const ModInstance& inst, const Limits& lim) {
    const Graph& g = inst.graph;
    for (std::size_t i = 0; i < inst.modulator.size(); ++i) {
        int x = inst.modulator[i];
        if (x < 0 || x >= g.n()) throw InvalidInput("modulator vertex " + std::to_string(x) + " not in graph");
        if (i > 0 && inst.modulator[i - 1] >= x) throw InvalidInput("modulator must be sorted and duplicate-free");
    }
    std::map<std::string, int> member_of;
    for (int i = 0; i < static_cast<int>(inst.family.size()); ++i) {
        const Graph& h = inst.family[i];
        if (h.n() > lim.max_component_size)
            throw CapExceeded("family member " + std::to_string(i) + " exceeds max component size " +
                              std::to_string(lim.max_component_size));
        member_of.emplace(canonical_key(h), i);  // first index wins on duplicates
    }

    FamilyAssignment out;
    Induced rest = delete_vertices(g, inst.modulator);
    auto comps = connected_components(rest.graph);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        VSet orig;
        for (int v : comps[c].vertices) orig.push_back(rest.to_old[v]);
        out.components.push_back(orig);
        if (inst.family.empty()) {
            out.member.push_back(-1);
            continue;
        }
        if (comps[c].local.n() > lim.max_component_size)
            throw CapExceeded("component " + std::to_string(c) + " has " + std::to_string(comps[c].local.n()) +
                              " vertices, above max component size " + std::to_string(lim.max_component_size));
        auto it = member_of.find(canonical_key(comps[c].local));
        if (it == member_of.end())
            throw InvalidInput("component " + std::to_string(c) + " (smallest vertex " + std::to_string(orig[0]) +
                               ") matches no family member");
        out.member.push_back(it->second);
    }
    return out;
}

}  // namespace edskit
