#pragma once

#include <string>
#include <vector>

#include "zsf/engine.hpp"
#include "zsf/graph.hpp"
#include "zsf/group.hpp"

namespace zsf {

// Minimal zero-forcing graphs for a group, up to a vertex-count cap. Every
// listed graph is forcing and loses the property when any vertex is deleted;
// `minor_minimal` are the members containing no other member as a proper
// minor. `complete` is only set when theory certifies the cap is enough.
struct ObstructionReport {
    GroupSpec group;
    int order_cap = 0;
    std::vector<Graph> induced_minimal;  // canonical forms, deterministic order
    std::vector<Graph> minor_minimal;
    bool complete = false;
    bool budget_exhausted = false;
    std::string note;
};

ObstructionReport minimal_induced_obstructions(const GroupSpec& g, int order_cap,
                                               const DecideOptions& opts = {});

std::vector<Graph> minor_minimal_set(const ObstructionReport& report);

}  // namespace zsf
