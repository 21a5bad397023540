#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "zsf/engine.hpp"
#include "zsf/obstructions.hpp"

namespace zsf {

// Certificate object: vertex id (as string) -> residue vector.
nlohmann::json certificate_json(const Labeling& l);
std::vector<Element> certificate_from_json(const GroupSpec& g, int n, const nlohmann::json& j);

nlohmann::json decide_report(const GroupSpec& group, const Graph& g, const Verdict& v,
                             std::uint64_t budget, int jobs);
nlohmann::json check_report(const GroupSpec& group, const Graph& g, CheckMode mode,
                            const std::optional<VertexSet>& witness);
nlohmann::json obstructions_json(const ObstructionReport& r);

}  // namespace zsf
