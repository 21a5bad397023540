#include "zsf/report.hpp"

#include <stdexcept>

#include "zsf/graph_algos.hpp"

namespace zsf {

nlohmann::json certificate_json(const Labeling& l) {
    nlohmann::json obj = nlohmann::json::object();
    for (int v = 0; v < l.graph.n(); ++v) obj[std::to_string(v)] = l.values[v].residues;
    return obj;
}

std::vector<Element> certificate_from_json(const GroupSpec& g, int n, const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("certificate must be an object");
    std::vector<Element> values(n, g.zero());
    std::vector<bool> seen(n, false);
    for (const auto& [key, val] : j.items()) {
        int v = std::stoi(key);
        if (v < 0 || v >= n) throw std::invalid_argument("certificate vertex out of range");
        Element e{val.get<std::vector<int>>()};
        g.validate_element(e);
        values[v] = e;
        seen[v] = true;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("certificate missing vertex " + std::to_string(v));
    return values;
}

nlohmann::json decide_report(const GroupSpec& group, const Graph& g, const Verdict& v,
                             std::uint64_t budget, int jobs) {
    nlohmann::json j;
    j["group"] = group.to_string();
    j["graph6"] = to_graph6(g);
    j["verdict"] = to_string(v.kind);
    j["certificate"] = v.certificate ? certificate_json(*v.certificate) : nlohmann::json(nullptr);
    j["stats"] = {{"nodes", v.stats.nodes},
                  {"prunes", v.stats.prunes},
                  {"ms", v.stats.ms},
                  {"budget", budget},
                  {"jobs", jobs}};
    return j;
}

nlohmann::json check_report(const GroupSpec& group, const Graph& g, CheckMode mode,
                            const std::optional<VertexSet>& witness) {
    nlohmann::json j;
    j["group"] = group.to_string();
    j["graph6"] = to_graph6(g);
    j["mode"] = mode == CheckMode::full ? "full" : "bounded";
    j["avoiding"] = !witness.has_value();
    j["witness"] = witness ? nlohmann::json(witness->to_vector()) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json obstructions_json(const ObstructionReport& r) {
    nlohmann::json j;
    j["group"] = r.group.to_string();
    j["order_cap"] = r.order_cap;
    std::vector<std::string> induced, minor;
    for (const Graph& g : r.induced_minimal) induced.push_back(to_graph6(g));
    for (const Graph& g : r.minor_minimal) minor.push_back(to_graph6(g));
    j["induced_minimal"] = induced;
    j["minor_minimal"] = minor;
    j["complete"] = r.complete;
    j["note"] = r.note;
    return j;
}

}  // namespace zsf
