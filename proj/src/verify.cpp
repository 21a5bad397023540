#include "zsf/verify.hpp"

#include <stdexcept>

#include "zsf/construct.hpp"
#include "zsf/graph_algos.hpp"

namespace zsf {

namespace {

const char* kForcing = "forcing";
const char* kNotForcing = "not_forcing";

void add_verdict_row(VerifyResult& r, std::string instance, bool expected_forcing,
                     const Verdict& v) {
    VerifyRow row;
    row.instance = std::move(instance);
    row.expected = expected_forcing ? kForcing : kNotForcing;
    row.got = to_string(v.kind);
    row.pass = v.kind == (expected_forcing ? VerdictKind::forcing : VerdictKind::not_forcing);
    if (v.kind == VerdictKind::unknown) ++r.unknown;
    r.rows.push_back(std::move(row));
}

}  // namespace

int VerifyResult::passed() const {
    int n = 0;
    for (const VerifyRow& r : rows) n += r.pass ? 1 : 0;
    return n;
}

int VerifyResult::failed() const {
    return static_cast<int>(rows.size()) - passed();
}

VerifyResult verify_paths(const GroupSpec& g, int max_n, const DecideOptions& opts) {
    if (max_n < 1 || max_n > 64) throw std::invalid_argument("max_n must be in [1, 64]");
    VerifyResult result{"path", {}, 0};
    for (int n = 1; n <= max_n; ++n)
        add_verdict_row(result, "P" + std::to_string(n) + " over " + g.to_string(),
                        n >= g.order(), decide_zero_forcing(path_graph(n), g, opts));
    return result;
}

VerifyResult verify_prime(int p, const DecideOptions& opts) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("prime suite supports p in {2,3,5}");
    GroupSpec g{{p}};
    VerifyResult result{"prime", {}, 0};
    int idx = 0;
    for (const Graph& h : enumerate_graphs(p, true))
        add_verdict_row(result,
                        "connected graph #" + std::to_string(idx++) + " on " + std::to_string(p) +
                            " vertices over Z" + std::to_string(p),
                        true, decide_zero_forcing(h, g, opts));
    if (p >= 2) {
        idx = 0;
        for (const Graph& h : enumerate_graphs(p - 1, true))
            add_verdict_row(result,
                            "connected graph #" + std::to_string(idx++) + " on " +
                                std::to_string(p - 1) + " vertices over Z" + std::to_string(p),
                            false, decide_zero_forcing(h, g, opts));
    }
    return result;
}

VerifyResult verify_cycles(const GroupSpec& g, int max_n, const DecideOptions& opts) {
    if (max_n < 3 || max_n > 64) throw std::invalid_argument("max_n must be in [3, 64]");
    long long m = g.exponent();
    VerifyResult result{"cycle", {}, 0};
    for (int n = 3; n <= max_n; ++n) {
        bool expected = m * (n - 1) >= (m - 1) * g.order();
        add_verdict_row(result, "C" + std::to_string(n) + " over " + g.to_string(), expected,
                        decide_zero_forcing(cycle_graph(n), g, opts));
    }
    return result;
}

VerifyResult verify_trees(const GroupSpec& g, const DecideOptions& opts) {
    int order = g.checked_order(8);
    VerifyResult result{"tree", {}, 0};
    for (int n = 1; n < order; ++n) {
        int idx = 0;
        for (const Graph& h : enumerate_graphs(n, true)) {
            if (!is_tree(h)) continue;
            std::string name = "tree #" + std::to_string(idx++) + " on " + std::to_string(n) +
                               " vertices over " + g.to_string();
            add_verdict_row(result, name, false, decide_zero_forcing(h, g, opts));
            Labeling l = tree_labeling(h, g);
            VerifyRow row;
            row.instance = name + " (constructed labeling)";
            row.expected = "avoiding";
            row.got = find_zero_sum_witness(l, CheckMode::full) ? "witness" : "avoiding";
            row.pass = row.got == row.expected;
            result.rows.push_back(std::move(row));
        }
    }
    add_verdict_row(result, "P" + std::to_string(order) + " over " + g.to_string(), true,
                    decide_zero_forcing(path_graph(order), g, opts));
    return result;
}

VerifyResult verify_bramble(int k, const GroupSpec& g, const DecideOptions& opts) {
    if (k < 1 || k > 4) throw std::invalid_argument("bramble suite supports k in [1, 4]");
    VerifyResult result{"bramble", {}, 0};
    Graph grid = grid_graph(k, k);
    BrambleFamily rows;
    for (int r = 0; r < k; ++r) {
        VertexSet row_set;
        for (int c = 0; c < k; ++c) row_set.add(r * k + c);
        rows.members.push_back(row_set);
    }
    VerifyRow row;
    row.instance = "rows of the " + std::to_string(k) + "x" + std::to_string(k) + " grid";
    row.expected = "scattered bramble of order " + std::to_string(k);
    bool scattered = is_scattered_bramble(grid, rows, k);
    row.got = scattered ? row.expected : "not a scattered bramble";
    row.pass = scattered;
    result.rows.push_back(std::move(row));

    int d = davenport(g);
    if (k >= d && k + 1 >= d) {
        add_verdict_row(result,
                        std::to_string(k) + "x" + std::to_string(k) + " grid over " +
                            g.to_string() + " (bramble bound applies, D = " + std::to_string(d) +
                            ")",
                        true, decide_zero_forcing(grid, g, opts));
    }
    return result;
}

VerifyResult verify_monotone(int order, int max_vertices, const DecideOptions& opts) {
    if (max_vertices < 1 || max_vertices > 6)
        throw std::invalid_argument("monotone scan supports up to 6 vertices");
    std::vector<GroupSpec> groups = abelian_groups_of_order(order);
    GroupSpec cyclic{{order}};
    VerifyResult result{"monotone", {}, 0};
    for (int n = 1; n <= max_vertices; ++n) {
        for (const Graph& h : enumerate_graphs(n, false)) {
            Verdict for_cyclic = decide_zero_forcing(h, cyclic, opts);
            if (for_cyclic.kind == VerdictKind::unknown) ++result.unknown;
            if (for_cyclic.kind != VerdictKind::forcing) continue;
            for (const GroupSpec& g : groups) {
                if (g == cyclic) continue;
                VerifyRow row;
                row.instance = to_graph6(h) + " forcing for " + cyclic.to_string() +
                               ", checking " + g.to_string();
                row.expected = kForcing;
                Verdict v = decide_zero_forcing(h, g, opts);
                row.got = to_string(v.kind);
                row.pass = v.kind == VerdictKind::forcing;
                if (v.kind == VerdictKind::unknown) ++result.unknown;
                result.rows.push_back(std::move(row));
            }
        }
    }
    return result;
}

}  // namespace zsf
