#include "zsf/obstructions.hpp"

#include <future>
#include <map>
#include <stdexcept>

#include "zsf/graph_algos.hpp"

namespace zsf {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct VerdictCache {
    std::map<std::string, VerdictKind> by_key;

    VerdictKind decide(const Graph& g, const GroupSpec& group, const DecideOptions& opts) {
        std::string key = canonical_graph6(g);
        auto it = by_key.find(key);
        if (it != by_key.end()) return it->second;
        DecideOptions seq = opts;
        seq.jobs = 1;
        VerdictKind kind = decide_zero_forcing(g, group, seq).kind;
        by_key.emplace(std::move(key), kind);
        return kind;
    }
};

}  // namespace

ObstructionReport minimal_induced_obstructions(const GroupSpec& g, int order_cap,
                                               const DecideOptions& opts) {
    if (order_cap < 1 || order_cap > 7) fail("obstruction order cap must be in [1, 7]");
    g.checked_order(8);

    ObstructionReport report;
    report.group = g;
    report.order_cap = order_cap;

    // Only connected candidates: a disconnected graph is forcing iff one of its
    // components is, so a minimal forcing graph is connected.
    std::vector<Graph> candidates;
    for (int n = 1; n <= order_cap; ++n)
        for (Graph& h : enumerate_graphs(n, true)) candidates.push_back(std::move(h));

    // Forcing verdicts for the candidates, optionally in parallel; the merge is
    // by candidate index, so the result does not depend on scheduling.
    std::vector<VerdictKind> verdicts(candidates.size());
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            DecideOptions seq = opts;
            seq.jobs = 1;
            verdicts[i] = decide_zero_forcing(candidates[i], g, seq).kind;
        }
    } else {
        std::vector<std::future<void>> futures;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < jobs; ++t)
            futures.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = next.fetch_add(1); i < candidates.size();
                     i = next.fetch_add(1)) {
                    DecideOptions seq = opts;
                    seq.jobs = 1;
                    verdicts[i] = decide_zero_forcing(candidates[i], g, seq).kind;
                }
            }));
        for (auto& f : futures) f.get();
    }

    bool exhausted = false;
    VerdictCache deletions;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (verdicts[i] == VerdictKind::unknown) {
            exhausted = true;
            continue;
        }
        if (verdicts[i] != VerdictKind::forcing) continue;
        const Graph& h = candidates[i];
        // minimal iff no one-vertex-deleted induced subgraph is forcing; any
        // smaller forcing induced subgraph would sit inside one of those
        bool minimal = true;
        for (int v = 0; v < h.n() && minimal; ++v) {
            Graph del = induced_subgraph(h, h.vertices() - VertexSet::single(v));
            VerdictKind kind = del.n() == 0 ? VerdictKind::not_forcing
                                            : deletions.decide(del, g, opts);
            if (kind == VerdictKind::unknown) exhausted = true;
            if (kind == VerdictKind::forcing) minimal = false;
        }
        if (minimal) report.induced_minimal.push_back(canonical_form(h));
    }

    report.budget_exhausted = exhausted;
    if (exhausted) {
        report.complete = false;
        report.note = "search budget exhausted on some candidates; report may be incomplete";
    } else if (g.order() == 1) {
        report.complete = order_cap >= 1;
        report.note = "trivial group: the single vertex is the only minimal forcing graph";
    } else if (is_prime(g.order()) && order_cap >= g.order()) {
        report.complete = true;
        report.note = "prime order p: the minimal forcing graphs are exactly the connected "
                      "graphs on p vertices";
    } else {
        report.complete = false;
        report.note = "bounded search up to " + std::to_string(order_cap) +
                      " vertices; larger obstructions are not ruled out";
    }

    report.minor_minimal = minor_minimal_set(report);
    return report;
}

std::vector<Graph> minor_minimal_set(const ObstructionReport& report) {
    std::vector<std::string> keys;
    keys.reserve(report.induced_minimal.size());
    for (const Graph& g : report.induced_minimal) keys.push_back(canonical_graph6(g));
    std::vector<Graph> out;
    for (std::size_t i = 0; i < report.induced_minimal.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < report.induced_minimal.size() && minimal; ++j) {
            if (keys[i] == keys[j]) continue;
            if (contains_minor(report.induced_minimal[i], report.induced_minimal[j]))
                minimal = false;
        }
        if (minimal) out.push_back(report.induced_minimal[i]);
    }
    return out;
}

}  // namespace zsf
