#include "zsf/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

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

std::vector<std::uint8_t> label_indices(const Labeling& l) {
    std::vector<std::uint8_t> idx(l.graph.n());
    for (int v = 0; v < l.graph.n(); ++v)
        idx[v] = static_cast<std::uint8_t>(l.group.index_of(l.values[v]));
    return idx;
}

// Depth-first scan for a connected zero-sum set through `anchor` inside
// `universe`, visiting sets in the same order as the generic enumerator and
// keeping the running sum incrementally.
struct ZeroSumScan {
    const Graph& g;
    const std::uint8_t* labels;
    const std::uint8_t* add;
    int gsize;
    int max_size;
    std::uint64_t universe;
    std::uint64_t found = 0;

    bool rec(std::uint64_t s, std::uint64_t ext, std::uint64_t banned, int sum, int size) {
        if (sum == 0) {
            found = s;
            return true;
        }
        if (size == max_size) return false;
        std::uint64_t todo = ext;
        while (todo) {
            int u = std::countr_zero(todo);
            todo &= todo - 1;
            std::uint64_t banned_u = banned | (ext & ~todo);
            std::uint64_t new_ext = todo | (g.adj_bits(u) & universe & ~s & ~banned_u);
            if (rec(s | (1ull << u), new_ext, banned_u, add[sum * gsize + labels[u]], size + 1))
                return true;
        }
        return false;
    }

    bool run(int anchor) {
        std::uint64_t s = 1ull << anchor;
        return rec(s, g.adj_bits(anchor) & universe & ~s, 0, labels[anchor], 1);
    }
};

std::uint64_t mask_sumset(std::uint64_t a, std::uint64_t b, const GroupTable& t) {
    std::uint64_t out = 0;
    for (std::uint64_t ma = a; ma; ma &= ma - 1) {
        const std::uint8_t* row = &t.add[static_cast<std::size_t>(std::countr_zero(ma)) * t.n];
        for (std::uint64_t mb = b; mb; mb &= mb - 1) out |= 1ull << row[std::countr_zero(mb)];
    }
    return out;
}

}  // namespace

Labeling make_labeling(Graph g, GroupSpec group, std::vector<Element> values) {
    if (static_cast<int>(values.size()) != g.n())
        fail("labeling must assign every vertex a value");
    for (const Element& e : values) group.validate_element(e);
    return Labeling{std::move(g), std::move(group), std::move(values)};
}

Element label_sum(const Labeling& l, VertexSet s) {
    Element acc = l.group.zero();
    for (int v : s.to_vector()) acc = l.group.add(acc, l.values[v]);
    return acc;
}

int witness_bound(const GroupSpec& g) {
    long long n = g.order();
    if (n == 1) return 1;
    if (is_prime(n)) {
        if (n > (1 << 30)) fail("witness_bound: order out of range");
        return static_cast<int>(n);
    }
    int order = g.checked_order(64);
    int d = davenport(g);
    long long formula = static_cast<long long>(order - 2) * (d - 1) / 2 + 1;
    long long bound = std::max<long long>(order, formula);
    if (bound > static_cast<long long>(order) * order)
        throw std::logic_error("witness_bound exceeds |G|^2");
    return static_cast<int>(bound);
}

std::optional<VertexSet> find_zero_sum_witness(const Labeling& l, CheckMode mode) {
    make_labeling(l.graph, l.group, l.values);  // validate
    int n = l.graph.n();
    if (n == 0) return std::nullopt;
    GroupTable t = group_table(l.group);
    std::vector<std::uint8_t> idx = label_indices(l);
    int bound = mode == CheckMode::full ? n : std::min(n, witness_bound(l.group));
    for (int v = 0; v < n; ++v) {
        std::uint64_t allowed = l.graph.vertex_bits() & ~((1ull << v) - 1);
        ZeroSumScan scan{l.graph, idx.data(), t.add.data(), t.n, bound, allowed};
        if (scan.run(v)) return VertexSet{scan.found};
    }
    return std::nullopt;
}

namespace {

std::uint64_t subtree_sums(const Graph& g, const std::vector<std::uint8_t>& idx,
                           const GroupTable& t, int v, int parent) {
    std::uint64_t acc = 1ull << idx[v];
    for (std::uint64_t m = g.adj_bits(v); m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (w == parent) continue;
        acc = mask_sumset(acc, subtree_sums(g, idx, t, w, v) | 1ull, t);
    }
    return acc;
}

}  // namespace

ConnectedSums connected_sums_at(const Labeling& l, int v) {
    if (!is_tree(l.graph)) fail("connected_sums_at requires a tree");
    if (v < 0 || v >= l.graph.n()) fail("vertex out of range");
    make_labeling(l.graph, l.group, l.values);
    GroupTable t = group_table(l.group);
    std::vector<std::uint8_t> idx = label_indices(l);
    std::uint64_t mask = subtree_sums(l.graph, idx, t, v, -1);
    ConnectedSums out;
    out.vertex = v;
    for (std::uint64_t m = mask; m; m &= m - 1)
        out.values.insert(t.reps[std::countr_zero(m)]);
    return out;
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::forcing: return "forcing";
        case VerdictKind::not_forcing: return "not_forcing";
        default: return "unknown";
    }
}

std::vector<int> element_orbit_representatives(const GroupSpec& g) {
    int n = g.checked_order(64);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (n == 1 || g.rank() == 0) return all;

    int k = g.rank();
    std::vector<std::vector<int>> cands(k);
    long long total = 1;
    for (int i = 0; i < k; ++i) {
        for (int x = 0; x < n; ++x)
            if (g.factors()[i] % g.element_order(g.element_at(x)) == 0) cands[i].push_back(x);
        total *= static_cast<long long>(cands[i].size());
        if (total > 200'000) return all;  // reduction not worth it, keep exact search
    }

    // image of every element under the map sending generator i to image[i]
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    GroupTable t = group_table(g);
    std::vector<int> choice(k, 0);
    std::vector<int> phi(n);
    while (true) {
        // phi(e) = sum_i residues_i(e) * image_i
        bool bijective = true;
        std::uint64_t seen = 0;
        for (int e = 0; e < n && bijective; ++e) {
            Element el = g.element_at(e);
            int acc = 0;
            for (int i = 0; i < k; ++i) {
                int img = cands[i][choice[i]];
                for (int c = 0; c < el.residues[i]; ++c) acc = t.add_of(acc, img);
            }
            phi[e] = acc;
            if ((seen >> acc) & 1)
                bijective = false;
            else
                seen |= 1ull << acc;
        }
        if (bijective)
            for (int e = 0; e < n; ++e) unite(e, phi[e]);
        int i = 0;
        while (i < k && ++choice[i] == static_cast<int>(cands[i].size())) choice[i++] = 0;
        if (i == k) break;
    }

    std::vector<int> reps;
    for (int e = 0; e < n; ++e)
        if (find(e) == e) reps.push_back(e);
    return reps;
}

namespace {

struct SharedSearch {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> prunes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::mutex cert_mu;
    std::optional<std::vector<std::uint8_t>> cert;
};

struct Searcher {
    const Graph& g;
    const GroupTable& t;
    std::uint64_t budget;
    const std::vector<int>& order;
    const std::vector<std::uint64_t>& prefix;
    int bound;
    const std::vector<int>& first_labels;
    SharedSearch& shared;
    std::vector<std::uint8_t> labels;

    bool prefix_has_zero_sum(int v, std::uint64_t universe) {
        ZeroSumScan scan{g, labels.data(), t.add.data(), t.n, bound, universe};
        return scan.run(v);
    }

    bool dfs(int k) {
        if (shared.stop.load(std::memory_order_relaxed)) return false;
        int v = order[k];
        int cand_count = k == 0 ? static_cast<int>(first_labels.size()) : t.n;
        for (int c = 0; c < cand_count; ++c) {
            int e = k == 0 ? first_labels[c] : c;
            if (shared.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
                shared.budget_hit.store(true);
                shared.stop.store(true);
                return false;
            }
            labels[v] = static_cast<std::uint8_t>(e);
            if (prefix_has_zero_sum(v, prefix[k])) {
                shared.prunes.fetch_add(1, std::memory_order_relaxed);
                continue;
            }
            if (k + 1 == g.n()) {
                std::lock_guard<std::mutex> lock(shared.cert_mu);
                if (!shared.cert) shared.cert = labels;
                shared.stop.store(true);
                return true;
            }
            if (dfs(k + 1)) return true;
            if (shared.stop.load(std::memory_order_relaxed)) return false;
        }
        return false;
    }

    void run() {
        labels.assign(g.n(), 0);
        dfs(0);
    }
};

}  // namespace

Verdict decide_zero_forcing(const Graph& g, const GroupSpec& group, const DecideOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    GroupTable table = group_table(group);
    Verdict verdict;
    int n = g.n();
    if (n == 0) {
        verdict.kind = VerdictKind::not_forcing;
        verdict.certificate = Labeling{g, group, {}};
        return verdict;
    }
    if (opts.budget < 1) fail("budget must be >= 1");
    int bound = std::min(witness_bound(group), n);

    // BFS order per component keeps the labeled prefix connected inside each
    // component, so pruning sees real connected sets early.
    std::vector<int> order;
    order.reserve(n);
    {
        std::uint64_t seen = 0;
        for (int start = 0; start < n; ++start) {
            if ((seen >> start) & 1) continue;
            seen |= 1ull << start;
            std::size_t head = order.size();
            order.push_back(start);
            while (head < order.size()) {
                int v = order[head++];
                for (std::uint64_t m = g.adj_bits(v) & ~seen; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    seen |= 1ull << w;
                    order.push_back(w);
                }
            }
        }
    }
    std::vector<std::uint64_t> prefix(n);
    std::uint64_t acc = 0;
    for (int k = 0; k < n; ++k) {
        acc |= 1ull << order[k];
        prefix[k] = acc;
    }

    std::vector<int> first_labels;
    if (opts.symmetry) {
        first_labels = element_orbit_representatives(group);
    } else {
        first_labels.resize(table.n);
        std::iota(first_labels.begin(), first_labels.end(), 0);
    }

    SharedSearch shared;
    int jobs = std::max(1, std::min(opts.jobs, static_cast<int>(first_labels.size())));
    if (jobs == 1) {
        Searcher s{g, table, opts.budget, order, prefix, bound, first_labels, shared, {}};
        s.run();
    } else {
        std::vector<std::vector<int>> slices(jobs);
        for (std::size_t i = 0; i < first_labels.size(); ++i)
            slices[i % jobs].push_back(first_labels[i]);
        std::vector<std::thread> threads;
        for (int i = 0; i < jobs; ++i)
            threads.emplace_back([&, i] {
                Searcher s{g, table, opts.budget, order, prefix, bound, slices[i], shared, {}};
                s.run();
            });
        for (auto& th : threads) th.join();
    }

    verdict.stats.nodes = shared.nodes.load();
    verdict.stats.prunes = shared.prunes.load();
    if (shared.cert) {
        std::vector<Element> values;
        values.reserve(n);
        for (int v = 0; v < n; ++v) values.push_back(table.reps[(*shared.cert)[v]]);
        verdict.kind = VerdictKind::not_forcing;
        verdict.certificate = Labeling{g, group, std::move(values)};
    } else if (shared.budget_hit.load()) {
        verdict.kind = VerdictKind::unknown;
    } else {
        verdict.kind = VerdictKind::forcing;
    }
    verdict.stats.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

}  // namespace zsf
