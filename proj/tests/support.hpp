#pragma once

// Test-side oracles, deliberately written against the naive definitions and
// independent of the library's enumeration/search code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "zsf/engine.hpp"
#include "zsf/graph.hpp"
#include "zsf/group.hpp"

namespace oracle {

using zsf::Element;
using zsf::Graph;
using zsf::GroupSpec;
using zsf::Labeling;
using zsf::VertexSet;

// union-find connectivity, no BFS shared with the library
inline bool uf_connected(const Graph& g, std::uint64_t subset) {
    if (subset == 0) return false;
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    for (auto [u, v] : g.edges())
        if (((subset >> u) & 1) && ((subset >> v) & 1)) parent[find(u)] = find(v);
    int root = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (!((subset >> v) & 1)) continue;
        if (root < 0) root = find(v);
        if (find(v) != root) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> connected_subsets(const Graph& g, int max_size) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (1ull << g.n()); ++s)
        if (std::popcount(s) <= max_size && uf_connected(g, s)) out.push_back(s);
    return out;
}

// longest zero-sum-free sequence by DFS over all (unsorted) sequences, with
// the achievable sums kept as a set of Elements
inline int davenport(const GroupSpec& g) {
    std::vector<Element> nonzero;
    for (long long i = 1; i < g.order(); ++i) nonzero.push_back(g.element_at(i));
    int best = 0;
    std::function<void(const std::set<Element>&, int)> rec = [&](const std::set<Element>& sums,
                                                                 int len) {
        best = std::max(best, len);
        for (const Element& e : nonzero) {
            std::set<Element> next = sums;
            next.insert(e);
            for (const Element& s : sums) next.insert(g.add(s, e));
            if (next.count(g.zero())) continue;
            rec(next, len + 1);
        }
    };
    rec({}, 0);
    return best + 1;
}

inline bool is_zero_sum_free(const GroupSpec& g, const std::vector<Element>& seq) {
    int n = static_cast<int>(seq.size());
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Element acc = g.zero();
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) acc = g.add(acc, seq[i]);
        if (acc == g.zero()) return false;
    }
    return true;
}

struct NaiveVerdict {
    bool forcing = false;
    std::optional<std::vector<Element>> certificate;
};

// test every |G|^n labeling against every connected subset
inline NaiveVerdict naive_decide(const Graph& g, const GroupSpec& spec) {
    int n = g.n();
    int order = static_cast<int>(spec.order());
    std::vector<std::uint64_t> subsets = connected_subsets(g, n);
    // index-level addition so the sweep stays fast
    std::vector<int> add(order * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            add[a * order + b] =
                static_cast<int>(spec.index_of(spec.add(spec.element_at(a), spec.element_at(b))));
    std::vector<int> labels(n, 0);
    while (true) {
        bool avoiding = true;
        for (std::uint64_t s : subsets) {
            int acc = 0;
            for (std::uint64_t m = s; m; m &= m - 1) acc = add[acc * order + labels[std::countr_zero(m)]];
            if (acc == 0) {
                avoiding = false;
                break;
            }
        }
        if (avoiding) {
            std::vector<Element> cert;
            for (int v = 0; v < n; ++v) cert.push_back(spec.element_at(labels[v]));
            return {false, cert};
        }
        int i = 0;
        while (i < n && ++labels[i] == order) labels[i++] = 0;
        if (i == n) break;
    }
    return {true, std::nullopt};
}

// label sums over connected sets containing v, straight from the definition
inline std::set<Element> connected_sums_brute(const Labeling& l, int v) {
    std::set<Element> out;
    for (std::uint64_t s : connected_subsets(l.graph, l.graph.n())) {
        if (!((s >> v) & 1)) continue;
        Element acc = l.group.zero();
        for (std::uint64_t m = s; m; m &= m - 1) acc = l.group.add(acc, l.values[std::countr_zero(m)]);
        out.insert(acc);
    }
    return out;
}

// max number of internally disjoint paths between vertex sets a and b via
// unit-capacity vertex-split max flow; direct edges count as unbounded
inline int disjoint_paths(const Graph& g, VertexSet a, VertexSet b, int need) {
    const int inf = 1 << 20;
    int n = g.n();
    int nodes = 2 * n + 2, src = 2 * n, dst = 2 * n + 1;
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int v = 0; v < n; ++v)
        cap[2 * v][2 * v + 1] = (a.contains(v) || b.contains(v)) ? inf : 1;
    for (auto [u, v] : g.edges()) {
        cap[2 * u + 1][2 * v] = inf;
        cap[2 * v + 1][2 * u] = inf;
    }
    for (int v : a.to_vector()) cap[src][2 * v] = inf;
    for (int v : b.to_vector()) cap[2 * v + 1][dst] = inf;
    int flow = 0;
    while (flow < need) {
        std::vector<int> prev(nodes, -1);
        prev[src] = src;
        std::vector<int> queue{src};
        for (std::size_t qi = 0; qi < queue.size() && prev[dst] < 0; ++qi)
            for (int w = 0; w < nodes; ++w)
                if (prev[w] < 0 && cap[queue[qi]][w] > 0) {
                    prev[w] = queue[qi];
                    queue.push_back(w);
                }
        if (prev[dst] < 0) break;
        for (int w = dst; w != src; w = prev[w]) {
            --cap[prev[w]][w];
            ++cap[w][prev[w]];
        }
        ++flow;
    }
    return flow;
}

// Menger form of the scattered-bramble condition. A family smaller than k
// always fails: a transversal of the members is a small separator leaving no
// member intact.
inline bool menger_scattered(const Graph& g, const std::vector<VertexSet>& members, int k) {
    if (static_cast<int>(members.size()) < k) return false;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            bool edge = false;
            for (int u : members[i].to_vector())
                if (g.adj_bits(u) & members[j].bits) edge = true;
            if (edge) continue;
            if (disjoint_paths(g, members[i], members[j], k) < k) return false;
        }
    }
    return true;
}

// independent graph6 reader: collect the bit stream first, then assign pairs
inline Graph decode_graph6(const std::string& s) {
    int n = s.at(0) - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    int pos = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++pos)
            if (bits.at(pos)) edges.emplace_back(row, col);
    return Graph(n, edges);
}

// brute isomorphism test by permutation search
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.n() && ok; ++i)
            for (int j = i + 1; j < a.n() && ok; ++j)
                if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, static_cast<int>(rng() % v));
    return Graph(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Labeling random_labeling(const Graph& g, const GroupSpec& spec, std::mt19937& rng) {
    std::vector<Element> values;
    for (int v = 0; v < g.n(); ++v)
        values.push_back(spec.element_at(static_cast<long long>(rng() % spec.order())));
    return Labeling{g, spec, values};
}

inline Graph relabeled(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.n(), edges);
}

}  // namespace oracle
