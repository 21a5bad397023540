#include "zsf/graph_algos.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zsf {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

}  // namespace

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int max_size,
                                                std::optional<int> anchor) {
    if (max_size < 1 || max_size > std::max(g.n(), 1)) fail("max_size out of range");
    std::vector<VertexSet> out;
    for_each_connected_set(g, max_size, anchor, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace {

// Subtree sizes for the component of `universe` containing `root`.
struct RootedView {
    std::vector<int> parent;
    std::vector<int> order;  // preorder
    std::vector<int> subtree;
};

RootedView root_tree(const Graph& t, std::uint64_t universe, int root) {
    RootedView view;
    view.parent.assign(t.n(), -1);
    view.subtree.assign(t.n(), 0);
    std::vector<int> stack{root};
    std::uint64_t seen = 1ull << root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        view.order.push_back(v);
        for (std::uint64_t m = t.adj_bits(v) & universe & ~seen; m; m &= m - 1) {
            int w = std::countr_zero(m);
            seen |= 1ull << w;
            view.parent[w] = v;
            stack.push_back(w);
        }
    }
    for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
        view.subtree[*it] += 1;
        if (view.parent[*it] >= 0) view.subtree[view.parent[*it]] += view.subtree[*it];
    }
    return view;
}

}  // namespace

VertexSet tree_separator(const Graph& t, int m, int n_bound) {
    if (!is_tree(t)) fail("tree_separator requires a tree");
    if (m < 1 || n_bound < 1) fail("tree_separator requires m, n_bound >= 1");
    if (static_cast<long long>(t.n()) >= static_cast<long long>(m) * n_bound)
        fail("tree_separator precondition |t| < m*n_bound violated");

    VertexSet x;
    std::uint64_t universe = t.vertex_bits();
    const int root = 0;
    int budget = m;
    while (true) {
        RootedView view = root_tree(t, universe, root);
        if (view.subtree[root] < n_bound) return x;
        // deepest vertex whose subtree still reaches n_bound, smallest index on ties
        int pick = -1;
        for (std::uint64_t mm = universe; mm; mm &= mm - 1) {
            int v = std::countr_zero(mm);
            if (view.subtree[v] < n_bound) continue;
            bool deepest = true;
            for (std::uint64_t cm = t.adj_bits(v) & universe; cm; cm &= cm - 1) {
                int c = std::countr_zero(cm);
                if (view.parent[c] == v && view.subtree[c] >= n_bound) deepest = false;
            }
            if (deepest) {
                pick = v;
                break;
            }
        }
        x.add(pick);
        --budget;
        if (pick == root) return x;  // all remaining components were below pick
        // keep only the component containing the root
        universe &= ~(1ull << pick);
        std::uint64_t comp = 0;
        for (VertexSet c : components_within(t, VertexSet{universe}))
            if (c.contains(root)) comp = c.bits;
        universe = comp;
        if (budget < 1) throw std::logic_error("tree_separator: budget exhausted");
    }
}

void validate_bramble_family(const Graph& g, const BrambleFamily& fam) {
    std::uint64_t used = 0;
    for (VertexSet k : fam.members) {
        if (k.empty()) fail("bramble member must be nonempty");
        if (!k.subset_of(g.vertices())) fail("bramble member outside the graph");
        if (k.bits & used) fail("bramble members must be disjoint");
        if (!is_connected_set(g, k)) fail("bramble member must be connected");
        used |= k.bits;
    }
}

namespace {

template <typename F>
void for_each_subset_of_size(std::uint64_t universe, int size, F&& f) {
    std::vector<int> verts;
    for (std::uint64_t m = universe; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    int n = static_cast<int>(verts.size());
    if (size > n) return;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::uint64_t s = 0;
        for (int i : idx) s |= 1ull << verts[i];
        f(s);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool is_scattered_bramble(const Graph& g, const BrambleFamily& fam, int k) {
    validate_bramble_family(g, fam);
    if (k < 1) fail("bramble order must be >= 1");
    bool ok = true;
    for (int s = 0; s < k && ok; ++s) {
        for_each_subset_of_size(g.vertex_bits(), s, [&](std::uint64_t x) {
            if (!ok) return;
            int containing = 0;
            for (VertexSet comp : components_within(g, VertexSet{g.vertex_bits() & ~x})) {
                for (VertexSet member : fam.members) {
                    if ((member.bits & x) == 0 && member.subset_of(comp)) {
                        ++containing;
                        break;
                    }
                }
            }
            if (containing != 1) ok = false;
        });
    }
    return ok;
}

namespace {

// Compact working form for graph enumeration: per-vertex adjacency bytes.
struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> adj{};
};

std::uint64_t upper_triangle_code(const SmallGraph& g, const int* perm) {
    // row-major upper triangle of the relabeled adjacency matrix
    std::uint64_t code = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            code = (code << 1) | ((g.adj[perm[i]] >> perm[j]) & 1u);
    return code;
}

std::uint64_t canonical_code(const SmallGraph& g) {
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + g.n, 0);
    std::uint64_t best = ~0ull;
    do {
        best = std::min(best, upper_triangle_code(g, perm.data()));
    } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
    return best;
}

SmallGraph from_code(int n, std::uint64_t code) {
    SmallGraph g;
    g.n = n;
    int bit = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            --bit;
            if ((code >> bit) & 1) {
                g.adj[i] |= static_cast<std::uint8_t>(1u << j);
                g.adj[j] |= static_cast<std::uint8_t>(1u << i);
            }
        }
    }
    return g;
}

Graph to_graph(const SmallGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if ((g.adj[i] >> j) & 1u) edges.emplace_back(i, j);
    return Graph(g.n, edges);
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int cap) {
    if (n < 1) fail("enumerate_graphs requires n >= 1");
    if (n > cap || cap > 8)
        fail("enumerate_graphs cap exceeded (n=" + std::to_string(n) + ")");
    std::vector<std::uint64_t> level{0};  // canonical codes for k = 1
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : level) {
            SmallGraph base = from_code(k - 1, code);
            base.n = k;
            for (int nb = 0; nb < (1 << (k - 1)); ++nb) {
                SmallGraph ext = base;
                ext.adj[k - 1] = static_cast<std::uint8_t>(nb);
                for (int i = 0; i < k - 1; ++i)
                    if ((nb >> i) & 1) ext.adj[i] |= static_cast<std::uint8_t>(1u << (k - 1));
                next.insert(canonical_code(ext));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    for (std::uint64_t code : level) {
        Graph g = to_graph(from_code(n, code));
        if (!connected_only || is_connected(g)) out.push_back(g);
    }
    return out;
}

Graph canonical_form(const Graph& g, int cap) {
    if (g.n() > cap || cap > 10) fail("canonical_form cap exceeded");
    if (g.n() <= 1) return g;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(best_perm[i], best_perm[j])) edges.emplace_back(i, j);
    return Graph(g.n(), edges);
}

std::string canonical_graph6(const Graph& g, int cap) {
    return to_graph6(canonical_form(g, cap));
}

namespace {

bool induced_embed(const Graph& g, const Graph& h, std::vector<int>& map, std::uint64_t used,
                   int i) {
    if (i == h.n()) return true;
    for (int cand = 0; cand < g.n(); ++cand) {
        if ((used >> cand) & 1) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            if (g.has_edge(cand, map[j]) != h.has_edge(i, j)) ok = false;
        if (!ok) continue;
        map[i] = cand;
        if (induced_embed(g, h, map, used | (1ull << cand), i + 1)) return true;
    }
    return false;
}

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    std::vector<std::uint64_t> branch;  // branch set per h-vertex

    bool place(int i, std::uint64_t used) {
        if (i == h.n()) return true;
        if (g.n() - std::popcount(used) < h.n() - i) return false;
        std::uint64_t free = g.vertex_bits() & ~used;
        int max_size = g.n() - std::popcount(used) - (h.n() - i - 1);
        bool found = false;
        // candidate branch sets: connected sets in the free part, grouped by
        // minimum vertex so each is tried once
        for (std::uint64_t fm = free; fm && !found; fm &= fm - 1) {
            int v = std::countr_zero(fm);
            std::uint64_t allowed = free & ~((1ull << v) - 1);
            for_each_connected_set_at(g, v, VertexSet{allowed}, max_size, [&](VertexSet b) {
                bool ok = true;
                for (int j = 0; j < i && ok; ++j) {
                    if (!h.has_edge(i, j)) continue;
                    bool touching = false;
                    for (std::uint64_t bm = b.bits; bm && !touching; bm &= bm - 1)
                        if (g.adj_bits(std::countr_zero(bm)) & branch[j]) touching = true;
                    if (!touching) ok = false;
                }
                if (!ok) return true;
                branch[i] = b.bits;
                if (place(i + 1, used | b.bits)) {
                    found = true;
                    return false;
                }
                return true;
            });
        }
        return found;
    }
};

}  // namespace

bool contains_induced(const Graph& g, const Graph& h) {
    if (g.n() > 10) fail("contains_induced cap exceeded (|g| <= 10)");
    if (h.n() > g.n()) return false;
    std::vector<int> map(h.n());
    return induced_embed(g, h, map, 0, 0);
}

bool contains_minor(const Graph& g, const Graph& h) {
    if (g.n() > 10) fail("contains_minor cap exceeded (|g| <= 10)");
    if (h.n() > g.n() || h.edge_count() > g.edge_count()) return false;
    if (h.n() == 0) return true;
    MinorSearch search{g, h, std::vector<std::uint64_t>(h.n(), 0)};
    return search.place(0, 0);
}

}  // namespace zsf
