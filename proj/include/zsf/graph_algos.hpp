#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zsf/graph.hpp"

namespace zsf {

namespace detail {

// Core of the connected-set enumeration: grow S by candidates in `ext`; once a
// candidate is skipped it stays forbidden on that branch, so every connected
// superset is visited exactly once. f(VertexSet) -> bool, false stops.
template <typename F>
bool grow_connected(const Graph& g, std::uint64_t s, std::uint64_t ext, std::uint64_t banned,
                    std::uint64_t universe, int size, int max_size, F& f) {
    if (!f(VertexSet{s})) return false;
    if (size == max_size) return true;
    std::uint64_t todo = ext;
    while (todo) {
        int u = std::countr_zero(todo);
        todo &= todo - 1;
        std::uint64_t banned_u = banned | (ext & ~todo);  // u and everything skipped before it
        std::uint64_t new_ext = todo | (g.adj_bits(u) & universe & ~s & ~banned_u);
        if (!grow_connected(g, s | (1ull << u), new_ext, banned_u, universe, size + 1, max_size, f))
            return false;
    }
    return true;
}

}  // namespace detail

// Every nonempty connected set of size <= max_size inside `universe` that
// contains `anchor`, exactly once, in a fixed deterministic order.
template <typename F>
bool for_each_connected_set_at(const Graph& g, int anchor, VertexSet universe, int max_size,
                               F&& f) {
    if (!universe.contains(anchor) || max_size < 1) return true;
    std::uint64_t s = 1ull << anchor;
    return detail::grow_connected(g, s, g.adj_bits(anchor) & universe.bits & ~s, 0, universe.bits,
                                  1, max_size, f);
}

// Every nonempty connected set of size <= max_size (of the whole graph when no
// anchor is given), grouped by minimum vertex, ascending.
template <typename F>
void for_each_connected_set(const Graph& g, int max_size, std::optional<int> anchor, F&& f) {
    if (anchor) {
        for_each_connected_set_at(g, *anchor, g.vertices(), max_size, f);
        return;
    }
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t allowed = g.vertex_bits() & ~((1ull << v) - 1);
        if (!for_each_connected_set_at(g, v, VertexSet{allowed}, max_size, f)) return;
    }
}

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int max_size,
                                                std::optional<int> anchor = std::nullopt);

// Separator X with |X| < m such that every component of t - X has fewer than
// n_bound vertices; requires |t| < m * n_bound. Rooted at vertex 0; among the
// deepest vertices whose rooted subtree has order >= n_bound, the smallest
// index is removed first.
VertexSet tree_separator(const Graph& t, int m, int n_bound);

// Disjoint nonempty connected subgraphs of a host graph.
struct BrambleFamily {
    std::vector<VertexSet> members;
};

void validate_bramble_family(const Graph& g, const BrambleFamily& fam);  // throws

// True iff for every X with |X| < k exactly one component of g - X entirely
// contains some member (member disjoint from X). Brute force over all X.
bool is_scattered_bramble(const Graph& g, const BrambleFamily& fam, int k);

// One representative per isomorphism class; canonical form is the
// lexicographically least adjacency matrix over all vertex permutations.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int cap = 7);
Graph canonical_form(const Graph& g, int cap = 8);
std::string canonical_graph6(const Graph& g, int cap = 8);

bool contains_induced(const Graph& g, const Graph& h);  // h as induced subgraph of g
bool contains_minor(const Graph& g, const Graph& h);    // h as minor of g

}  // namespace zsf
