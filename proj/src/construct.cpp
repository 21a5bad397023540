#include "zsf/construct.hpp"

#include <algorithm>
#include <set>
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

// Label the vertices of X (ascending) with representatives of a zero-sum-free
// sequence of the cosets of `small` inside `big`, so that every nonempty
// subset of X sums outside `small`. Everything else in `values` stays put.
void lift_cut_labels(const GroupSpec& group, VertexSet x, std::uint64_t big, std::uint64_t small,
                     std::vector<Element>& values) {
    GroupTable cosets = coset_table(group, big, small);
    int cut_size = x.count();
    int d = davenport(cosets);
    if (cut_size >= d)
        fail("separator too large: |X| = " + std::to_string(cut_size) +
             " but the quotient has Davenport constant " + std::to_string(d));
    auto seq = zero_sum_free_sequence(cosets, cut_size);
    if (!seq) throw std::logic_error("zero-sum-free sequence must exist below the constant");
    int i = 0;
    for (int v : x.to_vector()) values[v] = cosets.reps[(*seq)[i++]];
}

// Path-style labeling of `verts` (in walk order) with consecutive differences
// of `enumeration`; needs |verts| < enumeration size.
void difference_labels(const GroupSpec& group, const std::vector<int>& verts,
                       const std::vector<Element>& enumeration, std::vector<Element>& values) {
    for (std::size_t j = 0; j < verts.size(); ++j)
        values[verts[j]] = group.sub(enumeration[j + 1], enumeration[j]);
}

// Walk order of a path component (vertex set known to induce a path).
std::vector<int> path_walk(const Graph& g, VertexSet comp) {
    std::vector<int> verts = comp.to_vector();
    if (verts.size() <= 1) return verts;
    int end = -1;
    for (int v : verts)
        if (std::popcount(g.adj_bits(v) & comp.bits) <= 1) {
            end = v;
            break;
        }
    if (end < 0) fail("component is not a path");
    std::vector<int> walk{end};
    std::uint64_t seen = 1ull << end;
    while (walk.size() < verts.size()) {
        std::uint64_t next = g.adj_bits(walk.back()) & comp.bits & ~seen;
        if (!next) fail("component is not a path");
        int w = std::countr_zero(next);
        seen |= 1ull << w;
        walk.push_back(w);
    }
    return walk;
}

}  // namespace

Labeling path_labeling(int n, const GroupSpec& g) {
    if (n < 1) fail("path_labeling requires n >= 1");
    if (n >= g.order())
        fail("no zero-avoiding labeling: the path on " + std::to_string(n) +
             " vertices is zero-forcing for a group of order " + std::to_string(g.order()));
    g.checked_order(64);
    std::vector<Element> values;
    values.reserve(n);
    for (int j = 0; j < n; ++j) values.push_back(g.sub(g.element_at(j + 1), g.element_at(j)));
    return Labeling{path_graph(n), g, std::move(values)};
}

Labeling separator_lift(const Graph& g, const GroupSpec& group, VertexSet x, const Subgroup& sub,
                        const std::vector<Element>& outside_values) {
    int n = group.checked_order(64);
    if (!x.subset_of(g.vertices())) fail("separator X outside the graph");
    if (static_cast<int>(outside_values.size()) != g.n())
        fail("component values must cover every vertex");
    GroupTable full = group_table(group);
    if (!is_subgroup_mask(full, sub.members)) fail("not a subgroup");

    std::vector<Element> values = outside_values;
    for (VertexSet comp : components_within(g, g.vertices() - x)) {
        for (int v : comp.to_vector()) {
            group.validate_element(values[v]);
            if (!((sub.members >> group.index_of(values[v])) & 1))
                fail("component label outside the subgroup at vertex " + std::to_string(v));
        }
        std::vector<int> orig;
        Graph sub_g = induced_subgraph(g, comp, &orig);
        std::vector<Element> sub_vals;
        sub_vals.reserve(orig.size());
        for (int v : orig) sub_vals.push_back(values[v]);
        if (find_zero_sum_witness(Labeling{sub_g, group, sub_vals}, CheckMode::full))
            fail("component labeling is not zero-avoiding");
    }

    std::uint64_t whole = n == 64 ? ~0ull : (1ull << n) - 1;
    lift_cut_labels(group, x, whole, sub.members, values);
    return Labeling{g, group, std::move(values)};
}

namespace {

// Subgroups K that are maximal proper inside H, i.e. no L with K < L < H.
std::uint64_t maximal_proper_within(const std::vector<Subgroup>& lattice, std::uint64_t h) {
    std::uint64_t best = 0;
    bool found = false;
    for (const Subgroup& k : lattice) {
        if (k.members == h || (k.members & h) != k.members) continue;
        bool maximal = true;
        for (const Subgroup& l : lattice) {
            if (l.members == h || l.members == k.members) continue;
            if ((l.members & h) != l.members) continue;
            if ((k.members & l.members) == k.members) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            best = k.members;
            found = true;
            break;  // lattice is sorted by (size, mask): first hit is the pick
        }
    }
    if (!found) throw std::logic_error("no maximal proper subgroup");
    return best;
}

struct TreeLabeler {
    const Graph& tree;
    const GroupSpec& group;
    const std::vector<Subgroup>& lattice;
    std::vector<Element> values;

    void label(VertexSet active, std::uint64_t h) {
        if (active.empty()) return;
        GroupTable ht = coset_table(group, h, 1);
        if (active.count() >= ht.n) throw std::logic_error("tree too large for subgroup");
        int gen = ht.smallest_generator();
        if (gen >= 0) {
            // cyclic: a fixed generator everywhere, all short sums stay nonzero
            for (int v : active.to_vector()) values[v] = ht.reps[gen];
            return;
        }
        std::uint64_t k = maximal_proper_within(lattice, h);
        int p = ht.n / std::popcount(k);
        std::vector<int> orig;
        Graph sub_tree = induced_subgraph(tree, active, &orig);
        VertexSet x_local = tree_separator(sub_tree, p, std::popcount(k));
        VertexSet x;
        for (int v : x_local.to_vector()) x.add(orig[v]);
        lift_cut_labels(group, x, h, k, values);
        for (VertexSet comp : components_within(tree, active - x)) label(comp, k);
    }
};

}  // namespace

Labeling tree_labeling(const Graph& tree, const GroupSpec& g) {
    if (!is_tree(tree)) fail("tree_labeling requires a tree");
    if (tree.n() >= g.order())
        fail("no zero-avoiding labeling: trees on >= |G| vertices can be zero-forcing");
    int n = g.checked_order(64);
    std::uint64_t whole = n == 64 ? ~0ull : (1ull << n) - 1;
    TreeLabeler labeler{tree, g, enumerate_subgroups(g), {}};
    labeler.values.assign(tree.n(), g.zero());
    labeler.label(tree.vertices(), whole);
    return Labeling{tree, g, std::move(labeler.values)};
}

Labeling cycle_labeling(int n, const GroupSpec& g) {
    if (n < 3) fail("cycle_labeling requires n >= 3");
    int order = g.checked_order(64);
    int m = static_cast<int>(g.exponent());
    if (m < 2 || static_cast<long long>(n) * m > static_cast<long long>(m - 1) * order)
        fail("cycle on " + std::to_string(n) + " vertices is zero-forcing: order exceeds (" +
             std::to_string(m - 1) + "/" + std::to_string(m) + ")*" + std::to_string(order));

    // subgroup with cyclic quotient of order m
    const Subgroup* pick = nullptr;
    std::vector<Subgroup> lattice = enumerate_subgroups(g);
    for (const Subgroup& sub : lattice) {
        if (sub.size() * m != order) continue;
        QuotientMap q = make_quotient(g, sub);
        if (q.table.is_cyclic()) {
            pick = &sub;
            break;
        }
    }
    if (!pick) throw std::logic_error("no subgroup with cyclic quotient of exponent order");

    Graph cycle = cycle_graph(n);
    VertexSet x;
    for (int i = 0; i <= m - 2; ++i)
        x.add(static_cast<int>((static_cast<long long>(i) * n + (m - 2)) / (m - 1)) % n);

    std::vector<VertexSet> arcs = components_within(cycle, cycle.vertices() - x);
    for (VertexSet arc : arcs)
        if (arc.count() >= pick->size())
            throw std::logic_error("cut spacing left an arc too long");

    std::vector<Element> enumeration = pick->member_elements(g);
    std::vector<Element> values(n, g.zero());
    for (VertexSet arc : arcs) difference_labels(g, path_walk(cycle, arc), enumeration, values);
    return separator_lift(cycle, g, x, *pick, values);
}

std::pair<Graph, Labeling> spider_from_sumset(const GroupSpec& zp, const std::set<Element>& a,
                                              const std::set<Element>& b) {
    if (!is_prime(zp.order())) fail("spider_from_sumset needs a cyclic group of prime order");
    int p = zp.checked_order(64);
    if (a.empty() || b.empty()) fail("spider_from_sumset needs nonempty sets");
    std::set<Element> s = sumset(zp, a, b);
    if (static_cast<int>(s.size()) == p) fail("A+B covers the whole group, no spider exists");
    std::set<Element> neg_s;
    for (const Element& e : s) neg_s.insert(zp.neg(e));
    std::vector<Element> c;
    for (int i = 0; i < p; ++i) {
        Element e = zp.element_at(i);
        if (!neg_s.count(e)) c.push_back(e);
    }

    std::vector<Element> av(a.begin(), a.end()), bv(b.begin(), b.end());
    int legs[3] = {static_cast<int>(av.size()) - 1, static_cast<int>(bv.size()) - 1,
                   static_cast<int>(c.size()) - 1};
    int total = 1 + legs[0] + legs[1] + legs[2];
    if (total >= p) throw std::logic_error("spider order must stay below p");

    std::vector<std::pair<int, int>> edges;
    std::vector<Element> values(total, zp.zero());
    values[0] = zp.add(zp.add(av[0], bv[0]), c[0]);
    const std::vector<Element>* seqs[3] = {&av, &bv, &c};
    int next = 1;
    for (int leg = 0; leg < 3; ++leg) {
        int prev = 0;
        for (int i = 0; i < legs[leg]; ++i) {
            values[next] = zp.sub((*seqs[leg])[i + 1], (*seqs[leg])[i]);
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    Graph g(total, edges);
    return {g, Labeling{g, zp, std::move(values)}};
}

}  // namespace zsf
