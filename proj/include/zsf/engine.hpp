#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zsf/graph.hpp"
#include "zsf/group.hpp"

namespace zsf {

// Total assignment of group elements to the vertices of a graph.
struct Labeling {
    Graph graph;
    GroupSpec group;
    std::vector<Element> values;
};

Labeling make_labeling(Graph g, GroupSpec group, std::vector<Element> values);  // validates

// Sum of the labels over a vertex set.
Element label_sum(const Labeling& l, VertexSet s);

enum class CheckMode { full, bounded };

// Size bound for witnesses: any labeled graph that is not zero-avoiding has a
// connected zero-sum set of at most this many vertices. 1 for the trivial
// group, p for prime order p, otherwise max(|G|, (|G|-2)(D(G)-1)/2 + 1); the
// max with |G| covers witnesses that are long paths. Always <= |G|^2.
int witness_bound(const GroupSpec& g);

// First connected zero-sum vertex set in enumeration order, or nullopt when the
// labeling is zero-avoiding. `bounded` only scans sets up to witness_bound,
// which is sound and complete by the size bound above.
std::optional<VertexSet> find_zero_sum_witness(const Labeling& l, CheckMode mode);

// All label sums over connected sets containing v. For trees this runs the
// subtree dynamic program; brute-force enumeration is the test oracle.
struct ConnectedSums {
    int vertex = 0;
    std::set<Element> values;
};

ConnectedSums connected_sums_at(const Labeling& l, int v);  // requires a tree

enum class VerdictKind { forcing, not_forcing, unknown };

std::string to_string(VerdictKind k);

struct SearchStats {
    std::uint64_t nodes = 0;   // partial labelings explored
    std::uint64_t prunes = 0;  // branches cut by a zero-sum prefix set
    double ms = 0.0;
};

struct Verdict {
    VerdictKind kind = VerdictKind::unknown;
    std::optional<Labeling> certificate;  // zero-avoiding labeling when not_forcing
    SearchStats stats;
};

struct DecideOptions {
    std::uint64_t budget = 100'000'000;  // max partial labelings before giving up
    int jobs = 1;
    bool symmetry = false;  // restrict the first label to one per automorphism orbit
};

// Exhaustive backtracking over labelings in BFS vertex order; a branch dies as
// soon as the labeled prefix contains a connected zero-sum set of size up to
// witness_bound through the newest vertex. Verdict is schedule-independent.
Verdict decide_zero_forcing(const Graph& g, const GroupSpec& group,
                            const DecideOptions& opts = {});

// Orbits of the group's automorphism action on elements; index of one
// representative (the smallest element index) per orbit. Falls back to all
// indices when the automorphism enumeration would be too large.
std::vector<int> element_orbit_representatives(const GroupSpec& g);

}  // namespace zsf
