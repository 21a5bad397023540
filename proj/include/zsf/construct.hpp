#pragma once

#include <set>
#include <utility>
#include <vector>

#include "zsf/engine.hpp"
#include "zsf/graph.hpp"
#include "zsf/group.hpp"

namespace zsf {

// Zero-avoiding labeling of the path on n vertices, n < |G|: consecutive
// differences of the canonical element enumeration.
Labeling path_labeling(int n, const GroupSpec& g);

// Combine zero-avoiding labelings of the components of g - X, all with values
// inside `sub`, into a zero-avoiding labeling of g: X receives a lifted
// zero-sum-free sequence of the quotient, so every connected set meeting X sums
// outside the subgroup. Requires |X| < D(G/sub). `outside_values` holds the
// component labels per vertex; entries at X are ignored.
Labeling separator_lift(const Graph& g, const GroupSpec& group, VertexSet x, const Subgroup& sub,
                        const std::vector<Element>& outside_values);

// Zero-avoiding labeling of any tree on fewer than |G| vertices: recursive
// separator construction down a maximal-subgroup chain.
Labeling tree_labeling(const Graph& tree, const GroupSpec& g);

// Zero-avoiding labeling of the cycle on n vertices when n*m <= (m-1)*|G| with
// m the exponent: cut vertices lifted over a subgroup with cyclic quotient of
// order m, arcs labeled inside the subgroup.
Labeling cycle_labeling(int n, const GroupSpec& g);

// Spider with legs built from consecutive differences of A, B and
// C = Z_p \ -(A+B), center labeled a1+b1+c1. Zero-avoiding by construction;
// its order being below p recovers the Cauchy-Davenport inequality. Requires
// A, B nonempty and A+B != Z_p; the group must be cyclic of prime order.
std::pair<Graph, Labeling> spider_from_sumset(const GroupSpec& zp, const std::set<Element>& a,
                                              const std::set<Element>& b);

}  // namespace zsf
