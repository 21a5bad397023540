#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "zsf/graph.hpp"
#include "zsf/group.hpp"

namespace zsf {

// Graph argument: named shortcut (Pn, Cn, Kn, K1,k, RxC grid), edge-list text
// or graph6.
Graph parse_graph_arg(const std::string& text);

// Comma-separated per-vertex labels; residues of one element joined by ':'
// for groups with several factors, e.g. "1:0,0:1" over Z2xZ2.
std::vector<Element> parse_labels(const GroupSpec& g, int n, const std::string& text);
std::set<Element> parse_element_set(const GroupSpec& g, const std::string& text);

// Exit codes: 0 success (decide: forcing / check: avoiding / verify: all
// rows pass), 1 negative answer or failed rows, 2 budget exhausted, 64 usage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsf
