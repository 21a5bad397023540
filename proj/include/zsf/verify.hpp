#pragma once

#include <string>
#include <vector>

#include "zsf/engine.hpp"
#include "zsf/group.hpp"

namespace zsf {

// One comparison of an engine verdict against a closed-form prediction.
struct VerifyRow {
    std::string instance;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct VerifyResult {
    std::string suite;
    std::vector<VerifyRow> rows;
    int unknown = 0;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0 && unknown == 0; }
};

// P_n is forcing iff n >= |G|; rows for n = 1..max_n.
VerifyResult verify_paths(const GroupSpec& g, int max_n, const DecideOptions& opts = {});

// Over Z_p every connected graph on p vertices is forcing and every connected
// graph on p-1 vertices is not; exhaustive over isomorphism classes, p <= 5.
VerifyResult verify_prime(int p, const DecideOptions& opts = {});

// C_n is forcing iff m(n-1) >= (m-1)|G| with m the exponent; rows n = 3..max_n.
VerifyResult verify_cycles(const GroupSpec& g, int max_n, const DecideOptions& opts = {});

// No tree below |G| vertices is forcing and the constructed labeling verifies
// zero-avoiding; P_{|G|} is forcing. Exhaustive over tree classes, order <= 8.
VerifyResult verify_trees(const GroupSpec& g, const DecideOptions& opts = {});

// Rows of the k x k grid form a scattered bramble of order k; when k and k+1
// reach the Davenport constant the grid must be forcing.
VerifyResult verify_bramble(int k, const GroupSpec& g, const DecideOptions& opts = {});

// Scan all graphs up to max_vertices: a graph forcing for the cyclic group of
// the given order should be forcing for every abelian group of that order.
// Counterexample rows would be new data, not a bug.
VerifyResult verify_monotone(int order, int max_vertices, const DecideOptions& opts = {});

}  // namespace zsf
