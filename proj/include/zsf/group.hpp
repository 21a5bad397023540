#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace zsf {

// One residue per cyclic factor, reduced modulo that factor.
struct Element {
    std::vector<int> residues;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

std::string to_string(const Element& e);

// A finite abelian group given as a product of cyclic factors Z_n1 x ... x Z_nk.
// The factor list keeps its input order. Elements are residue vectors; the
// canonical element enumeration is lexicographic in the residues, so index 0 is
// the identity.
class GroupSpec {
public:
    GroupSpec() = default;  // trivial group, zero factors
    explicit GroupSpec(std::vector<int> factors);

    // Grammar: `Z<n>` joined by `x`, case-insensitive, no whitespace, each n >= 2.
    // The trivial group is written "Z1".
    static GroupSpec parse(std::string_view text);

    const std::vector<int>& factors() const { return factors_; }
    long long order() const { return order_; }
    long long exponent() const { return exponent_; }
    int rank() const { return static_cast<int>(factors_.size()); }

    // order() narrowed to int, throwing when it exceeds `cap`.
    int checked_order(int cap = 64) const;

    std::string to_string() const;

    // Canonical enumeration: index <-> residue vector.
    long long index_of(const Element& e) const;
    Element element_at(long long index) const;

    Element zero() const;
    Element add(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;
    long long element_order(const Element& a) const;  // least t >= 1 with t*a = 0

    void validate_element(const Element& e) const;

    // Davenport constant cache, shared across copies; 0 means unset.
    int cached_davenport() const { return dav_->load(std::memory_order_relaxed); }
    void cache_davenport(int value) const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<int> factors_;
    long long order_ = 1;
    long long exponent_ = 1;
    std::shared_ptr<std::atomic<int>> dav_ = std::make_shared<std::atomic<int>>(0);
};

// Subgroup of a group of order <= 64, stored as a bitmask of element indices.
struct Subgroup {
    std::uint64_t members = 1;  // identity always present
    int parent_order = 1;
    bool maximal_proper = false;

    int size() const;
    int index() const { return parent_order / size(); }
    bool contains_index(int elem_index) const { return (members >> elem_index) & 1u; }
    std::vector<int> member_indices() const;
    std::vector<Element> member_elements(const GroupSpec& g) const;
};

// Dense arithmetic table for a group of order <= 64, for the group itself, a
// subgroup, or a quotient. Index 0 is always the identity; `reps` maps a table
// index back to a representative element of the parent group.
struct GroupTable {
    int n = 1;
    std::vector<std::uint8_t> add;   // n*n, row-major
    std::vector<std::uint8_t> neg;
    std::vector<int> elem_order;
    std::vector<Element> reps;
    std::vector<int> parent_slot;  // parent element index -> table index, -1 if absent

    int add_of(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
    bool is_cyclic() const;
    int smallest_generator() const;  // -1 when not cyclic
};

GroupTable group_table(const GroupSpec& g, int order_cap = 64);

// Structure of big/small, the cosets of `small` inside `big` (both subgroup
// masks over element indices, small ⊆ big). Coset 0 is the identity coset and
// reps are the smallest-index member of each coset.
GroupTable coset_table(const GroupSpec& g, std::uint64_t big_members,
                       std::uint64_t small_members, int order_cap = 64);

// Isomorphism type of an abstract abelian group table as a product of cyclic
// prime-power factors, sorted ascending.
GroupSpec isomorphism_type(const GroupTable& t);

struct QuotientMap {
    GroupSpec parent;
    Subgroup subgroup;
    GroupSpec quotient_spec;      // isomorphism type of the quotient
    GroupTable table;             // arithmetic on coset ids; reps = coset representatives
    std::vector<int> coset_of;    // parent element index -> coset id

    int project_index(int elem_index) const { return coset_of[elem_index]; }
    int project(const Element& e) const;
    const Element& coset_rep(int coset) const { return table.reps[coset]; }
};

QuotientMap make_quotient(const GroupSpec& g, const Subgroup& sub);

// All subgroups, sorted by (size, member mask), each flagged maximal-proper.
std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g, int order_cap = 64);

bool is_subgroup_mask(const GroupTable& full, std::uint64_t members);

// Davenport constant: least n such that every length-n sequence over the group
// has a nonempty zero-sum subsequence. Exhaustive search; cached on the GroupSpec.
int davenport(const GroupSpec& g, int order_cap = 64);
int davenport(const GroupTable& t);

// A sequence of `length` elements with no nonempty zero-sum subsequence, or
// nullopt exactly when length >= davenport. Deterministic: lexicographically
// least nondecreasing witness.
std::optional<std::vector<Element>> zero_sum_free_sequence(const GroupSpec& g, int length,
                                                           int order_cap = 64);
std::optional<std::vector<int>> zero_sum_free_sequence(const GroupTable& t, int length);

std::set<Element> sumset(const GroupSpec& g, const std::set<Element>& a,
                         const std::set<Element>& b);

// Abelian groups of order n up to isomorphism, one spec each (prime-power
// factors, ascending).
std::vector<GroupSpec> abelian_groups_of_order(int n);

}  // namespace zsf
