#include "zsf/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zsf {

namespace {

long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

}  // namespace

std::string to_string(const Element& e) {
    if (e.residues.empty()) return "()";
    if (e.residues.size() == 1) return std::to_string(e.residues[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < e.residues.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.residues[i]);
    }
    return s + ")";
}

GroupSpec::GroupSpec(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int f : factors_) {
        if (f < 2) fail("group factor must be >= 2");
        if (order_ > (1LL << 40)) fail("group order out of range");
        order_ *= f;
        exponent_ = lcm_ll(exponent_, f);
    }
}

GroupSpec GroupSpec::parse(std::string_view text) {
    if (text.empty()) fail("empty group spec");
    std::vector<int> factors;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (std::tolower(static_cast<unsigned char>(text[pos])) != 'x')
                fail("expected 'x' separator in group spec");
            ++pos;
        }
        if (pos >= text.size() || std::tolower(static_cast<unsigned char>(text[pos])) != 'z')
            fail("expected 'Z<n>' in group spec: " + std::string(text));
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("missing factor size in group spec: " + std::string(text));
        long long n = 0;
        for (std::size_t i = start; i < pos; ++i) {
            n = n * 10 + (text[i] - '0');
            if (n > (1LL << 40)) fail("group factor out of range");
        }
        if (n < 1) fail("group factor must be >= 1");
        factors.push_back(static_cast<int>(n));
        first = false;
    }
    if (factors.size() == 1 && factors[0] == 1) return GroupSpec{};  // trivial group
    return GroupSpec(std::move(factors));
}

int GroupSpec::checked_order(int cap) const {
    if (order_ > cap)
        fail("group order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap));
    return static_cast<int>(order_);
}

std::string GroupSpec::to_string() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(factors_[i]);
    }
    return s;
}

long long GroupSpec::index_of(const Element& e) const {
    validate_element(e);
    long long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + e.residues[i];
    return idx;
}

Element GroupSpec::element_at(long long index) const {
    if (index < 0 || index >= order_) fail("element index out of range");
    Element e;
    e.residues.resize(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        e.residues[i] = static_cast<int>(index % factors_[i]);
        index /= factors_[i];
    }
    return e;
}

Element GroupSpec::zero() const {
    return Element{std::vector<int>(factors_.size(), 0)};
}

Element GroupSpec::add(const Element& a, const Element& b) const {
    validate_element(a);
    validate_element(b);
    Element r;
    r.residues.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
    return r;
}

Element GroupSpec::neg(const Element& a) const {
    validate_element(a);
    Element r;
    r.residues.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        r.residues[i] = a.residues[i] == 0 ? 0 : factors_[i] - a.residues[i];
    return r;
}

Element GroupSpec::sub(const Element& a, const Element& b) const {
    return add(a, neg(b));
}

long long GroupSpec::element_order(const Element& a) const {
    validate_element(a);
    long long t = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long long fi = factors_[i];
        t = lcm_ll(t, fi / std::gcd(fi, static_cast<long long>(a.residues[i])));
    }
    return t;
}

void GroupSpec::validate_element(const Element& e) const {
    if (e.residues.size() != factors_.size())
        fail("element dimension mismatch: got " + std::to_string(e.residues.size()) +
             " residues, group has " + std::to_string(factors_.size()) + " factors");
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (e.residues[i] < 0 || e.residues[i] >= factors_[i])
            fail("element residue out of range: " + zsf::to_string(e));
}

void GroupSpec::cache_davenport(int value) const {
    if (value < exponent_ || value > order_)
        throw std::logic_error("davenport cache outside [exponent, order]");
    dav_->store(value, std::memory_order_relaxed);
}

int Subgroup::size() const {
    return std::popcount(members);
}

std::vector<int> Subgroup::member_indices() const {
    std::vector<int> out;
    for (std::uint64_t m = members; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<Element> Subgroup::member_elements(const GroupSpec& g) const {
    std::vector<Element> out;
    for (int i : member_indices()) out.push_back(g.element_at(i));
    return out;
}

bool GroupTable::is_cyclic() const {
    return smallest_generator() >= 0;
}

int GroupTable::smallest_generator() const {
    for (int i = 0; i < n; ++i)
        if (elem_order[i] == n) return i;
    return -1;
}

GroupTable group_table(const GroupSpec& g, int order_cap) {
    int n = g.checked_order(order_cap);
    return coset_table(g, n == 64 ? ~0ull : (1ull << n) - 1, 1, order_cap);
}

GroupTable coset_table(const GroupSpec& g, std::uint64_t big_members,
                       std::uint64_t small_members, int order_cap) {
    int n = g.checked_order(order_cap);
    if ((small_members & big_members) != small_members)
        fail("coset_table: small subgroup not contained in big");
    if (!(big_members & 1) || !(small_members & 1))
        fail("coset_table: subgroup must contain the identity");

    // Raw addition on parent element indices.
    std::vector<int> raw_add(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        Element ea = g.element_at(a);
        for (int b = 0; b < n; ++b)
            raw_add[static_cast<std::size_t>(a) * n + b] =
                static_cast<int>(g.index_of(g.add(ea, g.element_at(b))));
    }

    // Partition big into cosets of small, ordered by smallest member.
    std::vector<int> coset_of(n, -1);
    std::vector<int> rep_of_coset;
    for (int a = 0; a < n; ++a) {
        if (!((big_members >> a) & 1) || coset_of[a] >= 0) continue;
        int id = static_cast<int>(rep_of_coset.size());
        rep_of_coset.push_back(a);
        for (std::uint64_t m = small_members; m; m &= m - 1) {
            int k = std::countr_zero(m);
            coset_of[raw_add[static_cast<std::size_t>(a) * n + k]] = id;
        }
    }

    GroupTable t;
    t.n = static_cast<int>(rep_of_coset.size());
    t.add.resize(static_cast<std::size_t>(t.n) * t.n);
    t.neg.resize(t.n);
    t.elem_order.resize(t.n);
    t.reps.reserve(t.n);
    t.parent_slot = coset_of;
    for (int i = 0; i < t.n; ++i) t.reps.push_back(g.element_at(rep_of_coset[i]));
    for (int i = 0; i < t.n; ++i) {
        int ri = rep_of_coset[i];
        for (int j = 0; j < t.n; ++j) {
            int s = raw_add[static_cast<std::size_t>(ri) * n + rep_of_coset[j]];
            t.add[static_cast<std::size_t>(i) * t.n + j] = static_cast<std::uint8_t>(coset_of[s]);
        }
        t.neg[i] = static_cast<std::uint8_t>(
            coset_of[static_cast<int>(g.index_of(g.neg(g.element_at(ri))))]);
    }
    for (int i = 0; i < t.n; ++i) {
        int ord = 1, acc = i;
        while (acc != 0) {
            acc = t.add_of(acc, i);
            ++ord;
        }
        t.elem_order[i] = ord;
    }
    return t;
}

GroupSpec isomorphism_type(const GroupTable& t) {
    if (t.n == 1) return GroupSpec{};
    std::vector<int> factors;
    int n = t.n;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        // e_k = #{cyclic p-factors with exponent >= k}, read off from the counts
        // of elements killed by p^k.
        std::vector<int> heights;
        long long prev = 1;
        long long pk = 1;
        while (true) {
            pk *= p;
            long long count = 0;
            for (int i = 0; i < t.n; ++i)
                if (pk % t.elem_order[i] == 0) ++count;
            if (count == prev) break;
            int e = 0;
            long long ratio = count / prev;
            while (ratio > 1) {
                ratio /= p;
                ++e;
            }
            heights.push_back(e);
            prev = count;
        }
        int rank = heights.empty() ? 0 : heights[0];
        for (int i = 1; i <= rank; ++i) {
            int lambda = 0;
            for (int h : heights)
                if (h >= i) ++lambda;
            long long f = 1;
            for (int j = 0; j < lambda; ++j) f *= p;
            factors.push_back(static_cast<int>(f));
        }
    }
    std::sort(factors.begin(), factors.end());
    GroupSpec spec{factors};
    if (spec.order() != t.n) throw std::logic_error("isomorphism_type: order mismatch");
    return spec;
}

QuotientMap make_quotient(const GroupSpec& g, const Subgroup& sub) {
    int n = g.checked_order(64);
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    GroupTable full = group_table(g);
    if (!is_subgroup_mask(full, sub.members)) fail("make_quotient: not a subgroup");
    QuotientMap q;
    q.parent = g;
    q.subgroup = sub;
    q.table = coset_table(g, all, sub.members);
    q.quotient_spec = isomorphism_type(q.table);
    q.coset_of = q.table.parent_slot;
    return q;
}

int QuotientMap::project(const Element& e) const {
    return coset_of[static_cast<int>(parent.index_of(e))];
}

bool is_subgroup_mask(const GroupTable& full, std::uint64_t members) {
    if (!(members & 1)) return false;
    for (std::uint64_t m = members; m; m &= m - 1) {
        int a = std::countr_zero(m);
        if (a >= full.n) return false;
        if (!((members >> full.neg[a]) & 1)) return false;
        for (std::uint64_t m2 = members; m2; m2 &= m2 - 1)
            if (!((members >> full.add_of(a, std::countr_zero(m2))) & 1)) return false;
    }
    return true;
}

namespace {

std::uint64_t closure(const GroupTable& full, std::uint64_t seed) {
    std::uint64_t set = seed | 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::uint64_t m = set; m; m &= m - 1) {
            int a = std::countr_zero(m);
            for (std::uint64_t m2 = set; m2; m2 &= m2 - 1) {
                int s = full.add_of(a, std::countr_zero(m2));
                if (!((set >> s) & 1)) {
                    set |= 1ull << s;
                    grew = true;
                }
            }
        }
    }
    return set;
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const GroupSpec& g, int order_cap) {
    int n = g.checked_order(order_cap);
    GroupTable full = group_table(g, order_cap);
    std::set<std::uint64_t> found{1ull};
    std::vector<std::uint64_t> work{1ull};
    while (!work.empty()) {
        std::uint64_t h = work.back();
        work.pop_back();
        for (int a = 0; a < n; ++a) {
            if ((h >> a) & 1) continue;
            std::uint64_t k = closure(full, h | (1ull << a));
            if (found.insert(k).second) work.push_back(k);
        }
    }
    std::vector<Subgroup> out;
    for (std::uint64_t m : found) out.push_back(Subgroup{m, n, false});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    std::uint64_t whole = n == 64 ? ~0ull : (1ull << n) - 1;
    for (Subgroup& h : out) {
        if (h.members == whole) continue;
        bool maximal = true;
        for (const Subgroup& k : out) {
            if (k.members == whole || k.members == h.members) continue;
            if ((h.members & k.members) == h.members) {
                maximal = false;
                break;
            }
        }
        h.maximal_proper = maximal;
    }
    return out;
}

namespace {

// DFS over nondecreasing sequences of nonzero table indices, pruning as soon as
// the achievable nonempty subset sums include the identity. `sums` is a bitmask
// over table indices; bit 0 set means a zero-sum subsequence exists.
struct ZeroSumFreeSearch {
    const GroupTable& t;
    int best = 0;
    int target = -1;  // when >= 0, stop at first sequence of this length
    std::vector<int> current;
    std::vector<int> found;

    explicit ZeroSumFreeSearch(const GroupTable& table) : t(table) {}

    std::uint64_t extend(std::uint64_t sums, int e) const {
        std::uint64_t out = sums | (1ull << e);
        for (std::uint64_t m = sums; m; m &= m - 1)
            out |= 1ull << t.add_of(std::countr_zero(m), e);
        return out;
    }

    bool dfs(std::uint64_t sums, int min_elem, int length) {
        best = std::max(best, length);
        if (target >= 0 && length == target) {
            found = current;
            return true;
        }
        // every extension adds at least one achievable sum and sums stay
        // nonzero, so at most n-1-|sums| more elements fit
        int reachable = length + (t.n - 1 - std::popcount(sums));
        if (target >= 0 ? reachable < target : reachable <= best) return false;
        for (int e = std::max(min_elem, 1); e < t.n; ++e) {
            std::uint64_t next = extend(sums, e);
            if (next & 1) continue;
            current.push_back(e);
            if (dfs(next, e, length + 1)) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

int davenport(const GroupTable& t) {
    ZeroSumFreeSearch search(t);
    search.dfs(0, 1, 0);
    return search.best + 1;
}

int davenport(const GroupSpec& g, int order_cap) {
    if (int cached = g.cached_davenport(); cached > 0) return cached;
    int d = davenport(group_table(g, order_cap));
    g.cache_davenport(d);
    return d;
}

std::optional<std::vector<int>> zero_sum_free_sequence(const GroupTable& t, int length) {
    if (length < 0) fail("zero_sum_free_sequence: negative length");
    if (length == 0) return std::vector<int>{};
    ZeroSumFreeSearch search(t);
    search.target = length;
    if (!search.dfs(0, 1, 0)) return std::nullopt;
    return search.found;
}

std::optional<std::vector<Element>> zero_sum_free_sequence(const GroupSpec& g, int length,
                                                           int order_cap) {
    GroupTable t = group_table(g, order_cap);
    auto idx = zero_sum_free_sequence(t, length);
    if (!idx) return std::nullopt;
    std::vector<Element> out;
    out.reserve(idx->size());
    for (int i : *idx) out.push_back(t.reps[i]);
    return out;
}

std::set<Element> sumset(const GroupSpec& g, const std::set<Element>& a,
                         const std::set<Element>& b) {
    if (a.empty() || b.empty()) fail("sumset requires nonempty operands");
    std::set<Element> out;
    for (const Element& x : a)
        for (const Element& y : b) out.insert(g.add(x, y));
    return out;
}

namespace {

void factor_lists(int n, int min_factor, std::vector<int>& acc,
                  std::vector<std::vector<int>>& out) {
    if (n == 1) {
        out.push_back(acc);
        return;
    }
    for (int f = min_factor; f <= n; ++f) {
        if (n % f != 0) continue;
        acc.push_back(f);
        factor_lists(n / f, f, acc, out);
        acc.pop_back();
    }
}

std::vector<int> prime_power_key(const std::vector<int>& factors) {
    std::vector<int> key;
    for (int f : factors) {
        int rest = f;
        for (int p = 2; rest > 1; ++p) {
            if (rest % p != 0) continue;
            int pk = 1;
            while (rest % p == 0) {
                rest /= p;
                pk *= p;
            }
            key.push_back(pk);
        }
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

std::vector<GroupSpec> abelian_groups_of_order(int n) {
    if (n < 1) fail("group order must be >= 1");
    if (n == 1) return {GroupSpec{}};
    std::vector<std::vector<int>> lists;
    std::vector<int> acc;
    factor_lists(n, 2, acc, lists);
    std::map<std::vector<int>, GroupSpec> by_type;
    for (const auto& f : lists) {
        std::vector<int> key = prime_power_key(f);
        if (!by_type.count(key)) by_type.emplace(key, GroupSpec{key});
    }
    std::vector<GroupSpec> out;
    for (auto& [key, spec] : by_type) out.push_back(spec);
    return out;
}

}  // namespace zsf
