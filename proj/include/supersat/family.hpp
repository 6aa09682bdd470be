#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "supersat/detail/comb.hpp"
#include "supersat/errors.hpp"
#include "supersat/set.hpp"

namespace supersat {

/// Uniform family: duplicate-free sequence of k-subsets of [1..n].
/// Insertion order is preserved (reproducible output); equality of
/// families is as sets of sets.
template <std::size_t Words>
class BasicFamily {
public:
    using Set = BasicSet<Words>;
    using const_iterator = typename std::vector<Set>::const_iterator;

    BasicFamily() = default;

    BasicFamily(int n, int k) : n_(n), k_(k) {
        if (n < 0 || n > Set::max_ground_size || k < 0 || k > n)
            throw UsageError("family requires 0 <= k <= n <= " +
                             std::to_string(Set::max_ground_size));
    }

    int ground() const { return n_; }
    int uniformity() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    const Set& operator[](std::size_t i) const { return members_[i]; }
    const_iterator begin() const { return members_.begin(); }
    const_iterator end() const { return members_.end(); }
    const std::vector<Set>& members() const { return members_; }

    /// Adds a member; returns false when it is already present.
    bool insert(const Set& s) {
        if (s.ground() != n_)
            throw UsageError("member ground set does not match family");
        if (s.size() != k_)
            throw UsageError("member has " + std::to_string(s.size()) + " elements, family is " +
                             std::to_string(k_) + "-uniform");
        if (!index_.insert(s).second) return false;
        members_.push_back(s);
        return true;
    }

    bool contains(const Set& s) const { return index_.count(s) > 0; }

    bool same_sets(const BasicFamily& o) const {
        if (n_ != o.n_ || k_ != o.k_ || size() != o.size()) return false;
        for (const auto& m : members_)
            if (!o.contains(m)) return false;
        return true;
    }

    bool shares_member_with(const BasicFamily& o) const {
        const BasicFamily& small = size() <= o.size() ? *this : o;
        const BasicFamily& large = size() <= o.size() ? o : *this;
        for (const auto& m : small)
            if (large.contains(m)) return true;
        return false;
    }

    /// Image under a permutation of the ground set; perm[e] in [1..n] for e in [1..n].
    BasicFamily relabeled(const std::vector<int>& perm) const {
        if (perm.size() != static_cast<std::size_t>(n_) + 1)
            throw UsageError("permutation must be indexed 1..n");
        BasicFamily out(n_, k_);
        for (const auto& m : members_) {
            Set img(n_);
            for (int e : m.elements()) img.insert(perm[static_cast<std::size_t>(e)]);
            out.insert(img);
        }
        return out;
    }

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Set> members_;
    std::unordered_set<Set, typename Set::Hash> index_;
};

/// rho(f): unordered pairs {F1,F2} with |F1 ∩ F2| = t.
template <std::size_t W>
std::uint64_t count_t_pairs(const BasicFamily<W>& f, int t) {
    if (t < 0 || t >= f.uniformity())
        throw UsageError("count_t_pairs requires 0 <= t < k");
    std::uint64_t count = 0;
    const auto& m = f.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i].intersection_count(m[j]) == t) ++count;
    return count;
}

/// rho(a,b): pairs A in a, B in b with |A ∩ B| = t. The families must be
/// disjoint, otherwise pairs inside the overlap would be double counted.
template <std::size_t W>
std::uint64_t cross_t_pairs(const BasicFamily<W>& a, const BasicFamily<W>& b, int t) {
    if (a.ground() != b.ground() || a.uniformity() != b.uniformity())
        throw UsageError("cross_t_pairs requires families over the same (n,k)");
    if (t < 0 || t >= a.uniformity())
        throw UsageError("cross_t_pairs requires 0 <= t < k");
    if (a.shares_member_with(b))
        throw UsageError("cross_t_pairs requires disjoint families");
    std::uint64_t count = 0;
    for (const auto& x : a)
        for (const auto& y : b)
            if (x.intersection_count(y) == t) ++count;
    return count;
}

/// i-shadow: all i-sets contained in some member. The result is i-uniform.
template <std::size_t W>
BasicFamily<W> shadow(const BasicFamily<W>& f, int i) {
    if (i < 0 || i > f.uniformity())
        throw UsageError("shadow requires 0 <= i <= k");
    BasicFamily<W> out(f.ground(), i);
    for (const auto& m : f) {
        detail::for_each_combination(m.elements(), i, detail::CombinationGen::Order::colex,
                                     [&](const std::vector<int>& elems) {
                                         out.insert(BasicSet<W>::from_elements(f.ground(), elems));
                                     });
    }
    return out;
}

/// F[X]: members containing x, unchanged.
template <std::size_t W>
BasicFamily<W> restrict_containing(const BasicFamily<W>& f, const BasicSet<W>& x) {
    if (x.ground() != f.ground())
        throw UsageError("restriction set must share the family ground set");
    BasicFamily<W> out(f.ground(), f.uniformity());
    for (const auto& m : f)
        if (x.subset_of(m)) out.insert(m);
    return out;
}

/// F(X): members containing x, with x removed; (k - |x|)-uniform.
template <std::size_t W>
BasicFamily<W> link(const BasicFamily<W>& f, const BasicSet<W>& x) {
    if (x.ground() != f.ground())
        throw UsageError("link set must share the family ground set");
    if (x.size() > f.uniformity()) return BasicFamily<W>(f.ground(), 0);
    BasicFamily<W> out(f.ground(), f.uniformity() - x.size());
    for (const auto& m : f)
        if (x.subset_of(m)) out.insert(m - x);
    return out;
}

/// Element of maximum degree and that degree; ties go to the smallest element.
template <std::size_t W>
std::pair<int, std::uint64_t> max_degree_element(const BasicFamily<W>& f) {
    if (f.empty() || f.ground() == 0)
        throw UsageError("max_degree_element requires a nonempty family over [1..n]");
    std::vector<std::uint64_t> deg(static_cast<std::size_t>(f.ground()) + 1, 0);
    for (const auto& m : f)
        for (int e : m.elements()) ++deg[static_cast<std::size_t>(e)];
    int arg = 1;
    for (int e = 2; e <= f.ground(); ++e)
        if (deg[static_cast<std::size_t>(e)] > deg[static_cast<std::size_t>(arg)]) arg = e;
    return {arg, deg[static_cast<std::size_t>(arg)]};
}

/// True iff every element lies in at most a 1/s fraction of the members.
template <std::size_t W>
bool is_s_diverse(const BasicFamily<W>& f, double s) {
    if (s <= 0) throw UsageError("is_s_diverse requires s > 0");
    if (f.empty()) throw UsageError("is_s_diverse requires a nonempty family");
    auto [arg, deg] = max_degree_element(f);
    (void)arg;
    return static_cast<double>(deg) * s <= static_cast<double>(f.size());
}

using Family64 = BasicFamily<1>;
using Family1024 = BasicFamily<16>;

} // namespace supersat
