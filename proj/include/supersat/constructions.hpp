#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supersat/bigint.hpp"
#include "supersat/detail/comb.hpp"
#include "supersat/errors.hpp"
#include "supersat/family.hpp"
#include "supersat/params.hpp"

namespace supersat {

namespace detail {

/// Interval [lo..hi] of ground elements as a set; empty when lo > hi.
template <std::size_t W>
BasicSet<W> interval_set(int n, int lo, int hi) {
    BasicSet<W> s(n);
    for (int e = lo; e <= hi; ++e) s.insert(e);
    return s;
}

/// All k-sets containing `core`, completions drawn from `pool` in colex order.
template <std::size_t W>
void emit_star(BasicFamily<W>& out, const BasicSet<W>& core, const std::vector<int>& pool,
               std::uint64_t limit, int k) {
    const int fill = k - core.size();
    if (fill < 0) return;
    std::uint64_t taken = 0;
    CombinationGen gen(static_cast<int>(pool.size()), fill, CombinationGen::Order::colex);
    for (; !gen.done() && taken < limit; gen.advance()) {
        BasicSet<W> s = core;
        for (int idx : gen.current()) s.insert(pool[static_cast<std::size_t>(idx)]);
        if (out.insert(s)) ++taken;
    }
}

} // namespace detail

/// A1-style (t+1)-star: all k-sets containing `center`. Pairwise
/// intersections have size >= t+1, so the star is t-avoiding.
template <std::size_t W>
BasicFamily<W> full_star(const Params& p, const BasicSet<W>& center) {
    p.validate();
    if (center.ground() != p.n || center.size() != p.t + 1)
        throw UsageError("full_star requires a (t+1)-subset of [1..n] as center");
    BasicFamily<W> out(p.n, p.k);
    detail::emit_star(out, center, (center.complement()).elements(),
                      ~std::uint64_t{0}, p.k);
    return out;
}

template <std::size_t W>
BasicFamily<W> full_star(const Params& p) {
    return full_star(p, detail::interval_set<W>(p.n, 1, p.t + 1));
}

template <std::size_t W>
struct StarPlusStar {
    BasicFamily<W> family;
    BigInt predicted_edges;
    BigInt predicted_size;
};

/// The star A1 (center [t+1]) plus the first r colex members of the star A2
/// (center [t+2, 2t+2], avoiding [t+1]). Induces exactly
/// r·C(k,t)·C(n-k-t-1, k-2t-1) t-pairs, all between the two stars.
template <std::size_t W>
StarPlusStar<W> star_plus_star(const Params& p, std::uint64_t r) {
    p.validate();
    if (p.k < 2 * p.t + 2) throw UsageError("star_plus_star requires k >= 2t+2");
    if (2 * p.t + 2 > p.n) throw UsageError("star_plus_star requires n >= 2t+2");
    BigInt a2_size = binomial(p.n - 2 * p.t - 2, p.k - p.t - 1);
    if (BigInt(r) > a2_size)
        throw UsageError("star_plus_star r exceeds |A2| = " + a2_size.str());
    StarPlusStar<W> out;
    out.family = full_star<W>(p);
    // A2 members: [t+2,2t+2] plus completions from [2t+3..n]; member colex
    // order equals completion colex order because the core is fixed below.
    auto core2 = detail::interval_set<W>(p.n, p.t + 2, 2 * p.t + 2);
    std::vector<int> pool;
    for (int e = 2 * p.t + 3; e <= p.n; ++e) pool.push_back(e);
    detail::emit_star(out.family, core2, pool, r, p.k);
    out.predicted_edges =
        BigInt(r) * binomial(p.k, p.t) * binomial(p.n - p.k - p.t - 1, p.k - 2 * p.t - 1);
    out.predicted_size = binomial(p.n - p.t - 1, p.k - p.t - 1) + r;
    if (BigInt(out.family.size()) != out.predicted_size)
        throw InternalError("star_plus_star emitted size mismatch");
    return out;
}

template <std::size_t W>
struct CliqueConstruction {
    BasicFamily<W> family;
    BigInt edge_upper_bound; // rho(A3) = C(x,k)·C(k,t)·C(x-k,k-t)/2
    BigInt predicted_size;
    int x = 0;                     // smallest window width satisfying the size inequality
    std::uint64_t from_clique = 0; // members taken from A3
};

/// Smallest x with C(x,k) >= r + C(x,t)·C(n,k-2t-1).
inline std::optional<int> clique_window_width(const Params& p, std::uint64_t r) {
    for (int x = p.k; x <= p.n - p.t - 1; ++x)
        if (binomial(x, p.k) >= BigInt(r) + binomial(x, p.t) * binomial(p.n, p.k - 2 * p.t - 1))
            return x;
    return std::nullopt;
}

/// Star members far from the window [t+2, t+1+x], topped up from the clique
/// A3 = all k-subsets of the window. Every induced t-pair lies inside the
/// clique part, so rho is at most rho(A3).
template <std::size_t W>
CliqueConstruction<W> clique_construction(const Params& p, std::uint64_t r) {
    p.validate();
    if (p.k < 2 * p.t + 1) throw UsageError("clique_construction requires k >= 2t+1");
    if (r < 1) throw UsageError("clique_construction requires r >= 1");
    auto xo = clique_window_width(p, r);
    if (!xo)
        throw InfeasibleError("no window width x <= n-t-1 satisfies C(x,k) >= r + "
                              "C(x,t)C(n,k-2t-1) at these parameters");
    const int x = *xo;
    CliqueConstruction<W> out;
    out.x = x;
    out.predicted_size = binomial(p.n - p.t - 1, p.k - p.t - 1) + r;
    BigInt ell_big = out.predicted_size;
    auto window = detail::interval_set<W>(p.n, p.t + 2, p.t + 1 + x);
    // A4: star members meeting the window in < t elements
    BasicFamily<W> star = full_star<W>(p);
    out.family = BasicFamily<W>(p.n, p.k);
    for (const auto& m : star)
        if (m.intersection_count(window) < p.t) out.family.insert(m);
    BigInt need_big = ell_big - BigInt(out.family.size());
    if (need_big < 0) throw InternalError("clique_construction: A4 larger than ell");
    if (need_big > binomial(x, p.k))
        throw InternalError("clique_construction: window inequality violated");
    std::uint64_t need = to_u64(need_big);
    detail::emit_star(out.family, BasicSet<W>(p.n), window.elements(), need, p.k);
    out.from_clique = need;
    out.edge_upper_bound =
        binomial(x, p.k) * binomial(p.k, p.t) * binomial(x - p.k, p.k - p.t) / 2;
    if (BigInt(out.family.size()) != out.predicted_size)
        throw InternalError("clique_construction emitted size mismatch");
    return out;
}

template <std::size_t W>
struct SharpnessConstruction {
    BasicFamily<W> family;
    BigInt predicted_edges; // (r + C(n-2t-1,k-2t-1))·(C(k,t)-1)·C(n-k-t-1,k-2t-1)
    BigInt predicted_size;
    bool strict_improvement = false; // predicted < r·C(k,t)·d
};

/// Punctured star G1 = {G ⊇ [t+1], [t+2,2t+1] ⊄ G} plus the first
/// C(n-2t-1,k-2t-1) + r colex members of the disjoint star G2
/// (center [t+2,2t+2], avoiding [t+1]). Beats the star-plus-star count
/// exactly when r > C(n-2t-1,k-2t-1)·(C(k,t)-1).
template <std::size_t W>
SharpnessConstruction<W> sharpness_construction(const Params& p, std::uint64_t r) {
    p.validate();
    if (2 * p.t + 2 > p.n) throw UsageError("sharpness_construction requires n >= 2t+2");
    BigInt g2_take = binomial(p.n - 2 * p.t - 1, p.k - 2 * p.t - 1) + r;
    BigInt g2_size = binomial(p.n - 2 * p.t - 2, p.k - p.t - 1);
    if (g2_take > g2_size)
        throw UsageError("sharpness_construction: G2 too small (need " + g2_take.str() +
                         " of " + g2_size.str() + " members)");
    SharpnessConstruction<W> out;
    out.family = BasicFamily<W>(p.n, p.k);
    auto inner = detail::interval_set<W>(p.n, p.t + 2, 2 * p.t + 1);
    BasicFamily<W> star = full_star<W>(p);
    for (const auto& m : star)
        if (!inner.subset_of(m)) out.family.insert(m);
    auto core2 = detail::interval_set<W>(p.n, p.t + 2, 2 * p.t + 2);
    std::vector<int> pool;
    for (int e = 2 * p.t + 3; e <= p.n; ++e) pool.push_back(e);
    detail::emit_star(out.family, core2, pool, to_u64(g2_take), p.k);
    BigInt d = binomial(p.n - p.k - p.t - 1, p.k - 2 * p.t - 1);
    out.predicted_edges = g2_take * (binomial(p.k, p.t) - 1) * d;
    out.predicted_size = binomial(p.n - p.t - 1, p.k - p.t - 1) + r;
    out.strict_improvement =
        BigInt(r) > binomial(p.n - 2 * p.t - 1, p.k - 2 * p.t - 1) * (binomial(p.k, p.t) - 1);
    if (BigInt(out.family.size()) != out.predicted_size)
        throw InternalError("sharpness_construction emitted size mismatch");
    return out;
}

/// Maximal family with pairwise intersections <= t-1, grown greedily in
/// colex order. t-avoiding by construction; the Θ(n^t)-regime witness.
template <std::size_t W>
BasicFamily<W> greedy_packing(const Params& p) {
    p.validate();
    if (p.t < 1) throw UsageError("greedy_packing requires t >= 1");
    BasicFamily<W> out(p.n, p.k);
    detail::CombinationGen gen(p.n, p.k, detail::CombinationGen::Order::colex);
    for (; !gen.done(); gen.advance()) {
        BasicSet<W> s(p.n);
        for (int idx : gen.current()) s.insert(idx + 1);
        bool ok = true;
        for (const auto& m : out)
            if (m.intersection_count(s) > p.t - 1) {
                ok = false;
                break;
            }
        if (ok) out.insert(s);
    }
    return out;
}

/// First m k-sets of [1..n] in lexicographic order.
template <std::size_t W>
BasicFamily<W> lex_family(const Params& p, std::uint64_t m) {
    p.validate();
    if (BigInt(m) > binomial(p.n, p.k))
        throw UsageError("lex_family size exceeds C(n,k)");
    BasicFamily<W> out(p.n, p.k);
    detail::CombinationGen gen(p.n, p.k, detail::CombinationGen::Order::lex);
    for (std::uint64_t taken = 0; taken < m && !gen.done(); gen.advance(), ++taken) {
        BasicSet<W> s(p.n);
        for (int idx : gen.current()) s.insert(idx + 1);
        out.insert(s);
    }
    return out;
}

} // namespace supersat
