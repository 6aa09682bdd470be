#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supersat/bigint.hpp"
#include "supersat/detail/comb.hpp"
#include "supersat/detail/implicit_graph.hpp"
#include "supersat/errors.hpp"
#include "supersat/family.hpp"
#include "supersat/params.hpp"
#include "supersat/set.hpp"

namespace supersat {

/// Closed forms for G(n,k,t): |V| = C(n,k), per-vertex degree
/// C(k,t)·C(n-k,k-t), |E| = |V|·degree/2.
struct JohnsonParams {
    Params p;
    BigInt vertex_count;
    BigInt degree;
    BigInt edge_count;
};

inline JohnsonParams johnson_params(const Params& p) {
    p.validate();
    JohnsonParams jp;
    jp.p = p;
    jp.vertex_count = binomial(p.n, p.k);
    jp.degree = binomial(p.k, p.t) * binomial(p.n - p.k, p.k - p.t);
    BigInt twice = jp.vertex_count * jp.degree;
    if (twice % 2 != 0) throw InternalError("|V|*degree must be even");
    jp.edge_count = twice / 2;
    return jp;
}

/// All k-sets u with |u ∩ v| = t.
template <std::size_t W>
BasicFamily<W> neighbors(const BasicSet<W>& v, const Params& p) {
    p.validate();
    if (v.ground() != p.n || v.size() != p.k)
        throw UsageError("neighbors requires a k-subset of [1..n]");
    BasicFamily<W> out(p.n, p.k);
    std::vector<int> inside = v.elements();
    std::vector<int> outside = v.complement().elements();
    detail::for_each_combination(
        inside, p.t, detail::CombinationGen::Order::colex, [&](const std::vector<int>& shared) {
            detail::for_each_combination(
                outside, p.k - p.t, detail::CombinationGen::Order::colex,
                [&](const std::vector<int>& fresh) {
                    BasicSet<W> u(p.n);
                    for (int e : shared) u.insert(e);
                    for (int e : fresh) u.insert(e);
                    out.insert(u);
                });
        });
    return out;
}

/// N_B: all k-sets K containing the (t+1)-set c with |K ∩ b| = t.
/// For b ∩ c = ∅ its size is C(k,t)·C(n-k-t-1, k-2t-1).
template <std::size_t W>
BasicFamily<W> star_neighborhood(const BasicSet<W>& b, const BasicSet<W>& c, const Params& p) {
    p.validate();
    if (b.ground() != p.n || c.ground() != p.n)
        throw UsageError("star_neighborhood arguments must live in [1..n]");
    if (b.size() != p.k) throw UsageError("star_neighborhood requires |b| = k");
    if (c.size() != p.t + 1) throw UsageError("star_neighborhood requires |c| = t+1");
    if (c.subset_of(b)) throw UsageError("star_neighborhood requires b not containing c");
    BasicFamily<W> out(p.n, p.k);
    const int overlap = b.intersection_count(c);
    const int pick_from_b = p.t - overlap; // remaining shared elements, outside c
    if (pick_from_b < 0) return out;       // |K ∩ b| >= |b ∩ c| > t is forced; no such K
    std::vector<int> b_only = (b - c).elements();
    std::vector<int> rest = (b | c).complement().elements();
    const int fill = p.k - (p.t + 1) - pick_from_b;
    if (fill < 0) return out;
    detail::for_each_combination(
        b_only, pick_from_b, detail::CombinationGen::Order::colex,
        [&](const std::vector<int>& shared) {
            detail::for_each_combination(rest, fill, detail::CombinationGen::Order::colex,
                                         [&](const std::vector<int>& fresh) {
                                             BasicSet<W> u(p.n);
                                             for (int e : c.elements()) u.insert(e);
                                             for (int e : shared) u.insert(e);
                                             for (int e : fresh) u.insert(e);
                                             out.insert(u);
                                         });
        });
    return out;
}

enum class AlphaRegime { exact_formula, theta_nt, computed_exact };

inline const char* to_string(AlphaRegime r) {
    switch (r) {
        case AlphaRegime::exact_formula: return "exact_formula";
        case AlphaRegime::theta_nt: return "theta_nt";
        case AlphaRegime::computed_exact: return "computed_exact";
    }
    return "?";
}

/// Independence-number value with its provenance. exact_formula carries the
/// caveat that the closed form is proven only for n beyond an unknown n0,
/// so it is never marked certified; theta_nt is a witness-backed lower
/// bound in the k <= 2t+1 regime.
struct AlphaValue {
    BigInt value;
    AlphaRegime regime = AlphaRegime::computed_exact;
    bool certified = false;
    BigInt lower;  // certified bracket (meaningful when not certified)
    BigInt upper;
    std::uint64_t nodes_expanded = 0;
};

struct AlphaBudget {
    std::uint64_t node_cap = 100'000'000;
    std::size_t max_vertices = 4096;
};

/// C(n-t-1, k-t-1), the closed form valid for k > 2t+1 and large n.
inline AlphaValue alpha_formula(const Params& p) {
    p.validate();
    if (p.k <= 2 * p.t + 1)
        throw UsageError("alpha formula mode requires k > 2t+1");
    AlphaValue a;
    a.value = binomial(p.n - p.t - 1, p.k - p.t - 1);
    a.regime = AlphaRegime::exact_formula;
    a.certified = false; // conjectural at any concrete n
    a.lower = 0;
    a.upper = binomial(p.n, p.k);
    return a;
}

namespace detail {

struct MisSearch {
    const std::vector<DynBits>* adj;
    std::uint64_t node_cap;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    std::size_t best = 0;
    std::vector<std::size_t> best_set;
    std::vector<std::size_t> current;
    // sound alpha upper bound even when aborted: max over abandoned frontiers
    std::size_t frontier_upper = 0;

    void run(const DynBits& pool) {
        expand(pool);
        if (!budget_hit) frontier_upper = best;
    }

    void expand(const DynBits& pool) {
        if (budget_hit) return;
        if (++nodes > node_cap) {
            budget_hit = true;
            frontier_upper = std::max(frontier_upper, current.size() + pool.count());
            return;
        }
        if (!pool.any()) {
            if (current.size() > best) {
                best = current.size();
                best_set = current;
            }
            return;
        }
        std::size_t ub = current.size() + greedy_clique_cover_sizes(*adj, pool).size();
        if (ub <= best) return;
        // branch on the pool vertex of max degree within the pool
        std::size_t v = pool.first();
        std::size_t vdeg = 0;
        pool.for_each([&](std::size_t u) {
            std::size_t d = (*adj)[u].count_and(pool);
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        });
        DynBits incl = pool;
        incl.reset(v);
        incl.subtract((*adj)[v]);
        current.push_back(v);
        expand(incl);
        current.pop_back();
        if (budget_hit) {
            frontier_upper = std::max(frontier_upper, ub);
            return;
        }
        DynBits excl = pool;
        excl.reset(v);
        expand(excl);
        if (budget_hit) frontier_upper = std::max(frontier_upper, ub);
    }
};

} // namespace detail

template <std::size_t W>
struct AlphaSearchResult {
    AlphaValue alpha;
    BasicFamily<W> witness;
};

/// Certified independence number by branch-and-bound over the materialized
/// graph. Throws ResourceError with the best bracket when the node budget
/// or vertex cap is exceeded.
template <std::size_t W>
AlphaSearchResult<W> alpha_exact(const Params& p, const AlphaBudget& budget = {}) {
    auto uni = detail::VertexUniverse<W>::build(p, budget.max_vertices);
    detail::DynBits pool(uni.size());
    for (std::size_t i = 0; i < uni.size(); ++i) pool.set(i);
    detail::MisSearch search;
    search.adj = &uni.adj;
    search.node_cap = budget.node_cap;
    search.run(pool);
    AlphaSearchResult<W> res;
    res.witness = BasicFamily<W>(p.n, p.k);
    for (std::size_t v : search.best_set) res.witness.insert(uni.verts[v]);
    res.alpha.value = search.best;
    res.alpha.regime = AlphaRegime::computed_exact;
    res.alpha.certified = !search.budget_hit;
    res.alpha.lower = search.best;
    res.alpha.upper = search.budget_hit ? BigInt(std::max(search.frontier_upper, search.best))
                                        : BigInt(search.best);
    res.alpha.nodes_expanded = search.nodes;
    if (search.budget_hit)
        throw ResourceError("alpha search budget exhausted; bracket [" + res.alpha.lower.str() +
                            ", " + res.alpha.upper.str() + "]");
    return res;
}

/// Spec surface: formula mode (k > 2t+1 closed form) or certified search.
template <std::size_t W>
AlphaValue alpha(const Params& p, bool exact_mode, const AlphaBudget& budget = {}) {
    if (!exact_mode) return alpha_formula(p);
    return alpha_exact<W>(p, budget).alpha;
}

} // namespace supersat
