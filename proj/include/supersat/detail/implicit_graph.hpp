#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "supersat/bigint.hpp"
#include "supersat/detail/comb.hpp"
#include "supersat/detail/dynbits.hpp"
#include "supersat/errors.hpp"
#include "supersat/params.hpp"
#include "supersat/set.hpp"

namespace supersat::detail {

/// Materialized view of G(n,k,t) for search: vertices are the k-subsets of
/// [1..n] in colex order, adjacency is |u ∩ v| = t kept as row bitsets.
/// Only built when C(n,k) fits the cap; bound computations elsewhere stay
/// on the implicit closed forms.
template <std::size_t W>
struct VertexUniverse {
    Params p;
    std::vector<BasicSet<W>> verts;
    std::unordered_map<BasicSet<W>, std::size_t, typename BasicSet<W>::Hash> index;
    std::vector<DynBits> adj;

    std::size_t size() const { return verts.size(); }

    static VertexUniverse build(const Params& p, std::size_t max_vertices) {
        p.validate();
        BigInt total = binomial(p.n, p.k);
        if (total > BigInt(max_vertices))
            throw ResourceError("C(n,k) = " + total.str() + " exceeds the vertex cap " +
                                std::to_string(max_vertices));
        VertexUniverse u;
        u.p = p;
        std::size_t m = to_u64(total);
        u.verts.reserve(m);
        CombinationGen gen(p.n, p.k, CombinationGen::Order::colex);
        for (; !gen.done(); gen.advance()) {
            BasicSet<W> s(p.n);
            for (int idx : gen.current()) s.insert(idx + 1);
            u.index.emplace(s, u.verts.size());
            u.verts.push_back(s);
        }
        u.adj.assign(m, DynBits(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (u.verts[i].intersection_count(u.verts[j]) == p.t) {
                    u.adj[i].set(j);
                    u.adj[j].set(i);
                }
        return u;
    }
};

/// Greedy clique cover of the pool: partitions the pool vertices into
/// cliques of the graph. The class count upper-bounds the independence
/// number of the induced subgraph; the class sizes feed the completion
/// bound in the rho search.
inline std::vector<std::size_t> greedy_clique_cover_sizes(const std::vector<DynBits>& adj,
                                                          const DynBits& pool) {
    std::vector<DynBits> class_bits;  // members of each clique class
    std::vector<std::size_t> sizes;
    pool.for_each([&](std::size_t v) {
        for (std::size_t c = 0; c < class_bits.size(); ++c) {
            // v joins a class only when adjacent to all its members
            if (class_bits[c].subset_of(adj[v])) {
                class_bits[c].set(v);
                ++sizes[c];
                return;
            }
        }
        class_bits.emplace_back(adj.empty() ? DynBits(0) : DynBits(adj[0].capacity()));
        class_bits.back().set(v);
        sizes.push_back(1);
    });
    return sizes;
}

} // namespace supersat::detail
