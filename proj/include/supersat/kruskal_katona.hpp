#pragma once

#include <cmath>
#include <cstdint>

#include "supersat/bigint.hpp"
#include "supersat/detail/comb.hpp"
#include "supersat/errors.hpp"
#include "supersat/family.hpp"

namespace supersat {

/// Generalized binomial C(x,k) = x(x-1)...(x-k+1)/k! for real x >= k-1.
/// Strictly increasing in x on that range; matches the integer binomial at
/// integer x (computed there in exact arithmetic).
inline double real_binomial(double x, int k) {
    if (k < 1) throw UsageError("real_binomial requires k >= 1");
    if (x < static_cast<double>(k - 1) - 1e-12)
        throw UsageError("real_binomial requires x >= k-1");
    double xi = std::round(x);
    if (std::abs(x - xi) == 0.0 && xi >= k)
        return to_double(binomial(static_cast<long long>(xi), k));
    double v = 1.0;
    for (int i = 0; i < k; ++i) v *= (x - i) / (k - i);
    return v;
}

/// The unique x >= k-1 with C(x,k) = m, by monotone bisection
/// (absolute tolerance 1e-9, 200-iteration cap).
inline double invert_binomial(double m, int k) {
    if (k < 1) throw UsageError("invert_binomial requires k >= 1");
    if (m < 0) throw UsageError("invert_binomial requires m >= 0");
    double lo = static_cast<double>(k - 1);
    double hi = lo + std::max(2.0 * m, 2.0 * k);
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        double mid = 0.5 * (lo + hi);
        if (real_binomial(mid, k) < m)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Shadow lower bound in the Lovász form of Kruskal-Katona:
/// |∂^(i)(F)| >= C(x,i) where C(x,k) = |F|. Valid for every k-uniform F.
inline double kk_shadow_lower_bound(std::uint64_t family_size, int k, int i) {
    if (i < 1 || i > k - 1) throw UsageError("kk_shadow_lower_bound requires 1 <= i <= k-1");
    if (family_size == 0) return 0.0;
    double x = invert_binomial(static_cast<double>(family_size), k);
    return real_binomial(x, i);
}

/// First m k-subsets of [1..n] in colexicographic order — the standard
/// tightness witness for shadow bounds.
template <std::size_t W>
BasicFamily<W> colex_segment(std::uint64_t m, int n, int k) {
    if (k < 0 || k > n) throw UsageError("colex_segment requires 0 <= k <= n");
    if (BigInt(m) > binomial(n, k))
        throw UsageError("colex_segment size exceeds C(n,k)");
    BasicFamily<W> out(n, k);
    detail::CombinationGen gen(n, k, detail::CombinationGen::Order::colex);
    for (std::uint64_t taken = 0; taken < m && !gen.done(); gen.advance(), ++taken) {
        BasicSet<W> s(n);
        for (int idx : gen.current()) s.insert(idx + 1);
        out.insert(s);
    }
    return out;
}

} // namespace supersat
