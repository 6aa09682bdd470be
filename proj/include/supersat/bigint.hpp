#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "supersat/errors.hpp"

namespace supersat {

// Exact integer arithmetic for binomials and edge counts. Counts such as
// |E(G(n,k,t))| overflow 64 bits well inside the supported n <= 1024 range,
// so all closed-form quantities use arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

inline std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        throw InternalError("BigInt does not fit in u64: " + v.str());
    return v.convert_to<std::uint64_t>();
}

inline bool fits_u64(const BigInt& v) {
    return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

} // namespace supersat
