#pragma once

#include <string>

#include "supersat/errors.hpp"

namespace supersat {

/// The instance triple (n, k, t): k-subsets of [1..n], forbidden
/// intersection size t. Invariant: 0 <= t < k <= n.
struct Params {
    int n = 0;
    int k = 0;
    int t = 0;

    Params() = default;
    Params(int n_, int k_, int t_) : n(n_), k(k_), t(t_) { validate(); }

    void validate() const {
        if (t < 0 || t >= k || k > n)
            throw UsageError("params require 0 <= t < k <= n, got n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + " t=" + std::to_string(t));
    }

    bool operator==(const Params&) const = default;
};

} // namespace supersat
