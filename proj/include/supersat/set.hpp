#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "supersat/errors.hpp"

namespace supersat {

/// Subset of a ground set [1..n], stored as Words machine words.
/// Words = 1 is the fast path (n <= 64); Words = 16 covers n <= 1024.
/// Immutable in spirit: operations return new values, ground sets must match.
template <std::size_t Words>
class BasicSet {
public:
    static constexpr int max_ground_size = static_cast<int>(Words * 64);

    BasicSet() = default;

    explicit BasicSet(int n) : n_(checked_ground(n)) {}

    BasicSet(int n, std::initializer_list<int> elems) : n_(checked_ground(n)) {
        for (int e : elems) insert(e);
    }

    template <class Container>
    static BasicSet from_elements(int n, const Container& elems) {
        BasicSet s(n);
        for (int e : elems) s.insert(e);
        return s;
    }

    static BasicSet full(int n) {
        BasicSet s(n);
        for (int w = 0; w * 64 < n; ++w) {
            int hi = std::min(n - w * 64, 64);
            s.w_[w] = hi == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
        }
        return s;
    }

    int ground() const { return n_; }

    int size() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool contains(int e) const {
        if (e < 1 || e > n_) return false;
        return (w_[word(e)] >> bit(e)) & 1u;
    }

    void insert(int e) {
        if (e < 1 || e > n_)
            throw UsageError("element " + std::to_string(e) + " outside ground set [1.." +
                             std::to_string(n_) + "]");
        w_[word(e)] |= std::uint64_t{1} << bit(e);
    }

    void erase(int e) {
        if (e >= 1 && e <= n_) w_[word(e)] &= ~(std::uint64_t{1} << bit(e));
    }

    /// Elements in increasing order, 1-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t w = 0; w < Words; ++w) {
            std::uint64_t x = w_[w];
            while (x) {
                out.push_back(static_cast<int>(w * 64 + std::countr_zero(x)) + 1);
                x &= x - 1;
            }
        }
        return out;
    }

    /// Smallest element, or 0 when empty.
    int min_element() const {
        for (std::size_t w = 0; w < Words; ++w)
            if (w_[w]) return static_cast<int>(w * 64 + std::countr_zero(w_[w])) + 1;
        return 0;
    }

    int intersection_count(const BasicSet& o) const {
        int c = 0;
        for (std::size_t w = 0; w < Words; ++w) c += std::popcount(w_[w] & o.w_[w]);
        return c;
    }

    bool intersects(const BasicSet& o) const {
        for (std::size_t w = 0; w < Words; ++w)
            if (w_[w] & o.w_[w]) return true;
        return false;
    }

    bool subset_of(const BasicSet& o) const {
        for (std::size_t w = 0; w < Words; ++w)
            if (w_[w] & ~o.w_[w]) return false;
        return true;
    }

    friend BasicSet operator&(BasicSet a, const BasicSet& b) {
        a.check_same_ground(b);
        for (std::size_t w = 0; w < Words; ++w) a.w_[w] &= b.w_[w];
        return a;
    }

    friend BasicSet operator|(BasicSet a, const BasicSet& b) {
        a.check_same_ground(b);
        for (std::size_t w = 0; w < Words; ++w) a.w_[w] |= b.w_[w];
        return a;
    }

    /// Set difference a \ b.
    friend BasicSet operator-(BasicSet a, const BasicSet& b) {
        a.check_same_ground(b);
        for (std::size_t w = 0; w < Words; ++w) a.w_[w] &= ~b.w_[w];
        return a;
    }

    BasicSet complement() const { return full(n_) - *this; }

    bool operator==(const BasicSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    /// Colexicographic order: compare the largest differing element;
    /// the set missing it comes first.
    static bool colex_less(const BasicSet& a, const BasicSet& b) {
        for (std::size_t i = Words; i-- > 0;) {
            if (a.w_[i] != b.w_[i]) {
                std::uint64_t d = a.w_[i] ^ b.w_[i];
                std::uint64_t top = std::uint64_t{1} << (63 - std::countl_zero(d));
                return (b.w_[i] & top) != 0;
            }
        }
        return false;
    }

    /// Lexicographic order on the increasing element lists:
    /// the set owning the smallest differing element comes first.
    static bool lex_less(const BasicSet& a, const BasicSet& b) {
        for (std::size_t i = 0; i < Words; ++i) {
            if (a.w_[i] != b.w_[i]) {
                std::uint64_t d = a.w_[i] ^ b.w_[i];
                std::uint64_t low = d & (~d + 1);
                return (a.w_[i] & low) != 0;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    struct Hash {
        std::size_t operator()(const BasicSet& s) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : s.w_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.n_));
        }
    };

    void check_same_ground(const BasicSet& o) const {
        if (n_ != o.n_)
            throw UsageError("mismatched ground sets: [1.." + std::to_string(n_) + "] vs [1.." +
                             std::to_string(o.n_) + "]");
    }

private:
    static int checked_ground(int n) {
        if (n < 0 || n > max_ground_size)
            throw UsageError("ground size " + std::to_string(n) + " outside [0.." +
                             std::to_string(max_ground_size) + "]");
        return n;
    }

    static std::size_t word(int e) { return static_cast<std::size_t>(e - 1) / 64; }
    static unsigned bit(int e) { return static_cast<unsigned>(e - 1) % 64; }

    std::array<std::uint64_t, Words> w_{};
    int n_ = 0;
};

/// |a ∩ b|; the two sets must share a ground set.
template <std::size_t W>
int intersection_size(const BasicSet<W>& a, const BasicSet<W>& b) {
    a.check_same_ground(b);
    return a.intersection_count(b);
}

using Set64 = BasicSet<1>;
using Set1024 = BasicSet<16>;

} // namespace supersat
