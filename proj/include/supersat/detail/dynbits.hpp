#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace supersat::detail {

/// Dynamic bitset over vertex indices, sized once at construction.
class DynBits {
public:
    DynBits() = default;
    explicit DynBits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t capacity() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    std::size_t count_and(const DynBits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }

    bool intersects(const DynBits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const DynBits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    DynBits& operator&=(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    DynBits& operator|=(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    /// this &= ~o
    DynBits& subtract(const DynBits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    /// Calls fn(index) for every set bit, ascending.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                fn(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    /// Lowest set bit, or capacity() when empty.
    std::size_t first() const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi)
            if (w_[wi]) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w_[wi]));
        return n_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace supersat::detail
