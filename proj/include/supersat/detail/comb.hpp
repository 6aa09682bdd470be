#pragma once

#include <cstdint>
#include <vector>

namespace supersat::detail {

/// Iterates c-subsets of {0,..,m-1} as sorted index vectors.
/// Colex: ordered by largest differing index. Lex: by smallest.
class CombinationGen {
public:
    enum class Order { colex, lex };

    CombinationGen(int m, int c, Order order) : m_(m), c_(c), order_(order) {
        done_ = c_ < 0 || c_ > m_;
        idx_.resize(c_ > 0 ? static_cast<std::size_t>(c_) : 0);
        for (int i = 0; i < c_; ++i) idx_[static_cast<std::size_t>(i)] = i;
    }

    bool done() const { return done_; }
    const std::vector<int>& current() const { return idx_; }

    void advance() {
        if (done_) return;
        if (c_ == 0) {
            done_ = true; // the single empty combination
            return;
        }
        if (order_ == Order::colex) {
            // bump the lowest index that has head room, reset those below it
            for (int j = 0; j < c_; ++j) {
                int cap = (j + 1 < c_) ? idx_[static_cast<std::size_t>(j + 1)] : m_;
                if (idx_[static_cast<std::size_t>(j)] + 1 < cap) {
                    ++idx_[static_cast<std::size_t>(j)];
                    for (int i = 0; i < j; ++i) idx_[static_cast<std::size_t>(i)] = i;
                    return;
                }
            }
            done_ = true;
        } else {
            for (int j = c_ - 1; j >= 0; --j) {
                if (idx_[static_cast<std::size_t>(j)] < m_ - c_ + j) {
                    ++idx_[static_cast<std::size_t>(j)];
                    for (int i = j + 1; i < c_; ++i)
                        idx_[static_cast<std::size_t>(i)] = idx_[static_cast<std::size_t>(i - 1)] + 1;
                    return;
                }
            }
            done_ = true;
        }
    }

private:
    int m_;
    int c_;
    Order order_;
    bool done_;
    std::vector<int> idx_;
};

/// Visits every c-subset of the sorted pool, in colex or lex order of the
/// selected element values. fn receives a vector<int> of elements.
template <class Fn>
void for_each_combination(const std::vector<int>& pool, int c, CombinationGen::Order order, Fn&& fn) {
    CombinationGen gen(static_cast<int>(pool.size()), c, order);
    std::vector<int> elems(c > 0 ? static_cast<std::size_t>(c) : 0);
    for (; !gen.done(); gen.advance()) {
        const auto& idx = gen.current();
        for (std::size_t i = 0; i < idx.size(); ++i)
            elems[i] = pool[static_cast<std::size_t>(idx[i])];
        fn(elems);
    }
}

} // namespace supersat::detail
