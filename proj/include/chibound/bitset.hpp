#ifndef CHIBOUND_BITSET_HPP
#define CHIBOUND_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace chibound {

/// Fixed-capacity bitset sized at construction; used for adjacency rows
/// and candidate sets in the exact solvers.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int capacity)
        : n_(capacity), w_((static_cast<size_t>(capacity) + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Clears every bit that is set in `o`.
    Bitset& and_not(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

    /// Index of the lowest set bit, or -1 when none.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    /// Index of the lowest set bit strictly greater than `after`, or -1.
    int next(int after) const {
        int i = after + 1;
        if (i < 0) i = 0;
        size_t word = static_cast<size_t>(i) >> 6;
        if (word >= w_.size()) return -1;
        std::uint64_t w = w_[word] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(word * 64) + std::countr_zero(w);
            if (++word >= w_.size()) return -1;
            w = w_[word];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace chibound

#endif
