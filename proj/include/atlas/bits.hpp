#pragma once

#include <cstdint>
#include <cstddef>
#include <algorithm>
#include <initializer_list>
#include <vector>

namespace atlas {

// Fixed-width dynamic bitset. Width is set at construction; binary
// operations require both operands to have the same width.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_(words_for(n), 0) {}

    static Bits of(int n, std::initializer_list<int> xs) {
        Bits b(n);
        for (int x : xs) b.set(x);
        return b;
    }

    int size() const { return n_; }
    size_t word_count() const { return w_.size(); }
    uint64_t word(size_t i) const { return w_[i]; }

    bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int find_first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }
    // First set bit strictly greater than i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t wi = static_cast<size_t>(i) >> 6;
        uint64_t w = w_[wi] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(wi * 64) + __builtin_ctzll(w);
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }

    bool operator==(const Bits& o) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(int(i * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h ^ uint64_t(n_));
    }

private:
    static size_t words_for(int n) { return size_t(n + 63) / 64; }
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace atlas
