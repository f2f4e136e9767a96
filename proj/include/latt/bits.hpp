#pragma once

#include <cstdint>
#include <vector>
#include <functional>

namespace latt {

// Fixed-universe bitset packed into 64-bit words. Most relations in this
// library (order relations, adjacency, chain membership) are sets over
// 0..n-1 with n rarely above a few thousand, so the whole API is eager.
struct Bits {
    int n = 0;
    std::vector<uint64_t> w;

    Bits() = default;
    explicit Bits(int universe) : n(universe), w((universe + 63) / 64, 0) {}

    static Bits full(int universe) {
        Bits b(universe);
        for (auto& x : b.w) x = ~uint64_t{0};
        b.trim();
        return b;
    }

    void trim() {
        if (n % 64 && !w.empty()) w.back() &= (uint64_t{1} << (n % 64)) - 1;
    }

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // lowest set bit index, -1 if empty
    int first() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return int(k * 64 + __builtin_ctzll(w[k]));
        return -1;
    }
    // highest set bit index, -1 if empty
    int last() const {
        for (size_t k = w.size(); k-- > 0;)
            if (w[k]) return int(k * 64 + 63 - __builtin_clzll(w[k]));
        return -1;
    }
    // next set bit at index > i, -1 if none
    int next(int i) const {
        ++i;
        if (i >= n) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t cur = w[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return int(k * 64 + __builtin_ctzll(cur));
            if (++k >= w.size()) return -1;
            cur = w[k];
        }
    }

    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    // set difference
    Bits& operator-=(const Bits& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] &= ~o.w[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    bool operator<(const Bits& o) const { return w < o.w; }

    bool subset_of(const Bits& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }
    static Bits of(int universe, const std::vector<int>& ids) {
        Bits b(universe);
        for (int i : ids) b.set(i);
        return b;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t x : w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace latt
