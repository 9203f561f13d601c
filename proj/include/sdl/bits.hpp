#pragma once

#include <cstdint>
#include <vector>
#include <string>
#include <functional>

namespace sdl {

// Dynamic fixed-width bitset used for subsets of a ground set and for
// relation rows. Widths stay small (a few hundred bits), so everything
// is a flat word array.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits full(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }
    static Bits single(int n, int i) {
        Bits b(n);
        b.set(i);
        return b;
    }

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits operator&(const Bits& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    Bits operator|(const Bits& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    // set difference
    Bits operator-(const Bits& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }
    Bits complement() const {
        Bits r(n_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
        r.trim();
        return r;
    }

    Bits& operator&=(const Bits& o) { return assign(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    Bits& operator|=(const Bits& o) { return assign(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    Bits& operator-=(const Bits& o) { return assign(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }
    // deterministic total order (by cardinality, then lowest-index elements first)
    bool operator<(const Bits& o) const {
        int ca = count(), cb = o.count();
        if (ca != cb) return ca < cb;
        for (size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t a = bitrev_cmp_key(w_[k]), b = bitrev_cmp_key(o.w_[k]);
            if (a != b) return a > b;
        }
        return false;
    }

    bool subset_of(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k) * 64 + __builtin_ctzll(w_[k]);
        return -1;
    }

    std::vector<int> elems() const {
        std::vector<int> v;
        for (size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                v.push_back(int(k) * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
        return v;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(int(k) * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::string str() const {
        std::string s = "{";
        bool sep = false;
        for (int e : elems()) {
            if (sep) s += ",";
            s += std::to_string(e);
            sep = true;
        }
        return s + "}";
    }

    size_t hash() const {
        size_t h = std::hash<int>{}(n_);
        for (auto w : w_) h = h * 1000003u + std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    template <class F>
    Bits zip(const Bits& o, F f) const {
        Bits r(n_);
        for (size_t k = 0; k < w_.size(); ++k) r.w_[k] = f(w_[k], o.w_[k]);
        r.trim();
        return r;
    }
    template <class F>
    Bits& assign(const Bits& o, F f) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] = f(w_[k], o.w_[k]);
        trim();
        return *this;
    }
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }
    // reverse bit significance so that lower indices compare first
    static std::uint64_t bitrev_cmp_key(std::uint64_t w) {
        w = ((w & 0x5555555555555555ull) << 1) | ((w >> 1) & 0x5555555555555555ull);
        w = ((w & 0x3333333333333333ull) << 2) | ((w >> 2) & 0x3333333333333333ull);
        w = ((w & 0x0f0f0f0f0f0f0f0full) << 4) | ((w >> 4) & 0x0f0f0f0f0f0f0f0full);
        w = __builtin_bswap64(w);
        return w;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct BitsHash {
    size_t operator()(const Bits& b) const { return b.hash(); }
};

} // namespace sdl
