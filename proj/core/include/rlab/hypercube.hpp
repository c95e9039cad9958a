#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rlab/error.hpp"

namespace rlab {

// A point of {0,1}^n. Bits are indexed 1..n; bit i lives at position i-1 of the packed words.
class BitVector {
public:
    static constexpr int kMaxDim = 256;
    // Largest n for which exhaustive sweeps over {0,1}^n are allowed.
    static constexpr int kExactMaxDim = 24;

    BitVector() = default;
    explicit BitVector(int n);

    static BitVector from_string(std::string_view bits);
    // Bit i of the result is bit (i-1) of mask.
    static BitVector from_mask(int n, std::uint64_t mask);
    static BitVector ones(int n);
    static BitVector unit(int n, int i);

    int n() const { return n_; }
    bool get(int i) const;
    bool operator[](int i) const { return get(i); }
    void set(int i, bool b);
    BitVector flipped(int i) const;

    int popcount() const;
    // Packed low word; only meaningful as a full point when n <= 64.
    std::uint64_t mask() const { return w_[0]; }
    std::uint64_t word(int k) const { return w_[k]; }
    int words() const { return (n_ + 63) / 64; }

    BitVector operator&(const BitVector& o) const;
    BitVector operator|(const BitVector& o) const;
    BitVector operator^(const BitVector& o) const;
    BitVector operator~() const;
    bool intersects(const BitVector& o) const;
    bool is_subset_of(const BitVector& o) const;
    bool none() const;

    // Indices (1-based, ascending) of the set bits.
    std::vector<int> indices() const;
    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    // Orders by dimension, then by the textual form b1..bn.
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

private:
    void check_index(int i) const;
    void check_same(const BitVector& o) const;
    void trim();

    int n_ = 0;
    std::array<std::uint64_t, 4> w_{};
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& x) const noexcept;
};

int hamming_distance(const BitVector& x, const BitVector& y);
BitVector flip(const BitVector& x, int i);

// Number of points of a radius-rho ball in {0,1}^n (rho clamped to n).
std::uint64_t ball_size(int n, int rho);
std::uint64_t binomial(int n, int k);

// Lazy enumeration of B_rho(x): nondecreasing distance, then lexicographic flip set.
class Ball {
public:
    Ball(BitVector center, int rho);

    class iterator {
    public:
        using value_type = BitVector;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        const BitVector& operator*() const { return cur_; }
        const BitVector* operator->() const { return &cur_; }
        iterator& operator++();
        iterator operator++(int) {
            auto t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || flips_ == o.flips_); }

    private:
        friend class Ball;
        iterator(const BitVector& c, int rho);
        void materialize();
        BitVector center_;
        BitVector cur_;
        int rho_ = 0;
        std::vector<int> flips_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(center_, rho_); }
    iterator end() const { return iterator(); }
    std::uint64_t size() const { return ball_size(center_.n(), rho_); }
    int radius() const { return rho_; }
    const BitVector& center() const { return center_; }

private:
    BitVector center_;
    int rho_;
};

Ball ball(const BitVector& x, int rho);

// Short-circuiting sweep over B_rho(x) on packed masks (n <= 64), in ball order.
// Returns true as soon as pred(z) is true.
template <class Pred>
bool ball_any_mask(std::uint64_t x, int n, int rho, Pred&& pred) {
    if (rho > n) rho = n;
    if (pred(x)) return true;
    int idx[64];
    for (int d = 1; d <= rho; ++d) {
        for (int k = 0; k < d; ++k) idx[k] = k;
        while (true) {
            std::uint64_t f = 0;
            for (int k = 0; k < d; ++k) f |= std::uint64_t{1} << idx[k];
            if (pred(x ^ f)) return true;
            int k = d - 1;
            while (k >= 0 && idx[k] == n - d + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

// Throws BudgetExceeded when n is beyond the exact-sweep ceiling.
void require_exact(int n, const char* what);

// Visits every point of {0,1}^n as a packed mask (n <= 24).
template <class F>
void for_each_point(int n, F&& f) {
    require_exact(n, "for_each_point");
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < N; ++m) f(m);
}

}  // namespace rlab
