#include "rlab/hypercube.hpp"

#include <algorithm>

namespace rlab {

BitVector::BitVector(int n) : n_(n) {
    if (n < 1 || n > kMaxDim)
        throw InvalidInput("BitVector dimension must be in [1, " + std::to_string(kMaxDim) + "], got " +
                           std::to_string(n));
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector x(static_cast<int>(bits.size()));
    for (int i = 1; i <= x.n_; ++i) {
        char c = bits[i - 1];
        if (c != '0' && c != '1') throw InvalidInput("bit string may only contain 0 and 1");
        x.set(i, c == '1');
    }
    return x;
}

BitVector BitVector::from_mask(int n, std::uint64_t mask) {
    BitVector x(n);
    x.w_[0] = mask;
    x.trim();
    return x;
}

BitVector BitVector::ones(int n) {
    BitVector x(n);
    x.w_.fill(~std::uint64_t{0});
    x.trim();
    return x;
}

BitVector BitVector::unit(int n, int i) {
    BitVector x(n);
    x.set(i, true);
    return x;
}

void BitVector::check_index(int i) const {
    if (i < 1 || i > n_)
        throw InvalidInput("bit index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
}

void BitVector::check_same(const BitVector& o) const {
    if (n_ != o.n_)
        throw InvalidInput("dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
}

void BitVector::trim() {
    for (int k = 0; k < 4; ++k) {
        int lo = 64 * k;
        if (n_ <= lo)
            w_[k] = 0;
        else if (n_ < lo + 64)
            w_[k] &= (std::uint64_t{1} << (n_ - lo)) - 1;
    }
}

bool BitVector::get(int i) const {
    check_index(i);
    return (w_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
}

void BitVector::set(int i, bool b) {
    check_index(i);
    std::uint64_t bit = std::uint64_t{1} << ((i - 1) & 63);
    if (b)
        w_[(i - 1) >> 6] |= bit;
    else
        w_[(i - 1) >> 6] &= ~bit;
}

BitVector BitVector::flipped(int i) const {
    check_index(i);
    BitVector r = *this;
    r.w_[(i - 1) >> 6] ^= std::uint64_t{1} << ((i - 1) & 63);
    return r;
}

int BitVector::popcount() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

BitVector BitVector::operator&(const BitVector& o) const {
    check_same(o);
    BitVector r = *this;
    for (int k = 0; k < 4; ++k) r.w_[k] &= o.w_[k];
    return r;
}

BitVector BitVector::operator|(const BitVector& o) const {
    check_same(o);
    BitVector r = *this;
    for (int k = 0; k < 4; ++k) r.w_[k] |= o.w_[k];
    return r;
}

BitVector BitVector::operator^(const BitVector& o) const {
    check_same(o);
    BitVector r = *this;
    for (int k = 0; k < 4; ++k) r.w_[k] ^= o.w_[k];
    return r;
}

BitVector BitVector::operator~() const {
    BitVector r = *this;
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
}

bool BitVector::intersects(const BitVector& o) const {
    check_same(o);
    for (int k = 0; k < 4; ++k)
        if (w_[k] & o.w_[k]) return true;
    return false;
}

bool BitVector::is_subset_of(const BitVector& o) const {
    check_same(o);
    for (int k = 0; k < 4; ++k)
        if (w_[k] & ~o.w_[k]) return false;
    return true;
}

bool BitVector::none() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

std::vector<int> BitVector::indices() const {
    std::vector<int> r;
    for (int k = 0; k < 4; ++k) {
        std::uint64_t w = w_[k];
        while (w) {
            r.push_back(64 * k + std::countr_zero(w) + 1);
            w &= w - 1;
        }
    }
    return r;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (int i = 1; i <= n_; ++i)
        if (get(i)) s[i - 1] = '1';
    return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int i = 1; i <= a.n_; ++i) {
        bool x = a.get(i), y = b.get(i);
        if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::size_t BitVectorHash::operator()(const BitVector& x) const noexcept {
    std::size_t h = std::hash<int>{}(x.n());
    for (int k = 0; k < 4; ++k) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(x.word(k));
    return h;
}

int hamming_distance(const BitVector& x, const BitVector& y) { return (x ^ y).popcount(); }

BitVector flip(const BitVector& x, int i) { return x.flipped(i); }

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t ball_size(int n, int rho) {
    rho = std::clamp(rho, 0, n);
    std::uint64_t s = 0;
    for (int i = 0; i <= rho; ++i) s += binomial(n, i);
    return s;
}

void require_exact(int n, const char* what) {
    if (n > BitVector::kExactMaxDim)
        throw BudgetExceeded(std::string(what) + ": exact sweep needs n <= " +
                             std::to_string(BitVector::kExactMaxDim) + ", got n = " + std::to_string(n));
}

Ball::Ball(BitVector center, int rho) : center_(std::move(center)), rho_(std::clamp(rho, 0, center_.n())) {
    if (rho < 0) throw InvalidInput("ball radius must be nonnegative");
}

Ball ball(const BitVector& x, int rho) { return Ball(x, rho); }

Ball::iterator::iterator(const BitVector& c, int rho) : center_(c), cur_(c), rho_(rho), done_(false) {}

void Ball::iterator::materialize() {
    cur_ = center_;
    for (int i : flips_) cur_ = cur_.flipped(i);
}

Ball::iterator& Ball::iterator::operator++() {
    if (done_) return *this;
    const int n = center_.n();
    int d = static_cast<int>(flips_.size());
    int k = d - 1;
    while (k >= 0 && flips_[k] == n - d + k + 1) --k;
    if (k >= 0) {
        ++flips_[k];
        for (int j = k + 1; j < d; ++j) flips_[j] = flips_[j - 1] + 1;
    } else if (d < rho_) {
        flips_.resize(d + 1);
        for (int j = 0; j <= d; ++j) flips_[j] = j + 1;
    } else {
        done_ = true;
        flips_.clear();
        return *this;
    }
    materialize();
    return *this;
}

}  // namespace rlab
