#pragma once

// Independent reference implementations used to cross-check the library.
// They work on plain strings / integers and never call into rlab.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline int hamming(const std::string& a, const std::string& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline std::string bits_of(std::uint64_t m, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s[i] = '1';
    return s;
}

inline std::vector<std::string> all_points(int n) {
    std::vector<std::string> v;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) v.push_back(bits_of(m, n));
    return v;
}

// B_rho(x) as a set, by filtering the whole cube.
inline std::set<std::string> ball_set(const std::string& x, int rho) {
    std::set<std::string> r;
    for (auto& z : all_points(static_cast<int>(x.size())))
        if (hamming(x, z) <= rho) r.insert(z);
    return r;
}

// Flip sets of B_rho(x) in the documented order, by sorting (distance, sorted flip list).
inline std::vector<std::string> ball_sorted(const std::string& x, int rho) {
    std::vector<std::pair<std::vector<int>, std::string>> v;
    for (auto& z : all_points(static_cast<int>(x.size()))) {
        std::vector<int> f;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != z[i]) f.push_back(static_cast<int>(i) + 1);
        if (static_cast<int>(f.size()) <= rho) v.push_back({f, z});
    }
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<std::string> out;
    for (auto& p : v) out.push_back(p.second);
    return out;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Robust loss by brute force over the whole cube: 1 iff some z within rho has c(z) != h(z).
template <class C, class H>
bool robust_loss(const C& c, const H& h, const std::string& x, int rho) {
    for (auto& z : all_points(static_cast<int>(x.size())))
        if (hamming(x, z) <= rho && c(z) != h(z)) return true;
    return false;
}

// Monotone conjunction over a 1-based index list, evaluated on a bit string.
inline bool mon_conj(const std::vector<int>& idx, const std::string& x) {
    for (int i : idx)
        if (x[i - 1] != '1') return false;
    return true;
}

}  // namespace oracle
