#pragma once

#include <cstdint>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace rlab {

// splitmix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t trial) {
    return splitmix64(splitmix64(base_seed) ^ (trial * 0xd1b54a32d192ed03ULL));
}

// 64-bit Mersenne Twister (a twisted GFSR), seeded through splitmix64.
class Rng {
public:
    using result_type = std::uint64_t;
    explicit Rng(std::uint64_t seed = 0) : eng_(splitmix64(seed)) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return eng_(); }

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }
    // Uniform integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);
    std::uint64_t bits(int k) { return k >= 64 ? eng_() : (eng_() & ((std::uint64_t{1} << k) - 1)); }
    double normal();

private:
    std::mt19937_64 eng_;
};

inline std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t lim = max() - max() % bound;
    std::uint64_t r;
    do r = eng_();
    while (r >= lim);
    return r % bound;
}

inline double Rng::normal() {
    // Box-Muller.
    double u1 = uniform(), u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

}  // namespace rlab
