#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rlab/hypercube.hpp"
#include "rlab/rng.hpp"

namespace rlab {

using Rational = boost::multiprecision::cpp_rational;

struct Uniform {};

// Independent bits with P[x_i = 1] = p[i-1].
struct ProductBernoulli {
    std::vector<double> p;
};

// x1 uniform, x2 equals x1 with probability eta, remaining bits uniform.
struct CorrelatedPair {
    double eta;
};

struct FiniteSupport {
    std::vector<BitVector> points;
    std::vector<double> mass;
    // Set when built from integer weights; masses are then exact.
    std::optional<std::vector<Rational>> exact;
};

class Distribution {
public:
    using Variant = std::variant<Uniform, ProductBernoulli, CorrelatedPair, FiniteSupport>;

    static Distribution uniform(int n);
    static Distribution product(std::vector<double> p);
    static Distribution product(int n, double p);
    static Distribution correlated_pair(int n, double eta);
    static Distribution point_mass(const BitVector& x);
    // Exact masses proportional to integer weights.
    static Distribution finite_exact(std::vector<BitVector> points, std::vector<std::uint64_t> weights);
    static Distribution finite(std::vector<BitVector> points, std::vector<double> mass);
    // Product distribution with every p_i = alpha/(1+alpha); alpha-log-Lipschitz.
    static Distribution product_alpha(int n, double alpha);

    int n() const { return n_; }
    const Variant& variant() const { return v_; }
    std::string kind() const;
    bool is_exact() const;

    double pmf(const BitVector& x) const;
    double pmf_mask(std::uint64_t x) const;
    std::optional<Rational> pmf_exact(const BitVector& x) const;
    BitVector sample(Rng& rng) const;
    // Dense table of pmf over all masks (n <= 24).
    std::vector<double> table() const;

private:
    Distribution(int n, Variant v) : n_(n), v_(std::move(v)) {}
    int n_ = 0;
    Variant v_;
    std::vector<double> cdf_;
};

// max over Hamming-1 edges of the mass ratio; +inf when an edge joins zero and nonzero mass.
double log_lipschitz_alpha(const Distribution& d);
double log_lipschitz_alpha(int n, const std::vector<double>& table);

// Exact sum of pmf over {x : pred(x)} (n <= 24).
double probability(const Distribution& d, const std::function<bool(std::uint64_t)>& pred);

// Marginal onto the listed coordinates (1-based), as a dense table over 2^|keep| points.
std::vector<double> marginal_table(const Distribution& d, const std::vector<int>& keep);

// Pushforward of d through f : {0,1}^n -> {0,1}^m, as a dense table over 2^m points.
std::vector<double> pushforward_table(const Distribution& d, int m,
                                      const std::function<std::uint64_t(std::uint64_t)>& f);

}  // namespace rlab
