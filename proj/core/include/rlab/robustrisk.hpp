#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rlab/concepts.hpp"
#include "rlab/distributions.hpp"
#include "rlab/rng.hpp"

namespace rlab {

struct LossWitness {
    bool loss = false;
    std::optional<BitVector> witness;
};

// 1[exists z in B_rho(x): c(z) != h(z)]; witness is the first disagreement in ball order.
LossWitness robust_loss(const Classifier& c, const Classifier& h, const BitVector& x, int rho);
// 1[exists z in B_rho(x): h(z) != c(x)].
LossWitness constant_ball_loss(const Classifier& c, const Classifier& h, const BitVector& x, int rho);

// Concepts that are a single term (conjunctions, dictators, singletons, constants).
struct TermForm {
    bool never = false;
    Term term;
};
std::optional<TermForm> term_form(const Concept& c);

constexpr int kUnreachable = INT_MAX / 4;

// Distance from x to the nearest z with g(z) = 1: the number of literals x falsifies.
int reach_distance(const TermForm& g, const BitVector& x);
// Distance from x to the nearest z with c(z) != h(z), or kUnreachable.
int disagreement_distance(const TermForm& c, const TermForm& h, const BitVector& x);

// Closed form for term concepts, ball sweep otherwise.
bool robust_loss_fast(const Concept& c, const Concept& h, const BitVector& x, int rho);

struct RiskResult {
    double value = 0;
    bool exact = true;
    // Early exit fired: value is a partial sum already above the threshold.
    bool exceeded = false;
    std::optional<std::pair<double, double>> interval;
    std::uint64_t witness_count = 0;
};

// Exact robust risk (n <= 20). With eps set, stops once the accumulated mass exceeds eps.
RiskResult robust_risk_exact(const Concept& c, const Concept& h, int rho, const Distribution& d,
                             std::optional<double> eps = std::nullopt);
RiskResult robust_risk_exact(const Classifier& c, const Classifier& h, int rho, const Distribution& d,
                             std::optional<double> eps = std::nullopt);
RiskResult constant_risk_exact(const Classifier& c, const Classifier& h, int rho, const Distribution& d);

// Exact risk of two term concepts under independent bits with P[x_i = 1] = p[i-1]; any n.
double term_pair_risk_product(const TermForm& c, const TermForm& h, int rho, const std::vector<double>& p);
// Bit probabilities when d is uniform or a product distribution.
std::optional<std::vector<double>> product_marginals(const Distribution& d);

RiskResult robust_risk_mc(const Concept& c, const Concept& h, int rho, const Distribution& d, std::uint64_t m,
                          Rng& rng, double confidence = 0.99);

// Two-sided exact (Clopper-Pearson) interval for k successes in m trials.
std::pair<double, double> binomial_interval(std::uint64_t k, std::uint64_t m, double confidence = 0.99);

// Points within rho of a marked point, on a dense table over {0,1}^n.
std::vector<char> dilate(std::vector<char> set, int n, int rho);

}  // namespace rlab
