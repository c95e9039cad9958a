#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rlab/concepts.hpp"
#include "rlab/dimensions.hpp"
#include "rlab/oracles.hpp"

namespace rlab {

// Batch learners. Each throws RealizabilityViolation when no hypothesis of its class fits the sample.

// Drops literals falsified by positive examples, starting from all 2n literals (n positive ones when monotone).
Term learn_conjunction_term(const Sample& s, int n, bool monotone);
// The term as a concept; a contradictory term becomes Constant(0).
Concept learn_conjunction(const Sample& s, int n, bool monotone);
Concept term_concept(const Term& t, bool monotone);

// Greedy decision-list learner over the k-term embedding (k <= 3).
Concept learn_decision_list(const Sample& s, int n, int k);

// Gaussian elimination over GF(2); pivots are taken from x_n down to x_1 and free variables set to 0.
Concept learn_parity(const Sample& s, int n);

// Empirical singleton coefficients in the +-1 encoding, thresholded at sqrt(2/(pi n))/2.
struct MajorityFit {
    Concept hypothesis;
    std::vector<double> estimates;
    double threshold = 0;
};
MajorityFit learn_majority(const Sample& s, int n);
std::uint64_t majority_sample_size(int n, double delta, double kappa);

class OnlineLearner {
public:
    virtual ~OnlineLearner() = default;
    virtual bool predict(const BitVector& x) const = 0;
    // Feeds a labelled example; counts a mistake when the prediction was wrong.
    void update(const BitVector& x, bool y);
    std::uint64_t mistakes() const { return mistakes_; }
    virtual std::string name() const = 0;
    // Agreements already certified on a ball survive later updates.
    virtual bool stable_agreement() const { return false; }
    virtual std::optional<double> mistake_bound() const { return std::nullopt; }
    Classifier hypothesis() const;

protected:
    virtual void learn(const BitVector& x, bool y, bool mistake) = 0;
    std::uint64_t mistakes_ = 0;
};

// Online conjunction learner: hypothesis starts at all 2n literals, positive mistakes drop falsified literals.
class OnlineConjunction : public OnlineLearner {
public:
    OnlineConjunction(int n, bool monotone = false);
    bool predict(const BitVector& x) const override;
    std::string name() const override { return monotone_ ? "online-mon-conj" : "online-conj"; }
    bool stable_agreement() const override { return true; }
    std::optional<double> mistake_bound() const override { return n_ + 1.0; }
    const Term& term() const { return term_; }
    Concept as_concept() const { return term_concept(term_, monotone_); }

protected:
    void learn(const BitVector& x, bool y, bool mistake) override;

private:
    int n_;
    bool monotone_;
    Term term_;
};

class Halving : public OnlineLearner {
public:
    explicit Halving(std::vector<Concept> cls);
    bool predict(const BitVector& x) const override;
    std::string name() const override { return "halving"; }
    std::optional<double> mistake_bound() const override;
    std::size_t version_space() const { return alive_.size(); }
    // Smallest |V_after| / |V_before| seen on a mistake.
    double worst_mistake_ratio() const { return worst_ratio_; }

protected:
    void learn(const BitVector& x, bool y, bool mistake) override;

private:
    std::vector<Concept> cls_;
    std::vector<std::size_t> alive_;
    double initial_;
    double worst_ratio_ = 0;
};

// Standard optimal algorithm over an explicit class; optional precision tau and root-ball restriction.
class Soa : public OnlineLearner {
public:
    // With opt.rho set, tree nodes are confined to the ball around point `root`.
    Soa(FiniteClass cls, SearchOptions opt = {}, std::optional<std::size_t> root = std::nullopt);
    bool predict(const BitVector& x) const override;
    bool predict_index(std::size_t p) const;
    void update_index(std::size_t p, bool y);
    std::string name() const override { return "soa"; }
    std::optional<double> mistake_bound() const override { return bound_; }
    std::size_t version_space() const;

protected:
    void learn(const BitVector& x, bool y, bool mistake) override;

private:
    std::size_t index(const BitVector& x) const;
    FiniteClass cls_;
    SearchOptions opt_;
    mutable LittlestoneEngine engine_;
    Bits v_;
    double bound_;
};

// Winnow2: weights start at 1, threshold n, promotion/demotion factor 2.
// With `doubled`, features are (x, not x) to reach sign-varying targets.
class Winnow : public OnlineLearner {
public:
    Winnow(int n, bool doubled = true, double factor = 2.0);
    bool predict(const BitVector& x) const override;
    std::string name() const override { return "winnow"; }
    const std::vector<double>& weights() const { return w_; }

protected:
    void learn(const BitVector& x, bool y, bool mistake) override;

private:
    double score(const BitVector& x) const;
    int n_;
    bool doubled_;
    double factor_;
    double theta_;
    std::vector<double> w_;
};

// Real-valued halfspace 1[w.x + b > 0].
struct RealHalfspace {
    std::vector<double> w;
    double b = 0;
    bool operator()(const std::vector<double>& x) const;
    double signed_distance(const std::vector<double>& x) const;
};

// Homogeneous Perceptron: predicts 1[w.x > 0], adds y x on a mistake (y in {-1, +1}).
class Perceptron {
public:
    explicit Perceptron(int d);
    bool predict(const std::vector<double>& x) const;
    void update(const std::vector<double>& x, bool y);
    std::uint64_t mistakes() const { return mistakes_; }
    RealHalfspace hypothesis() const { return {w_, 0}; }

private:
    std::vector<double> w_;
    std::uint64_t mistakes_ = 0;
};

// z with |z - x| <= rho - tau at distance >= tau from both hyperplanes where c and h disagree
// (the closest such point to x); none if no such z exists. A zero-weight h is the constant 0.
std::optional<std::vector<double>> precision_adversary(const RealHalfspace& c, const RealHalfspace& h,
                                                       const std::vector<double>& x, double rho, double tau);

struct DriverResult {
    Classifier hypothesis;
    std::uint64_t queries = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t passes = 0;
    bool budget_breached = false;
    bool mistake_bound_breached = false;
};

// Queries LEQ at every sample point until all agree, feeding counterexamples to the learner.
DriverResult robust_leq_driver(OnlineLearner& learner, OracleSession& session,
                               std::uint64_t query_budget = UINT64_MAX);

}  // namespace rlab
