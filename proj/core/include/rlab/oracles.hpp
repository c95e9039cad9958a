#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rlab/concepts.hpp"
#include "rlab/distributions.hpp"
#include "rlab/rng.hpp"

namespace rlab {

struct LabeledPoint {
    BitVector x;
    bool y = false;
};
using Sample = std::vector<LabeledPoint>;

struct QueryAnswer {
    bool agree = true;
    std::optional<BitVector> counterexample;
    // Target label of the counterexample.
    bool label = false;
};

enum class Policy { FirstInBallOrder, UniformRandom, Adversarial };
std::string policy_name(Policy p);

// The hidden side of an oracle. Adversarial responders may commit to a target lazily,
// but every answer stays consistent with at least one concept.
class Responder {
public:
    virtual ~Responder() = default;
    virtual int n() const = 0;
    virtual bool label(const BitVector& x) = 0;
    // Agree iff h matches the target on B_radius(center).
    virtual QueryAnswer query(const Classifier& h, const BitVector& center, int radius, Rng& rng) = 0;
    virtual Policy policy() const = 0;
    virtual std::string name() const = 0;
    // Defined once the target is pinned down.
    virtual std::optional<Classifier> target() const = 0;
};

// Fixed target. With a priority list, disagreeing listed points (in list order) are returned first.
class FixedTarget : public Responder {
public:
    FixedTarget(Classifier c, int n, Policy p = Policy::FirstInBallOrder, std::vector<BitVector> priority = {},
                std::string tag = "fixed");
    FixedTarget(const Concept& c, Policy p = Policy::FirstInBallOrder);
    int n() const override { return n_; }
    bool label(const BitVector& x) override { return c_(x); }
    QueryAnswer query(const Classifier& h, const BitVector& center, int radius, Rng& rng) override;
    Policy policy() const override { return policy_; }
    std::string name() const override { return tag_; }
    std::optional<Classifier> target() const override { return c_; }

private:
    Classifier c_;
    int n_;
    Policy policy_;
    std::vector<BitVector> priority_;
    std::string tag_;
};

// EQ adversary for monotone dictators: keeps the consistent index set I_t and answers with
// x_* = argmin_{h=1} #1(x, I_t) or x^* = argmax_{h=0} #1(x, I_t), whichever leaves more indices.
class DictatorHalving : public Responder {
public:
    explicit DictatorHalving(int n);
    int n() const override { return n_; }
    bool label(const BitVector& x) override;
    QueryAnswer query(const Classifier& h, const BitVector& center, int radius, Rng& rng) override;
    Policy policy() const override { return Policy::Adversarial; }
    std::string name() const override { return "dictator-halving"; }
    std::optional<Classifier> target() const override;
    const std::vector<int>& consistent() const { return alive_; }

private:
    int n_;
    std::vector<int> alive_;
};

// LEQ adversary for singletons: the target is 0 on the balls of the first k-1 distinct anchors
// and is placed in the ball of the last one.
class SingletonStalling : public Responder {
public:
    SingletonStalling(std::vector<BitVector> anchors, int lambda);
    int n() const override { return anchors_.front().n(); }
    bool label(const BitVector& x) override;
    QueryAnswer query(const Classifier& h, const BitVector& center, int radius, Rng& rng) override;
    Policy policy() const override { return Policy::Adversarial; }
    std::string name() const override { return "singleton-stalling"; }
    std::optional<Classifier> target() const override;
    std::size_t cleared() const { return cleared_.size(); }

private:
    std::vector<BitVector> anchors_;
    int lambda_;
    std::vector<BitVector> cleared_;
    std::optional<BitVector> committed_;
};

struct Counters {
    std::uint64_t ex = 0, lmq = 0, leq = 0, eq = 0, violations = 0;
};

struct TranscriptEntry {
    std::string oracle;
    std::string input;
    std::string answer;
    std::uint64_t counter = 0;
};

class OracleSession {
public:
    OracleSession(std::shared_ptr<Responder> r, std::optional<Distribution> d, int lambda, std::uint64_t seed = 0);

    LabeledPoint ex_draw();
    bool lmq_query(const BitVector& x);
    QueryAnswer leq_query(const Classifier& h, const BitVector& x, const std::string& h_text = "h");
    QueryAnswer leq_query(const Concept& h, const BitVector& x) { return leq_query(Classifier(h), x, h.to_string()); }
    QueryAnswer eq_query(const Classifier& h, const std::string& h_text = "h");
    QueryAnswer eq_query(const Concept& h) { return eq_query(Classifier(h), h.to_string()); }

    const Sample& sample() const { return sample_; }
    const Counters& counters() const { return counters_; }
    int lambda() const { return lambda_; }
    int n() const { return r_->n(); }
    Responder& responder() { return *r_; }

    // Independent checks of every answer against an exhaustive sweep (n <= 14 for agreement).
    void set_audit(bool on) { audit_ = on; }
    void set_record(bool on) { record_ = on; }
    const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
    // JSON lines {oracle, input, answer, counter}.
    std::string transcript_jsonl() const;

private:
    void log(const std::string& oracle, const std::string& input, const std::string& answer, std::uint64_t counter);
    void audit(const Classifier& h, const BitVector& center, int radius, const QueryAnswer& a);
    bool in_sample(const BitVector& x) const;

    std::shared_ptr<Responder> r_;
    std::optional<Distribution> d_;
    int lambda_;
    Rng rng_;
    Sample sample_;
    Counters counters_;
    bool audit_ = false;
    bool record_ = false;
    std::vector<TranscriptEntry> transcript_;
};

}  // namespace rlab
