#include "rlab/oracles.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace rlab {

std::string policy_name(Policy p) {
    switch (p) {
        case Policy::FirstInBallOrder: return "first-in-ball-order";
        case Policy::UniformRandom: return "uniform-random";
        case Policy::Adversarial: return "adversarial";
    }
    return "?";
}

FixedTarget::FixedTarget(Classifier c, int n, Policy p, std::vector<BitVector> priority, std::string tag)
    : c_(std::move(c)), n_(n), policy_(p), priority_(std::move(priority)), tag_(std::move(tag)) {
    if (policy_ == Policy::Adversarial && priority_.empty())
        throw InvalidInput("adversarial fixed-target policy needs a priority order");
}

FixedTarget::FixedTarget(const Concept& c, Policy p) : FixedTarget(Classifier(c), c.n(), p) {
    if (p == Policy::Adversarial) throw InvalidInput("policy unavailable for this class");
}

QueryAnswer FixedTarget::query(const Classifier& h, const BitVector& center, int radius, Rng& rng) {
    for (const auto& z : priority_) {
        if (hamming_distance(z, center) > radius) continue;
        bool y = c_(z);
        if (h(z) != y) return {false, z, y};
    }
    if (policy_ == Policy::UniformRandom) {
        std::optional<BitVector> pick;
        std::uint64_t seen = 0;
        for (const auto& z : ball(center, radius))
            if (h(z) != c_(z) && rng.below(++seen) == 0) pick = z;
        if (!pick) return {};
        return {false, pick, c_(*pick)};
    }
    for (const auto& z : ball(center, radius)) {
        bool y = c_(z);
        if (h(z) != y) return {false, z, y};
    }
    return {};
}

DictatorHalving::DictatorHalving(int n) : n_(n) {
    if (n < 1 || n > 20) throw InvalidInput("DictatorHalving needs 1 <= n <= 20");
    for (int i = 1; i <= n; ++i) alive_.push_back(i);
}

bool DictatorHalving::label(const BitVector& x) {
    std::vector<int> one, zero;
    for (int i : alive_) (x.get(i) ? one : zero).push_back(i);
    bool y = one.size() > zero.size();
    alive_ = y ? one : zero;
    return y;
}

std::optional<Classifier> DictatorHalving::target() const {
    if (alive_.size() != 1) return std::nullopt;
    int i = alive_.front();
    return Classifier([i](const BitVector& x) { return x.get(i); });
}

QueryAnswer DictatorHalving::query(const Classifier& h, const BitVector&, int, Rng&) {
    const std::uint64_t N = std::uint64_t{1} << n_;
    std::uint64_t alive_mask = 0;
    for (int i : alive_) alive_mask |= std::uint64_t{1} << (i - 1);
    const int size = static_cast<int>(alive_.size());
    int lo = size + 1, hi = -1;
    std::uint64_t x_lo = 0, x_hi = 0;
    for (std::uint64_t x = 0; x < N; ++x) {
        int c = std::popcount(x & alive_mask);
        if (h(BitVector::from_mask(n_, x))) {
            if (c < lo) lo = c, x_lo = x;
        } else if (c > hi) {
            hi = c, x_hi = x;
        }
    }
    int keep_hi = hi < 0 ? 0 : hi;
    int keep_lo = lo > size ? 0 : size - lo;
    if (keep_hi == 0 && keep_lo == 0) return {};
    std::uint64_t z;
    bool y;
    if (keep_hi >= keep_lo) {
        z = x_hi, y = true;
    } else {
        z = x_lo, y = false;
    }
    std::vector<int> next;
    for (int i : alive_)
        if ((((z >> (i - 1)) & 1) != 0) == y) next.push_back(i);
    alive_ = next;
    return {false, BitVector::from_mask(n_, z), y};
}

SingletonStalling::SingletonStalling(std::vector<BitVector> anchors, int lambda)
    : anchors_(std::move(anchors)), lambda_(lambda) {
    if (anchors_.empty()) throw InvalidInput("SingletonStalling needs anchors");
    for (std::size_t a = 0; a < anchors_.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (hamming_distance(anchors_[a], anchors_[b]) <= 2 * lambda_)
                throw InvalidInput("SingletonStalling: anchor balls intersect");
}

bool SingletonStalling::label(const BitVector& x) { return committed_ && *committed_ == x; }

std::optional<Classifier> SingletonStalling::target() const {
    if (!committed_) return std::nullopt;
    BitVector t = *committed_;
    return Classifier([t](const BitVector& x) { return x == t; });
}

QueryAnswer SingletonStalling::query(const Classifier& h, const BitVector& center, int radius, Rng&) {
    auto cleared = [&](const BitVector& a) { return std::find(cleared_.begin(), cleared_.end(), a) != cleared_.end(); };
    bool is_anchor = std::find(anchors_.begin(), anchors_.end(), center) != anchors_.end();
    if (!committed_ && is_anchor && !cleared(center)) {
        if (cleared_.size() + 1 < anchors_.size()) {
            cleared_.push_back(center);
        } else {
            for (const auto& z : ball(center, std::min(radius, lambda_)))
                if (z != center && !h(z)) {
                    committed_ = z;
                    break;
                }
            if (!committed_) committed_ = *std::next(ball(center, 1).begin());
        }
    }
    for (const auto& z : ball(center, radius)) {
        bool y = label(z);
        if (h(z) != y) return {false, z, y};
    }
    return {};
}

OracleSession::OracleSession(std::shared_ptr<Responder> r, std::optional<Distribution> d, int lambda,
                             std::uint64_t seed)
    : r_(std::move(r)), d_(std::move(d)), lambda_(lambda), rng_(seed) {
    if (!r_) throw InvalidInput("OracleSession needs a responder");
    if (lambda_ < 0) throw InvalidInput("OracleSession: negative locality radius");
    if (d_ && d_->n() != r_->n()) throw InvalidInput("OracleSession: dimension mismatch");
}

bool OracleSession::in_sample(const BitVector& x) const {
    return std::any_of(sample_.begin(), sample_.end(), [&](const LabeledPoint& p) { return p.x == x; });
}

void OracleSession::log(const std::string& oracle, const std::string& input, const std::string& answer,
                        std::uint64_t counter) {
    if (record_) transcript_.push_back({oracle, input, answer, counter});
}

LabeledPoint OracleSession::ex_draw() {
    if (!d_) throw InvalidInput("ex_draw: session has no distribution");
    BitVector x = d_->sample(rng_);
    LabeledPoint p{x, r_->label(x)};
    sample_.push_back(p);
    ++counters_.ex;
    log("EX", "", x.to_string() + "," + (p.y ? "1" : "0"), counters_.ex);
    return p;
}

bool OracleSession::lmq_query(const BitVector& x) {
    if (x.n() != n()) throw InvalidInput("lmq_query: dimension mismatch");
    bool local = std::any_of(sample_.begin(), sample_.end(),
                             [&](const LabeledPoint& p) { return hamming_distance(p.x, x) <= lambda_; });
    if (!local) {
        ++counters_.violations;
        log("LMQ", x.to_string(), "violation", counters_.lmq);
        throw ProtocolViolation("LMQ at " + x.to_string() + " is not " + std::to_string(lambda_) +
                                "-local to the sample");
    }
    bool y = r_->label(x);
    ++counters_.lmq;
    log("LMQ", x.to_string(), y ? "1" : "0", counters_.lmq);
    return y;
}

void OracleSession::audit(const Classifier& h, const BitVector& center, int radius, const QueryAnswer& a) {
    auto t = r_->target();
    if (!a.agree) {
        if (!a.counterexample || hamming_distance(*a.counterexample, center) > radius)
            throw ProtocolViolation("audit: counterexample outside the ball");
        if (h(*a.counterexample) == a.label) throw ProtocolViolation("audit: counterexample does not disagree");
        if (t && (*t)(*a.counterexample) != a.label) throw ProtocolViolation("audit: label differs from target");
    } else if (t && n() <= 14) {
        for (const auto& z : ball(center, radius))
            if (h(z) != (*t)(z)) throw ProtocolViolation("audit: agreement claimed but " + z.to_string() + " differs");
    }
}

QueryAnswer OracleSession::leq_query(const Classifier& h, const BitVector& x, const std::string& h_text) {
    if (x.n() != n()) throw InvalidInput("leq_query: dimension mismatch");
    if (!in_sample(x)) {
        ++counters_.violations;
        log("LEQ", x.to_string(), "violation", counters_.leq);
        throw ProtocolViolation("LEQ anchor " + x.to_string() + " is not a sample point");
    }
    auto a = r_->query(h, x, lambda_, rng_);
    ++counters_.leq;
    if (audit_) audit(h, x, lambda_, a);
    log("LEQ", h_text + "@" + x.to_string(),
        a.agree ? "agree" : a.counterexample->to_string() + "," + (a.label ? "1" : "0"), counters_.leq);
    return a;
}

QueryAnswer OracleSession::eq_query(const Classifier& h, const std::string& h_text) {
    if (n() > 20) throw BudgetExceeded("eq_query needs n <= 20");
    BitVector origin(n());
    auto a = r_->query(h, origin, n(), rng_);
    ++counters_.eq;
    if (audit_) audit(h, origin, n(), a);
    log("EQ", h_text, a.agree ? "agree" : a.counterexample->to_string() + "," + (a.label ? "1" : "0"), counters_.eq);
    return a;
}

std::string OracleSession::transcript_jsonl() const {
    std::string out;
    for (auto& e : transcript_) {
        nlohmann::json j{{"oracle", e.oracle}, {"input", e.input}, {"answer", e.answer}, {"counter", e.counter}};
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace rlab
