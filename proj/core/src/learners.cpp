#include "rlab/learners.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rlab {

namespace {

void check_sample(const Sample& s, int n) {
    for (const auto& p : s)
        if (p.x.n() != n) throw InvalidInput("sample point dimension mismatch");
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw InvalidInput("vector dimension mismatch");
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

Term learn_conjunction_term(const Sample& s, int n, bool monotone) {
    check_sample(s, n);
    Term t{BitVector::ones(n), monotone ? BitVector(n) : BitVector::ones(n)};
    for (const auto& p : s)
        if (p.y) {
            t.pos = t.pos & p.x;
            t.neg = t.neg & ~p.x;
        }
    for (const auto& p : s)
        if (t.satisfied(p.x) != p.y)
            throw RealizabilityViolation("learn_conjunction: no conjunction fits the sample (point " +
                                         p.x.to_string() + ")");
    return t;
}

Concept term_concept(const Term& t, bool monotone) {
    const int n = t.pos.n();
    if (t.contradictory()) return Concept::constant(n, false);
    if (monotone) return Concept::mon_conj(n, t.pos.indices());
    return Concept::conj(t);
}

Concept learn_conjunction(const Sample& s, int n, bool monotone) {
    return term_concept(learn_conjunction_term(s, n, monotone), monotone);
}

Concept learn_decision_list(const Sample& s, int n, int k) {
    check_sample(s, n);
    auto terms = embedding_terms(n, k);
    if (terms.size() > static_cast<std::size_t>(BitVector::kMaxDim))
        throw BudgetExceeded("learn_decision_list: " + std::to_string(terms.size()) + " embedding coordinates");
    std::vector<BitVector> img;
    std::vector<bool> lab;
    for (const auto& p : s) {
        img.push_back(dl_embed(p.x, k));
        lab.push_back(p.y);
    }
    std::vector<std::size_t> rest(s.size());
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = i;
    std::vector<DecisionList::Node> nodes;
    while (true) {
        bool pure = std::all_of(rest.begin(), rest.end(), [&](std::size_t i) { return lab[i] == lab[rest.front()]; });
        if (rest.empty() || pure) {
            nodes.push_back({Term::top(n), !rest.empty() && lab[rest.front()]});
            break;
        }
        bool found = false;
        for (std::size_t j = 0; j < terms.size() && !found; ++j) {
            int ones = 0, zeros = 0;
            for (auto i : rest)
                if (img[i].get(static_cast<int>(j) + 1)) (lab[i] ? ones : zeros)++;
            if (ones + zeros == 0 || (ones > 0 && zeros > 0)) continue;
            nodes.push_back({terms[j], ones > 0});
            std::erase_if(rest, [&](std::size_t i) { return img[i].get(static_cast<int>(j) + 1); });
            found = true;
        }
        if (!found) throw RealizabilityViolation("learn_decision_list: no pure term among the remaining examples");
    }
    return make_minimal_dl(n, std::move(nodes), k);
}

Concept learn_parity(const Sample& s, int n) {
    check_sample(s, n);
    std::vector<std::pair<BitVector, bool>> rows;
    for (const auto& p : s) rows.push_back({p.x, p.y});
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int col = n; col >= 1 && r < rows.size(); --col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].first.get(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].first.get(col)) {
                rows[i].first = rows[i].first ^ rows[r].first;
                rows[i].second = rows[i].second != rows[r].second;
            }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i].second) throw RealizabilityViolation("learn_parity: inconsistent linear system");
    std::vector<int> idx;
    for (std::size_t i = 0; i < r; ++i)
        if (rows[i].second) idx.push_back(pivot_col[i]);
    std::sort(idx.begin(), idx.end());
    return Concept::parity(n, idx);
}

MajorityFit learn_majority(const Sample& s, int n) {
    check_sample(s, n);
    if (s.empty()) throw InvalidInput("learn_majority: empty sample");
    std::vector<double> est(n, 0.0);
    for (const auto& p : s) {
        double y = p.y ? -1.0 : 1.0;
        for (int i = 1; i <= n; ++i) est[i - 1] += y * (p.x.get(i) ? -1.0 : 1.0);
    }
    for (auto& e : est) e /= static_cast<double>(s.size());
    const double thr = std::sqrt(2.0 / (std::numbers::pi * n)) / 2;
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
        if (est[i - 1] >= thr) idx.push_back(i);
    if (idx.size() % 2 == 0) {
        if (idx.empty()) {
            idx.push_back(static_cast<int>(std::max_element(est.begin(), est.end()) - est.begin()) + 1);
        } else {
            auto weakest = std::min_element(idx.begin(), idx.end(), [&](int a, int b) { return est[a - 1] < est[b - 1]; });
            idx.erase(weakest);
        }
    }
    return {Concept::majority(n, idx), est, thr};
}

std::uint64_t majority_sample_size(int n, double delta, double kappa) {
    return static_cast<std::uint64_t>(std::ceil(kappa * n * std::log(n / delta)));
}

void OnlineLearner::update(const BitVector& x, bool y) {
    bool mistake = predict(x) != y;
    if (mistake) ++mistakes_;
    learn(x, y, mistake);
}

Classifier OnlineLearner::hypothesis() const {
    return [this](const BitVector& x) { return predict(x); };
}

OnlineConjunction::OnlineConjunction(int n, bool monotone)
    : n_(n), monotone_(monotone), term_{BitVector::ones(n), monotone ? BitVector(n) : BitVector::ones(n)} {}

bool OnlineConjunction::predict(const BitVector& x) const { return term_.satisfied(x); }

void OnlineConjunction::learn(const BitVector& x, bool y, bool mistake) {
    if (!mistake) return;
    if (!y) throw RealizabilityViolation("online conjunction: negative counterexample, target is not a conjunction");
    term_.pos = term_.pos & x;
    term_.neg = term_.neg & ~x;
}

Halving::Halving(std::vector<Concept> cls) : cls_(std::move(cls)), initial_(static_cast<double>(cls_.size())) {
    if (cls_.empty()) throw InvalidInput("halving: empty class");
    for (std::size_t i = 0; i < cls_.size(); ++i) alive_.push_back(i);
    worst_ratio_ = 0;
}

std::optional<double> Halving::mistake_bound() const { return std::log2(initial_); }

bool Halving::predict(const BitVector& x) const {
    std::size_t ones = 0;
    for (auto i : alive_) ones += cls_[i](x);
    return 2 * ones >= alive_.size();
}

void Halving::learn(const BitVector& x, bool y, bool mistake) {
    std::size_t before = alive_.size();
    std::erase_if(alive_, [&](std::size_t i) { return cls_[i](x) != y; });
    if (alive_.empty()) throw RealizabilityViolation("halving: version space is empty");
    if (mistake) {
        double ratio = static_cast<double>(alive_.size()) / static_cast<double>(before);
        worst_ratio_ = std::max(worst_ratio_, ratio);
    }
}

Soa::Soa(FiniteClass cls, SearchOptions opt, std::optional<std::size_t> root)
    : cls_(std::move(cls)), opt_(std::move(opt)), engine_(cls_, opt_), v_(engine_.full()) {
    if (opt_.rho) {
        if (!root) throw InvalidInput("soa: a ball restriction needs a root point");
        engine_.restrict_to_ball(*root);
    }
    bound_ = engine_.lit(v_);
}

std::size_t Soa::index(const BitVector& x) const {
    auto i = cls_.index_of(x);
    if (!i) throw InvalidInput("soa: point " + x.to_string() + " is not in the class's point list");
    return *i;
}

std::size_t Soa::version_space() const {
    std::size_t s = 0;
    for (auto w : v_) s += std::popcount(w);
    return s;
}

bool Soa::predict_index(std::size_t p) const {
    auto a = engine_.side(v_, p, false), b = engine_.side(v_, p, true);
    auto empty = [](const Bits& v) { return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; }); };
    if (empty(b)) return false;
    if (empty(a)) return true;
    return engine_.lit(b) >= engine_.lit(a);
}

bool Soa::predict(const BitVector& x) const { return predict_index(index(x)); }

void Soa::update_index(std::size_t p, bool y) {
    if (predict_index(p) != y) ++mistakes_;
    v_ = engine_.side(v_, p, y);
    if (version_space() == 0) throw RealizabilityViolation("soa: version space is empty");
}

void Soa::learn(const BitVector& x, bool y, bool) {
    v_ = engine_.side(v_, index(x), y);
    if (version_space() == 0) throw RealizabilityViolation("soa: version space is empty");
}

Winnow::Winnow(int n, bool doubled, double factor)
    : n_(n), doubled_(doubled), factor_(factor), theta_(n), w_(doubled ? 2 * n : n, 1.0) {
    if (n < 1) throw InvalidInput("winnow: n >= 1");
    if (factor <= 1) throw InvalidInput("winnow: factor must exceed 1");
}

double Winnow::score(const BitVector& x) const {
    double s = 0;
    for (int i = 1; i <= n_; ++i) {
        bool b = x.get(i);
        if (b) s += w_[i - 1];
        if (doubled_ && !b) s += w_[n_ + i - 1];
    }
    return s;
}

bool Winnow::predict(const BitVector& x) const { return score(x) >= theta_; }

void Winnow::learn(const BitVector& x, bool y, bool mistake) {
    if (!mistake) return;
    const double f = y ? factor_ : 1.0 / factor_;
    for (int i = 1; i <= n_; ++i) {
        bool b = x.get(i);
        if (b) w_[i - 1] *= f;
        if (doubled_ && !b) w_[n_ + i - 1] *= f;
    }
}

bool RealHalfspace::operator()(const std::vector<double>& x) const { return dot(w, x) + b > 0; }

double RealHalfspace::signed_distance(const std::vector<double>& x) const {
    double nw = norm(w);
    if (nw == 0) throw InvalidInput("signed_distance: zero weight vector");
    return (dot(w, x) + b) / nw;
}

Perceptron::Perceptron(int d) : w_(d, 0.0) {
    if (d < 1) throw InvalidInput("perceptron: d >= 1");
}

bool Perceptron::predict(const std::vector<double>& x) const { return dot(w_, x) > 0; }

void Perceptron::update(const std::vector<double>& x, bool y) {
    if (predict(x) == y) return;
    ++mistakes_;
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] += (y ? 1.0 : -1.0) * x[i];
}

std::optional<std::vector<double>> precision_adversary(const RealHalfspace& c, const RealHalfspace& h,
                                                       const std::vector<double>& x, double rho, double tau) {
    if (rho < tau) return std::nullopt;
    const double nc = norm(c.w), nh = norm(h.w);
    if (nc == 0) throw InvalidInput("precision_adversary: target has zero weights");
    if (c.w.size() != x.size() || h.w.size() != x.size()) throw InvalidInput("precision_adversary: dimension mismatch");
    const std::size_t d = x.size();
    struct Half {
        std::vector<double> u;
        double t;
    };
    auto half = [&](const RealHalfspace& f, double nf, double sign) {
        Half r{std::vector<double>(d), tau - sign * f.b / nf};
        for (std::size_t i = 0; i < d; ++i) r.u[i] = sign * f.w[i] / nf;
        return r;
    };
    std::optional<std::vector<double>> best;
    double best_dist = rho - tau + 1e-12;
    auto consider = [&](const std::vector<Half>& hs, const std::vector<double>& z) {
        for (const auto& q : hs)
            if (dot(q.u, z) < q.t - 1e-12) return;
        std::vector<double> diff(d);
        for (std::size_t i = 0; i < d; ++i) diff[i] = z[i] - x[i];
        double dist = norm(diff);
        if (dist <= best_dist) {
            best_dist = dist;
            best = z;
        }
    };
    std::vector<std::vector<Half>> options;
    if (nh == 0) {
        options.push_back({half(c, nc, 1.0)});
    } else {
        options.push_back({half(c, nc, 1.0), half(h, nh, -1.0)});
        options.push_back({half(c, nc, -1.0), half(h, nh, 1.0)});
    }
    for (const auto& hs : options) {
        consider(hs, x);
        for (const auto& q : hs) {
            double gap = q.t - dot(q.u, x);
            std::vector<double> z = x;
            for (std::size_t i = 0; i < d; ++i) z[i] += gap * q.u[i];
            consider(hs, z);
        }
        if (hs.size() == 2) {
            double g = dot(hs[0].u, hs[1].u);
            double det = 1 - g * g;
            if (std::abs(det) > 1e-12) {
                double r1 = hs[0].t - dot(hs[0].u, x), r2 = hs[1].t - dot(hs[1].u, x);
                double a = (r1 - g * r2) / det, b = (r2 - g * r1) / det;
                std::vector<double> z = x;
                for (std::size_t i = 0; i < d; ++i) z[i] += a * hs[0].u[i] + b * hs[1].u[i];
                consider(hs, z);
            }
        }
    }
    return best;
}

DriverResult robust_leq_driver(OnlineLearner& learner, OracleSession& session, std::uint64_t query_budget) {
    DriverResult r;
    const Sample S = session.sample();
    auto bound = learner.mistake_bound();
    while (true) {
        bool any_ce = false;
        for (const auto& p : S) {
            while (true) {
                if (r.queries >= query_budget) {
                    r.budget_breached = true;
                    r.hypothesis = learner.hypothesis();
                    return r;
                }
                auto a = session.leq_query(learner.hypothesis(), p.x, learner.name());
                ++r.queries;
                if (a.agree) break;
                learner.update(*a.counterexample, a.label);
                ++r.counterexamples;
                any_ce = true;
                if (bound && static_cast<double>(r.counterexamples) > *bound + 1e-9) r.mistake_bound_breached = true;
            }
        }
        ++r.passes;
        if (!any_ce || learner.stable_agreement()) break;
    }
    r.hypothesis = learner.hypothesis();
    return r;
}

}  // namespace rlab
