#include "rlab/robustrisk.hpp"

#include <algorithm>
#include <boost/math/distributions/beta.hpp>

namespace rlab {

namespace {

template <class Pred>
std::optional<BitVector> first_in_ball(const BitVector& x, int rho, Pred&& pred) {
    for (const auto& z : ball(x, rho))
        if (pred(z)) return z;
    return std::nullopt;
}

void check_dims(int a, int b) {
    if (a != b) throw InvalidInput("dimension mismatch");
}

// Poisson-binomial pmf of the number of falsified literals among `probs` (each the chance of falsifying).
std::vector<double> poisson_binomial(const std::vector<double>& probs) {
    std::vector<double> f{1.0};
    for (double q : probs) {
        std::vector<double> g(f.size() + 1, 0.0);
        for (std::size_t t = 0; t < f.size(); ++t) {
            g[t] += f[t] * (1 - q);
            g[t + 1] += f[t] * q;
        }
        f.swap(g);
    }
    return f;
}

}  // namespace

LossWitness robust_loss(const Classifier& c, const Classifier& h, const BitVector& x, int rho) {
    if (rho < 0) throw InvalidInput("robust_loss: negative radius");
    auto w = first_in_ball(x, rho, [&](const BitVector& z) { return c(z) != h(z); });
    return {w.has_value(), w};
}

LossWitness constant_ball_loss(const Classifier& c, const Classifier& h, const BitVector& x, int rho) {
    if (rho < 0) throw InvalidInput("constant_ball_loss: negative radius");
    const bool y = c(x);
    auto w = first_in_ball(x, rho, [&](const BitVector& z) { return h(z) != y; });
    return {w.has_value(), w};
}

std::optional<TermForm> term_form(const Concept& c) {
    const int n = c.n();
    return std::visit(
        [&](const auto& v) -> std::optional<TermForm> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, MonotoneConjunction>) {
                return TermForm{false, Term{v.indices, BitVector(n)}};
            } else if constexpr (std::is_same_v<T, Conjunction>) {
                return TermForm{false, v.term};
            } else if constexpr (std::is_same_v<T, Dictator>) {
                return TermForm{false, Term::from_literals(n, {v.positive ? v.index : -v.index})};
            } else if constexpr (std::is_same_v<T, Singleton>) {
                return TermForm{false, Term{v.point, ~v.point}};
            } else if constexpr (std::is_same_v<T, Constant>) {
                return TermForm{!v.value, Term::top(n)};
            } else {
                return std::nullopt;
            }
        },
        c.variant());
}

int reach_distance(const TermForm& g, const BitVector& x) { return g.never ? kUnreachable : g.term.unsatisfied(x); }

int disagreement_distance(const TermForm& c, const TermForm& h, const BitVector& x) {
    if (c.never && h.never) return kUnreachable;
    if (c.never) return h.term.unsatisfied(x);
    if (h.never) return c.term.unsatisfied(x);
    const Term& a = c.term;
    const Term& b = h.term;
    const int ua = a.unsatisfied(x), ub = b.unsatisfied(x);
    if (a.pos.intersects(b.neg) || a.neg.intersects(b.pos))
        return std::min(ua, ub);
    Term b_only{b.pos & ~a.pos, b.neg & ~a.neg};
    Term a_only{a.pos & ~b.pos, a.neg & ~b.neg};
    int best = kUnreachable;
    if (!b_only.empty()) best = std::min(best, ua + (b_only.satisfied(x) ? 1 : 0));
    if (!a_only.empty()) best = std::min(best, ub + (a_only.satisfied(x) ? 1 : 0));
    return best;
}

bool robust_loss_fast(const Concept& c, const Concept& h, const BitVector& x, int rho) {
    check_dims(c.n(), h.n());
    check_dims(c.n(), x.n());
    auto tc = term_form(c), th = term_form(h);
    if (tc && th) return disagreement_distance(*tc, *th, x) <= rho;
    if (x.n() <= 64)
        return ball_any_mask(x.mask(), x.n(), rho,
                             [&](std::uint64_t z) { return c.evaluate_mask(z) != h.evaluate_mask(z); });
    return robust_loss(c, h, x, rho).loss;
}

std::vector<char> dilate(std::vector<char> set, int n, int rho) {
    for (int r = 0; r < std::min(rho, n); ++r) {
        std::vector<char> next = set;
        for (std::size_t x = 0; x < set.size(); ++x)
            if (set[x])
                for (int i = 0; i < n; ++i) next[x ^ (std::size_t{1} << i)] = 1;
        set.swap(next);
    }
    return set;
}

std::optional<std::vector<double>> product_marginals(const Distribution& d) {
    if (std::holds_alternative<Uniform>(d.variant())) return std::vector<double>(d.n(), 0.5);
    if (auto* p = std::get_if<ProductBernoulli>(&d.variant())) return p->p;
    return std::nullopt;
}

double term_pair_risk_product(const TermForm& c, const TermForm& h, int rho, const std::vector<double>& p) {
    const int n = static_cast<int>(p.size());
    auto falsify = [&](int i, bool positive) { return positive ? 1 - p[i - 1] : p[i - 1]; };
    if (c.never && h.never) return 0;
    if (c.never || h.never) {
        const Term& t = c.never ? h.term : c.term;
        std::vector<double> q;
        for (int l : t.literals()) q.push_back(falsify(std::abs(l), l > 0));
        auto f = poisson_binomial(q);
        double s = 0;
        for (int u = 0; u < static_cast<int>(f.size()) && u <= rho; ++u) s += f[u];
        return s;
    }
    const Term& a = c.term;
    const Term& b = h.term;
    std::vector<double> qs, qa, qb, qx;
    for (int i = 1; i <= n; ++i) {
        int la = a.pos.get(i) ? 1 : (a.neg.get(i) ? -1 : 0);
        int lb = b.pos.get(i) ? 1 : (b.neg.get(i) ? -1 : 0);
        if (la != 0 && la == lb) qs.push_back(falsify(i, la > 0));
        else if (la != 0 && lb != 0) qx.push_back(falsify(i, la > 0));
        else if (la != 0) qa.push_back(falsify(i, la > 0));
        else if (lb != 0) qb.push_back(falsify(i, lb > 0));
    }
    auto fs = poisson_binomial(qs), fa = poisson_binomial(qa), fb = poisson_binomial(qb), fx = poisson_binomial(qx);
    const int nx = static_cast<int>(qx.size());
    double risk = 0;
    for (int us = 0; us < static_cast<int>(fs.size()); ++us)
        for (int ua = 0; ua < static_cast<int>(fa.size()); ++ua)
            for (int ub = 0; ub < static_cast<int>(fb.size()); ++ub)
                for (int ux = 0; ux <= nx; ++ux) {
                    double w = fs[us] * fa[ua] * fb[ub] * fx[ux];
                    if (w == 0) continue;
                    int d;
                    if (nx > 0) {
                        d = std::min(us + ua + ux, us + ub + (nx - ux));
                    } else {
                        d = kUnreachable;
                        if (!qb.empty()) d = std::min(d, us + ua + (ub == 0 ? 1 : 0));
                        if (!qa.empty()) d = std::min(d, us + ub + (ua == 0 ? 1 : 0));
                    }
                    if (d <= rho) risk += w;
                }
    return std::min(1.0, risk);
}

RiskResult robust_risk_exact(const Concept& c, const Concept& h, int rho, const Distribution& d,
                             std::optional<double> eps) {
    check_dims(c.n(), h.n());
    check_dims(c.n(), d.n());
    if (rho < 0) throw InvalidInput("robust_risk_exact: negative radius");
    const int n = c.n();
    auto tc = term_form(c), th = term_form(h);
    if (tc && th && !eps) {
        if (auto p = product_marginals(d)) return {term_pair_risk_product(*tc, *th, rho, *p), true, false, {}, 0};
    }
    if (n > 20) throw BudgetExceeded("robust_risk_exact needs n <= 20; use robust_risk_mc");
    RiskResult r;
    const std::uint64_t N = std::uint64_t{1} << n;
    if (tc && th) {
        for (std::uint64_t x = 0; x < N; ++x) {
            if (disagreement_distance(*tc, *th, BitVector::from_mask(n, x)) > rho) continue;
            r.value += d.pmf_mask(x);
            ++r.witness_count;
            if (eps && r.value > *eps) {
                r.exceeded = true;
                return r;
            }
        }
        return r;
    }
    std::vector<char> delta(N);
    for (std::uint64_t x = 0; x < N; ++x) delta[x] = c.evaluate_mask(x) != h.evaluate_mask(x);
    auto loss = dilate(std::move(delta), n, rho);
    for (std::uint64_t x = 0; x < N; ++x) {
        if (!loss[x]) continue;
        r.value += d.pmf_mask(x);
        ++r.witness_count;
        if (eps && r.value > *eps) {
            r.exceeded = true;
            return r;
        }
    }
    return r;
}

RiskResult robust_risk_exact(const Classifier& c, const Classifier& h, int rho, const Distribution& d,
                             std::optional<double> eps) {
    const int n = d.n();
    if (n > 20) throw BudgetExceeded("robust_risk_exact needs n <= 20; use robust_risk_mc");
    RiskResult r;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        double w = d.pmf_mask(x);
        if (w == 0) continue;
        if (!ball_any_mask(x, n, rho, [&](std::uint64_t z) {
                auto b = BitVector::from_mask(n, z);
                return c(b) != h(b);
            }))
            continue;
        r.value += w;
        ++r.witness_count;
        if (eps && r.value > *eps) {
            r.exceeded = true;
            return r;
        }
    }
    return r;
}

RiskResult constant_risk_exact(const Classifier& c, const Classifier& h, int rho, const Distribution& d) {
    const int n = d.n();
    if (n > 20) throw BudgetExceeded("constant_risk_exact needs n <= 20");
    RiskResult r;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        double w = d.pmf_mask(x);
        if (w == 0) continue;
        if (constant_ball_loss(c, h, BitVector::from_mask(n, x), rho).loss) {
            r.value += w;
            ++r.witness_count;
        }
    }
    return r;
}

std::pair<double, double> binomial_interval(std::uint64_t k, std::uint64_t m, double confidence) {
    if (m == 0 || k > m) throw InvalidInput("binomial_interval: need 0 <= k <= m, m >= 1");
    const double a = (1 - confidence) / 2;
    double lo = 0, hi = 1;
    if (k > 0) lo = quantile(boost::math::beta_distribution<double>(double(k), double(m - k + 1)), a);
    if (k < m) hi = quantile(boost::math::beta_distribution<double>(double(k + 1), double(m - k)), 1 - a);
    return {lo, hi};
}

RiskResult robust_risk_mc(const Concept& c, const Concept& h, int rho, const Distribution& d, std::uint64_t m,
                          Rng& rng, double confidence) {
    if (m == 0) throw InvalidInput("robust_risk_mc: m >= 1");
    check_dims(c.n(), d.n());
    std::uint64_t k = 0;
    for (std::uint64_t t = 0; t < m; ++t)
        if (robust_loss_fast(c, h, d.sample(rng), rho)) ++k;
    RiskResult r;
    r.exact = false;
    r.value = static_cast<double>(k) / static_cast<double>(m);
    r.interval = binomial_interval(k, m, confidence);
    r.witness_count = k;
    return r;
}

}  // namespace rlab
