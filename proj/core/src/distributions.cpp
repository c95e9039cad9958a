#include "rlab/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_dim(int n) {
    if (n < 1 || n > BitVector::kMaxDim) throw InvalidInput("distribution dimension out of range");
}

}  // namespace

Distribution Distribution::uniform(int n) {
    check_dim(n);
    return Distribution(n, Uniform{});
}

Distribution Distribution::product(std::vector<double> p) {
    check_dim(static_cast<int>(p.size()));
    for (double q : p)
        if (!(q > 0.0 && q < 1.0)) throw InvalidInput("ProductBernoulli requires 0 < p_i < 1");
    int n = static_cast<int>(p.size());
    return Distribution(n, ProductBernoulli{std::move(p)});
}

Distribution Distribution::product(int n, double p) { return product(std::vector<double>(n, p)); }

Distribution Distribution::product_alpha(int n, double alpha) {
    if (!(alpha >= 1.0)) throw InvalidInput("alpha must be >= 1");
    return product(n, alpha / (1.0 + alpha));
}

Distribution Distribution::correlated_pair(int n, double eta) {
    check_dim(n);
    if (n < 2) throw InvalidInput("CorrelatedPair needs n >= 2");
    if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidInput("CorrelatedPair requires eta in [0, 1]");
    return Distribution(n, CorrelatedPair{eta});
}

Distribution Distribution::point_mass(const BitVector& x) { return finite_exact({x}, {1}); }

Distribution Distribution::finite_exact(std::vector<BitVector> points, std::vector<std::uint64_t> weights) {
    if (points.empty() || points.size() != weights.size()) throw InvalidInput("FiniteSupport: bad table");
    int n = points.front().n();
    check_dim(n);
    Rational total = 0;
    for (auto w : weights) total += w;
    if (total == 0) throw InvalidInput("FiniteSupport: total mass is zero");
    FiniteSupport fs;
    fs.exact.emplace();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].n() != n) throw InvalidInput("FiniteSupport: dimension mismatch");
        Rational q = Rational(weights[i]) / total;
        fs.exact->push_back(q);
        fs.mass.push_back(static_cast<double>(q));
    }
    fs.points = std::move(points);
    Distribution d(n, std::move(fs));
    double acc = 0;
    for (double m : std::get<FiniteSupport>(d.v_).mass) d.cdf_.push_back(acc += m);
    return d;
}

Distribution Distribution::finite(std::vector<BitVector> points, std::vector<double> mass) {
    if (points.empty() || points.size() != mass.size()) throw InvalidInput("FiniteSupport: bad table");
    int n = points.front().n();
    check_dim(n);
    double total = 0;
    for (double m : mass) {
        if (!(m >= 0.0)) throw InvalidInput("FiniteSupport: negative mass");
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-9) throw InvalidInput("FiniteSupport: masses must sum to 1");
    for (auto& p : points)
        if (p.n() != n) throw InvalidInput("FiniteSupport: dimension mismatch");
    Distribution d(n, FiniteSupport{std::move(points), std::move(mass), std::nullopt});
    double acc = 0;
    for (double m : std::get<FiniteSupport>(d.v_).mass) d.cdf_.push_back(acc += m);
    return d;
}

std::string Distribution::kind() const {
    return std::visit(overloaded{[](const Uniform&) { return std::string("uniform"); },
                                 [](const ProductBernoulli&) { return std::string("product"); },
                                 [](const CorrelatedPair&) { return std::string("correlated_pair"); },
                                 [](const FiniteSupport&) { return std::string("finite"); }},
                      v_);
}

bool Distribution::is_exact() const {
    if (std::holds_alternative<Uniform>(v_)) return true;
    if (auto* f = std::get_if<FiniteSupport>(&v_)) return f->exact.has_value();
    return false;
}

double Distribution::pmf(const BitVector& x) const {
    if (x.n() != n_) throw InvalidInput("pmf: dimension mismatch");
    return std::visit(
        overloaded{[&](const Uniform&) { return std::ldexp(1.0, -n_); },
                   [&](const ProductBernoulli& d) {
                       double r = 1.0;
                       for (int i = 1; i <= n_; ++i) r *= x.get(i) ? d.p[i - 1] : 1.0 - d.p[i - 1];
                       return r;
                   },
                   [&](const CorrelatedPair& d) {
                       double r = x.get(1) == x.get(2) ? d.eta : 1.0 - d.eta;
                       return 0.5 * r * std::ldexp(1.0, -(n_ - 2));
                   },
                   [&](const FiniteSupport& d) {
                       double r = 0.0;
                       for (std::size_t i = 0; i < d.points.size(); ++i)
                           if (d.points[i] == x) r += d.mass[i];
                       return r;
                   }},
        v_);
}

double Distribution::pmf_mask(std::uint64_t x) const {
    if (n_ > 64) throw InvalidInput("pmf_mask needs n <= 64");
    return std::visit(overloaded{[&](const Uniform&) { return std::ldexp(1.0, -n_); },
                                 [&](const ProductBernoulli& d) {
                                     double r = 1.0;
                                     for (int i = 0; i < n_; ++i) r *= (x >> i) & 1 ? d.p[i] : 1.0 - d.p[i];
                                     return r;
                                 },
                                 [&](const CorrelatedPair& d) {
                                     double r = (x & 1) == ((x >> 1) & 1) ? d.eta : 1.0 - d.eta;
                                     return 0.5 * r * std::ldexp(1.0, -(n_ - 2));
                                 },
                                 [&](const FiniteSupport&) { return pmf(BitVector::from_mask(n_, x)); }},
                      v_);
}

std::optional<Rational> Distribution::pmf_exact(const BitVector& x) const {
    if (x.n() != n_) throw InvalidInput("pmf: dimension mismatch");
    if (std::holds_alternative<Uniform>(v_)) return Rational(1, boost::multiprecision::cpp_int(1) << n_);
    if (auto* f = std::get_if<FiniteSupport>(&v_); f && f->exact) {
        Rational r = 0;
        for (std::size_t i = 0; i < f->points.size(); ++i)
            if (f->points[i] == x) r += (*f->exact)[i];
        return r;
    }
    return std::nullopt;
}

BitVector Distribution::sample(Rng& rng) const {
    return std::visit(overloaded{[&](const Uniform&) {
                                     BitVector x(n_);
                                     for (int i = 1; i <= n_; i += 64) {
                                         std::uint64_t w = rng();
                                         for (int j = 0; j < 64 && i + j <= n_; ++j) x.set(i + j, (w >> j) & 1);
                                     }
                                     return x;
                                 },
                                 [&](const ProductBernoulli& d) {
                                     BitVector x(n_);
                                     for (int i = 1; i <= n_; ++i) x.set(i, rng.bernoulli(d.p[i - 1]));
                                     return x;
                                 },
                                 [&](const CorrelatedPair& d) {
                                     BitVector x(n_);
                                     bool b1 = rng() & 1;
                                     x.set(1, b1);
                                     x.set(2, rng.bernoulli(d.eta) ? b1 : !b1);
                                     for (int i = 3; i <= n_; ++i) x.set(i, rng() & 1);
                                     return x;
                                 },
                                 [&](const FiniteSupport& d) {
                                     double u = rng.uniform() * cdf_.back();
                                     auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
                                     std::size_t k = std::min<std::size_t>(it - cdf_.begin(), d.points.size() - 1);
                                     while (k > 0 && d.mass[k] == 0.0) --k;
                                     return d.points[k];
                                 }},
                      v_);
}

std::vector<double> Distribution::table() const {
    require_exact(n_, "Distribution::table");
    std::vector<double> t(std::size_t{1} << n_, 0.0);
    if (auto* f = std::get_if<FiniteSupport>(&v_)) {
        for (std::size_t i = 0; i < f->points.size(); ++i) t[f->points[i].mask()] += f->mass[i];
        return t;
    }
    if (auto* p = std::get_if<ProductBernoulli>(&v_)) {
        t[0] = 1.0;
        for (int i = 0; i < n_; ++i) {
            std::size_t half = std::size_t{1} << i;
            for (std::size_t m = 0; m < half; ++m) {
                t[m | half] = t[m] * p->p[i];
                t[m] *= 1.0 - p->p[i];
            }
        }
        return t;
    }
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = pmf_mask(m);
    return t;
}

double log_lipschitz_alpha(int n, const std::vector<double>& t) {
    double alpha = 1.0;
    for (std::size_t x = 0; x < t.size(); ++x) {
        for (int i = 0; i < n; ++i) {
            std::size_t y = x ^ (std::size_t{1} << i);
            if (y < x) continue;
            double a = t[x], b = t[y];
            if (a == 0.0 && b == 0.0) continue;
            if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
            alpha = std::max(alpha, std::max(a / b, b / a));
        }
    }
    return alpha;
}

double log_lipschitz_alpha(const Distribution& d) {
    require_exact(d.n(), "log_lipschitz_alpha");
    return log_lipschitz_alpha(d.n(), d.table());
}

double probability(const Distribution& d, const std::function<bool(std::uint64_t)>& pred) {
    auto t = d.table();
    double s = 0.0;
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t[x] != 0.0 && pred(x)) s += t[x];
    return s;
}

std::vector<double> marginal_table(const Distribution& d, const std::vector<int>& keep) {
    auto t = d.table();
    std::vector<double> m(std::size_t{1} << keep.size(), 0.0);
    for (std::size_t x = 0; x < t.size(); ++x) {
        std::size_t y = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            if ((x >> (keep[j] - 1)) & 1) y |= std::size_t{1} << j;
        m[y] += t[x];
    }
    return m;
}

std::vector<double> pushforward_table(const Distribution& d, int m,
                                      const std::function<std::uint64_t(std::uint64_t)>& f) {
    require_exact(m, "pushforward_table");
    auto t = d.table();
    std::vector<double> r(std::size_t{1} << m, 0.0);
    for (std::size_t x = 0; x < t.size(); ++x) r[f(x)] += t[x];
    return r;
}

}  // namespace rlab
