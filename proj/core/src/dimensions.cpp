#include "rlab/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "rlab/robustrisk.hpp"

namespace rlab {

std::size_t BitsHash::operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b) h = splitmix64(h ^ w);
    return static_cast<std::size_t>(h);
}

namespace {

std::size_t words_for(std::size_t m) { return (m + 63) / 64; }

bool get_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

std::size_t count(const Bits& b) {
    std::size_t s = 0;
    for (auto w : b) s += std::popcount(w);
    return s;
}

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

Bits band(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

int floor_log2(std::size_t v) { return v == 0 ? -1 : static_cast<int>(std::bit_width(v)) - 1; }

void charge(std::uint64_t& nodes, std::uint64_t budget, const char* what) {
    if (++nodes > budget)
        throw BudgetExceeded(std::string(what) + ": search exceeded " + std::to_string(budget) + " nodes");
}

}  // namespace

FiniteClass::FiniteClass(std::vector<BitVector> points, const std::vector<Classifier>& concepts)
    : m_(points.size()), points_(std::move(points)) {
    for (const auto& c : concepts) {
        Bits r(words_for(m_));
        for (std::size_t p = 0; p < m_; ++p)
            if (c(points_[p])) set_bit(r, p);
        rows_.push_back(std::move(r));
    }
    dedupe();
}

FiniteClass::FiniteClass(std::size_t num_points, std::vector<Bits> rows) : m_(num_points), rows_(std::move(rows)) {
    for (auto& r : rows_)
        if (r.size() != words_for(m_)) throw InvalidInput("FiniteClass: row width does not match point count");
    dedupe();
}

FiniteClass FiniteClass::on_points(const std::vector<Concept>& concepts, std::vector<BitVector> points) {
    std::vector<Classifier> cs(concepts.begin(), concepts.end());
    return FiniteClass(std::move(points), cs);
}

FiniteClass FiniteClass::on_cube(const std::vector<Concept>& concepts, int n) {
    require_exact(n, "FiniteClass::on_cube");
    std::vector<BitVector> pts;
    for_each_point(n, [&](std::uint64_t m) { pts.push_back(BitVector::from_mask(n, m)); });
    std::vector<Bits> rows;
    for (const auto& c : concepts) {
        Bits r(words_for(pts.size()));
        for (std::size_t p = 0; p < pts.size(); ++p)
            if (c.evaluate_mask(p)) set_bit(r, p);
        rows.push_back(std::move(r));
    }
    FiniteClass f(pts.size(), std::move(rows));
    f.points_ = std::move(pts);
    return f;
}

void FiniteClass::dedupe() {
    std::unordered_set<Bits, BitsHash> seen;
    std::vector<Bits> kept;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t from = origin_.empty() ? i : origin_[i];
        if (seen.insert(rows_[i]).second) {
            kept.push_back(std::move(rows_[i]));
            origin.push_back(from);
        }
    }
    rows_ = std::move(kept);
    origin_ = std::move(origin);
}

std::optional<std::size_t> FiniteClass::index_of(const BitVector& x) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == x) return i;
    return std::nullopt;
}

Metric hamming_metric(const FiniteClass& f) {
    if (!f.has_points()) throw InvalidInput("hamming_metric: class has no hypercube points");
    const auto* pts = &f.points();
    return [pts](std::size_t a, std::size_t b) { return static_cast<double>(hamming_distance((*pts)[a], (*pts)[b])); };
}

bool shatters(const FiniteClass& f, const std::vector<std::size_t>& pts) {
    if (pts.size() >= 63) return false;
    std::unordered_set<std::uint64_t> pats;
    for (std::size_t c = 0; c < f.size(); ++c) {
        std::uint64_t pat = 0;
        for (std::size_t k = 0; k < pts.size(); ++k)
            if (f.value(c, pts[k])) pat |= std::uint64_t{1} << k;
        pats.insert(pat);
    }
    return pats.size() == (std::uint64_t{1} << pts.size());
}

namespace {

// Depth-first search for shattered sets. Groups hold concepts sharing a pattern on the current set;
// the set stays shattered after adding p iff every group splits on p.
struct VcSearch {
    const FiniteClass& f;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best = 0;
    std::vector<std::size_t> best_set;
    std::vector<std::size_t> cur;

    void run(const std::vector<std::vector<std::size_t>>& groups, const std::vector<std::size_t>& cand,
             std::size_t from) {
        charge(nodes, budget, "vc_dimension");
        int depth = static_cast<int>(cur.size());
        if (depth > best) {
            best = depth;
            best_set = cur;
        }
        const int cap = floor_log2(f.size());
        for (std::size_t k = from; k < cand.size(); ++k) {
            if (best >= cap) return;
            if (depth + static_cast<int>(cand.size() - k) <= best) return;
            std::size_t p = cand[k];
            std::vector<std::vector<std::size_t>> next;
            next.reserve(groups.size() * 2);
            bool ok = true;
            for (const auto& g : groups) {
                std::vector<std::size_t> a, b;
                for (auto c : g) (f.value(c, p) ? b : a).push_back(c);
                if (a.empty() || b.empty()) {
                    ok = false;
                    break;
                }
                next.push_back(std::move(a));
                next.push_back(std::move(b));
            }
            if (!ok) continue;
            cur.push_back(p);
            run(next, cand, k + 1);
            cur.pop_back();
        }
    }
};

}  // namespace

DimensionResult vc_dimension(const FiniteClass& f, const SearchOptions& opt) {
    DimensionResult r;
    if (f.size() < 2) return r;
    std::vector<std::size_t> all(f.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    VcSearch s{f, opt.budget, 0, 0, {}, {}};
    if (!opt.rho) {
        std::vector<std::size_t> cand(f.num_points());
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = i;
        s.run({all}, cand, 0);
    } else {
        Metric d = opt.metric ? opt.metric : hamming_metric(f);
        for (std::size_t a = 0; a < f.num_points(); ++a) {
            std::vector<std::size_t> zero, one;
            for (auto c : all) (f.value(c, a) ? one : zero).push_back(c);
            if (zero.empty() || one.empty()) continue;
            std::vector<std::size_t> cand;
            for (std::size_t p = 0; p < f.num_points(); ++p)
                if (p != a && d(a, p) <= *opt.rho + 1e-9) cand.push_back(p);
            s.cur = {a};
            s.run({zero, one}, cand, 0);
        }
    }
    r.value = s.best;
    r.witness = s.best_set;
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = s.nodes;
    return r;
}

LittlestoneEngine::LittlestoneEngine(const FiniteClass& f, const SearchOptions& opt)
    : f_(f), opt_(opt), d_(opt.metric) {
    const std::size_t m = f.num_points();
    const std::size_t W = words_for(f.size());
    const bool precise = opt.tau && *opt.tau > 0;
    if ((opt.rho || precise) && !d_) d_ = hamming_metric(f);
    col1_.assign(m, Bits(W, 0));
    col0_.assign(m, Bits(W, 0));
    for (std::size_t p = 0; p < m; ++p) {
        std::vector<std::size_t> nb{p};
        if (precise)
            for (std::size_t q = 0; q < m; ++q)
                if (q != p && d_(p, q) <= *opt.tau + 1e-9) nb.push_back(q);
        for (std::size_t c = 0; c < f.size(); ++c) {
            bool all1 = true, all0 = true;
            for (auto q : nb) (f.value(c, q) ? all0 : all1) = false;
            if (all1) set_bit(col1_[p], c);
            if (all0) set_bit(col0_[p], c);
        }
    }
    for (std::size_t p = 0; p < m; ++p) allowed_.push_back(p);
}

void LittlestoneEngine::restrict_to_ball(std::size_t root) {
    if (!opt_.rho) throw InvalidInput("restrict_to_ball needs a radius");
    allowed_.clear();
    memo_.clear();
    for (std::size_t p = 0; p < f_.num_points(); ++p)
        if (d_(root, p) <= *opt_.rho + 1e-9) allowed_.push_back(p);
}

Bits LittlestoneEngine::side(const Bits& v, std::size_t p, bool b) const { return band(v, b ? col1_[p] : col0_[p]); }

Bits LittlestoneEngine::full() const {
    Bits r(words_for(f_.size()), 0);
    for (std::size_t c = 0; c < f_.size(); ++c) set_bit(r, c);
    return r;
}

int LittlestoneEngine::lit(const Bits& v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    charge(nodes_, opt_.budget, "littlestone_dimension");
    const int cap = floor_log2(count(v));
    int best = 0;
    for (auto p : allowed_) {
        if (best >= cap) break;
        Bits a = band(v, col0_[p]);
        if (!any(a)) continue;
        Bits b = band(v, col1_[p]);
        if (!any(b)) continue;
        if (1 + floor_log2(std::min(count(a), count(b))) <= best) continue;
        int la = lit(a);
        if (1 + la <= best) continue;
        best = std::max(best, 1 + std::min(la, lit(b)));
    }
    memo_.emplace(v, best);
    return best;
}

DimensionResult littlestone_dimension(const FiniteClass& f, const SearchOptions& opt) {
    DimensionResult r;
    LittlestoneEngine e(f, opt);
    Bits full = e.full();
    if (!opt.rho) {
        r.value = e.lit(full);
    } else {
        for (std::size_t root = 0; root < f.num_points(); ++root) {
            Bits a = e.side(full, root, false), b = e.side(full, root, true);
            if (!any(a) || !any(b)) continue;
            e.restrict_to_ball(root);
            int val = 1 + std::min(e.lit(a), e.lit(b));
            if (val > r.value) {
                r.value = val;
                r.witness = {root};
            }
        }
    }
    r.nodes = e.nodes();
    return r;
}

std::uint64_t growth_function(const FiniteClass& f, int m, std::uint64_t budget) {
    const std::size_t P = f.num_points();
    if (m < 0) throw InvalidInput("growth_function: m >= 0");
    if (m == 0) return f.size() ? 1 : 0;
    if (static_cast<std::size_t>(m) > P) throw InvalidInput("growth_function: m exceeds the number of points");
    if (m >= 63) throw BudgetExceeded("growth_function: m too large");
    if (binomial(static_cast<int>(P), m) * f.size() > budget)
        throw BudgetExceeded("growth_function: " + std::to_string(binomial(static_cast<int>(P), m)) +
                             " subsets exceed the budget");
    std::vector<std::size_t> idx(m);
    for (int k = 0; k < m; ++k) idx[k] = k;
    std::uint64_t best = 0;
    const std::uint64_t cap = std::min<std::uint64_t>(f.size(), std::uint64_t{1} << m);
    while (true) {
        std::unordered_set<std::uint64_t> pats;
        for (std::size_t c = 0; c < f.size(); ++c) {
            std::uint64_t pat = 0;
            for (int k = 0; k < m; ++k)
                if (f.value(c, idx[k])) pat |= std::uint64_t{1} << k;
            pats.insert(pat);
        }
        best = std::max<std::uint64_t>(best, pats.size());
        if (best == cap) return best;
        int k = m - 1;
        while (k >= 0 && idx[k] == P - m + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

FiniteClass robust_loss_class(const FiniteClass& C, const FiniteClass& H, int n, int rho, std::uint64_t budget) {
    if (n > 14) throw BudgetExceeded("robust_loss_class needs n <= 14");
    const std::size_t N = std::size_t{1} << n;
    if (C.num_points() != N || H.num_points() != N)
        throw InvalidInput("robust_loss_class: classes must be tabulated on the whole cube");
    if (rho < 0) throw InvalidInput("robust_loss_class: negative radius");
    const std::size_t W = words_for(N);
    auto dilated = [&](const Bits& delta) {
        std::vector<char> t(N);
        for (std::size_t x = 0; x < N; ++x) t[x] = get_bit(delta, x);
        t = dilate(std::move(t), n, rho);
        Bits r(W, 0);
        for (std::size_t x = 0; x < N; ++x)
            if (t[x]) set_bit(r, x);
        return r;
    };
    std::vector<Bits> out;
    if (rho >= n - 1) {
        // Loss is 0 when c = h, 1 except at the antipode of p when c, h differ only at p, and 1 otherwise.
        std::unordered_set<Bits, BitsHash> hrows(H.rows().begin(), H.rows().end());
        bool zero = false;
        std::vector<char> single(N, 0);
        std::uint64_t near = 0, work = 0;
        for (const auto& r : C.rows()) {
            if (hrows.count(r)) {
                zero = true;
                ++near;
            }
            Bits probe = r;
            for (std::size_t p = 0; p < N; ++p) {
                charge(work, budget, "robust_loss_class");
                probe[p / 64] ^= std::uint64_t{1} << (p % 64);
                if (hrows.count(probe)) {
                    single[p] = 1;
                    ++near;
                }
                probe[p / 64] ^= std::uint64_t{1} << (p % 64);
            }
        }
        // Pairs differing on two or more points (or on any point when rho >= n) give the all-ones row.
        bool ones = near < static_cast<std::uint64_t>(C.size()) * H.size();
        if (rho >= n) {
            ones = ones || std::any_of(single.begin(), single.end(), [](char v) { return v != 0; });
            std::fill(single.begin(), single.end(), 0);
        }
        Bits all(W, 0);
        for (std::size_t x = 0; x < N; ++x) set_bit(all, x);
        if (zero) out.push_back(Bits(W, 0));
        if (ones) out.push_back(all);
        for (std::size_t p = 0; p < N; ++p)
            if (single[p]) {
                Bits r = all;
                std::size_t anti = (N - 1) ^ p;
                r[anti / 64] &= ~(std::uint64_t{1} << (anti % 64));
                out.push_back(r);
            }
        return FiniteClass(N, std::move(out));
    }
    if (static_cast<std::uint64_t>(C.size()) * H.size() > budget)
        throw BudgetExceeded("robust_loss_class: " + std::to_string(C.size() * H.size()) + " pairs exceed the budget");
    std::unordered_set<Bits, BitsHash> deltas;
    for (const auto& a : C.rows())
        for (const auto& b : H.rows()) {
            Bits d(W);
            for (std::size_t w = 0; w < W; ++w) d[w] = a[w] ^ b[w];
            deltas.insert(std::move(d));
        }
    std::vector<Bits> ordered(deltas.begin(), deltas.end());
    std::sort(ordered.begin(), ordered.end());
    for (const auto& d : ordered) out.push_back(dilated(d));
    std::sort(out.begin(), out.end());
    return FiniteClass(N, std::move(out));
}

ThresholdGrid threshold_grid(double B, double step) {
    if (!(B > 0) || !(step > 0)) throw InvalidInput("threshold_grid: B and step must be positive");
    const auto J = static_cast<std::size_t>(std::llround(B / step));
    if (std::abs(static_cast<double>(J) * step - B) > 1e-9 * B) throw InvalidInput("threshold_grid: step must divide B");
    if (J > 4096) throw BudgetExceeded("threshold_grid: too many grid points");
    const std::size_t m = J + 1;
    std::vector<double> coords(m);
    for (std::size_t j = 0; j < m; ++j) coords[j] = static_cast<double>(j) * step;
    std::vector<Bits> rows;
    // Threshold between grid points j-1 and j, for j = 0..m: labels points >= j as 1.
    for (std::size_t j = 0; j <= m; ++j) {
        Bits r(words_for(m), 0);
        for (std::size_t p = j; p < m; ++p) set_bit(r, p);
        rows.push_back(std::move(r));
    }
    return {FiniteClass(m, std::move(rows)), coords};
}

Metric ThresholdGrid::metric() const {
    return [c = coords](std::size_t a, std::size_t b) { return std::abs(c[a] - c[b]); };
}

}  // namespace rlab
