#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rlab/error.hpp"
#include "rlab/harness.hpp"
#include "rlab/learners.hpp"
#include "rlab/oracles.hpp"
#include "rlab/robustrisk.hpp"

namespace rlab {

namespace {

using json = nlohmann::json;

const std::string kAnyAlgorithm =
    "Lower bounds hold for every learner; this run instantiates one representative learner.";

template <class T>
T need(const std::optional<T>& v, const char* name) {
    if (!v) throw InvalidInput(std::string("missing field ") + name);
    return *v;
}

int int_rho(const ScenarioConfig& c) {
    double r = need(c.rho, "rho");
    if (r < 0 || r != std::floor(r)) throw InvalidInput("rho must be a non-negative integer for this scenario");
    return static_cast<int>(r);
}

void check_n(int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw InvalidInput("n = " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "]");
}

void check_unit(double v, const char* name) {
    if (!(v > 0 && v < 1)) throw InvalidInput(std::string(name) + " must lie in (0, 1)");
}

// k distinct indices of [1, n] in random order.
std::vector<int> random_indices(int n, int k, Rng& rng) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int i = 0; i < k; ++i) std::swap(v[i], v[i + rng.below(n - i)]);
    v.resize(k);
    return v;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

double mean_of(const std::vector<std::vector<json>>& rows, std::size_t col) {
    if (rows.empty()) return 0;
    double s = 0;
    for (const auto& r : rows) s += r[col].get<double>();
    return s / static_cast<double>(rows.size());
}

double max_of(const std::vector<std::vector<json>>& rows, std::size_t col) {
    double s = -INFINITY;
    for (const auto& r : rows) s = std::max(s, r[col].get<double>());
    return s;
}

std::uint64_t count_of(const std::vector<std::vector<json>>& rows, std::size_t col) {
    std::uint64_t k = 0;
    for (const auto& r : rows) k += r[col].get<double>() != 0;
    return k;
}

struct Run {
    ScenarioReport rep;
    explicit Run(const ScenarioConfig& c, std::vector<std::string> cols) {
        const auto& info = scenario_info(c.scenario);
        rep.config = config_to_json(c);
        rep.anchor = info.anchor;
        rep.columns = std::move(cols);
        rep.rows.resize(c.trials);
    }
    void trials(const ScenarioConfig& c, const std::function<std::vector<json>(std::uint64_t, Rng&)>& body) {
        parallel_trials(c.trials, [&](std::uint64_t t) {
            Rng rng(trial_seed(c.base_seed, t));
            auto row = body(t, rng);
            row.insert(row.begin(), json(t));
            rep.rows[t] = std::move(row);
        });
    }
};

bool robustly_consistent(const Classifier& c, const Classifier& h, const Sample& s, int rho) {
    return std::none_of(s.begin(), s.end(), [&](const LabeledPoint& p) { return robust_loss(c, h, p.x, rho).loss; });
}

// Integer LTF with |w|_1 + |b| <= W: each unit of budget lands on a random slot with a per-slot sign.
Concept random_ltf(int n, long long W, Rng& rng) {
    std::vector<long long> w(n + 1, 0);
    std::vector<int> sign(n + 1);
    for (auto& s : sign) s = rng.bernoulli(0.5) ? 1 : -1;
    for (long long u = 0; u < W; ++u) {
        auto k = rng.below(n + 1);
        w[k] += sign[k];
    }
    long long b = w.back();
    w.pop_back();
    return Concept::ltf(w, b, W);
}

// ---------------------------------------------------------------------------------------------

ScenarioReport monconj_lower_bound(ScenarioConfig c) {
    if (!c.n) c.n = 16;
    if (!c.rho) c.rho = 4;
    if (!c.kappa) c.kappa = 1.5;
    const int n = *c.n, rho = int_rho(c);
    check_n(n, 4, 64);
    if (rho < 1 || 4 * rho > n) throw InvalidInput("need 1 <= rho and 4 rho <= n");
    if (*c.kappa <= 0) throw InvalidInput("kappa must be positive");
    const auto m = static_cast<std::uint64_t>(std::floor(std::pow(2.0, *c.kappa * rho)));
    if (m > 10'000'000) throw BudgetExceeded("sample size 2^(kappa rho) = " + std::to_string(m));
    const auto U = Distribution::uniform(n);

    Run run(c, {"trial", "target", "all_negative", "risk"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        auto idx = random_indices(n, 4 * rho, rng);
        auto c1 = Concept::mon_conj(n, sorted({idx.begin(), idx.begin() + 2 * rho}));
        auto c2 = Concept::mon_conj(n, sorted({idx.begin() + 2 * rho, idx.end()}));
        bool second = rng.bernoulli(0.5);
        const Concept& target = second ? c2 : c1;
        Sample s;
        bool all_neg = true;
        for (std::uint64_t i = 0; i < m; ++i) {
            auto x = U.sample(rng);
            all_neg = all_neg && !c1(x) && !c2(x);
            s.push_back({x, target(x)});
        }
        auto h = learn_conjunction(s, n, true);
        double risk = robust_risk_exact(target, h, rho, U).value;
        return std::vector<json>{second ? 2 : 1, all_neg ? 1 : 0, risk};
    });

    auto& r = run.rep;
    const double bound = 5.0 / 48;
    const double mean = mean_of(r.rows, 3);
    const auto k = count_of(r.rows, 2);
    const double expected = std::pow(1 - std::ldexp(1.0, -2 * rho), 2.0 * static_cast<double>(m));
    auto [lo, hi] = binomial_interval(k, c.trials, 0.99);
    r.aggregates = {{"m", m},
                    {"mean_risk", mean},
                    {"lower_bound", bound},
                    {"all_negative_rate", static_cast<double>(k) / static_cast<double>(c.trials)},
                    {"all_negative_expected", expected},
                    {"all_negative_ci99", {lo, hi}}};
    r.predicate = "mean_risk >= 5/48 - 0.02 and (1 - 2^-2rho)^(2m) inside the 99% interval of all_negative_rate";
    r.scope = kAnyAlgorithm;
    r.pass = mean >= bound - kTolerance && lo <= expected && expected <= hi;
    return r;
}

ScenarioReport lmq_lower_bound(ScenarioConfig c) {
    if (!c.n) c.n = 16;
    if (!c.rho) c.rho = 4;
    const int n = *c.n, rho = int_rho(c);
    if (!c.lambda) c.lambda = rho;
    if (!c.m) c.m = std::uint64_t{1} << rho;
    if (!c.queries) c.queries = std::uint64_t{1} << (rho - 1);
    check_n(n, 4, 64);
    if (rho < 2 || 4 * rho > n) throw InvalidInput("need 2 <= rho and 4 rho <= n");
    const int lambda = *c.lambda;
    if (lambda < 0 || lambda > n) throw InvalidInput("lambda outside [0, n]");
    const std::uint64_t m = *c.m, q = *c.queries;
    if (m < 1) throw InvalidInput("m >= 1");
    const auto U = Distribution::uniform(n);

    Run run(c, {"trial", "target", "all_negative", "risk"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        auto idx = random_indices(n, 4 * rho, rng);
        std::vector<int> l1, l2;
        for (int i = 0; i < 4 * rho; ++i) (i < 2 * rho ? l1 : l2).push_back(rng.bernoulli(0.5) ? idx[i] : -idx[i]);
        auto c1 = Concept::conj(n, l1), c2 = Concept::conj(n, l2);
        bool second = rng.bernoulli(0.5);
        const Concept& target = second ? c2 : c1;
        OracleSession sess(std::make_shared<FixedTarget>(target), U, lambda, trial_seed(c.base_seed ^ 0x5eed, t));
        Sample all;
        for (std::uint64_t i = 0; i < m; ++i) all.push_back(sess.ex_draw());
        for (std::uint64_t j = 0; j < q; ++j) {
            BitVector z = sess.sample()[j % m].x;
            int k = lambda == 0 ? 0 : 1 + static_cast<int>(rng.below(lambda));
            for (int i : random_indices(n, k, rng)) z = flip(z, i);
            all.push_back({z, sess.lmq_query(z)});
        }
        bool all_neg = std::none_of(all.begin(), all.end(), [](const LabeledPoint& p) { return p.y; });
        auto h = learn_conjunction(all, n, false);
        double risk = robust_risk_exact(target, h, rho, U).value;
        return std::vector<json>{second ? 2 : 1, all_neg ? 1 : 0, risk};
    });

    auto& r = run.rep;
    const double bound = 15.0 / 256;
    const double mean = mean_of(r.rows, 3);
    r.aggregates = {{"mean_risk", mean},
                    {"lower_bound", bound},
                    {"all_negative_rate", static_cast<double>(count_of(r.rows, 2)) / static_cast<double>(c.trials)}};
    r.predicate = "mean_risk >= 15/256 - 0.02";
    r.scope = kAnyAlgorithm + " LMQ strategy: random flips of at most lambda bits around sample points.";
    r.pass = mean >= bound - kTolerance;
    return r;
}

// Pr[Bin(l, q) <= k].
double binomial_cdf(int l, double q, int k) {
    double s = 0;
    for (int j = 0; j <= std::min(k, l); ++j)
        s += static_cast<double>(binomial(l, j)) * std::pow(q, j) * std::pow(1 - q, l - j);
    return s;
}

struct ThresholdSizing {
    int l0;
    std::uint64_t m;
};

// Targets of length >= l0 are eps-robust for any superset hypothesis; shorter ones must be learned exactly,
// which every non-target variable allows with probability (1-p) p^l per example.
ThresholdSizing threshold_sizing(int n, double p, int rho, double eps, double delta) {
    int l0 = n + 1;
    for (int l = 0; l <= n; ++l)
        if (binomial_cdf(l, 1 - p, rho) <= eps) {
            l0 = l;
            break;
        }
    int lstar = std::min(l0 - 1, n - 1);
    double q = lstar < 0 ? 1.0 : (1 - p) * std::pow(p, lstar);
    return {l0, static_cast<std::uint64_t>(std::ceil(std::log(n / delta) / q))};
}

ScenarioReport monconj_threshold(ScenarioConfig c) {
    if (!c.n) c.n = 20;
    const int n = *c.n;
    check_n(n, 2, 24);
    if (!c.rho) c.rho = std::floor(std::log2(n));
    if (!c.alpha) c.alpha = 2;
    if (!c.epsilon) c.epsilon = 0.1;
    if (!c.delta) c.delta = 0.1;
    const int rho = int_rho(c);
    const double alpha = *c.alpha, eps = *c.epsilon, delta = *c.delta;
    check_unit(eps, "epsilon");
    check_unit(delta, "delta");
    if (alpha < 1) throw InvalidInput("alpha >= 1");
    const std::vector<Distribution> dists{Distribution::uniform(n), Distribution::product_alpha(n, alpha)};
    const std::vector<double> marg{0.5, alpha / (1 + alpha)};
    std::vector<ThresholdSizing> size;
    for (double p : marg) {
        auto s = threshold_sizing(n, p, rho, eps, delta);
        if (c.m) s.m = *c.m;
        if (s.m > 5'000'000) throw BudgetExceeded("threshold sample size " + std::to_string(s.m));
        size.push_back(s);
    }

    Run run(c, {"trial", "length", "risk_uniform", "risk_product"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        int l = static_cast<int>(rng.below(n + 1));
        auto target = Concept::mon_conj(n, sorted(random_indices(n, l, rng)));
        std::vector<json> row{l};
        for (std::size_t k = 0; k < dists.size(); ++k) {
            Sample s;
            s.reserve(size[k].m);
            for (std::uint64_t i = 0; i < size[k].m; ++i) {
                auto x = dists[k].sample(rng);
                s.push_back({x, target(x)});
            }
            auto h = learn_conjunction(s, n, true);
            row.push_back(robust_risk_exact(target, h, rho, dists[k]).value);
        }
        return row;
    });

    auto& r = run.rep;
    auto rate = [&](std::size_t col) {
        std::uint64_t ok = 0;
        for (const auto& row : r.rows) ok += row[col].get<double>() <= eps;
        return static_cast<double>(ok) / static_cast<double>(c.trials);
    };
    double ru = rate(2), rp = rate(3);
    r.aggregates = {{"m_uniform", size[0].m},      {"m_product", size[1].m},      {"l0_uniform", size[0].l0},
                    {"l0_product", size[1].l0},    {"success_rate_uniform", ru}, {"success_rate_product", rp},
                    {"required_rate", 1 - delta}};
    r.predicate = "fraction of trials with robust risk <= epsilon is >= 1 - delta under both distributions";
    r.scope = "Algorithm: monotone conjunction elimination learner. Sample size m is the exact desk version of the "
              "two-case argument (long targets are epsilon-robust, short ones are learned exactly).";
    r.pass = ru >= 1 - delta && rp >= 1 - delta;
    return r;
}

ScenarioReport dictator_impossibility(ScenarioConfig c) {
    if (!c.n) c.n = 8;
    if (!c.rho) c.rho = 1;
    if (!c.m) c.m = 32;
    const int n = *c.n, rho = int_rho(c);
    check_n(n, 2, 20);
    if (rho < 1 || rho > n) throw InvalidInput("rho in [1, n]");
    const auto D = Distribution::correlated_pair(n, 1.0);
    const std::uint64_t m = *c.m;

    Run run(c, {"trial", "target", "hypothesis", "consistent", "risk"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        int i = rng.bernoulli(0.5) ? 2 : 1;
        auto target = Concept::dictator(n, i);
        std::vector<int> alive(n);
        std::iota(alive.begin(), alive.end(), 1);
        for (std::uint64_t k = 0; k < m; ++k) {
            auto x = D.sample(rng);
            bool y = target(x);
            std::erase_if(alive, [&](int j) { return x.get(j) != y; });
        }
        int j = alive[rng.below(alive.size())];
        double risk = robust_risk_exact(target, Concept::dictator(n, j), rho, D).value;
        return std::vector<json>{i, j, alive.size(), risk};
    });

    auto& r = run.rep;
    double mean = mean_of(r.rows, 4);
    r.aggregates = {{"mean_risk", mean}, {"threshold", 0.45}};
    r.predicate = "mean_risk >= 0.45 (expected value 1/2)";
    r.scope = kAnyAlgorithm + " Learner: uniformly random dictator consistent with the sample.";
    r.pass = mean >= 0.45;
    return r;
}

ScenarioReport nontrivial_impossibility(ScenarioConfig c) {
    if (!c.n) c.n = 10;
    if (!c.rho) c.rho = 1;
    const int n = *c.n, rho = int_rho(c);
    if (!c.m) c.m = static_cast<std::uint64_t>(n);
    check_n(n, 3, 24);
    if (rho < 1 || rho > n) throw InvalidInput("rho in [1, n]");
    const double eta = std::pow(static_cast<double>(n), -3.0);
    std::vector<double> p(n, 0.5);
    p[0] = p[1] = 1 - eta;
    const auto D = Distribution::product(p);
    const auto c1 = Concept::mon_conj(n, {1}), c2 = Concept::mon_conj(n, {1, 2});
    const std::uint64_t m = *c.m;

    Run run(c, {"trial", "target", "same_labels", "risk"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        bool second = rng.bernoulli(0.5);
        const Concept& target = second ? c2 : c1;
        Sample s;
        bool same = true;
        for (std::uint64_t k = 0; k < m; ++k) {
            auto x = D.sample(rng);
            same = same && c1(x) == c2(x);
            s.push_back({x, target(x)});
        }
        auto h = learn_conjunction(s, n, true);
        return std::vector<json>{second ? 2 : 1, same ? 1 : 0, robust_risk_exact(target, h, rho, D).value};
    });

    auto& r = run.rep;
    double mean = mean_of(r.rows, 3);
    r.aggregates = {{"eta", eta},
                    {"mean_risk", mean},
                    {"threshold", 0.45},
                    {"same_label_rate", static_cast<double>(count_of(r.rows, 2)) / static_cast<double>(c.trials)},
                    {"same_label_bound", std::pow(1 - eta, 2.0 * static_cast<double>(m))}};
    r.predicate = "mean_risk >= 0.45 for the pair x1, x1 x2 under a product distribution with eta = n^-3";
    r.scope = kAnyAlgorithm + " Learner: monotone conjunction elimination.";
    r.pass = mean >= 0.45;
    return r;
}

ScenarioReport leq_lambda_lt_rho(ScenarioConfig c) {
    if (!c.n) c.n = 10;
    if (!c.rho) c.rho = 3;
    if (!c.lambda) c.lambda = 2;
    if (!c.m) c.m = 4;
    const int n = *c.n, rho = int_rho(c), lambda = *c.lambda;
    check_n(n, 2, 64);
    if (lambda < 0 || lambda >= rho || rho + 1 > n) throw InvalidInput("need 0 <= lambda < rho < n");
    std::vector<int> a(rho), b(rho + 1);
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    const auto c1 = Concept::mon_conj(n, a), c2 = Concept::mon_conj(n, b);
    const auto D = Distribution::point_mass(BitVector(n));

    Run run(c, {"trial", "target", "transcripts_identical", "risk"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        bool second = rng.bernoulli(0.5);
        std::vector<std::string> logs;
        for (const Concept* cc : {&c1, &c2}) {
            OracleSession s(std::make_shared<FixedTarget>(*cc), D, lambda, trial_seed(c.base_seed, t));
            s.set_record(true);
            for (std::uint64_t k = 0; k < *c.m; ++k) s.ex_draw();
            const auto x = s.sample().front().x;
            s.leq_query(Concept::constant(n, false), x);
            s.leq_query(c1, x);
            s.leq_query(c2, x);
            logs.push_back(s.transcript_jsonl());
        }
        // Both candidates explain the transcript; the learner keeps the shorter one.
        const Concept& target = second ? c2 : c1;
        double risk = robust_risk_exact(target, c1, rho, D).value;
        return std::vector<json>{second ? 2 : 1, logs[0] == logs[1] ? 1 : 0, risk};
    });

    auto& r = run.rep;
    double mean = mean_of(r.rows, 3);
    auto k = static_cast<std::uint64_t>(std::llround(mean * static_cast<double>(c.trials)));
    auto [lo, hi] = binomial_interval(k, c.trials, 0.99);
    bool identical = count_of(r.rows, 2) == c.trials;
    r.aggregates = {{"mean_risk", mean},
                    {"expected_risk", 0.5},
                    {"risk_ci99", {lo, hi}},
                    {"transcripts_identical", identical}};
    r.predicate = "transcripts for both targets coincide on every trial, mean_risk >= 1/2 - 0.02 and 1/2 lies in the "
                  "99% interval";
    r.scope = kAnyAlgorithm;
    r.pass = identical && mean >= 0.5 - kTolerance && lo <= 0.5 && 0.5 <= hi;
    return r;
}

Distribution random_log_lipschitz_product(int n, double alpha, Rng& rng) {
    std::vector<double> p(n);
    double lo = 1 / (1 + alpha), hi = alpha / (1 + alpha);
    for (auto& v : p) v = lo + (hi - lo) * rng.uniform();
    return Distribution::product(p);
}

ScenarioReport leq_conjunction_queries(ScenarioConfig c) {
    if (!c.n) c.n = 16;
    if (!c.rho) c.rho = 2;
    if (!c.alpha) c.alpha = 2;
    if (!c.epsilon) c.epsilon = 0.1;
    if (!c.delta) c.delta = 0.1;
    const int n = *c.n, rho = int_rho(c);
    check_n(n, 1, 24);
    if (rho > n) throw InvalidInput("rho <= n");
    check_unit(*c.epsilon, "epsilon");
    check_unit(*c.delta, "delta");
    if (*c.alpha < 1) throw InvalidInput("alpha >= 1");
    const auto m = static_cast<std::uint64_t>(std::ceil((n * std::log(3.0) + std::log(1 / *c.delta)) / *c.epsilon));
    const std::uint64_t bound = m + 2 * static_cast<std::uint64_t>(n);

    Run run(c, {"trial", "target_size", "queries", "counterexamples", "robust_consistent", "violation"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        double dens = 0.5 * rng.uniform();
        std::vector<int> lits;
        for (int i = 1; i <= n; ++i)
            if (rng.bernoulli(dens)) lits.push_back(rng.bernoulli(0.5) ? i : -i);
        auto target = Concept::conj(n, lits);
        OracleSession s(std::make_shared<FixedTarget>(target), random_log_lipschitz_product(n, *c.alpha, rng), rho,
                        trial_seed(c.base_seed ^ 0xc0ffee, t));
        for (std::uint64_t k = 0; k < m; ++k) s.ex_draw();
        OnlineConjunction learner(n);
        try {
            auto d = robust_leq_driver(learner, s, 4 * bound);
            bool ok = robustly_consistent(target, d.hypothesis, s.sample(), rho);
            return std::vector<json>{lits.size(), d.queries, d.counterexamples, ok ? 1 : 0,
                                     d.mistake_bound_breached ? 1 : 0};
        } catch (const RealizabilityViolation&) {
            return std::vector<json>{lits.size(), s.counters().leq, learner.mistakes(), 0, 1};
        }
    });

    auto& r = run.rep;
    double worst = max_of(r.rows, 2);
    bool consistent = count_of(r.rows, 4) == c.trials, clean = count_of(r.rows, 5) == 0;
    r.aggregates = {{"m", m}, {"query_bound", bound}, {"max_queries", worst}, {"mean_queries", mean_of(r.rows, 2)}};
    r.predicate = "queries <= m + 2n on every trial, zero robust loss on every sample point, no negative counterexample";
    r.scope = "Learner: online conjunction elimination driven by rho-LEQ; log-Lipschitz product distributions.";
    r.pass = worst <= static_cast<double>(bound) && consistent && clean;
    return r;
}

ScenarioReport leq_winnow_ltf(ScenarioConfig c) {
    if (!c.n) c.n = 32;
    if (!c.W) c.W = 4;
    if (!c.rho) c.rho = 1;
    if (!c.epsilon) c.epsilon = 0.25;
    if (!c.delta) c.delta = 0.1;
    if (!c.kappa) c.kappa = 8;
    const int n = *c.n, rho = int_rho(c);
    const long long W = *c.W;
    check_n(n, 2, 256);
    if (rho > 3) throw BudgetExceeded("winnow scenario sweeps radius <= 3 balls");
    if (W < 1) throw InvalidInput("W >= 1");
    check_unit(*c.epsilon, "epsilon");
    check_unit(*c.delta, "delta");
    const auto m = static_cast<std::uint64_t>(std::ceil(
        (n + std::min<double>(n, static_cast<double>(W)) * std::log2(static_cast<double>(W + n)) + std::log(1 / *c.delta)) /
        *c.epsilon));
    const double bound = static_cast<double>(m) * *c.kappa * static_cast<double>(W * W) * std::log2(n);
    // Promotion factor 1 + delta/2 for the 1/W relative margin of an integer LTF.
    const double factor = 1 + 1 / (2.0 * static_cast<double>(W));
    const auto U = Distribution::uniform(n);

    Run run(c, {"trial", "queries", "counterexamples", "passes", "robust_consistent"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        auto target = random_ltf(n, W, rng);
        OracleSession s(std::make_shared<FixedTarget>(target), U, rho, trial_seed(c.base_seed ^ 0x3173, t));
        for (std::uint64_t k = 0; k < m; ++k) s.ex_draw();
        Winnow w(n, true, factor);
        auto d = robust_leq_driver(w, s, static_cast<std::uint64_t>(bound) + 1);
        bool ok = !d.budget_breached && robustly_consistent(target, d.hypothesis, s.sample(), rho);
        return std::vector<json>{d.queries, d.counterexamples, d.passes, ok ? 1 : 0};
    });

    auto& r = run.rep;
    double worst = max_of(r.rows, 1);
    r.aggregates = {{"m", m},
                    {"factor", factor},
                    {"query_bound", bound},
                    {"max_queries", worst},
                    {"max_counterexamples", max_of(r.rows, 2)},
                    {"empirical_kappa", worst / (static_cast<double>(m * W * W) * std::log2(n))}};
    r.predicate = "queries <= m * kappa * W^2 * log2(n) and zero robust loss on the sample, every trial";
    r.scope = "Learner: Winnow2 on (x, not x) features, factor 1 + 1/(2W), threshold n, driven by rho-LEQ.";
    r.pass = worst <= bound && count_of(r.rows, 4) == c.trials;
    return r;
}

ScenarioReport leq_soa(ScenarioConfig c) {
    if (!c.n) c.n = 4;
    if (!c.rho) c.rho = 1;
    if (!c.epsilon) c.epsilon = 0.1;
    if (!c.delta) c.delta = 0.1;
    const int n = *c.n, rho = int_rho(c);
    check_n(n, 1, 6);
    if (rho > n) throw InvalidInput("rho <= n");
    check_unit(*c.epsilon, "epsilon");
    check_unit(*c.delta, "delta");
    const auto cls = enumerate_class({"conj"}, n);
    const auto fc = FiniteClass::on_cube(cls, n);
    const int lit = littlestone_dimension(fc).value;
    const auto m = static_cast<std::uint64_t>(
        std::ceil((std::log(static_cast<double>(cls.size())) + std::log(1 / *c.delta)) / *c.epsilon));
    const double bound = static_cast<double>(m) * (lit + 1);
    const auto U = Distribution::uniform(n);

    Run run(c, {"trial", "queries", "counterexamples", "robust_consistent"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        const auto& target = cls[rng.below(cls.size())];
        OracleSession s(std::make_shared<FixedTarget>(target), U, rho, trial_seed(c.base_seed ^ 0x50a, t));
        for (std::uint64_t k = 0; k < m; ++k) s.ex_draw();
        Soa soa(fc);
        auto d = robust_leq_driver(soa, s, static_cast<std::uint64_t>(bound) + 1);
        bool ok = !d.budget_breached && !d.mistake_bound_breached &&
                  robustly_consistent(target, d.hypothesis, s.sample(), rho);
        return std::vector<json>{d.queries, d.counterexamples, ok ? 1 : 0};
    });

    auto& r = run.rep;
    r.aggregates = {{"m", m},
                    {"littlestone", lit},
                    {"query_bound", bound},
                    {"max_queries", max_of(r.rows, 1)},
                    {"max_counterexamples", max_of(r.rows, 2)}};
    r.predicate = "counterexamples <= Lit(C) and queries <= m * (Lit(C) + 1) (one certifying pass), zero robust loss";
    r.scope = "Learner: Standard Optimal Algorithm over all conjunctions on n variables.";
    r.pass = max_of(r.rows, 1) <= bound && max_of(r.rows, 2) <= lit && count_of(r.rows, 3) == c.trials;
    return r;
}

ScenarioReport parity_exact(ScenarioConfig c) {
    if (!c.n) c.n = 12;
    if (!c.alpha) c.alpha = 2;
    if (!c.epsilon) c.epsilon = 1 / (2 * (1 + *c.alpha));
    if (!c.delta) c.delta = 0.01;
    const int n = *c.n;
    const double alpha = *c.alpha, eps = *c.epsilon, delta = *c.delta;
    check_n(n, 1, 20);
    if (alpha < 1) throw InvalidInput("alpha >= 1");
    check_unit(delta, "delta");
    if (!(eps > 0 && eps < 1 / (1 + alpha))) throw InvalidInput("epsilon must lie in (0, 1/(1+alpha))");
    const auto m = static_cast<std::uint64_t>(std::ceil((n * std::log(2.0) + std::log(1 / delta)) / eps));
    const auto D = Distribution::product_alpha(n, alpha);
    const double floor_err = 1 / (1 + alpha);

    Run run(c, {"trial", "recovered", "other_error"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        std::vector<int> I;
        for (int i = 1; i <= n; ++i)
            if (rng.bernoulli(0.5)) I.push_back(i);
        auto target = Concept::parity(n, I);
        Sample s;
        for (std::uint64_t k = 0; k < m; ++k) {
            auto x = D.sample(rng);
            s.push_back({x, target(x)});
        }
        bool rec = learn_parity(s, n) == target;
        std::uint64_t diff = 0;
        while (diff == 0) diff = rng.bits(n);
        double err = probability(D, [&](std::uint64_t x) { return std::popcount(x & diff) % 2 == 1; });
        return std::vector<json>{rec ? 1 : 0, err};
    });

    auto& r = run.rep;
    double rate = static_cast<double>(count_of(r.rows, 1)) / static_cast<double>(c.trials);
    double worst = INFINITY;
    for (const auto& row : r.rows) worst = std::min(worst, row[2].get<double>());
    r.aggregates = {{"m", m}, {"recovery_rate", rate}, {"min_other_error", worst}, {"error_floor", floor_err}};
    r.predicate = "exact recovery on every trial and every other parity errs with probability >= 1/(1+alpha)";
    r.scope = "Learner: Gaussian elimination over GF(2) with free variables set to 0.";
    r.pass = rate == 1.0 && worst >= floor_err - 1e-12;
    return r;
}

ScenarioReport majority_fourier(ScenarioConfig c) {
    if (!c.n) c.n = 9;
    if (!c.delta) c.delta = 0.1;
    if (!c.kappa) c.kappa = 32;
    const int n = *c.n;
    check_n(n, 1, 256);
    check_unit(*c.delta, "delta");
    if (*c.kappa <= 0) throw InvalidInput("kappa must be positive");
    const auto m = majority_sample_size(n, *c.delta, *c.kappa);
    const auto U = Distribution::uniform(n);

    Run run(c, {"trial", "support", "recovered"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        int k = 1 + 2 * static_cast<int>(rng.below((n + 1) / 2));
        auto target = Concept::majority(n, sorted(random_indices(n, k, rng)));
        Sample s;
        for (std::uint64_t j = 0; j < m; ++j) {
            auto x = U.sample(rng);
            s.push_back({x, target(x)});
        }
        return std::vector<json>{k, learn_majority(s, n).hypothesis == target ? 1 : 0};
    });

    auto& r = run.rep;
    double rate = static_cast<double>(count_of(r.rows, 2)) / static_cast<double>(c.trials);
    r.aggregates = {{"m", m}, {"recovery_rate", rate}, {"required_rate", 1 - *c.delta}};
    r.predicate = "exact recovery rate >= 1 - delta with m = ceil(kappa n ln(n/delta))";
    r.scope = "Learner: thresholded empirical degree-1 Fourier coefficients.";
    r.pass = rate >= 1 - *c.delta;
    return r;
}

ScenarioReport precision_perceptron(ScenarioConfig c) {
    if (!c.n) c.n = 2;
    if (!c.B) c.B = 1;
    if (!c.tau) c.tau = 0.1;
    if (!c.rho) c.rho = 0.3;
    if (!c.m) c.m = 20;
    const int d = *c.n;
    const double B = *c.B, tau = *c.tau, rho = *c.rho;
    check_n(d, 1, 64);
    if (!(tau > 0 && tau <= rho && rho < B)) throw InvalidInput("need 0 < tau <= rho < B");
    const double bound = B * B / (tau * tau);

    auto gaussian_unit = [d](Rng& rng) {
        std::vector<double> v(d);
        double s = 0;
        while (s == 0) {
            s = 0;
            for (auto& x : v) s += (x = rng.normal()) * x;
        }
        for (auto& x : v) x /= std::sqrt(s);
        return v;
    };

    Run run(c, {"trial", "mistakes", "queries"});
    run.trials(c, [&](std::uint64_t, Rng& rng) {
        RealHalfspace target{gaussian_unit(rng), 0};
        Perceptron p(d);
        std::uint64_t queries = 0;
        for (std::uint64_t k = 0; k < *c.m; ++k) {
            auto x = gaussian_unit(rng);
            double r = (B - rho) * std::pow(rng.uniform(), 1.0 / d);
            for (auto& v : x) v *= r;
            while (true) {
                ++queries;
                auto z = precision_adversary(target, p.hypothesis(), x, rho, tau);
                if (!z) break;
                p.update(*z, target(*z));
                if (static_cast<double>(p.mistakes()) > bound + 1) break;
            }
        }
        return std::vector<json>{p.mistakes(), queries};
    });

    auto& r = run.rep;
    double worst = max_of(r.rows, 1);
    r.aggregates = {{"mistake_bound", bound}, {"max_mistakes", worst}, {"mean_mistakes", mean_of(r.rows, 1)}};
    r.predicate = "Perceptron mistakes <= B^2/tau^2 on every adversarial game";
    r.scope = "Homogeneous targets and Perceptron; the adversary returns the closest valid precision-tau "
              "counterexample.";
    r.pass = worst <= bound;
    return r;
}

ScenarioReport leq_adversarial_tree(ScenarioConfig c) {
    if (!c.n) c.n = 6;
    if (!c.rho) c.rho = 2;
    const int n = *c.n, rho = int_rho(c);
    check_n(n, 2, 7);
    if (rho < 1 || rho > n) throw InvalidInput("rho in [1, n]");
    const auto cls = enumerate_class({"conj"}, n);
    const auto fc = FiniteClass::on_cube(cls, n);
    SearchOptions opt;
    opt.rho = rho;
    const auto vc = vc_dimension(fc, opt);
    const int d = vc.value;
    std::vector<BitVector> nodes;
    for (auto i : vc.witness) nodes.push_back(fc.points()[i]);
    auto root = std::find_if(nodes.begin(), nodes.end(), [&](const BitVector& x) {
        return std::all_of(nodes.begin(), nodes.end(), [&](const BitVector& y) { return hamming_distance(x, y) <= rho; });
    });
    if (root == nodes.end()) throw InvalidInput("restricted witness has no anchor");
    std::rotate(nodes.begin(), root, root + 1);

    Run run(c, {"trial", "counterexamples", "queries"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        std::vector<bool> lab{true};
        for (int i = 1; i < d; ++i) lab.push_back(rng.bernoulli(0.5));
        auto it = std::find_if(cls.begin(), cls.end(), [&](const Concept& k) {
            for (int i = 0; i < d; ++i)
                if (k(nodes[i]) != lab[i]) return false;
            return true;
        });
        if (it == cls.end()) throw InvalidInput("witness is not shattered");
        OracleSession s(std::make_shared<FixedTarget>(Classifier(*it), n, Policy::FirstInBallOrder, nodes, "tree"),
                        Distribution::point_mass(nodes.front()), rho, trial_seed(c.base_seed, t));
        s.ex_draw();
        Halving learner(cls);
        auto dr = robust_leq_driver(learner, s);
        return std::vector<json>{dr.counterexamples, dr.queries};
    });

    auto& r = run.rep;
    double mean = mean_of(r.rows, 1), bound = (d - 1) / 2.0;
    r.aggregates = {{"restricted_vc", d}, {"mean_counterexamples", mean}, {"lower_bound", bound}};
    r.predicate = "mean counterexamples >= (d-1)/2 - 0.02 with d the restricted dimension of the tree";
    r.scope = kAnyAlgorithm + " Learner: Halving over all conjunctions; tree built from a restricted shattered set.";
    r.pass = mean >= bound - kTolerance;
    return r;
}

ScenarioReport leq_vs_eq(ScenarioConfig c) {
    if (!c.n) c.n = 16;
    const int n = *c.n;
    check_n(n, 2, 20);
    const auto D = Distribution::point_mass(BitVector(n));

    Run run(c, {"trial", "target", "leq_queries", "leq_risk", "eq_queries"});
    run.trials(c, [&](std::uint64_t t, Rng& rng) {
        int i = 1 + static_cast<int>(rng.below(n));
        auto target = Concept::dictator(n, i);
        OracleSession ls(std::make_shared<FixedTarget>(target), D, 1, trial_seed(c.base_seed, t));
        auto x = ls.ex_draw().x;
        auto a = ls.leq_query(Concept::constant(n, false), x);
        int found = a.agree ? 1 : a.counterexample->indices().front();
        double risk = robust_risk_exact(target, Concept::dictator(n, found), 1, D).value;

        auto adv = std::make_shared<DictatorHalving>(n);
        OracleSession es(adv, std::nullopt, n, trial_seed(c.base_seed, t));
        std::vector<int> alive(n);
        std::iota(alive.begin(), alive.end(), 1);
        std::uint64_t eq = 0;
        while (eq < 64) {
            auto maj = [alive](const BitVector& z) {
                std::size_t k = 0;
                for (int j : alive) k += z.get(j);
                return 2 * k > alive.size();
            };
            ++eq;
            auto ans = es.eq_query(maj);
            if (ans.agree) break;
            std::erase_if(alive, [&](int j) { return ans.counterexample->get(j) != ans.label; });
        }
        return std::vector<json>{i, ls.counters().leq, risk, eq};
    });

    auto& r = run.rep;
    const double logn = std::log2(n);
    double min_eq = INFINITY;
    for (const auto& row : r.rows) min_eq = std::min(min_eq, row[4].get<double>());
    r.aggregates = {{"max_leq_queries", max_of(r.rows, 2)},
                    {"max_leq_risk", max_of(r.rows, 3)},
                    {"min_eq_queries", min_eq},
                    {"log2_n", logn}};
    r.predicate = "one 1-LEQ query identifies the dictator (risk 0) while EQ needs >= log2(n) queries";
    r.scope = "EQ side: halving learner against the index-halving adversary.";
    r.pass = max_of(r.rows, 2) <= 1 && max_of(r.rows, 3) == 0 && min_eq >= logn;
    return r;
}

ScenarioReport eq_vs_leq(ScenarioConfig c) {
    if (!c.n) c.n = 12;
    if (!c.lambda) c.lambda = 1;
    if (!c.epsilon) c.epsilon = 0.25;
    const int n = *c.n, lambda = *c.lambda;
    check_n(n, 2, 20);
    check_unit(*c.epsilon, "epsilon");
    const int k = static_cast<int>(std::floor(1 / *c.epsilon));
    const int block = 2 * lambda + 1;
    if (lambda < 1 || (k - 1) * block > n) throw InvalidInput("need lambda >= 1 and (floor(1/eps) - 1)(2 lambda + 1) <= n");
    std::vector<BitVector> anchors{BitVector(n)};
    for (int j = 1; j < k; ++j) {
        BitVector x(n);
        for (int i = (j - 1) * block + 1; i <= j * block; ++i) x.set(i, true);
        anchors.push_back(x);
    }
    const auto D = Distribution::finite_exact(anchors, std::vector<std::uint64_t>(k, 1));

    Run run(c, {"trial", "leq_queries", "eq_queries", "risk"});
    run.trials(c, [&](std::uint64_t t, Rng&) {
        auto adv = std::make_shared<SingletonStalling>(anchors, lambda);
        OracleSession s(adv, D, lambda, trial_seed(c.base_seed, t));
        std::vector<BitVector> seen;
        for (int draws = 0; static_cast<int>(seen.size()) < k && draws < 100000; ++draws) {
            auto x = s.ex_draw().x;
            if (std::find(seen.begin(), seen.end(), x) == seen.end()) seen.push_back(x);
        }
        std::optional<BitVector> found;
        for (const auto& x : seen) {
            auto a = s.leq_query(Concept::constant(n, false), x);
            if (!a.agree) {
                found = *a.counterexample;
                break;
            }
        }
        if (!found) throw InvalidInput("stalling adversary never committed");
        auto h = Concept::singleton(*found);
        double risk = robust_risk_exact(*adv->target(), Classifier(h), lambda, D).value;
        OracleSession es(std::make_shared<FixedTarget>(h), std::nullopt, n);
        std::uint64_t eq = 0;
        for (auto g = Concept::constant(n, false);; g = h) {
            ++eq;
            if (es.eq_query(g).agree) break;
        }
        // The final confirming query is not part of the count: one counterexample identifies the target.
        return std::vector<json>{s.counters().leq, eq - 1, risk};
    });

    auto& r = run.rep;
    double min_leq = INFINITY;
    for (const auto& row : r.rows) min_leq = std::min(min_leq, row[1].get<double>());
    r.aggregates = {{"anchors", k}, {"min_leq_queries", min_leq}, {"max_eq_queries", max_of(r.rows, 2)},
                    {"max_risk", max_of(r.rows, 3)}};
    r.predicate = "LEQ needs >= floor(1/epsilon) queries while a single EQ query reveals the singleton";
    r.scope = "LEQ side: stalling adversary, learner queries the constant 0 at each distinct anchor.";
    r.pass = min_leq >= k && max_of(r.rows, 2) <= 1 && max_of(r.rows, 3) == 0;
    return r;
}

ScenarioReport dimension_table(ScenarioConfig c) {
    if (!c.n) c.n = 4;
    const int n = *c.n;
    check_n(n, 2, 5);
    c.trials = 1;
    ScenarioReport r;
    r.config = config_to_json(c);
    r.anchor = scenario_info(c.scenario).anchor;
    r.columns = {"cell", "n", "rho", "expected", "computed", "nodes"};
    bool all = true;
    auto add = [&](const std::string& cell, int nn, std::optional<int> rho, int expected, const DimensionResult& d) {
        r.rows.push_back({cell, nn, rho ? json(*rho) : json(nullptr), expected, d.value, d.nodes});
        all = all && expected == d.value;
    };
    auto with_rho = [](int rho) {
        SearchOptions o;
        o.rho = rho;
        return o;
    };
    auto conj = FiniteClass::on_cube(enumerate_class({"conj"}, n), n);
    add("conj_vc", n, std::nullopt, n, vc_dimension(conj));
    add("conj_restricted_vc", n, 1, 2, vc_dimension(conj, with_rho(1)));
    add("conj_restricted_vc", n, 2, n, vc_dimension(conj, with_rho(2)));
    auto ltf = FiniteClass::on_cube(enumerate_class({"ltf_unit"}, n), n);
    add("ltf_vc", n, std::nullopt, n + 1, vc_dimension(ltf));
    add("ltf_restricted_vc", n, 1, n + 1, vc_dimension(ltf, with_rho(1)));

    {
        const int dn = 6, k = 2;
        std::vector<BitVector> X{BitVector(dn)};
        std::vector<Term> terms;
        for (int a = 1; a <= dn; ++a)
            for (int b = a + 1; b <= dn; ++b) {
                BitVector x(dn);
                x.set(a, true);
                x.set(b, true);
                X.push_back(x);
                terms.push_back(Term::from_literals(dn, {a, b}));
            }
        std::vector<Concept> lists;
        for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << X.size()); ++lab) {
            std::vector<DecisionList::Node> nodes;
            for (std::size_t j = 0; j < terms.size(); ++j) nodes.push_back({terms[j], ((lab >> (j + 1)) & 1) != 0});
            nodes.push_back({Term::top(dn), (lab & 1) != 0});
            lists.push_back(make_minimal_dl(dn, nodes, k));
        }
        auto f = FiniteClass::on_points(lists, X);
        std::vector<std::size_t> idx(X.size());
        std::iota(idx.begin(), idx.end(), 0);
        DimensionResult d;
        d.value = shatters(f, idx) ? static_cast<int>(X.size()) : 0;
        add("kdl_restricted_witness", dn, k, static_cast<int>(X.size()), d);
    }
    if (n >= 4) add("ltf_robust_loss_vc", n, n - 1, 2, vc_dimension(robust_loss_class(ltf, ltf, n, n - 1)));

    r.aggregates = {{"cells", r.rows.size()}};
    r.predicate = "every computed cell equals its tabulated value";
    r.scope = "LTF rows use the surrogate class w in {-1,0,1}^n, b in [-(n+1), n]; one row per table cell.";
    r.pass = all;
    return r;
}

using Runner = ScenarioReport (*)(ScenarioConfig);

const std::map<std::string, Runner>& runners() {
    static const std::map<std::string, Runner> m{
        {"monconj-lower-bound", monconj_lower_bound},
        {"lmq-lower-bound", lmq_lower_bound},
        {"monconj-threshold", monconj_threshold},
        {"dictator-impossibility", dictator_impossibility},
        {"nontrivial-impossibility", nontrivial_impossibility},
        {"leq-lambda-lt-rho", leq_lambda_lt_rho},
        {"leq-conjunction-queries", leq_conjunction_queries},
        {"leq-winnow-ltf", leq_winnow_ltf},
        {"leq-soa", leq_soa},
        {"parity-exact", parity_exact},
        {"majority-fourier", majority_fourier},
        {"precision-perceptron", precision_perceptron},
        {"leq-adversarial-tree", leq_adversarial_tree},
        {"leq-vs-eq", leq_vs_eq},
        {"eq-vs-leq", eq_vs_leq},
        {"dimension-table", dimension_table},
    };
    return m;
}

}  // namespace

const std::vector<ScenarioInfo>& list_scenarios() {
    static const std::vector<std::string> stochastic{"trials", "base_seed"};
    auto f = [](std::vector<std::string> v, bool trials = true) {
        if (trials) v.insert(v.end(), stochastic.begin(), stochastic.end());
        return v;
    };
    static const std::vector<ScenarioInfo> v{
        {"monconj-lower-bound", "disjoint length-2rho monotone conjunctions are indistinguishable on 2^(kappa rho) samples",
         "monotone conjunctions: 2^(kappa rho) sample lower bound under uniform", f({"n", "rho", "kappa"})},
        {"lmq-lower-bound", "random-sign conjunction pairs survive 2^rho examples and 2^(rho-1) local membership queries",
         "conjunctions with EX and LMQ: joint sample/query lower bound", f({"n", "rho", "lambda", "m", "queries"})},
        {"monconj-threshold", "elimination learner at rho = log2 n under uniform and product(alpha) distributions",
         "monotone conjunctions are log(n)-robustly learnable under log-Lipschitz distributions",
         f({"n", "rho", "alpha", "epsilon", "delta", "m"})},
        {"dictator-impossibility", "x1 = x2 almost surely: dictators 1 and 2 are indistinguishable yet 1-far",
         "dictators are not 1-robustly learnable distribution-free", f({"n", "rho", "m"})},
        {"nontrivial-impossibility", "pair x1 / x1 x2 under a product distribution concentrated near 1^n",
         "only trivial classes are distribution-free robustly learnable", f({"n", "rho", "m"})},
        {"leq-lambda-lt-rho", "lambda-LEQ transcripts for rho- and (rho+1)-conjunctions coincide when lambda < rho",
         "monotone conjunctions are not distribution-free rho-robustly learnable with lambda-LEQ, lambda < rho",
         f({"n", "rho", "lambda", "m"})},
        {"leq-conjunction-queries", "online conjunction learner driven by rho-LEQ",
         "conjunctions: distribution-free robust learning with at most m + 2n LEQ queries",
         f({"n", "rho", "alpha", "epsilon", "delta"})},
        {"leq-winnow-ltf", "Winnow driven by rho-LEQ on bounded-weight boolean LTFs",
         "boolean LTFs with weight budget W: O(m W^2 log n) LEQ queries via Winnow",
         f({"n", "W", "rho", "epsilon", "delta", "kappa"})},
        {"leq-soa", "Standard Optimal Algorithm driven by rho-LEQ over all conjunctions",
         "robust learning with SOA: query complexity m Lit(C)", f({"n", "rho", "epsilon", "delta"})},
        {"parity-exact", "GF(2) elimination under product(alpha) distributions",
         "parities are exactly learnable under log-Lipschitz distributions", f({"n", "alpha", "epsilon", "delta"})},
        {"majority-fourier", "thresholded degree-1 Fourier estimates under uniform",
         "majorities are exactly learnable under the uniform distribution", f({"n", "delta", "kappa"})},
        {"precision-perceptron", "Perceptron against a precision-tau LEQ adversary in R^n",
         "real halfspaces against precision-tau adversaries: B^2/tau^2 queries per sample point",
         f({"n", "B", "tau", "rho", "m"})},
        {"leq-adversarial-tree", "LEQ returns the highest disagreeing node of a restricted tree",
         "expected LEQ queries are Omega(restricted Littlestone dimension)", f({"n", "rho"})},
        {"leq-vs-eq", "monotone dictators from 0^n: one 1-LEQ query vs log2 n EQ queries",
         "LEQ can be exponentially stronger than EQ", f({"n"})},
        {"eq-vs-leq", "singletons with a stalling LEQ adversary vs one EQ query",
         "EQ can be stronger than LEQ: 1/epsilon LEQ queries for singletons", f({"n", "lambda", "epsilon"})},
        {"dimension-table", "brute-force VC and restricted VC table at small n",
         "VC vs restricted VC table; robust-loss VC of LTFs at rho = n - 1", f({"n"}, false)},
    };
    return v;
}

const ScenarioInfo& scenario_info(const std::string& id) {
    for (const auto& s : list_scenarios())
        if (s.id == id) return s;
    throw InvalidInput("unknown scenario '" + id + "'");
}

ScenarioReport run_scenario(const ScenarioConfig& c) {
    scenario_info(c.scenario);
    if (c.trials < 1) throw InvalidInput("trials >= 1");
    return runners().at(c.scenario)(c);
}

}  // namespace rlab
