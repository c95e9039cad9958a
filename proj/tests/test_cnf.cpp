#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "oracle.hpp"
#include "rlab/cnf.hpp"
#include "rlab/rng.hpp"

using namespace rlab;

namespace {

// Independent clause evaluation on a bit string.
bool clause_true(const Clause& c, const std::string& x) {
    for (int l : c)
        if ((x[std::abs(l) - 1] == '1') == (l > 0)) return true;
    return false;
}

bool formula_true(const std::vector<Clause>& cs, const std::string& x) {
    for (auto& c : cs)
        if (!clause_true(c, x)) return false;
    return true;
}

std::set<std::string> oracle_sat(int n, const std::vector<Clause>& cs, int rho) {
    std::set<std::string> sat, out;
    for (auto& z : oracle::all_points(n))
        if (formula_true(cs, z)) sat.insert(z);
    for (auto& x : oracle::all_points(n))
        for (auto& z : sat)
            if (oracle::hamming(x, z) <= rho) {
                out.insert(x);
                break;
            }
    return out;
}

std::set<std::string> as_strings(const std::vector<BitVector>& v) {
    std::set<std::string> s;
    for (auto& x : v) s.insert(x.to_string());
    return s;
}

std::vector<Clause> random_cnf(int n, int k, int m, Rng& rng, bool monotone = false) {
    std::vector<Clause> cs;
    for (int j = 0; j < m; ++j) {
        int w = 1 + static_cast<int>(rng.below(k));
        Clause c;
        for (int t = 0; t < w; ++t) {
            int v = 1 + static_cast<int>(rng.below(n));
            c.push_back(monotone || (rng() & 1) ? v : -v);
        }
        cs.push_back(c);
    }
    return cs;
}

Concept random_dl(int n, int k, int len, Rng& rng) {
    std::vector<DecisionList::Node> nodes;
    for (int j = 0; j < len; ++j) {
        int w = 1 + static_cast<int>(rng.below(k));
        std::vector<int> vars(n);
        for (int i = 0; i < n; ++i) vars[i] = i + 1;
        shuffle(vars, rng);
        std::vector<int> lits;
        for (int t = 0; t < w; ++t) lits.push_back((rng() & 1) ? vars[t] : -vars[t]);
        nodes.push_back({Term::from_literals(n, lits), static_cast<bool>(rng() & 1)});
    }
    nodes.push_back({Term::top(n), static_cast<bool>(rng() & 1)});
    return make_minimal_dl(n, nodes, k);
}

}  // namespace

TEST(CnfFormula, Construction) {
    CnfFormula f(4, {{2, 1}, {3, -3}, {1, 2, 1}, {-4}});
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f.dropped_tautologies(), 1);
    EXPECT_EQ(f.width(), 2);
    EXPECT_EQ(f.clauses()[0], (Clause{-4}));
    EXPECT_EQ(f.clauses()[1], (Clause{1, 2}));
    EXPECT_THROW(CnfFormula(3, {{4}}), InvalidInput);
    EXPECT_THROW(CnfFormula(3, {{0}}), InvalidInput);
}

TEST(CnfFormula, DimacsRoundTrip) {
    CnfFormula f(5, {{1, -2}, {3}, {-1, 4, 5}});
    auto text = f.to_dimacs();
    EXPECT_EQ(text, "3 0\n1 -2 0\n-1 4 5 0\n");
    EXPECT_EQ(CnfFormula::from_dimacs(5, "c comment\np cnf 5 3\n" + text), f);
    EXPECT_THROW(CnfFormula::from_dimacs(5, "1 2"), InvalidInput);
}

TEST(SatSet, Examples) {
    CnfFormula x1(2, {{1}});
    EXPECT_EQ(as_strings(sat_set(x1, 0)), (std::set<std::string>{"10", "11"}));
    EXPECT_EQ(sat_set(x1, 1).size(), 4u);
    CnfFormula contra(2, {{1}, {-1}});
    for (int r = 0; r <= 3; ++r) EXPECT_TRUE(sat_set(contra, r).empty());
    EXPECT_THROW(sat_set(CnfFormula(21, {{1}}), 0), BudgetExceeded);
}

TEST(SatSet, MatchesOracleAndIsMonotone) {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.below(5));
        auto cs = random_cnf(n, 3, 1 + static_cast<int>(rng.below(5)), rng);
        CnfFormula f(n, cs);
        std::set<std::string> prev;
        for (int r = 0; r <= n; ++r) {
            auto s = as_strings(sat_set(f, r));
            EXPECT_EQ(s, oracle_sat(n, cs, r));
            EXPECT_TRUE(std::includes(s.begin(), s.end(), prev.begin(), prev.end()));
            prev = s;
        }
    }
}

TEST(Resolution, RemarkCounterexample) {
    CnfFormula f(5, {{1, 2, 3}, {-1, 4, 5}});
    auto c = resolution_closure(f);
    auto& cl = c.clauses();
    EXPECT_NE(std::find(cl.begin(), cl.end(), Clause{2, 3, 4, 5}), cl.end());
    EXPECT_EQ(c.width(), 4);
}

TEST(Resolution, NoComplementsUnchanged) {
    CnfFormula f(4, {{1, 2}, {2, -3}, {-3, 4}});
    EXPECT_EQ(resolution_closure(f), f);
}

TEST(Resolution, ClosedIdempotentEquivalent) {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        auto cs = random_cnf(n, 3, 2 + static_cast<int>(rng.below(4)), rng);
        CnfFormula f(n, cs);
        auto c = resolution_closure(f);
        for (auto& cl : f.clauses())
            EXPECT_NE(std::find(c.clauses().begin(), c.clauses().end(), cl), c.clauses().end());
        EXPECT_EQ(resolution_closure(c), c);
        EXPECT_EQ(as_strings(sat_set(c, 0)), as_strings(sat_set(f, 0)));
    }
}

TEST(Resolution, WidthPreservation) {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + static_cast<int>(rng.below(4));
        auto two = CnfFormula(n, random_cnf(n, 2, 3 + static_cast<int>(rng.below(6)), rng));
        EXPECT_LE(resolution_closure(two).width(), 2);
        // Monotone k-CNF plus negated variables in singleton-only position: positive clauses
        // of width <= k and unit negative clauses.
        int k = 2 + static_cast<int>(rng.below(2));
        auto cs = random_cnf(n, k, 2 + static_cast<int>(rng.below(4)), rng, true);
        for (int j = 0; j < 2; ++j) cs.push_back({-(1 + static_cast<int>(rng.below(n)))});
        CnfFormula mono(n, cs);
        EXPECT_LE(resolution_closure(mono).width(), std::max(k, mono.width()));
    }
}

TEST(Resolution, Budget) {
    std::vector<Clause> cs;
    for (int i = 1; i <= 8; ++i) cs.push_back({i, 9});
    for (int i = 10; i <= 17; ++i) cs.push_back({-9, i});
    CnfFormula f(17, cs);
    EXPECT_EQ(resolution_closure(f).size(), 16u + 64u);
    EXPECT_THROW(resolution_closure(f, 20), BudgetExceeded);
}

TEST(Cover, Examples) {
    EXPECT_EQ(minimal_cover(CnfFormula(3, {{1, 2}, {1, 3}})), (std::vector<int>{1}));
    EXPECT_TRUE(minimal_cover(CnfFormula(3, {})).empty());
    EXPECT_EQ(minimal_cover(CnfFormula(4, {{1, 2}, {3, 4}})).size(), 2u);
    EXPECT_THROW(minimal_cover(CnfFormula(3, {{1}, {2}, {3}}), 2), BudgetExceeded);
}

TEST(Cover, MinimalAgainstBruteForceAndMatchingBound) {
    Rng rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        int k = 2 + static_cast<int>(rng.below(2));
        CnfFormula f(n, random_cnf(n, k, 2 + static_cast<int>(rng.below(6)), rng));
        auto c = minimal_cover(f);
        for (auto& cl : f.clauses())
            EXPECT_TRUE(std::any_of(cl.begin(), cl.end(), [&](int l) {
                return std::find(c.begin(), c.end(), l) != c.end();
            }));
        // Brute force over all literal subsets of the 2n literals.
        std::size_t best = 99;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * n)); ++s) {
            auto has = [&](int l) { return (s >> (2 * (std::abs(l) - 1) + (l < 0))) & 1; };
            bool ok = true;
            for (auto& cl : f.clauses())
                if (!std::any_of(cl.begin(), cl.end(), has)) ok = false;
            if (ok) best = std::min<std::size_t>(best, std::popcount(s));
        }
        EXPECT_EQ(c.size(), best);
        auto m = literal_disjoint_matching(f);
        EXPECT_LE(c.size(), static_cast<std::size_t>(f.width()) * m.size());
    }
}

TEST(Matching, Examples) {
    EXPECT_EQ(variable_disjoint_matching(CnfFormula(4, {{1, 2}, {3, 4}})).size(), 2u);
    EXPECT_EQ(variable_disjoint_matching(CnfFormula(3, {{1, 2}, {2, 3}})).size(), 1u);
    EXPECT_EQ(literal_disjoint_matching(CnfFormula(3, {{1, 2}, {-2, 3}})).size(), 2u);
    EXPECT_EQ(variable_disjoint_matching(CnfFormula(3, {{1, 2}, {-2, 3}})).size(), 1u);
}

TEST(Matching, MaximalAndDisjoint) {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 6;
        CnfFormula f(n, random_cnf(n, 3, 6, rng));
        auto m = variable_disjoint_matching(f);
        std::set<int> vars;
        for (auto& c : m)
            for (int l : c) EXPECT_TRUE(vars.insert(std::abs(l)).second);
        for (auto& c : f.clauses())
            if (std::find(m.begin(), m.end(), c) == m.end())
                EXPECT_TRUE(std::any_of(c.begin(), c.end(), [&](int l) { return vars.count(std::abs(l)); }));
    }
}

TEST(Embed, Examples) {
    std::vector<Clause> M{{1, 2}};
    EXPECT_EQ(matching_embed(BitVector::from_string("00"), M).to_string(), "0");
    EXPECT_EQ(matching_embed(BitVector::from_string("10"), M).to_string(), "1");
    EXPECT_THROW(matching_embed(BitVector::from_string("100"), {{1, 2}, {-2, 3}}), InvalidInput);
}

TEST(Embed, NonExpansiveAndPushforward) {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6 + static_cast<int>(rng.below(7));
        auto M = variable_disjoint_matching(CnfFormula(n, random_cnf(n, 2, n, rng)));
        if (M.empty()) continue;
        for (int p = 0; p < 200; ++p) {
            std::uint64_t x = rng.bits(n), y = rng.bits(n);
            auto a = BitVector::from_mask(n, x), b = BitVector::from_mask(n, y);
            EXPECT_LE(hamming_distance(matching_embed(a, M), matching_embed(b, M)), hamming_distance(a, b));
            EXPECT_EQ(matching_embed(a, M).mask(), matching_embed_mask(x, M));
        }
        int m = static_cast<int>(M.size());
        for (double alpha : {1.0, 2.0}) {
            auto d = alpha == 1.0 ? Distribution::uniform(n) : Distribution::product_alpha(n, alpha);
            auto t = pushforward_table(d, m, [&](std::uint64_t x) { return matching_embed_mask(x, M); });
            EXPECT_LE(log_lipschitz_alpha(m, t), std::pow(alpha + 1, 2) - 1 + 1e-9);
        }
    }
}

TEST(Discrepancy, Examples) {
    auto top = Term::top(3);
    auto c = Concept::decision_list(3, {{Term::from_literals(3, {1}), true}, {top, false}}, 1);
    auto h = Concept::decision_list(3, {{Term::from_literals(3, {2}), true}, {top, false}}, 1);
    auto s = as_strings(sat_set(discrepancy_formula(c, h, 1, 1, false), 0));
    EXPECT_EQ(s, (std::set<std::string>{"110", "111"}));
    auto same = as_strings(sat_set(discrepancy_formula(c, c, 1, 1, true), 0));
    EXPECT_EQ(same, (std::set<std::string>{"100", "101", "110", "111"}));
    EXPECT_THROW(discrepancy_formula(c, h, 3, 1, false), InvalidInput);
}

TEST(Discrepancy, ActivationAndErrorRegion) {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng.below(4));
        auto c = random_dl(n, 2, 4, rng);
        auto h = random_dl(n, 2, 4, rng);
        auto& dc = std::get<DecisionList>(c.variant());
        auto& dh = std::get<DecisionList>(h.variant());
        std::set<std::string> err_union;
        for (int i = 1; i <= static_cast<int>(dc.nodes.size()); ++i)
            for (int j = 1; j <= static_cast<int>(dh.nodes.size()); ++j) {
                bool close = trial % 2 == 0;
                auto s = as_strings(sat_set(discrepancy_formula(c, h, i, j, close), 0));
                std::set<std::string> want;
                for (auto& x : oracle::all_points(n)) {
                    auto b = BitVector::from_string(x);
                    if (activated_level(c, b) == i && activated_level(h, b) == j) want.insert(x);
                }
                EXPECT_EQ(s, want);
                if (dc.nodes[i - 1].value != dh.nodes[j - 1].value) err_union.insert(s.begin(), s.end());
            }
        std::set<std::string> err;
        for (auto& x : oracle::all_points(n)) {
            auto b = BitVector::from_string(x);
            if (c(b) != h(b)) err.insert(x);
        }
        EXPECT_EQ(err_union, err);
    }
}

TEST(Constants, Examples) {
    auto k1 = kcnf_constants(1, 1);
    EXPECT_EQ(k1.c1_exponent, 0);
    EXPECT_EQ(k1.c2, 0);
    EXPECT_EQ(k1.c3, 16);
    EXPECT_EQ(k1.c4, 4);
    auto k2 = kcnf_constants(2, 1);
    EXPECT_EQ(k2.c2, 256);
    EXPECT_EQ(k2.c3, 16384);
    EXPECT_EQ(k2.c4, 1024);
    EXPECT_EQ(k2.c1_exponent, 1024);
    EXPECT_THROW(kcnf_constants(0, 1), InvalidInput);
}

TEST(Constants, ClosedFormsDominateRecurrence) {
    for (int k = 1; k <= 4; ++k)
        for (int a : {1, 2, 3}) {
            Rational alpha = a;
            auto cf = kcnf_constants(k, alpha);
            auto rec = kcnf_recurrence(k, alpha);
            EXPECT_GE(cf.c3, cf.eta / 2 * cf.c4);
            EXPECT_GE(rec.c3, rec.eta / 2 * rec.c4);
            EXPECT_GE(cf.c2, rec.c2);
            EXPECT_GE(cf.c3, rec.c3);
            EXPECT_GE(cf.c4, rec.c4);
            EXPECT_GE(cf.c1_exponent, rec.c1_exponent);
            if (k >= 2) {
                // One unrolling at fixed eta: C2 = 2 C3', C3 = (8/eta^2) C3', C4 = (2/eta) C3'.
                Rational b = 8 / (cf.eta * cf.eta);
                Rational c3p = 1;
                for (int i = 1; i < k; ++i) c3p *= b;
                EXPECT_EQ(cf.c2, 2 * c3p);
                EXPECT_EQ(cf.c3, b * c3p);
                EXPECT_EQ(cf.c4, 2 / cf.eta * c3p);
            }
        }
}

TEST(ConjunctionMass, RobustSatBound) {
    // A conjunction of d literals with d >= max{(4/eta^2) ln(1/eps), 2 rho/eta} has SAT_rho mass <= eps.
    Rng rng(4);
    for (double eps : {0.5, 0.25})
        for (double alpha : {1.0, 1.2}) {
            double eta = 1 / (1 + alpha);
            for (int n = 12; n <= 16; n += 2) {
                auto D = alpha == 1.0 ? Distribution::uniform(n) : Distribution::product_alpha(n, alpha);
                for (int d = 1; d <= n; ++d)
                    for (int rho = 0; rho <= 3; ++rho) {
                        if (d < std::max(4 / (eta * eta) * std::log(1 / eps), 2 * rho / eta)) continue;
                        std::vector<int> vars(n);
                        for (int i = 0; i < n; ++i) vars[i] = i + 1;
                        shuffle(vars, rng);
                        Clause units;
                        std::vector<Clause> cs;
                        for (int t = 0; t < d; ++t) cs.push_back({(rng() & 1) ? vars[t] : -vars[t]});
                        auto tab = sat_table(CnfFormula(n, cs), rho);
                        double mass = probability(D, [&](std::uint64_t x) { return tab[x] != 0; });
                        EXPECT_LE(mass, eps);
                    }
            }
        }
}

TEST(ConjunctionMass, ShortConjunctionsAreHeavy) {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 8 + static_cast<int>(rng.below(5));
        double alpha = 1 + 2 * rng.uniform();
        std::vector<double> p(n);
        for (auto& q : p) q = (1 + (alpha - 1) * rng.uniform()) / (1 + alpha);
        auto D = Distribution::product(p);
        int len = 1 + static_cast<int>(rng.below(n));
        std::vector<Clause> cs;
        std::vector<int> vars(n);
        for (int i = 0; i < n; ++i) vars[i] = i + 1;
        shuffle(vars, rng);
        for (int t = 0; t < len; ++t) cs.push_back({(rng() & 1) ? vars[t] : -vars[t]});
        auto tab = sat_table(CnfFormula(n, cs), 0);
        double mass = probability(D, [&](std::uint64_t x) { return tab[x] != 0; });
        for (int d = 1; d <= n; ++d)
            if (mass < std::pow(1 + alpha, -d)) EXPECT_GE(len, d);
    }
}
