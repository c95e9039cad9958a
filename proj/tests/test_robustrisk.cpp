#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "rlab/robustrisk.hpp"

using namespace rlab;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }

Concept random_term_concept(int n, Rng& rng) {
    switch (rng.below(6)) {
        case 0: {
            std::vector<int> idx;
            for (int i = 1; i <= n; ++i)
                if (rng.bernoulli(0.4)) idx.push_back(i);
            if (idx.empty()) idx.push_back(1 + static_cast<int>(rng.below(n)));
            return Concept::mon_conj(n, idx);
        }
        case 1: {
            std::vector<int> lits;
            for (int i = 1; i <= n; ++i)
                if (rng.bernoulli(0.4)) lits.push_back((rng() & 1) ? i : -i);
            return Concept::conj(n, lits);
        }
        case 2: return Concept::dictator(n, 1 + static_cast<int>(rng.below(n)), rng() & 1);
        case 3: return Concept::singleton(BitVector::from_mask(n, rng.bits(n)));
        default: return Concept::constant(n, rng() & 1);
    }
}

Concept random_concept(int n, Rng& rng) {
    switch (rng.below(3)) {
        case 0: {
            std::vector<int> idx;
            for (int i = 1; i <= n; ++i)
                if (rng() & 1) idx.push_back(i);
            return Concept::parity(n, idx);
        }
        case 1: {
            std::vector<long long> w(n);
            for (auto& v : w) v = static_cast<long long>(rng.below(5)) - 2;
            return Concept::ltf(w, static_cast<long long>(rng.below(5)) - 2, 1000);
        }
        default: return random_term_concept(n, rng);
    }
}

std::vector<double> random_product(int n, Rng& rng) {
    std::vector<double> p(n);
    for (auto& q : p) q = 0.15 + 0.7 * rng.uniform();
    return p;
}

Concept disjoint_pair_member(int n, int len, int which) {
    std::vector<int> idx;
    for (int i = 1; i <= len; ++i) idx.push_back(which * len + i);
    return Concept::mon_conj(n, idx);
}

}  // namespace

TEST(RobustLoss, Examples) {
    auto c = Concept::mon_conj(4, {1, 2});
    for (auto& x : ball(bv("0000"), 4)) EXPECT_FALSE(robust_loss(c, c, x, 2).loss);
    auto h = Concept::dictator(4, 1);
    for (auto& x : ball(bv("0000"), 4)) EXPECT_EQ(robust_loss(c, h, x, 0).loss, c(x) != h(x));
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> I, J;
        for (int i = 1; i <= 6; ++i) {
            if (rng() & 1) I.push_back(i);
            if (rng() & 1) J.push_back(i);
        }
        if (I == J) continue;
        auto x = BitVector::from_mask(6, rng.bits(6));
        EXPECT_TRUE(robust_loss(Concept::parity(6, I), Concept::parity(6, J), x, 1).loss);
    }
}

TEST(RobustLoss, WitnessIsFirstInBallOrder) {
    Rng rng(2);
    for (int t = 0; t < 300; ++t) {
        int n = 3 + static_cast<int>(rng.below(4));
        auto c = random_concept(n, rng), h = random_concept(n, rng);
        auto x = BitVector::from_mask(n, rng.bits(n));
        int rho = static_cast<int>(rng.below(n + 1));
        auto lw = robust_loss(c, h, x, rho);
        auto cs = [&](const std::string& s) { return c(BitVector::from_string(s)); };
        auto hs = [&](const std::string& s) { return h(BitVector::from_string(s)); };
        ASSERT_EQ(lw.loss, oracle::robust_loss(cs, hs, x.to_string(), rho));
        ASSERT_EQ(lw.loss, lw.witness.has_value());
        if (lw.loss) {
            std::string first;
            for (auto& z : oracle::ball_sorted(x.to_string(), rho))
                if (cs(z) != hs(z)) {
                    first = z;
                    break;
                }
            EXPECT_EQ(lw.witness->to_string(), first);
        }
    }
}

TEST(RobustLoss, TermFastPathMatchesSweep) {
    Rng rng(3);
    for (int t = 0; t < 3000; ++t) {
        int n = 2 + static_cast<int>(rng.below(6));
        auto c = random_term_concept(n, rng), h = random_term_concept(n, rng);
        auto x = BitVector::from_mask(n, rng.bits(n));
        int rho = static_cast<int>(rng.below(n + 1));
        ASSERT_TRUE(term_form(c) && term_form(h));
        auto cs = [&](const std::string& s) { return c(BitVector::from_string(s)); };
        auto hs = [&](const std::string& s) { return h(BitVector::from_string(s)); };
        ASSERT_EQ(robust_loss_fast(c, h, x, rho), oracle::robust_loss(cs, hs, x.to_string(), rho))
            << c.to_string() << " vs " << h.to_string() << " at " << x.to_string() << " rho " << rho;
        int u = reach_distance(*term_form(c), x);
        bool reach = false;
        for (auto& z : oracle::ball_set(x.to_string(), rho)) reach = reach || cs(z);
        EXPECT_EQ(u <= rho, reach);
    }
}

TEST(ConstantBallLoss, Examples) {
    auto c = Concept::mon_conj(3, {1});
    auto zero = Concept::constant(3, false);
    for (auto& x : ball(bv("000"), 3)) {
        EXPECT_EQ(constant_ball_loss(c, zero, x, 2).loss, c(x));
        EXPECT_EQ(constant_ball_loss(c, c, x, 0).loss, false);
    }
    auto c2 = Concept::mon_conj(6, {1, 2});
    EXPECT_DOUBLE_EQ(constant_risk_exact(c2, c2, 1, Distribution::uniform(6)).value, 0.75);
}

TEST(ConstantBallLoss, IncomparableFixture) {
    auto D = Distribution::point_mass(bv("000"));
    auto c = Concept::singleton(bv("100"));
    auto h = Concept::constant(3, false);
    EXPECT_EQ(constant_risk_exact(c, h, 1, D).value, 0.0);
    EXPECT_EQ(robust_risk_exact(c, h, 1, D).value, 1.0);
}

TEST(RiskExact, ProductClosedFormMatchesSweep) {
    Rng rng(4);
    for (int t = 0; t < 400; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));
        auto c = random_term_concept(n, rng), h = random_term_concept(n, rng);
        auto D = (t % 3 == 0) ? Distribution::uniform(n) : Distribution::product(random_product(n, rng));
        int rho = static_cast<int>(rng.below(n + 1));
        double closed = robust_risk_exact(c, h, rho, D).value;
        double sweep = robust_risk_exact(Classifier(c), Classifier(h), rho, D).value;
        ASSERT_NEAR(closed, sweep, 1e-12) << c.to_string() << " vs " << h.to_string() << " rho " << rho;
        double pointwise = robust_risk_exact(c, h, rho, D, 2.0).value;
        EXPECT_NEAR(pointwise, sweep, 1e-12);
    }
}

TEST(RiskExact, DisjointConjunctionsLowerBounds) {
    auto D = Distribution::uniform(12);
    auto c1 = disjoint_pair_member(12, 4, 0), c2 = disjoint_pair_member(12, 4, 1);
    double v = robust_risk_exact(c1, c2, 2, D).value;
    EXPECT_GE(v, 15.0 / 32);
    EXPECT_EQ(v, robust_risk_exact(Classifier(c1), Classifier(c2), 2, D).value);
    for (int rho : {2, 3})
        for (int n = 12; n <= 16; ++n) {
            auto a = disjoint_pair_member(n, 2 * rho, 0), b = disjoint_pair_member(n, 2 * rho, 1);
            EXPECT_GE(robust_risk_exact(a, b, rho, Distribution::uniform(n)).value, (1 - std::ldexp(1.0, -2 * rho)) / 2);
        }
}

TEST(RiskExact, MonotoneInRadius) {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        int n = 3 + static_cast<int>(rng.below(5));
        auto c = random_concept(n, rng), h = random_concept(n, rng);
        auto D = Distribution::product(random_product(n, rng));
        double prev = -1;
        for (int rho = 0; rho <= n; ++rho) {
            double v = robust_risk_exact(c, h, rho, D).value;
            EXPECT_GE(v, prev - 1e-12);
            prev = v;
            if (rho == 0) {
                double err = probability(D, [&](std::uint64_t x) { return c.evaluate_mask(x) != h.evaluate_mask(x); });
                EXPECT_NEAR(v, err, 1e-12);
            }
        }
        bool differ = false;
        for (std::uint64_t x = 0; x < (1u << n); ++x) differ = differ || c.evaluate_mask(x) != h.evaluate_mask(x);
        EXPECT_NEAR(prev, differ ? 1.0 : 0.0, 1e-12);
    }
}

TEST(RiskExact, TriangleInequality) {
    Rng rng(6);
    for (int t = 0; t < 1000; ++t) {
        int n = 3 + static_cast<int>(rng.below(6));
        auto c1 = random_concept(n, rng), c2 = random_concept(n, rng), h = random_concept(n, rng);
        auto D = Distribution::product(random_product(n, rng));
        int rho = static_cast<int>(rng.below(n + 1));
        double lhs = robust_risk_exact(c1, c2, rho, D).value;
        double rhs = robust_risk_exact(h, c1, rho, D).value + robust_risk_exact(h, c2, rho, D).value;
        EXPECT_LE(lhs, rhs + 1e-12);
    }
}

TEST(RiskExact, EarlyExit) {
    auto c = Concept::parity(10, {1}), h = Concept::parity(10, {2});
    auto r = robust_risk_exact(c, h, 0, Distribution::uniform(10), 0.1);
    EXPECT_TRUE(r.exceeded);
    EXPECT_GT(r.value, 0.1);
    EXPECT_LT(r.value, 0.5);
    EXPECT_THROW(robust_risk_exact(c, h, 0, Distribution::uniform(21)), InvalidInput);
}

TEST(RiskMc, Basics) {
    Rng rng(7);
    auto c = Concept::mon_conj(12, {1, 2, 3});
    auto r0 = robust_risk_mc(c, c, 2, Distribution::uniform(12), 1000, rng);
    EXPECT_EQ(r0.value, 0.0);
    EXPECT_EQ(r0.interval->first, 0.0);
    EXPECT_NEAR(r0.interval->second, 1 - std::pow(0.005, 1.0 / 1000), 1e-9);
    auto h = Concept::mon_conj(12, {4, 5, 6});
    auto r1 = robust_risk_mc(c, h, 1, Distribution::uniform(12), 1, rng);
    EXPECT_TRUE(r1.value == 0.0 || r1.value == 1.0);
}

TEST(RiskMc, CalibratedAgainstExact) {
    Rng rng(8);
    int inside = 0, reps = 300;
    auto D = Distribution::uniform(12);
    for (int t = 0; t < reps; ++t) {
        auto c = random_term_concept(12, rng), h = random_term_concept(12, rng);
        int rho = static_cast<int>(rng.below(4));
        double exact = robust_risk_exact(c, h, rho, D).value;
        auto r = robust_risk_mc(c, h, rho, D, 300, rng);
        if (exact >= r.interval->first - 1e-12 && exact <= r.interval->second + 1e-12) ++inside;
    }
    EXPECT_GE(inside, reps * 97 / 100);
}

TEST(BinomialInterval, KnownValues) {
    auto [lo, hi] = binomial_interval(0, 10);
    EXPECT_EQ(lo, 0.0);
    EXPECT_NEAR(hi, 1 - std::pow(0.005, 0.1), 1e-9);
    auto [lo2, hi2] = binomial_interval(10, 10);
    EXPECT_NEAR(lo2, std::pow(0.005, 0.1), 1e-9);
    EXPECT_EQ(hi2, 1.0);
    auto [a, b] = binomial_interval(50, 100);
    EXPECT_LT(a, 0.5);
    EXPECT_GT(b, 0.5);
    EXPECT_NEAR(a + b, 1.0, 1e-9);
}

TEST(Dilate, MatchesBallSweep) {
    Rng rng(9);
    int n = 7;
    std::vector<char> s(1 << n);
    for (auto& v : s) v = rng.bernoulli(0.03);
    for (int rho = 0; rho <= 3; ++rho) {
        auto d = dilate(s, n, rho);
        for (std::uint64_t x = 0; x < s.size(); ++x)
            EXPECT_EQ(static_cast<bool>(d[x]), ball_any_mask(x, n, rho, [&](std::uint64_t z) { return s[z] != 0; }));
    }
}
