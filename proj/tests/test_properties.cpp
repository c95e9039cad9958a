#include <gtest/gtest.h>

#include "properties.hpp"

TEST(Properties, RiskTriangle) { EXPECT_EQ(props::risk_triangle(2000, 11), ""); }
TEST(Properties, LogLipschitzFacts) { EXPECT_EQ(props::loglip_facts(10, 12), ""); }
TEST(Properties, SatMonotone) { EXPECT_EQ(props::sat_monotone(100, 13), ""); }
TEST(Properties, ClosureWidth) { EXPECT_EQ(props::closure_width(200, 14), ""); }
TEST(Properties, Embedding) { EXPECT_EQ(props::embedding(10, 15), ""); }
TEST(Properties, SauerShelah) { EXPECT_EQ(props::sauer_shelah(50, 16), ""); }
TEST(Properties, DimensionChain) { EXPECT_EQ(props::dimension_chain(50, 17), ""); }

// A corrupted marginal must be caught.
TEST(Properties, LogLipschitzDetectsViolation) {
    auto t = rlab::Distribution::uniform(3).table();
    t[0] *= 10;
    EXPECT_GT(rlab::log_lipschitz_alpha(3, t), 1.0);
    auto onto = props::project(t, 3, 0b001);
    EXPECT_GT(onto[0], 0.5);
}
