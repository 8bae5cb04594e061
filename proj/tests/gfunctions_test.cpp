#include <gtest/gtest.h>

#include <cmath>

#include "gsteff/gfunctions.hpp"

using namespace gsteff;

namespace {

TEST(Catalog, FixedOrderAndSize) {
    const auto& cat = g_catalog();
    ASSERT_EQ(cat.size(), 7u);
    const char* ids[] = {"identity", "g1", "g2", "g3", "g4", "g5", "g6"};
    for (std::size_t i = 0; i < cat.size(); ++i) EXPECT_EQ(cat[i].id, ids[i]);
}

TEST(Catalog, SpotValues) {
    const auto& cat = g_catalog();
    EXPECT_DOUBLE_EQ(cat[1].eval(M_PI / 2.0), 1.0);  // sin
    EXPECT_DOUBLE_EQ(cat[3].eval(3.0), 9.0);         // x^2
    EXPECT_DOUBLE_EQ(cat[6].gprime0, -1.0);          // d/dx (e^-x - 1) at 0
    EXPECT_DOUBLE_EQ(cat[0].eval(0.25), 0.25);       // identity
}

TEST(Catalog, AllMembersVanishAtOrigin) {
    for (const auto& g : g_catalog()) EXPECT_EQ(g.eval(0.0), 0.0) << g.id;
}

TEST(ValidateG, AllCatalogMembersPass) {
    for (const auto& g : g_catalog()) {
        GValidation v = validate_g(g);
        EXPECT_TRUE(v.zero_at_origin) << g.id;
        EXPECT_TRUE(v.isolated_zero) << g.id;
        EXPECT_TRUE(v.matches_declared)
            << g.id << " fd=" << v.fd_gprime0 << " declared=" << g.gprime0;
    }
}

TEST(ValidateG, FiniteDifferenceSpotChecks) {
    EXPECT_NEAR(validate_g(*find_g("g1")).fd_gprime0, 1.0, 1e-6);
    EXPECT_NEAR(validate_g(*find_g("g3")).fd_gprime0, 0.0, 1e-6);
}

TEST(ValidateG, RejectsNonzeroOrigin) {
    GFunction shifted{"bad", [](double x) { return x + 1.0; }, 1.0, "x + 1"};
    GValidation v = validate_g(shifted);
    EXPECT_FALSE(v.zero_at_origin);
}

TEST(ValidateG, RejectsNonIsolatedZero) {
    GFunction flat{"flat", [](double) { return 0.0; }, 0.0, "0"};
    GValidation v = validate_g(flat);
    EXPECT_TRUE(v.zero_at_origin);
    EXPECT_FALSE(v.isolated_zero);
}

// Sign facts behind the residual plateaus: g3 >= 0, g4 <= 0 on the probe range.
TEST(Catalog, SignFactsOnProbeGrid) {
    const GFunction& g3 = *find_g("g3");
    const GFunction& g4 = *find_g("g4");
    for (int i = 0; i < 64; ++i) {
        double t = 0.5 * std::pow(1e-6 / 0.5, i / 63.0);
        for (double x : {t, -t}) {
            EXPECT_GE(g3.eval(x), 0.0);
            EXPECT_LE(g4.eval(x), 0.0);
        }
    }
}

TEST(FindG, UnknownIdIsNull) {
    EXPECT_EQ(find_g("g7"), nullptr);
}

}  // namespace
