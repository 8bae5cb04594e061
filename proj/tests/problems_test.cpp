#include <gtest/gtest.h>

#include <cmath>

#include "gsteff/problems.hpp"

using namespace gsteff;

namespace {

bool has_root_near(const Problem& p, double value, double tol) {
    for (double r : p.reference_roots)
        if (std::abs(r - value) <= tol) return true;
    return false;
}

TEST(PaperCatalog, NineProblemsInOrder) {
    const auto& ps = paper_catalog();
    ASSERT_EQ(ps.size(), 9u);
    for (std::size_t i = 0; i < ps.size(); ++i)
        EXPECT_EQ(ps[i].id, "P" + std::to_string(i + 1));
}

TEST(PaperCatalog, IntervalsAndStartingPoints) {
    for (const auto& p : paper_catalog()) {
        EXPECT_LT(p.a, p.b) << p.id;
        EXPECT_GE(p.x0, p.a) << p.id;
        EXPECT_LE(p.x0, p.b) << p.id;
    }
    EXPECT_EQ(find_problem("P1")->x0, 3.0);
    EXPECT_EQ(find_problem("P2")->x0, 1.0);
    EXPECT_EQ(find_problem("P4")->a, -3.0);
    EXPECT_EQ(find_problem("P5")->b, 3.5);
}

// Hand-coded derivatives against central differences of f, 20 grid points.
TEST(PaperCatalog, AnalyticDerivativesMatchFiniteDifferences) {
    for (const auto& p : paper_catalog()) {
        for (int i = 0; i < 20; ++i) {
            double x = p.a + (p.b - p.a) * i / 19.0;
            double h = 1e-6 * std::max(1.0, std::abs(x));
            double fd1 = (p.f(x + h) - p.f(x - h)) / (2.0 * h);
            EXPECT_NEAR(p.df(x), fd1, 1e-5 * std::max(1.0, std::abs(fd1)))
                << p.id << " df at x=" << x;
            double h2 = 1e-4 * std::max(1.0, std::abs(x));
            double fd2 = (p.f(x + h2) - 2.0 * p.f(x) + p.f(x - h2)) / (h2 * h2);
            EXPECT_NEAR(p.d2f(x), fd2, 1e-4 * std::max(1.0, std::abs(fd2)))
                << p.id << " d2f at x=" << x;
        }
    }
}

TEST(PaperCatalog, ReferenceRootsAreRoots) {
    for (const auto& p : paper_catalog()) {
        ASSERT_FALSE(p.reference_roots.empty()) << p.id;
        for (double r : p.reference_roots)
            EXPECT_LE(std::abs(p.f(r)), 1e-12 * std::max(1.0, std::abs(r)))
                << p.id << " root " << r;
    }
}

// Every tabulated root must match an oracle-resolved root within 1e-9.
TEST(PaperCatalog, TabulatedRootsMatchOracle) {
    for (const auto& p : paper_catalog()) {
        for (const auto& [key, exp] : p.expected) {
            if (!exp.table_x) continue;
            EXPECT_TRUE(has_root_near(p, *exp.table_x, 1e-9))
                << p.id << " " << key << " tabulated " << *exp.table_x;
        }
    }
}

TEST(ResolveReferenceRoots, ClosedFormsOverride) {
    EXPECT_EQ(find_problem("P3")->reference_roots, std::vector<double>{1.0});
    EXPECT_TRUE(has_root_near(*find_problem("P5"), 2.0, 0.0));
    EXPECT_TRUE(has_root_near(*find_problem("P8"), 1.5707963267948966, 0.0));
}

TEST(ResolveReferenceRoots, RootsOutsideIntervalAreFound) {
    // the widened scan window must see the P4 and P6 limits and P9's root
    EXPECT_TRUE(has_root_near(*find_problem("P4"), -1.7692923542386314, 1e-9));
    EXPECT_TRUE(has_root_near(*find_problem("P6"), -1.1673039782614187, 1e-9));
    EXPECT_TRUE(has_root_near(*find_problem("P9"), 1.67963061042845, 1e-9));
    EXPECT_TRUE(has_root_near(*find_problem("P2"), 1.324717957244746, 1e-9));
}

TEST(PaperCatalog, ExpectationTablesCoverEveryG) {
    for (const auto& p : paper_catalog())
        for (const char* gid : {"g1", "g2", "g3", "g4", "g5", "g6"})
            EXPECT_TRUE(p.expected.count(gid)) << p.id << " missing " << gid;
}

TEST(NearestRoot, PicksClosest) {
    const Problem& p8 = *find_problem("P8");
    auto r = nearest_root(p8, 1.4);
    ASSERT_TRUE(r.has_value());
    EXPECT_DOUBLE_EQ(*r, 1.5707963267948966);
}

}  // namespace
