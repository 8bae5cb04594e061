#include <gtest/gtest.h>

#include <string>

#include "gsteff/bench.hpp"

using namespace gsteff;

namespace {

const BenchCell* find_cell(const BenchReport& rep, const std::string& pid,
                           const std::string& label) {
    for (const auto& c : rep.cells)
        if (c.problem_id == pid && cell_label(c) == label) return &c;
    return nullptr;
}

TEST(RunMatrix, FullGSteffensenCardinality) {
    BenchReport rep = run_matrix(all_problem_ids(), all_g_ids(), {"gsteffensen"});
    EXPECT_EQ(rep.cells.size(), 9u * 7u);
}

TEST(RunMatrix, BaselinesAddOneCellPerProblem) {
    BenchReport rep =
        run_matrix(all_problem_ids(), all_g_ids(), {"newton", "steffensen", "gsteffensen"});
    EXPECT_EQ(rep.cells.size(), 9u * (7u + 2u));
}

TEST(RunMatrix, UnknownIdentifierRejectedUpFront) {
    EXPECT_THROW(run_matrix({"P99"}, {"g1"}, {"gsteffensen"}), std::invalid_argument);
    EXPECT_THROW(run_matrix({"P1"}, {"g9"}, {"gsteffensen"}), std::invalid_argument);
    EXPECT_THROW(run_matrix({"P1"}, {"g1"}, {"brent"}), std::invalid_argument);
}

TEST(RunMatrix, P1G6TakesManyIterations) {
    BenchReport rep = run_matrix({"P1"}, {"g6"}, {"gsteffensen"});
    const BenchCell* c = find_cell(rep, "P1", "g6");
    ASSERT_NE(c, nullptr);
    EXPECT_NEAR(c->final_x, 1.4044916482153411, 1e-12);
    EXPECT_NEAR(c->n, 80, 3);
}

TEST(RunMatrix, P9NewtonDoesNotConverge) {
    BenchReport rep = run_matrix({"P9"}, {}, {"newton"});
    ASSERT_EQ(rep.cells.size(), 1u);
    EXPECT_TRUE(rep.cells[0].outcome == OutcomeClass::Diverged ||
                rep.cells[0].outcome == OutcomeClass::Stalled);
}

TEST(Render, CsvHeaderIsStable) {
    BenchReport rep = run_matrix({"P1"}, {"g1"}, {"gsteffensen"});
    std::string csv = render(rep, "csv");
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "problem,method,g,n,x_n,abs_f,termination,outcome,evals");
}

TEST(Render, JsonIsByteIdenticalAcrossRuns) {
    auto make = [] {
        BenchReport rep = run_matrix(all_problem_ids(), all_g_ids(),
                                     {"newton", "steffensen", "gsteffensen"});
        return render(rep, "json");
    };
    EXPECT_EQ(make(), make());
}

TEST(Render, MarkdownContainsTabulatedRoot) {
    BenchReport rep = run_matrix({"P1"}, {"g1"}, {"gsteffensen"});
    std::string md = render(rep, "markdown");
    EXPECT_NE(md.find("1.4044916482153411"), std::string::npos);
}

TEST(Render, UnknownFormatRejected) {
    BenchReport rep = run_matrix({"P1"}, {"g1"}, {"gsteffensen"});
    EXPECT_THROW(render(rep, "xml"), std::invalid_argument);
}

TEST(FormatDouble, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.4044916482153411), "1.4044916482153411");
    EXPECT_EQ(format_double(0.0), "0");
    EXPECT_EQ(format_double(3.3306690738754696e-16), "3.3306690738754696e-16");
}

TEST(Verify, FullDefaultRunPasses) {
    BenchReport rep = run_matrix(all_problem_ids(), all_g_ids(),
                                 {"newton", "steffensen", "gsteffensen"});
    VerifySummary sum = verify(rep);
    for (const auto& m : sum.mismatches)
        ADD_FAILURE() << m.problem_id << " " << m.label << ": " << m.reason << " ["
                      << m.citation << "]";
    EXPECT_EQ(sum.exit_code(), 0);
    EXPECT_GT(sum.matches, 60);
}

TEST(Verify, ForcedInversionIsReported) {
    BenchReport rep = run_matrix({"P2"}, {"g2"}, {"gsteffensen"});
    ASSERT_EQ(rep.cells.size(), 1u);
    rep.cells[0].outcome = OutcomeClass::ConvergedInInterval;  // tables say divergent
    VerifySummary sum = verify(rep);
    ASSERT_EQ(sum.mismatches.size(), 1u);
    EXPECT_EQ(sum.mismatches[0].problem_id, "P2");
    EXPECT_EQ(sum.mismatches[0].label, "g2");
    EXPECT_EQ(sum.exit_code(), 1);
}

TEST(Verify, P5G6ExactRowMatches) {
    BenchReport rep = run_matrix({"P5"}, {"g6"}, {"gsteffensen"});
    const BenchCell* c = find_cell(rep, "P5", "g6");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->final_x, 2.0);
    EXPECT_EQ(c->residual, 0.0);
    VerifySummary sum = verify(rep);
    EXPECT_EQ(sum.matches, 1);
    EXPECT_TRUE(sum.mismatches.empty());
}

TEST(Verify, DoesNotRerunSolvers) {
    BenchReport rep = run_matrix({"P1"}, {"g1"}, {"gsteffensen"});
    // corrupt the recorded result; verify must trust the report and flag it
    rep.cells[0].final_x = 99.0;
    rep.cells[0].outcome = OutcomeClass::ConvergedInInterval;
    VerifySummary sum = verify(rep);
    ASSERT_EQ(sum.mismatches.size(), 1u);
    EXPECT_NE(sum.mismatches[0].reason.find("final_x"), std::string::npos);
}

}  // namespace
