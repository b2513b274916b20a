#include <gtest/gtest.h>

#include <algorithm>

#include "qgl/error.hpp"
#include "qgl/suite.hpp"

using namespace qgl;

namespace {

std::string failures(const SuiteReport& r) {
    std::string out;
    for (const auto& c : r.checks)
        if (c.status == "fail") out += c.id + ": " + c.witness + "\n";
    return out;
}

}  // namespace

TEST(Suites, NamesAndUnknownSuite) {
    const auto& names = suite_names();
    for (const char* n : {"hopf-axioms", "pairing-axioms", "pbw", "frobenius", "restricted", "gram", "datum-lattice",
                          "predicates"})
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    EXPECT_NO_THROW(run_suite("all", SuiteConfig{2, ParameterSpec::generic(), 2, "", nullptr}));
    EXPECT_THROW(run_suite("no-such-suite", SuiteConfig{}), ValidationError);
}

TEST(Suites, PbwAtRankThreeGeneric) {
    SuiteConfig c;
    c.n = 3;
    c.spec = ParameterSpec::generic();
    c.degree = 5;
    SuiteReport r = run_suite("pbw", c);
    EXPECT_TRUE(r.passed()) << failures(r);
    EXPECT_EQ(r.count("pass"), 3);
    EXPECT_EQ(r.count("skipped"), 1);  // finite quotients need a root of unity
}

TEST(Suites, DatumLatticeOnShippedCorpus) {
    SuiteReport r = run_suite("datum-lattice", SuiteConfig{});
    EXPECT_TRUE(r.passed()) << failures(r);
    EXPECT_GE(r.count("pass"), 20);
}

TEST(Suites, ReportsAreSortedAndSerializable) {
    SuiteReport r = run_suite("predicates", SuiteConfig{});
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
    auto j = r.to_json();
    EXPECT_EQ(j["suite"], "predicates");
    EXPECT_EQ(j["checks"].size(), r.checks.size());
    EXPECT_NE(r.to_text().find("pass"), std::string::npos);
}

TEST(Suites, GenericModeSkipsRootOnlySuites) {
    SuiteConfig c;
    c.spec = ParameterSpec::generic();
    SuiteReport r = run_suite("gram", c);
    EXPECT_EQ(r.count("fail"), 0);
    EXPECT_GT(r.count("skipped"), 0);
}

TEST(Suites, AllPassesAtRankTwoEllThree) {
    SuiteReport r = run_suite("all", SuiteConfig{});
    EXPECT_GT(r.count("pass"), 200);
    EXPECT_TRUE(r.passed()) << failures(r);
}
