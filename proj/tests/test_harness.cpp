#include "hurwitz/dump.hpp"
#include "hurwitz/report.hpp"
#include "hurwitz/suites.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hurwitz;

namespace {

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST(Report, EmptyStructuredIsValid) {
    RunResult rr;
    rr.suites.emplace_back("cyclo");
    const auto j = nlohmann::json::parse(emit_structured(rr));
    EXPECT_EQ(j.at("schema"), report_schema_version);
    EXPECT_TRUE(j.at("suites")[0].at("checks").empty());
    EXPECT_EQ(parse_structured(emit_structured(rr)), rr);
}

TEST(Report, RoundTrip) {
    Report r("group");
    r.add("a.one", "ref one", Status::pass, "", 1.5);
    r.add("a.two", "ref two", Status::discrepancy, "printed 'q1', derived q11\nsecond line", 0.25);
    r.add("a.three", "ref three", Status::skipped, "skip_heavy");
    RunResult rr;
    rr.suites.push_back(r);
    rr.config = {{"seed", "7"}};
    EXPECT_EQ(parse_structured(emit_structured(rr)), rr);
    EXPECT_THROW(parse_structured("{\"schema\": 99, \"suites\": []}"), ParseError);
    EXPECT_THROW(parse_structured("not json"), ParseError);
}

TEST(Report, FailingCheckShowsItsReference) {
    Report r("group");
    r.run("broken.entry", "S_11 = -(zeta^12 - zeta)/sqrt13", [](std::string& w) {
        Mat m = build("S");
        m(0, 0) += CycloNum(13, 1);
        w = Mat::diff(m, build("S"), 2);
        return m == build("S");
    });
    RunResult rr;
    rr.suites.push_back(r);
    EXPECT_FALSE(rr.ok());
    const std::string text = emit_text(rr);
    EXPECT_NE(text.find("S_11 = -(zeta^12 - zeta)/sqrt13"), std::string::npos);
    EXPECT_NE(emit_structured(rr).find("S_11 = -(zeta^12 - zeta)/sqrt13"), std::string::npos);
}

TEST(Report, ExceptionsBecomeFailures) {
    Report r("x");
    r.run("throws", "ref", [](std::string&) -> bool { throw DomainError("boom"); });
    EXPECT_EQ(r.checks[0].status, Status::fail);
    r.compare_printed("throws.printed", "ref", [](std::string&) -> bool { throw DomainError("boom"); });
    EXPECT_EQ(r.checks[1].status, Status::fail);
    r.compare_printed("differs", "ref", [](std::string& w) {
        w = "entry";
        return false;
    });
    EXPECT_EQ(r.checks[2].status, Status::discrepancy);
    EXPECT_EQ(r.count(Status::fail), 2u);
}

TEST(Runner, UnknownSuiteIsAConfigError) {
    RunConfig c;
    c.suites = {"no_such_suite"};
    EXPECT_THROW(run(c), ConfigError);
    c.suites = {"cyclo"};
    c.precision = 5;
    EXPECT_THROW(run(c), ConfigError);
}

TEST(Runner, AllExpandsToEverySuite) {
    EXPECT_EQ(resolve_suites({"all"}), suite_names());
    EXPECT_EQ(resolve_suites({"perm", "cyclo", "perm"}), (std::vector<std::string>{"cyclo", "perm"}));
    EXPECT_EQ(suite_names().size(), 10u);
}

TEST(Runner, GroupSkipHeavyHasNoFullClosure) {
    RunConfig c;
    c.suites = {"group"};
    c.skip_heavy = true;
    const auto rr = run(c);
    ASSERT_EQ(rr.suites.size(), 1u);
    const auto* chk = rr.suites[0].find("group.closure.S_T");
    ASSERT_NE(chk, nullptr);
    EXPECT_EQ(chk->status, Status::skipped);
    EXPECT_EQ(rr.suites[0].find("group.rel.T_13")->status, Status::pass);
    EXPECT_TRUE(rr.ok());
    EXPECT_EQ(rr.config.at("skip_heavy"), "true");
}

TEST(Runner, ChecksAreSortedAndUnique) {
    RunConfig c;
    c.suites = {"cyclo", "perm", "quaternion"};
    const auto rr = run(c);
    for (const auto& r : rr.suites) {
        EXPECT_TRUE(r.duplicate_ids().empty()) << r.suite;
        EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; }));
    }
    EXPECT_TRUE(rr.ok());
}

TEST(Runner, SameSeedSameReport) {
    RunConfig c;
    c.suites = {"quaternion", "forms"};
    c.seed = 99;
    const std::string a = emit_structured(run(c), false), b = emit_structured(run(c), false);
    EXPECT_EQ(a, b);
}

TEST(Dump, TIsASixLineDiagonalListing) {
    const std::string d = dump_object("T");
    EXPECT_EQ(count_lines(d), 7u);  // header and six rows
    EXPECT_EQ(d.substr(0, d.find('\n')), "matrix 6 13");
    EXPECT_EQ(parse_matrix_dump(d), build("T"));
}

TEST(Dump, A0HasThreeTerms) {
    const std::string d = dump_object("A0");
    EXPECT_EQ(count_lines(d), 3u);
    EXPECT_EQ(MultiPoly::parse_dump(d), build_form("A0"));
}

TEST(Dump, ConstantsAndUnknownNames) {
    EXPECT_EQ(CycloNum::parse(dump_object("sqrt13")), sqrt13());
    EXPECT_THROW(dump_object("no_such_object"), DomainError);
}
