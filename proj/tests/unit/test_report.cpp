#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cuboid/error.hpp"
#include "cuboid/report.hpp"
#include "gen.hpp"

using namespace cuboid;
using namespace cuboid::report;

namespace {
RunConfig small(std::int64_t n, std::set<Check> checks) {
    RunConfig c;
    c.a_max = c.u_max = n;
    c.checks = std::move(checks);
    return c;
}
}  // namespace

TEST_CASE("check names") {
    CHECK(parse_checks("star,oracle") == std::set<Check>{Check::Star, Check::Oracle});
    CHECK(parse_checks("all").size() == 9);
    CHECK_THROWS_AS(parse_checks("star,bogus"), Error);
    CHECK_THROWS_AS(parse_checks(""), Error);
    CHECK(is_global(Check::GcdLemma));
    CHECK_FALSE(is_global(Check::Full));
}

TEST_CASE("config validation") {
    RunConfig c;
    CHECK_NOTHROW(c.validate());
    c.a_max = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c.a_max = 3;
    c.prime_limit = 1;
    CHECK_THROWS_AS(c.validate(), Error);
    c.prime_limit = 200;
    c.jobs = 0;
    CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("work items") {
    const auto items = work_items(small(5, {Check::Star}));
    CHECK(items.size() == 18);
    CHECK(*items.front().a == 1);
    CHECK(*items.front().u == 2);
    for (std::size_t i = 1; i < items.size(); ++i)
        CHECK(std::pair(*items[i - 1].a, *items[i - 1].u) < std::pair(*items[i].a, *items[i].u));
}

TEST_CASE("full check on a small range") {
    const auto res = run_batch(small(5, {Check::Full}));
    CHECK(res.reports.size() == 18);
    CHECK(res.summary.violations == 0);
    CHECK(exit_code(res) == 0);
    for (const auto& r : res.reports) {
        REQUIRE(r.full);
        CHECK((r.full->verdict == "Excluded" || r.full->verdict == "Proven"));
        CHECK(r.full->patterns.size() == 21);
    }
    CHECK(res.summary.proven + res.summary.inconclusive == res.reports.size());
}

TEST_CASE("json round trip") {
    RunConfig c = small(4, parse_checks("star,even44,conj44,quad26,oracle,full"));
    c.timing = true;
    for (const auto& r : run_batch(c).reports) {
        const auto j = to_json(r);
        CHECK(j["schema"] == 1);
        CHECK(from_json(nlohmann::ordered_json::parse(j.dump())) == r);
    }
    ExclusionReport big;
    big.a = Int("123456789012345678901234567890");
    big.u = 7;
    big.error = ReportError{ErrorCode::NotCoprime, "x"};
    const auto j = to_json(big);
    CHECK(j["a"].is_string());
    CHECK(j["u"].is_number());
    CHECK(from_json(j) == big);
    CHECK_THROWS_AS(from_json(nlohmann::ordered_json::parse("{\"schema\":2}")), Error);
    CHECK_THROWS_AS(from_json(nlohmann::ordered_json::parse("{\"schema\":1,\"a\":[1]}")), Error);
}

TEST_CASE("star-only sweep, a, u <= 20") {
    const auto res = run_batch(small(20, {Check::Star}));
    for (const auto& r : res.reports) CHECK(r.star->solutions.empty());
    CHECK(exit_code(res) == 0);
}

TEST_CASE("pairs file with bad rows") {
    const std::string path = "report_pairs_test.txt";
    {
        std::ofstream out(path);
        out << "# comment\n1 2\n2,4\n\nfoo bar\n3 3\n5 7 9\n";
    }
    RunConfig c;
    c.pairs_file = path;
    c.checks = {Check::Star};
    const auto res = run_batch(c);
    std::remove(path.c_str());
    REQUIRE(res.reports.size() == 5);
    CHECK_FALSE(res.reports[0].error);
    CHECK(res.reports[1].error->code == ErrorCode::NotCoprime);
    CHECK(res.reports[2].error->code == ErrorCode::ParseError);
    CHECK(*res.reports[2].line == 5);
    CHECK(res.reports[3].error->code == ErrorCode::Equal);
    CHECK(res.reports[4].error->code == ErrorCode::ParseError);
    CHECK(res.summary.invalid == 4);
    CHECK(exit_code(res) == 0);
    RunConfig missing;
    missing.pairs_file = "no/such/file";
    CHECK_THROWS_AS(run_batch(missing), Error);
}

TEST_CASE("violations drive the exit code") {
    BatchResult res = run_batch(small(3, {Check::Star}));
    CHECK(exit_code(res) == 0);
    res.reports[0].star->solutions.push_back(4);
    CHECK(res.reports[0].violation());
    res.summary.violations = 1;
    CHECK(exit_code(res) == 1);
}

TEST_CASE("summary equals the sum over reports and output is job-independent") {
    RunConfig c = small(9, {Check::Star, Check::Quad26, Check::Oracle});
    const auto one = run_batch(c);
    c.jobs = 4;
    const auto four = run_batch(c);
    std::ostringstream s1, s4;
    write_batch(one, Format::JsonLines, s1);
    write_batch(four, Format::JsonLines, s4);
    CHECK(s1.str() == s4.str());
    std::size_t proven = 0, inconclusive = 0;
    for (const auto& r : one.reports) (r.oracle->verdict == "Proven" ? proven : inconclusive)++;
    CHECK(one.summary.proven == proven);
    CHECK(one.summary.inconclusive == inconclusive);
    CHECK(one.summary.reports == one.reports.size());
}

TEST_CASE("tsv") {
    const auto res = run_batch(small(3, {Check::Star, Check::Oracle}));
    std::ostringstream out;
    write_batch(res, Format::Tsv, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == tsv_header());
    std::getline(in, line);
    CHECK(line == "1\t2\t3\t18\t1\t-72\t16\t0\t-\t-\t-\tInconclusive\t-\t-");
}

TEST_CASE("global checks") {
    RunConfig c = small(1, {Check::GcdLemma, Check::EcTorsion, Check::Residuals});
    c.gcd_max_abs = 100;
    c.residual_bound = 300;
    c.p2_residual_bound = 200;
    const auto res = run_batch(c);
    CHECK(res.reports.empty());
    CHECK(res.summary.violations == 0);
    CHECK(res.summary.global["gcd_lemma"]["pass"] == true);
    CHECK(res.summary.global["ec_torsion"]["pass"] == true);
    CHECK(res.summary.global["residuals"]["pass"] == true);
}

TEST_CASE("ec suite") {
    const auto rep = run_ec_suite();
    CHECK(rep.all_pass());
    CHECK(rep.items.size() >= 10);
}
