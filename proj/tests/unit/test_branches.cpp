#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuboid/branches.hpp"
#include "cuboid/error.hpp"
#include "cuboid/exclusion.hpp"
#include "gen.hpp"

using namespace cuboid;
using namespace cuboid::exclusion;

TEST_CASE("branch I, 3 does not divide X") {
    const auto v = branch_analysis(1, new_params(1, 3));
    CHECK(v.branch == "I");
    CHECK(v.subcase == "3!|X");
    CHECK(v.obstruction == Obstruction::Valuation3);
    CHECK(v.confirmed);
}

TEST_CASE("branch II.2 terminal X = 1") {
    const auto v = branch_analysis(1, new_params(1, 2));
    CHECK(v.branch == "II.2");
    CHECK(v.subcase == "X=+-1");
    CHECK(v.obstruction == Obstruction::TerminalUnit);
    CHECK(v.confirmed);
    CHECK(branch_analysis(-1, new_params(1, 2)).obstruction == Obstruction::TerminalUnit);
}

TEST_CASE("branches are disjoint") {
    // (1,3): 3 | au, so never II.
    for (long X = -50; X <= 50; ++X)
        if (X != 0) CHECK(branch_analysis(X, new_params(1, 3)).branch == "I");
    // (1,5): both odd, 3 !| au.
    CHECK(branch_analysis(7, new_params(1, 5)).branch == "II.1");
    CHECK(branch_analysis(7, new_params(1, 5)).obstruction == Obstruction::Mod16);
}

TEST_CASE("errors and names") {
    CHECK_THROWS_AS(branch_analysis(0, new_params(1, 2)), Error);
    CHECK(to_string(Obstruction::DividesX72) == "x_divides_72");
    CHECK(to_string(Obstruction::Mod16) == "mod_16");
}

TEST_CASE("every candidate is ruled out and the claim checks out") {
    std::map<std::string, std::size_t> seen;
    for (long a = 1; a <= 25; ++a)
        for (long u = 1; u <= 25; ++u) {
            if (a == u || std::gcd(a, u) != 1) continue;
            const auto p = new_params(a, u);
            for (long X = -200; X <= 200; ++X) {
                if (X == 0) continue;
                const auto v = branch_analysis(X, p);
                CHECK_MESSAGE(v.confirmed, a, " ", u, " X=", X, " ", v.branch, " ", v.subcase);
                CHECK_FALSE(star_holds(X, p));
                ++seen[v.branch + ":" + std::string(to_string(v.obstruction))];
            }
        }
    CHECK(seen.contains("I:valuation_3"));
    CHECK(seen.contains("II.1:mod_16"));
    CHECK(seen.contains("II.2:valuation_2"));
    CHECK(seen.contains("II.2:x_divides_72"));
    CHECK(seen.contains("II.2:terminal_x_1"));
    CHECK(seen.contains("II:gcd_lemma"));
}
