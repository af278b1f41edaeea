#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cuboid/certificate.hpp"
#include "gen.hpp"

using namespace cuboid;
using namespace cuboid::exclusion;

TEST_CASE("pattern list covers every multi-part partition of 8") {
    const auto pats = multi_part_patterns();
    CHECK(pats.size() == 21);
    for (const char* must : {"7+1", "6+2", "5+3", "4+4", "4+2+2", "2+2+2+2", "3+3+2", "1+1+1+1+1+1+1+1"})
        CHECK(std::find(pats.begin(), pats.end(), must) != pats.end());
    CHECK(std::find(pats.begin(), pats.end(), "8") == pats.end());
}

TEST_CASE("certificates for (1,2) and (2,3)") {
    for (auto [a, u] : {std::pair{1L, 2L}, std::pair{2L, 3L}}) {
        const auto cert = certify_irreducible(new_params(a, u));
        REQUIRE(cert.structural);
        CHECK(cert.structural->complete);
        CHECK(cert.structural->patterns.size() == 21);
        for (const auto& p : cert.structural->patterns) {
            CHECK_FALSE(p.evidence.empty());
            CHECK(p.evidence.find("NOT EXCLUDED") == std::string::npos);
        }
        CHECK(cert.a == a);
        CHECK(cert.u == u);
        // The oracle abstains; the structural part still stands.
        CHECK(cert.verdict == oracle::Verdict::Inconclusive);
        CHECK_FALSE(cert.full());
    }
}

TEST_CASE("evidence pointers by pattern") {
    const auto ev = structural_evidence(run_structural(new_params(1, 2)));
    for (const auto& p : ev.patterns) {
        if (p.pattern == "4+4") CHECK(p.evidence.starts_with("even44"));
        else if (p.pattern == "6+2") CHECK(p.evidence.starts_with("quad26"));
        else if (p.pattern.find_first_of("1357") != std::string::npos) CHECK(p.evidence.starts_with("odd-degree closure"));
        else CHECK(p.evidence == "regroups to 6+2");
    }
}

TEST_CASE("a failed exclusion is reported") {
    StructuralRun run = run_structural(new_params(1, 2));
    run.star_solutions.push_back(5);
    const auto ev = structural_evidence(run);
    CHECK_FALSE(ev.complete);
    const auto it = std::find_if(ev.patterns.begin(), ev.patterns.end(), [](const auto& p) { return p.pattern == "4+4"; });
    CHECK(it->evidence.starts_with("NOT EXCLUDED"));
}

TEST_CASE("all coprime pairs a < u <= 20 are structurally excluded") {
    for (long a = 1; a <= 20; ++a)
        for (long u = a + 1; u <= 20; ++u) {
            if (std::gcd(a, u) != 1) continue;
            CHECK(structural_evidence(run_structural(new_params(a, u))).complete);
        }
}
