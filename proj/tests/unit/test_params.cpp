#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuboid/error.hpp"
#include "cuboid/params.hpp"
#include "gen.hpp"

using namespace cuboid;

namespace {
ErrorCode code_of(long a, long u) {
    try {
        (void)new_params(Int(a), Int(u));
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error");
    return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("derived fields") {
    const auto p = new_params(1, 2);
    CHECK(p.delta() == 3);
    CHECK(p.a0() == 4);
    CHECK(p.coeff_A() == 18);
    CHECK(p.coeff_B() == 1);
    CHECK(p.coeff_C() == -72);
    CHECK(p.coeff_D() == 16);
    CHECK(p.m() == 2);
}

TEST_CASE("validation order") {
    CHECK(code_of(2, 4) == ErrorCode::NotCoprime);
    CHECK(code_of(3, 3) == ErrorCode::Equal);
    CHECK(code_of(1, 1) == ErrorCode::Equal);
    CHECK(code_of(0, 1) == ErrorCode::NonPositive);
    CHECK(code_of(-2, 2) == ErrorCode::NonPositive);
    CHECK(code_of(0, 0) == ErrorCode::NonPositive);
}

TEST_CASE("build_P and build_Q") {
    CHECK(build_P(new_params(1, 2)) == IntPoly{16, 0, -72, 0, 1, 0, 18, 0, 1});
    CHECK(evaluate(build_P(new_params(1, 2)), 1) == -36);
    CHECK(build_P(new_params(2, 3)) == IntPoly{1296, 0, -1080, 0, -47, 0, 30, 0, 1});
    CHECK(build_Q(new_params(1, 2)) == IntPoly{16, -72, 1, 18, 1});
    CHECK(build_Q(new_params(2, 3)) == IntPoly{1296, -1080, -47, 30, 1});
}

TEST_CASE("large parameters stay exact") {
    const auto p = new_params(Int("1000000007"), Int("998244353"));
    const Int a("1000000007"), u("998244353");
    CHECK(p.coeff_D() == a * a * a * a * u * u * u * u);
    CHECK(build_P(p).coeffs().back() == 1);
}

TEST_CASE("random pairs: structure, swap symmetry") {
    gen::Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto p = rng.params(200);
        const IntPoly P = build_P(p);
        // Independent expansion: t^8 + 6d t^6 + (d^2 - 2m^2) t^4 - 6 d m^2 t^2 + m^4.
        const Int d = p.u() * p.u() - p.a() * p.a(), m2 = p.a() * p.a() * p.u() * p.u();
        CHECK(P == IntPoly{m2 * m2, 0, -6 * d * m2, 0, d * d - 2 * m2, 0, 6 * d, 0, 1});
        CHECK(reflect(P) == P);
        CHECK(P.is_monic());
        CHECK(*P.degree() == 8);
        CHECK(content(P) == 1);
        CHECK(P[0] > 0);
        CHECK(build_Q(p) == even_part_substitute(P));
        CHECK(p.coeff_C() == -p.a0() * p.coeff_A());
        const auto s = new_params(p.u(), p.a());
        CHECK(s.coeff_A() == -p.coeff_A());
        CHECK(s.coeff_C() == -p.coeff_C());
        CHECK(s.coeff_B() == p.coeff_B());
        CHECK(s.coeff_D() == p.coeff_D());
        CHECK_FALSE(s == p);
    }
}
