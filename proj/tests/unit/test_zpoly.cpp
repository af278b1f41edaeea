#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuboid/error.hpp"
#include "cuboid/zpoly.hpp"
#include "gen.hpp"

using namespace cuboid;
using gen::I;

namespace {
const IntPoly P12{16, 0, -72, 0, 1, 0, 18, 0, 1};
const IntPoly Q12{16, -72, 1, 18, 1};
}  // namespace

TEST_CASE("representation") {
    CHECK(IntPoly{1, 2, 0, 0}.coeffs().size() == 2);
    CHECK(IntPoly{0, 0}.is_zero());
    CHECK_FALSE(IntPoly{}.degree().has_value());
    CHECK(*IntPoly{5}.degree() == 0);
    CHECK(IntPoly{}[3] == 0);
    CHECK(P12.is_monic());
    CHECK_FALSE((IntPoly{1, 2}).is_monic());
    CHECK(IntPoly::monomial(3, 2) == IntPoly{0, 0, 3});
}

TEST_CASE("add") {
    CHECK((IntPoly{1, 1} + IntPoly{-1, -1}).is_zero());
    CHECK(IntPoly{0, 0, 1} + IntPoly{3} == IntPoly{3, 0, 1});
    CHECK(P12 + IntPoly{} == P12);
}

TEST_CASE("mul") {
    CHECK(IntPoly{1, 0, 1} * IntPoly{-1, 0, 1} == IntPoly{-1, 0, 0, 0, 1});
    CHECK((IntPoly{} * P12).is_zero());
    // (t^4 + t^2 + 2)(t^4 + 3t^2 + 5)
    CHECK(IntPoly{2, 0, 1, 0, 1} * IntPoly{5, 0, 3, 0, 1} == IntPoly{10, 0, 11, 0, 10, 0, 4, 0, 1});
}

TEST_CASE("divmod_monic") {
    auto r = divmod_monic(IntPoly{-1, 0, 1}, IntPoly{-1, 1});
    CHECK(r.quot == IntPoly{1, 1});
    CHECK(r.rem.is_zero());
    r = divmod_monic(IntPoly{1, 0, 1}, IntPoly{0, 1});
    CHECK(r.quot == IntPoly{0, 1});
    CHECK(r.rem == IntPoly{1});
    CHECK(divmod_monic(Q12, IntPoly{1, 1}).rem == IntPoly{72});
    CHECK_THROWS_AS(divmod_monic(Q12, IntPoly{1, 2}), Error);
    CHECK_THROWS_AS(divmod_monic(Q12, IntPoly{}), Error);
    CHECK(divmod_monic(IntPoly{3}, IntPoly{0, 0, 1}).rem == IntPoly{3});
}

TEST_CASE("evaluate, content") {
    CHECK(evaluate(P12, 0) == 16);
    CHECK(evaluate(P12, 1) == -36);
    CHECK(evaluate(IntPoly{-1, 0, 1}, 1) == 0);
    CHECK(evaluate(Q12, -1) == 72);
    CHECK(content(IntPoly{4, 0, 2}) == 2);
    CHECK(content(P12) == 1);
    CHECK(content(IntPoly{}) == 0);
    CHECK(content(IntPoly{-6, 0, -9}) == 3);
}

TEST_CASE("reflect and even part") {
    CHECK(reflect(IntPoly{1, 1, 1, 1}) == IntPoly{1, -1, 1, -1});
    CHECK(reflect(P12) == P12);
    CHECK(even_part_substitute(IntPoly{3, 0, 2, 0, 1}) == IntPoly{3, 2, 1});
    CHECK(even_part_substitute(P12) == Q12);
    CHECK_THROWS_AS(even_part_substitute(IntPoly{0, 0, 0, 1}), Error);
    CHECK(substitute_square(Q12) == P12);
    CHECK(derivative(IntPoly{1, 1, 1, 1}) == IntPoly{1, 2, 3});
}

TEST_CASE("text rendering round trip") {
    CHECK(to_string(IntPoly{3, 0, 1}) == "3 + t^2");
    CHECK(to_string(IntPoly{}) == "0");
    CHECK(to_string(IntPoly{0, -1}) == "-t");
    CHECK(parse_poly("16 - 72*t^2 + t^4 + 18*t^6 + t^8") == IntPoly{16, 0, -72, 0, 1, 0, 18, 0, 1});
    CHECK(parse_poly(to_string(P12)) == P12);
    CHECK(parse_poly(to_string(Q12, "x"), "x") == Q12);
    CHECK_THROWS_AS(parse_poly("3 + y"), Error);
    gen::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        IntPoly p = rng.poly(9, 1000);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    gen::Rng rng(20240101);
    for (int i = 0; i < 300; ++i) {
        const IntPoly p = rng.poly(6, 50), q = rng.poly(6, 50), r = rng.poly(6, 50);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(reflect(reflect(p)) == p);
        bool even = reflect(p) == p;
        bool substitutes = true;
        try {
            (void)even_part_substitute(p);
        } catch (const Error&) {
            substitutes = false;
        }
        CHECK(even == substitutes);
        const Int x = rng.big(-30, 30);
        CHECK(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x));
        CHECK(evaluate(reflect(p), x) == evaluate(p, -x));
    }
}

TEST_CASE("division recombines") {
    gen::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const IntPoly n = rng.poly(10, 1000);
        const IntPoly d = rng.monic(static_cast<std::size_t>(rng.range(0, 5)), 100);
        const auto [q, r] = divmod_monic(n, d);
        CHECK(q * d + r == n);
        CHECK((r.is_zero() || *r.degree() < *d.degree()));
        // Remainder by a linear monic is the value at its root.
        const Int c = rng.big(-20, 20);
        CHECK(divmod_monic(n, IntPoly{-c, 1}).rem == (evaluate(n, c) == 0 ? IntPoly{} : IntPoly{evaluate(n, c)}));
    }
}
