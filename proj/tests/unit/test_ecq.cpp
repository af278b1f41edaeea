#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "cuboid/ecq.hpp"
#include "cuboid/error.hpp"
#include "gen.hpp"

using namespace cuboid;
using namespace cuboid::ecq;

namespace {
ECPoint pt(long x, long y) { return ECPoint(Rational(Int(x)), Rational(Int(y))); }
const ECCurve E0 = ECCurve::e0();

std::vector<ECPoint> e0_torsion() {
    std::vector<ECPoint> t{ECPoint::infinity(), pt(0, 0), pt(-1, 0), pt(-9, 0), pt(3, 12), pt(3, -12), pt(-3, 6), pt(-3, -6)};
    std::sort(t.begin(), t.end());
    return t;
}

// Tangent slope and doubling written out for y^2 = x^3 + 10x^2 + 9x.
ECPoint double_by_hand(const ECPoint& P) {
    const Rational x = P.x(), y = P.y();
    const Rational lambda = (3 * x * x + 20 * x + 9) / (2 * y);
    const Rational x3 = lambda * lambda - 10 - 2 * x;
    const Rational y3 = lambda * (x - x3) - y;
    return ECPoint(x3, y3);
}
}  // namespace

TEST_CASE("curves") {
    CHECK(to_string(E0) == "[0,10,0,9,0]");
    CHECK(E0.discriminant() == 16 * 81 * 64);
    CHECK_THROWS_AS(ECCurve(0, 0, 0, 0, 0), Error);
    CHECK_THROWS_AS(ECCurve(0, 1, 0, 0, 0), Error);
}

TEST_CASE("on_curve") {
    CHECK(on_curve(pt(3, 12), E0));
    CHECK(on_curve(pt(-3, 6), E0));
    CHECK_FALSE(on_curve(pt(1, 1), E0));
    CHECK(on_curve(ECPoint::infinity(), E0));
    CHECK(ECPoint(Rational(2, 4), Rational(3)) == ECPoint(Rational(1, 2), Rational(3)));
}

TEST_CASE("group law") {
    CHECK(add(pt(3, 12), ECPoint::infinity(), E0) == pt(3, 12));
    CHECK(add(pt(0, 0), pt(0, 0), E0).is_infinity());
    CHECK(add(pt(3, 12), pt(3, 12), E0) == pt(0, 0));
    CHECK(scalar_mul(4, pt(3, 12), E0).is_infinity());
    CHECK(scalar_mul(0, pt(3, 12), E0).is_infinity());
    CHECK(scalar_mul(-1, pt(3, 12), E0) == pt(3, -12));
    CHECK_THROWS_AS(add(pt(1, 1), pt(0, 0), E0), Error);
    CHECK_THROWS_AS(scalar_mul(2, pt(1, 1), E0), Error);
}

TEST_CASE("doubling of (-3,6)") {
    // The tangent at (-3,6) has slope (27 - 60 + 9)/12 = -2 and meets E0 again at x = 0.
    CHECK(double_by_hand(pt(-3, 6)) == pt(0, 0));
    CHECK(scalar_mul(2, pt(-3, 6), E0) == pt(0, 0));
    CHECK(scalar_mul(2, pt(-3, 6), E0) != pt(-1, 0));
    CHECK(double_by_hand(pt(3, 12)) == pt(0, 0));
}

TEST_CASE("torsion of E0") {
    const auto t = nagell_lutz_torsion(E0);
    CHECK(t.points == e0_torsion());
    CHECK(t.structure == "Z/2 x Z/4");
    std::vector<unsigned> orders;
    for (const auto& p : t.points) orders.push_back(*order(p, E0));
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<unsigned>{1, 2, 2, 2, 4, 4, 4, 4});
    for (const auto& p : t.points) {
        CHECK(add(p, negate(p, E0), E0).is_infinity());
        CHECK(std::binary_search(t.points.begin(), t.points.end(), negate(p, E0)));
        for (const auto& q : t.points) {
            const auto s = add(p, q, E0);
            CHECK(std::binary_search(t.points.begin(), t.points.end(), s));
            CHECK(s == add(q, p, E0));
            for (const auto& r : t.points) CHECK(add(add(p, q, E0), r, E0) == add(p, add(q, r, E0), E0));
        }
    }
}

TEST_CASE("other curves") {
    const ECCurve C(0, 0, 0, -1, 0);
    const auto t = nagell_lutz_torsion(C);
    CHECK(t.points == std::vector<ECPoint>{ECPoint::infinity(), pt(-1, 0), pt(0, 0), pt(1, 0)});
    CHECK(t.structure == "Z/2 x Z/2");
    CHECK(j_invariant(C) == 1728);
    CHECK(bounded_point_search(C, 50) == std::vector<ECPoint>{pt(-1, 0), pt(0, 0), pt(1, 0)});
    const auto m = nagell_lutz_torsion(ECCurve::minimal_e0());
    CHECK(m.structure == "Z/2 x Z/4");
    CHECK(m.points.size() == 8);
}

TEST_CASE("short model") {
    const auto s = transform_to_short(E0);
    CHECK(s.curve == ECCurve(0, 0, 0, -1971, 32130));
    CHECK(s.forward(pt(3, 12)) == pt(57, 324));
    CHECK(Int(324) * 324 == Int(57) * 57 * 57 - 1971 * 57 + 32130);
    CHECK(s.forward(ECPoint::infinity()).is_infinity());
    const auto t = e0_torsion();
    for (const auto& p : t) {
        CHECK(s.backward(s.forward(p)) == p);
        for (const auto& q : t) CHECK(s.forward(add(p, q, E0)) == add(s.forward(p), s.forward(q), s.curve));
    }
    CHECK(j_invariant(E0) == j_invariant(s.curve));
    CHECK(j_invariant(E0) == j_invariant(ECCurve::minimal_e0()));
    // The minimal model reduces to the same short model, so x -> x + 3 identifies it with E0.
    CHECK(transform_to_short(ECCurve::minimal_e0()).curve == s.curve);
    for (const auto& p : t)
        if (!p.is_infinity()) CHECK(on_curve(ECPoint(p.x() + 3, p.y()), ECCurve::minimal_e0()));
}

TEST_CASE("square x") {
    CHECK(square_x_points(e0_torsion()) == std::vector<ECPoint>{pt(0, 0)});
    CHECK(square_x_points({ECPoint(Rational(4), Rational(7))}).size() == 1);
    CHECK(square_x_points({ECPoint(Rational(9, 4), Rational(7))}).size() == 1);
    CHECK(square_x_points({pt(-1, 0)}).empty());
}

TEST_CASE("bounded search") {
    auto finite = e0_torsion();
    finite.erase(finite.begin());
    CHECK(bounded_point_search(E0, 200) == finite);
    const auto small = bounded_point_search(E0, 1);
    for (const auto& p : small) CHECK(std::binary_search(finite.begin(), finite.end(), p));
    CHECK(small.size() <= finite.size());
}
